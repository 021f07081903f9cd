#ifndef PEEL_VERSION_HPP
#define PEEL_VERSION_HPP

namespace peel {

inline constexpr const char* kVersion = "0.1.0";

} // namespace peel

#endif
