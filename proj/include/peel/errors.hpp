#ifndef PEEL_ERRORS_HPP
#define PEEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace peel {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file; carries the 1-based line number when known.
struct ParseError : Error {
    ParseError(const std::string& msg, long line = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line(line)
    {
    }
    long line;
};

// Bad campaign config or CLI usage.
struct ConfigError : Error {
    using Error::Error;
};

// A documented size/count cap was exceeded.
struct ResourceError : Error {
    using Error::Error;
};

// A lemma's premise does not hold for the given graph.  Distinct from a
// verification failure: the check simply does not apply.
struct PremiseNotMetError : Error {
    using Error::Error;
};

// The main construction's hypothesis 4*omega >= 3*(delta+1) fails.
struct HypothesisError : PremiseNotMetError {
    using PremiseNotMetError::PremiseNotMetError;
};

// Caller violated a documented precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// An internal pipeline invariant broke; signals a bug upstream.
struct InternalError : Error {
    using Error::Error;
};

// Generator retry budget exhausted.
struct GenerationError : Error {
    using Error::Error;
};

// A claim the theory guarantees failed on a premise-satisfying input.
// Carries the offending lemma name and a serialized witness so the
// failure can be replayed offline.
struct RefutationError : Error {
    RefutationError(const std::string& lemma, const std::string& msg,
                    std::string witness_json)
        : Error(lemma + " refuted: " + msg),
          lemma(lemma),
          witness_json(std::move(witness_json))
    {
    }
    std::string lemma;
    std::string witness_json;
};

// A base-colorer oracle returned a coloring outside its contract.
struct OracleContractError : Error {
    OracleContractError(const std::string& msg, std::string witness_json)
        : Error(msg), witness_json(std::move(witness_json))
    {
    }
    std::string witness_json;
};

} // namespace peel

#endif
