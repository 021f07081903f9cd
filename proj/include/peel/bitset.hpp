#ifndef PEEL_BITSET_HPP
#define PEEL_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "peel/errors.hpp"

namespace peel {

// Vertex set over a fixed universe 0..n-1, packed 64 bits per word.
// All binary operations require equal universe sizes.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int universe) : n_(universe)
    {
        if (universe < 0)
            throw PreconditionError("Bitset universe must be nonnegative");
        words_.assign((static_cast<std::size_t>(universe) + 63) / 64, 0);
    }

    int universe() const { return n_; }

    bool test(int v) const
    {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) { words_[static_cast<std::size_t>(v) >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63)); }

    void clear()
    {
        for (auto& w : words_)
            w = 0;
    }

    void fill()
    {
        for (auto& w : words_)
            w = ~uint64_t{0};
        trim();
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    bool any() const { return !empty(); }

    bool intersects(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    // Set difference.
    Bitset& operator-=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const = default;

    // First member, or -1 when empty.
    int first() const { return next(-1); }

    // First member strictly greater than v, or -1.
    int next(int v) const
    {
        std::size_t i = v < 0 ? 0 : (static_cast<std::size_t>(v) >> 6);
        if (i >= words_.size())
            return -1;
        uint64_t w = words_[i];
        if (v >= 0)
            w &= ~((uint64_t{2} << (v & 63)) - 1);
        while (true) {
            if (w)
                return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i == words_.size())
                return -1;
            w = words_[i];
        }
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (int v = first(); v >= 0; v = next(v))
            out.push_back(v);
        return out;
    }

    static Bitset from_vector(int universe, const std::vector<int>& vs)
    {
        Bitset b(universe);
        for (int v : vs) {
            if (v < 0 || v >= universe)
                throw PreconditionError("vertex " + std::to_string(v) + " outside universe");
            b.set(v);
        }
        return b;
    }

    // Lexicographic comparison of ascending member lists, e.g.
    // {0,1,2} < {0,1,3} < {0,2} < {1} and {1,2} < {1,2,3}.
    static int compare_lex(const Bitset& a, const Bitset& b)
    {
        int x = a.first(), y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y)
                return x < y ? -1 : 1;
            x = a.next(x);
            y = b.next(y);
        }
        if (x == y)
            return 0;
        return x < 0 ? -1 : 1;
    }

    friend bool lex_less(const Bitset& a, const Bitset& b)
    {
        return compare_lex(a, b) < 0;
    }

private:
    void trim()
    {
        int tail = n_ & 63;
        if (tail && !words_.empty())
            words_.back() &= (uint64_t{1} << tail) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace peel

#endif
