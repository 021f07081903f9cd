#include "peel/coloring.hpp"

#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace peel {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

long long narrow(const BigInt& x)
{
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw ResourceError("fractional chromatic number does not fit in 64 bits");
    return x.convert_to<long long>();
}

// Primal simplex with Bland's rule on
//     max 1'y   s.t.  sum_{v in S} y_v <= 1 for every maximal independent
//                     set S, y >= 0,
// the dual of the fractional covering program min 1'x, sum_{S ni v} x_S >= 1.
// The slack basis is feasible (b = 1), so no phase one is needed, and by
// strong duality the optimum equals chi*.
Rational packing_optimum(const std::vector<Bitset>& sets, int n)
{
    std::size_t m = sets.size();
    std::size_t cols = static_cast<std::size_t>(n) + m; // structural + slack
    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (int v = sets[i].first(); v >= 0; v = sets[i].next(v))
            tab[i][static_cast<std::size_t>(v)] = 1;
        tab[i][static_cast<std::size_t>(n) + i] = 1;
        tab[i][cols] = 1;
        basis[i] = static_cast<std::size_t>(n) + i;
    }
    // reduced-cost row; z holds the negated objective value
    std::vector<Rational> cost(cols + 1, Rational(0));
    for (int v = 0; v < n; ++v)
        cost[static_cast<std::size_t>(v)] = 1;

    while (true) {
        // Bland: entering = lowest-index column with positive reduced cost
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (cost[j] > 0) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;

        // leaving row by minimum ratio, ties broken on lowest basis index
        std::size_t leave = m;
        Rational best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0)
                continue;
            Rational ratio = tab[i][cols] / tab[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m)
            throw InternalError("packing LP is unbounded"); // every column hits some set

        Rational pivot = tab[leave][enter];
        for (auto& x : tab[leave])
            x /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0)
                continue;
            Rational factor = tab[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                tab[i][j] -= factor * tab[leave][j];
        }
        Rational factor = cost[enter];
        if (factor != 0)
            for (std::size_t j = 0; j <= cols; ++j)
                cost[j] -= factor * tab[leave][j];
        basis[leave] = enter;
    }
    return -cost[cols];
}

} // namespace

RationalValue fractional_chromatic(const Graph& g, int cap)
{
    if (g.n > cap)
        throw ResourceError("fractional_chromatic supports at most " + std::to_string(cap) +
                            " vertices, got " + std::to_string(g.n));
    if (g.n == 0)
        return RationalValue{0, 1};

    std::vector<Bitset> sets = maximal_independent_sets(g);
    Rational opt = packing_optimum(sets, g.n);
    return RationalValue{narrow(boost::multiprecision::numerator(opt)),
                         narrow(boost::multiprecision::denominator(opt))};
}

} // namespace peel
