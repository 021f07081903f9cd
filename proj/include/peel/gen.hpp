#ifndef PEEL_GEN_HPP
#define PEEL_GEN_HPP

#include <cstdint>

#include "peel/graph.hpp"

namespace peel {

// Erdos-Renyi G(n, p).  Pairs are visited in ascending (u, v) order and each
// draws one unit() from a xoshiro256** stream seeded with `seed`, so equal
// parameters reproduce the graph bit-exactly on any platform.
Graph gen_er(int n, double p, uint64_t seed);

// Plants t disjoint k-cliques, then proposes each inter-cluster pair (in
// ascending order, accepted with probability q) and keeps it only while the
// maximum degree stays <= floor(4k/3) - 1.  The result is checked to satisfy
// omega = k and 4*omega >= 3*(delta+1); on violation the construction is
// retried with the next splitmix64-derived seed, a bounded number of times.
Graph gen_hypothesis(int k, int t, double q, uint64_t seed);

// Random multigraph with m edges drawn uniformly over unordered pairs u < v
// (repeats allowed).  Used by the edge-coloring checks.
Multigraph gen_multigraph(int n, int m, uint64_t seed);

inline constexpr int kHypothesisRetryBudget = 64;

} // namespace peel

#endif
