#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mmatch/graph.hpp"
#include "mmatch/numeric.hpp"
#include "mmatch/size_profile.hpp"

namespace mmatch {

inline constexpr int kDefaultVertexCap = 26;
// Kernels address vertices through 64-bit masks.
inline constexpr int kMaxVertexCap = 64;

struct EnumerationLimits {
  int vertex_cap = kDefaultVertexCap;
  // OpenMP worker count for the parallel kernels; 0 keeps the runtime default.
  int workers = 0;
};

// Throws CapExceeded when g.order() exceeds the cap (or kMaxVertexCap).
void check_cap(const Graph& g, const EnumerationLimits& limits);

// S(G, k): number of maximal matchings of size k.
//
// Edges are decided include/exclude in canonical sorted order. A vertex whose
// last incident edge has been decided is final; a completed matching is
// counted iff its uncovered vertex set is independent, and branches are cut as
// soon as two adjacent final vertices are both uncovered. This is the
// dispatching entry point and uses the OpenMP kernel.
SizeProfile maximal_matching_profile(const Graph& g, const EnumerationLimits& limits = {});

// Single-threaded reference for the same enumeration.
SizeProfile maximal_matching_profile_serial(const Graph& g, const EnumerationLimits& limits = {});

// Splits the search tree into a frontier of independent subtrees and walks
// them with an OpenMP dynamic loop. Counts are reduced with integer sums, so
// the result is identical to the serial kernel for any worker count.
SizeProfile maximal_matching_profile_parallel(const Graph& g, const EnumerationLimits& limits = {});

// All matchings by size, k = 0 included (Hosoya counts).
SizeProfile matching_profile(const Graph& g, const EnumerationLimits& limits = {});

int max_matching_size(const Graph& g, const EnumerationLimits& limits = {});

// Expected size of the randomized greedy matching:
// mu(G) = (1/m) * sum over edges uv of (1 + mu(G - u - v)), mu = 0 when m = 0.
// Memoized on the set of remaining vertices for a single call.
Rational rg_expected_size(const Graph& g, const EnumerationLimits& limits = {});

// One ordered output of the randomized greedy algorithm together with p(M),
// the product of the edge counts seen at each pick.
struct RgOutcome {
  std::vector<Graph::Edge> sequence;
  BigInt p;
};

// Walks every ordered maximal matching straight from the definition. Meant for
// small graphs (the number of outcomes is sum_k k! S(G, k)).
void for_each_rg_outcome(const Graph& g, const std::function<void(const RgOutcome&)>& visit);

struct InvariantReport {
  int nu = 0;
  BigInt t0, t1;
  Rational i_avg;
  BigInt t0_ord, t1_ord;
  Rational i_ord;
  BigInt t0_arw, t1_arw;
  Rational i_arw;
  Rational mu;
  Rational i_df;

  SizeProfile maximal;
  SizeProfile all;
};

InvariantReport invariant_report(const Graph& g, const EnumerationLimits& limits = {});

// T1 / (nu * T0), or 1 when nu == 0.
Rational average_ratio(const SizeProfile& profile, int nu);

// Number of maximal matchings of K_s: s!! for odd s, (s-1)!! for even s.
// f(0) = f(-1) = 1 by convention.
BigInt clique_maximal_count(int s);

// Maximal-matching profile of P_n from S(P_n,k) = S(P_{n-2},k-1) + S(P_{n-3},k-1).
SizeProfile path_profile(int n);

// S(W_n, k) = (n-1) S(P_{n-2}, k-1), plus 2 at k = (n-1)/2 for odd n.
SizeProfile wheel_profile(int n);

// Thorn of K_{c,n}: S(k) = c! n! / ((n+c-k)! (k-n)! (k-c)!) for max(c,n) <= k <= n+c.
SizeProfile thorn_bipartite_profile(int c, int n);

}  // namespace mmatch
