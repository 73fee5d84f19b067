#pragma once
// Test-side reference computations. Nothing here calls the library's
// counting code; only the Graph value type and the number typedefs are
// shared.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "mmatch/graph.hpp"
#include "mmatch/numeric.hpp"

namespace oracle {

using mmatch::BigInt;
using mmatch::Graph;
using mmatch::Rational;

// Sparse profile k -> count, easy to compare against SizeProfile::counts().
using Profile = std::map<int, long long>;

inline bool is_matching(const Graph& g, std::uint32_t subset) {
  std::vector<int> used(g.order(), 0);
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (!(subset >> e & 1)) continue;
    auto [u, v] = g.edges()[e];
    if (used[u]++ || used[v]++) return false;
  }
  return true;
}

// Maximal by definition: no edge can be added.
inline bool is_maximal(const Graph& g, std::uint32_t subset) {
  if (!is_matching(g, subset)) return false;
  for (std::size_t e = 0; e < g.size(); ++e)
    if (!(subset >> e & 1) && is_matching(g, subset | (1u << e))) return false;
  return true;
}

// Every edge subset, so m stays small (m <= 22 or so).
inline Profile maximal_profile(const Graph& g) {
  Profile p;
  const std::uint32_t total = 1u << g.size();
  for (std::uint32_t s = 0; s < total; ++s)
    if (is_maximal(g, s)) ++p[std::popcount(s)];
  return p;
}

inline Profile matching_profile(const Graph& g) {
  Profile p;
  const std::uint32_t total = 1u << g.size();
  for (std::uint32_t s = 0; s < total; ++s)
    if (is_matching(g, s)) ++p[std::popcount(s)];
  return p;
}

inline Profile to_map(const std::vector<BigInt>& counts) {
  Profile p;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0) p[static_cast<int>(k)] = static_cast<long long>(counts[k]);
  return p;
}

inline int nu(const Profile& p) { return p.empty() ? 0 : p.rbegin()->first; }

inline Rational ratio(const Profile& p) {
  const int top = nu(p);
  if (top == 0) return 1;
  long long t0 = 0, t1 = 0;
  for (auto [k, c] : p) {
    t0 += c;
    t1 += k * c;
  }
  return Rational(t1, t0 * top);
}

// Greedy over a uniformly random edge order is the randomized greedy
// algorithm, so mu is the mean greedy size over all m! orders.
inline Rational mu_by_permutations(const Graph& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  long long total = 0, count = 0;
  do {
    std::vector<char> used(g.order(), 0);
    int size = 0;
    for (int e : order) {
      auto [u, v] = g.edges()[e];
      if (!used[u] && !used[v]) {
        used[u] = used[v] = 1;
        ++size;
      }
    }
    total += size;
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  if (g.size() == 0) return 0;
  return Rational(total, count);
}

// Isomorphism-class count by adjacency-matrix strings minimised over all
// relabellings of every labelled graph on n vertices.
inline std::size_t class_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::string> forms;
  const std::uint32_t total = 1u << pairs.size();
  for (std::uint32_t s = 0; s < total; ++s) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    do {
      std::string adj(n * n, '0');
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!(s >> p & 1)) continue;
        const int a = perm[pairs[p].first], b = perm[pairs[p].second];
        adj[a * n + b] = adj[b * n + a] = '1';
      }
      if (first || adj < best) best = adj;
      first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    forms.push_back(best);
  }
  std::sort(forms.begin(), forms.end());
  return std::unique(forms.begin(), forms.end()) - forms.begin();
}

// Double factorial count of maximal matchings of K_s, straight from the
// pairing argument: pair vertex 0 with one of s-1 partners, recurse.
inline long long clique_count(int s) {
  if (s <= 1) return 1;
  if (s == 2) return 1;
  if (s % 2 == 1) {
    // one vertex stays unmatched: s choices, then a perfect matching of K_{s-1}
    long long perfect = 1;
    for (int k = s - 2; k > 1; k -= 2) perfect *= k;
    return s * perfect;
  }
  long long perfect = 1;
  for (int k = s - 1; k > 1; k -= 2) perfect *= k;
  return perfect;
}

// Real root of x^3 = x + 1 by bisection.
inline long double plastic() {
  long double lo = 1, hi = 2;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    (mid * mid * mid - mid - 1 > 0 ? hi : lo) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace oracle
