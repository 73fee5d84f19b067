#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "mmatch/errors.hpp"
#include "mmatch/exact.hpp"

namespace mmatch {

namespace {

using Mask = std::uint64_t;

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Matching polynomial of G[remaining], branching on the lowest vertex: it is
// either left out or matched to one of its remaining neighbours.
class MatchingCounter {
 public:
  explicit MatchingCounter(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) adj_.push_back(g.neighbor_mask(v));
  }

  const std::vector<BigInt>& count(Mask remaining) {
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    std::vector<BigInt> result{1};
    if (remaining != 0) {
      const int v = std::countr_zero(remaining);
      const Mask without_v = remaining & ~(Mask{1} << v);
      result = count(without_v);
      Mask options = adj_[v] & without_v;
      while (options) {
        const int u = std::countr_zero(options);
        options &= options - 1;
        const auto sub = count(without_v & ~(Mask{1} << u));
        if (result.size() < sub.size() + 1) result.resize(sub.size() + 1);
        for (std::size_t k = 0; k < sub.size(); ++k) result[k + 1] += sub[k];
      }
    }
    return memo_.emplace(remaining, std::move(result)).first->second;
  }

 private:
  std::vector<Mask> adj_;
  std::unordered_map<Mask, std::vector<BigInt>> memo_;
};

class GreedyExpectation {
 public:
  explicit GreedyExpectation(const Graph& g) : edges_(g.edges()) {}

  Rational mu(Mask remaining) {
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    Rational sum = 0;
    long live = 0;
    for (auto [u, v] : edges_) {
      const Mask ends = (Mask{1} << u) | (Mask{1} << v);
      if ((remaining & ends) != ends) continue;
      ++live;
      sum += 1 + mu(remaining & ~ends);
    }
    Rational result = live == 0 ? Rational(0) : sum / live;
    memo_.emplace(remaining, result);
    return result;
  }

 private:
  const std::vector<Graph::Edge>& edges_;
  std::unordered_map<Mask, Rational> memo_;
};

void walk_rg(const Graph& g, Mask remaining, RgOutcome& current,
             const std::function<void(const RgOutcome&)>& visit) {
  std::vector<Graph::Edge> live;
  for (auto [u, v] : g.edges()) {
    const Mask ends = (Mask{1} << u) | (Mask{1} << v);
    if ((remaining & ends) == ends) live.emplace_back(u, v);
  }
  if (live.empty()) {
    visit(current);
    return;
  }
  const BigInt saved = current.p;
  for (auto e : live) {
    current.sequence.push_back(e);
    current.p = saved * static_cast<long>(live.size());
    walk_rg(g, remaining & ~((Mask{1} << e.first) | (Mask{1} << e.second)), current,
            visit);
    current.sequence.pop_back();
  }
  current.p = saved;
}

}  // namespace

SizeProfile matching_profile(const Graph& g, const EnumerationLimits& limits) {
  check_cap(g, limits);
  MatchingCounter counter(g);
  return SizeProfile(counter.count(full_mask(g.order())));
}

int max_matching_size(const Graph& g, const EnumerationLimits& limits) {
  return std::max(0, maximal_matching_profile(g, limits).max_index());
}

Rational rg_expected_size(const Graph& g, const EnumerationLimits& limits) {
  check_cap(g, limits);
  GreedyExpectation expectation(g);
  return expectation.mu(full_mask(g.order()));
}

void for_each_rg_outcome(const Graph& g,
                         const std::function<void(const RgOutcome&)>& visit) {
  check_cap(g, EnumerationLimits{kMaxVertexCap, 1});
  RgOutcome current{{}, 1};
  walk_rg(g, full_mask(g.order()), current, visit);
}

Rational average_ratio(const SizeProfile& profile, int nu) {
  if (nu == 0) return 1;
  return Rational(profile.first_moment(), profile.total() * nu);
}

InvariantReport invariant_report(const Graph& g, const EnumerationLimits& limits) {
  InvariantReport r;
  r.maximal = maximal_matching_profile(g, limits);
  r.all = matching_profile(g, limits);
  r.nu = std::max(0, r.maximal.max_index());
  r.t0 = r.maximal.total();
  r.t1 = r.maximal.first_moment();

  r.t0_ord = 0;
  r.t1_ord = 0;
  BigInt k_factorial = 1;
  for (std::size_t k = 0; k < r.maximal.counts().size(); ++k) {
    if (k > 0) k_factorial *= k;
    const BigInt ordered = k_factorial * r.maximal.counts()[k];
    r.t0_ord += ordered;
    r.t1_ord += ordered * k;
  }

  r.t0_arw = r.all.total();
  r.t1_arw = r.all.first_moment();
  r.mu = rg_expected_size(g, limits);

  if (r.nu == 0) {
    r.i_avg = r.i_ord = r.i_arw = r.i_df = 1;
  } else {
    r.i_avg = Rational(r.t1, r.t0 * r.nu);
    r.i_ord = Rational(r.t1_ord, r.t0_ord * r.nu);
    r.i_arw = Rational(r.t1_arw, r.t0_arw * r.nu);
    r.i_df = r.mu / r.nu;
  }
  return r;
}

BigInt clique_maximal_count(int s) {
  if (s < -1) throw InputError("clique_maximal_count: s must be >= -1");
  BigInt result = 1;
  for (int x = (s % 2 != 0) ? s : s - 1; x > 1; x -= 2) result *= x;
  return result;
}

SizeProfile path_profile(int n) {
  if (n < 0) throw InputError("path_profile: n must be >= 0");
  // P_0, P_1 have only the empty matching; P_2 has one edge.
  std::vector<SizeProfile> seq{SizeProfile::of({{0, 1}}), SizeProfile::of({{0, 1}}),
                               SizeProfile::of({{1, 1}})};
  for (int i = 3; i <= n; ++i) {
    SizeProfile next;
    for (const auto* prev : {&seq[i - 2], &seq[i - 3]})
      for (std::size_t k = 0; k < prev->counts().size(); ++k)
        next.add(k + 1, prev->counts()[k]);
    seq.push_back(std::move(next));
  }
  return seq[n];
}

SizeProfile wheel_profile(int n) {
  if (n < 4) throw InputError("wheel_profile: n must be >= 4");
  const SizeProfile rim = path_profile(n - 2);
  SizeProfile out;
  for (std::size_t k = 0; k < rim.counts().size(); ++k)
    out.add(k + 1, rim.counts()[k] * (n - 1));
  if (n % 2 == 1) out.add((n - 1) / 2, 2);
  return out;
}

SizeProfile thorn_bipartite_profile(int c, int n) {
  if (c < 0 || n < 0) throw InputError("thorn_bipartite_profile: c, n must be >= 0");
  SizeProfile out;
  const BigInt numerator = factorial(c) * factorial(n);
  for (int k = std::max(c, n); k <= n + c; ++k)
    out.add(k, numerator / (factorial(n + c - k) * factorial(k - n) * factorial(k - c)));
  return out;
}

}  // namespace mmatch
