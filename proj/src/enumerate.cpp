#include <omp.h>

#include <array>
#include <cstdint>
#include <vector>

#include "mmatch/errors.hpp"
#include "mmatch/exact.hpp"

namespace mmatch {

void check_cap(const Graph& g, const EnumerationLimits& limits) {
  const int cap = std::min(limits.vertex_cap, kMaxVertexCap);
  if (g.order() > cap) throw CapExceeded(g.order(), cap);
}

namespace {

using Mask = std::uint64_t;
// A matching has at most 32 edges on 64 vertices.
using Counts = std::array<std::uint64_t, 33>;

struct SearchState {
  int next_edge;
  Mask covered;
  Mask dead;  // final and uncovered
  int size;
};

class MaximalSearch {
 public:
  explicit MaximalSearch(const Graph& g) : m_(static_cast<int>(g.size())) {
    std::vector<int> last(g.order(), -1);
    for (int i = 0; i < m_; ++i) {
      const auto [u, v] = g.edges()[i];
      eu_.push_back(u);
      ev_.push_back(v);
      last[u] = i;
      last[v] = i;
    }
    final_at_.assign(m_, 0);
    for (int v = 0; v < g.order(); ++v)
      if (last[v] >= 0) final_at_[last[v]] |= Mask{1} << v;
    for (int v = 0; v < g.order(); ++v) adj_.push_back(g.neighbor_mask(v));
  }

  int edge_count() const { return m_; }

  // Applies the decision for edge state.next_edge; false if the branch dies.
  bool step(const SearchState& in, bool include, SearchState& out) const {
    const int i = in.next_edge;
    const Mask ends = (Mask{1} << eu_[i]) | (Mask{1} << ev_[i]);
    out = in;
    out.next_edge = i + 1;
    if (include) {
      if (in.covered & ends) return false;
      out.covered |= ends;
      ++out.size;
    }
    Mask fresh = final_at_[i] & ~out.covered;
    out.dead |= fresh;
    while (fresh) {
      const int w = __builtin_ctzll(fresh);
      fresh &= fresh - 1;
      if (adj_[w] & out.dead) return false;
    }
    return true;
  }

  void descend(const SearchState& s, Counts& counts) const {
    if (s.next_edge == m_) {
      ++counts[s.size];
      return;
    }
    SearchState child;
    if (step(s, true, child)) descend(child, counts);
    if (step(s, false, child)) descend(child, counts);
  }

 private:
  int m_;
  std::vector<int> eu_, ev_;
  std::vector<Mask> final_at_;
  std::vector<Mask> adj_;
};

SizeProfile to_profile(const Counts& counts) {
  std::vector<BigInt> out(counts.begin(), counts.end());
  return SizeProfile(std::move(out));
}

}  // namespace

SizeProfile maximal_matching_profile_serial(const Graph& g,
                                            const EnumerationLimits& limits) {
  check_cap(g, limits);
  MaximalSearch search(g);
  Counts counts{};
  search.descend(SearchState{0, 0, 0, 0}, counts);
  return to_profile(counts);
}

SizeProfile maximal_matching_profile_parallel(const Graph& g,
                                              const EnumerationLimits& limits) {
  check_cap(g, limits);
  MaximalSearch search(g);
  const int workers = limits.workers > 0 ? limits.workers : omp_get_max_threads();

  // Breadth-first expansion of the first decisions until there is enough
  // independent work to balance the dynamic schedule.
  const std::size_t target = static_cast<std::size_t>(workers) * 64;
  std::vector<SearchState> frontier{SearchState{0, 0, 0, 0}};
  Counts counts{};
  for (int depth = 0; depth < search.edge_count() && frontier.size() < target; ++depth) {
    std::vector<SearchState> next;
    next.reserve(frontier.size() * 2);
    SearchState child;
    for (const auto& s : frontier) {
      if (search.step(s, true, child)) next.push_back(child);
      if (search.step(s, false, child)) next.push_back(child);
    }
    frontier = std::move(next);
  }

  const auto tasks = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel num_threads(workers)
  {
    Counts local{};
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t t = 0; t < tasks; ++t) search.descend(frontier[t], local);
#pragma omp critical(mmatch_profile_reduce)
    for (std::size_t k = 0; k < local.size(); ++k) counts[k] += local[k];
  }
  return to_profile(counts);
}

SizeProfile maximal_matching_profile(const Graph& g, const EnumerationLimits& limits) {
  // Tiny graphs are cheaper without a parallel region.
  if (g.size() < 24) return maximal_matching_profile_serial(g, limits);
  return maximal_matching_profile_parallel(g, limits);
}

}  // namespace mmatch
