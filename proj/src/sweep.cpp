#include "mmatch/sweep.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>

#include <omp.h>

#include "mmatch/errors.hpp"

namespace mmatch {

namespace {

constexpr int kMaxCodeOrder = 11;  // 55 pair bits

int pair_count(int n) { return n * (n - 1) / 2; }
int pair_pos(int i, int j) { return j * (j - 1) / 2 + i; }  // i < j

std::uint64_t code_bit(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return std::uint64_t{1} << (pair_count(n) - 1 - pair_pos(i, j));
}

std::uint64_t relabelled_code(int n, const std::vector<Graph::Edge>& edges,
                              const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (auto [u, v] : edges) code |= code_bit(n, perm[u], perm[v]);
  return code;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  if (g.order() > kMaxCodeOrder) throw InputError("adjacency_code needs order <= 11");
  std::uint64_t code = 0;
  for (auto [u, v] : g.edges()) code |= code_bit(g.order(), u, v);
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Graph::Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (code & code_bit(n, i, j)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxSweepOrder)
    throw InputError("canonical forms are brute force; order must be <= " +
                     std::to_string(kMaxSweepOrder));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = adjacency_code(g);
  do {
    best = std::min(best, relabelled_code(n, g.edges(), perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > kMaxSweepOrder)
    throw InputError("built-in generation supports 0 <= n <= " + std::to_string(kMaxSweepOrder) +
                     "; pipe larger orders in as graph6");
  const int m = pair_count(n);
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  // Sweep labelled graphs in code order; each unseen code starts a new class
  // whose whole orbit is marked.
  std::vector<bool> seen(total, false);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (seen[code]) continue;
    const auto edges = graph_from_code(n, code).edges();
    std::uint64_t best = code;
    for (const auto& p : perms) {
      const auto image = relabelled_code(n, edges, p);
      seen[image] = true;
      best = std::min(best, image);
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<Graph> out;
  for (auto code : reps) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const InputError& e) {
      throw InputError("graph6 line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

Comparison compare_invariants(const std::vector<Graph>& graphs, const EnumerationLimits& limits) {
  for (const auto& g : graphs) check_cap(g, limits);
  Comparison out;
  out.rows.resize(graphs.size());
  std::exception_ptr failure;
  const int count = static_cast<int>(graphs.size());
  const int workers = limits.workers > 0 ? limits.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int i = 0; i < count; ++i) {
    try {
      const auto& g = graphs[i];
      EnumerationLimits inner = limits;
      inner.workers = 1;
      const auto r = invariant_report(g, inner);
      auto& row = out.rows[i];
      row.graph6 = graph6_encode(g);
      row.n = g.order();
      row.m = g.size();
      row.nu = r.nu;
      row.i_avg = r.i_avg;
      row.i_ord = r.i_ord;
      row.i_df = r.i_df;
      row.i_arw = r.i_arw;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [](const ComparisonRow& a, const ComparisonRow& b) { return a.i_avg < b.i_avg; });
  auto& s = out.summary;
  s.graphs = out.rows.size();
  for (const auto& row : out.rows) {
    if (row.i_df > row.i_ord) {
      ++s.df_above_ord;
      s.df_above_ord_witnesses.push_back(row.graph6);
    }
    if (row.i_df < row.i_avg) {
      ++s.df_below_avg;
      s.df_below_avg_witnesses.push_back(row.graph6);
    }
    if (row.i_ord < row.i_avg) ++s.ord_below_avg;
  }
  return out;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream out;
  out << "graph6,n,m,nu,I,I_ord,I_DF,I_ARW,I_dec,I_ord_dec,I_DF_dec,I_ARW_dec\n";
  for (const auto& r : rows) {
    out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.nu;
    for (const auto* q : {&r.i_avg, &r.i_ord, &r.i_df, &r.i_arw}) out << ',' << to_fraction_string(*q);
    for (const auto* q : {&r.i_avg, &r.i_ord, &r.i_df, &r.i_arw})
      out << ',' << to_decimal_string(*q, 17);
    out << '\n';
  }
  return out.str();
}

TreeExtremalReport tree_extremal_check(int n, const EnumerationLimits& limits) {
  if (n < 1 || n > kMaxSweepOrder)
    throw InputError("tree check supports 1 <= n <= " + std::to_string(kMaxSweepOrder));
  TreeExtremalReport report;
  report.n = n;

  std::vector<Graph::Edge> path_edges;
  for (int i = 0; i + 1 < n; ++i) path_edges.emplace_back(i, i + 1);
  const Graph path(n, path_edges);
  const auto path_code = canonical_code(path);
  report.path_value = invariant_report(thorn(path), limits).i_avg;

  for (const auto& g : all_graphs(n)) {
    if (g.size() != static_cast<std::size_t>(n - 1) || !is_connected(g)) continue;
    TreeRank rank;
    rank.graph6 = graph6_encode(g);
    rank.i_thorn = invariant_report(thorn(g), limits).i_avg;
    rank.is_path = canonical_code(g) == path_code;
    report.ranking.push_back(std::move(rank));
  }
  std::stable_sort(report.ranking.begin(), report.ranking.end(),
                   [](const TreeRank& a, const TreeRank& b) { return a.i_thorn < b.i_thorn; });
  report.path_minimal = std::all_of(report.ranking.begin(), report.ranking.end(),
                                    [&](const TreeRank& t) { return report.path_value <= t.i_thorn; });
  return report;
}

}  // namespace mmatch
