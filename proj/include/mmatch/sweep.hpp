#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "mmatch/exact.hpp"
#include "mmatch/graph.hpp"

namespace mmatch {

inline constexpr int kMaxSweepOrder = 6;

// Upper-triangle adjacency bits in graph6 (column-major) order, first pair in
// the most significant position. Requires order() <= 11.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

// Smallest adjacency_code over all relabellings; isomorphic graphs share it.
// Brute force over n! permutations, so n <= kMaxSweepOrder.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class, sorted by canonical code. Each
// representative is relabelled to its canonical form. Throws InputError for
// n > kMaxSweepOrder.
std::vector<Graph> all_graphs(int n);

// Newline-delimited graph6; blank lines and a ">>graph6<<" header are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

struct ComparisonRow {
  std::string graph6;
  int n = 0;
  std::size_t m = 0;
  int nu = 0;
  Rational i_avg, i_ord, i_df, i_arw;
};

struct ComparisonSummary {
  std::size_t graphs = 0;
  std::size_t df_above_ord = 0;  // I^DF > I^o
  std::size_t df_below_avg = 0;  // I^DF < I
  std::size_t ord_below_avg = 0;  // I^o < I, expected to stay 0
  std::vector<std::string> df_above_ord_witnesses;
  std::vector<std::string> df_below_avg_witnesses;
};

struct Comparison {
  std::vector<ComparisonRow> rows;  // non-decreasing I, input order on ties
  ComparisonSummary summary;
};

// Invariants are computed per graph on OpenMP workers; output order does not
// depend on the worker count.
Comparison compare_invariants(const std::vector<Graph>& graphs,
                              const EnumerationLimits& limits = {});

// graph6,n,m,nu,I,I_ord,I_DF,I_ARW,I_dec,I_ord_dec,I_DF_dec,I_ARW_dec
std::string comparison_csv(const std::vector<ComparisonRow>& rows);

struct TreeRank {
  std::string graph6;  // the tree, not its thorn
  Rational i_thorn;    // I(thorn(T))
  bool is_path = false;
};

struct TreeExtremalReport {
  int n = 0;
  Rational path_value;          // I(thorn(P_n))
  std::vector<TreeRank> ranking;  // non-decreasing i_thorn
  bool path_minimal = false;
};

// Ranks thorn(T) over all trees T of order n (1 <= n <= kMaxSweepOrder).
TreeExtremalReport tree_extremal_check(int n, const EnumerationLimits& limits = {});

}  // namespace mmatch
