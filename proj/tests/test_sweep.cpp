#include "doctest.h"

#include <random>
#include <sstream>

#include "mmatch/errors.hpp"
#include "mmatch/sweep.hpp"
#include "oracle.hpp"

using namespace mmatch;

TEST_CASE("class counts up to order 6") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    INFO("n=" << n);
    CHECK(all_graphs(n).size() == expected[n]);
  }
  for (int n = 0; n <= 5; ++n) CHECK(all_graphs(n).size() == oracle::class_count(n));
  CHECK_THROWS_AS(all_graphs(7), InputError);
}

TEST_CASE("representatives are canonical and distinct") {
  const auto graphs = all_graphs(5);
  std::uint64_t last = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto code = adjacency_code(graphs[i]);
    CHECK(canonical_code(graphs[i]) == code);
    if (i > 0) CHECK(code > last);
    last = code;
  }
}

TEST_CASE("ratios are invariant under relabelling") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 7;
    std::vector<Graph::Edge> e;
    std::bernoulli_distribution coin(0.45);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) e.emplace_back(i, j);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Graph::Edge> moved;
    for (auto [u, v] : e) moved.emplace_back(perm[u], perm[v]);
    const auto a = invariant_report(Graph(n, e));
    const auto b = invariant_report(Graph(n, moved));
    CHECK(a.i_avg == b.i_avg);
    CHECK(a.i_ord == b.i_ord);
    CHECK(a.i_df == b.i_df);
    CHECK(a.i_arw == b.i_arw);
  }
}

TEST_CASE("comparison rows") {
  std::vector<Graph> connected3;
  for (const auto& g : all_graphs(3))
    if (is_connected(g)) connected3.push_back(g);
  const auto three = compare_invariants(connected3);
  REQUIRE(three.rows.size() == 2);
  for (const auto& r : three.rows) CHECK(r.i_avg == 1);

  const auto six = compare_invariants(all_graphs(6));
  CHECK(six.summary.graphs == 156);
  CHECK(six.summary.ord_below_avg == 0);
  for (std::size_t i = 0; i < six.rows.size(); ++i) {
    CHECK(six.rows[i].i_ord >= six.rows[i].i_avg);
    if (i > 0) CHECK(six.rows[i - 1].i_avg <= six.rows[i].i_avg);
  }
  CHECK(six.summary.df_above_ord_witnesses.size() == six.summary.df_above_ord);
  CHECK(six.summary.df_below_avg_witnesses.size() == six.summary.df_below_avg);

  const auto empty = compare_invariants({Graph(4, {})});
  CHECK(empty.rows[0].i_avg == 1);
  CHECK(empty.rows[0].i_ord == 1);
  CHECK(empty.rows[0].i_df == 1);
  CHECK(empty.rows[0].i_arw == 1);
}

TEST_CASE("CSV is deterministic across worker counts") {
  const auto graphs = all_graphs(5);
  const auto a = comparison_csv(compare_invariants(graphs, {kDefaultVertexCap, 1}).rows);
  const auto b = comparison_csv(compare_invariants(graphs, {kDefaultVertexCap, 4}).rows);
  CHECK(a == b);
  CHECK(a.substr(0, a.find('\n')) ==
        "graph6,n,m,nu,I,I_ord,I_DF,I_ARW,I_dec,I_ord_dec,I_DF_dec,I_ARW_dec");
  CHECK(std::count(a.begin(), a.end(), '\n') == 35);
}

TEST_CASE("graph6 stream input") {
  std::istringstream in(">>graph6<<A_\n\n@\r\nC~\n");
  const auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[2].size() == 6);
  std::istringstream bad("A_\n!!\n");
  CHECK_THROWS_AS(read_graph6_stream(bad), InputError);
}

TEST_CASE("thorn paths are extremal among thorn trees") {
  const std::size_t trees[] = {0, 1, 1, 1, 2, 3, 6};
  for (int n = 1; n <= 6; ++n) {
    const auto report = tree_extremal_check(n);
    INFO("n=" << n);
    CHECK(report.ranking.size() == trees[n]);
    CHECK(report.path_minimal);
    CHECK(report.ranking.front().i_thorn == report.path_value);
  }
  CHECK_THROWS_AS(tree_extremal_check(7), InputError);
}
