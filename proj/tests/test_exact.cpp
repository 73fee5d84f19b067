#include "doctest.h"

#include <random>

#include "mmatch/errors.hpp"
#include "mmatch/exact.hpp"
#include "mmatch/families.hpp"
#include "mmatch/sweep.hpp"
#include "oracle.hpp"

using namespace mmatch;

namespace {

Graph fam(FamilyId id, int n, int s = 0, int c = 0) { return generate({id, s, c}, n); }

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Graph::Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("maximal profiles on small examples") {
  CHECK(maximal_matching_profile(fam(FamilyId::path, 4)) == SizeProfile::of({{1, 1}, {2, 1}}));
  CHECK(maximal_matching_profile(fam(FamilyId::thorn_complete, 3)) ==
        SizeProfile::of({{2, 3}, {3, 1}}));
  CHECK(oracle::to_map(maximal_matching_profile(fam(FamilyId::path, 6)).counts()) ==
        oracle::maximal_profile(fam(FamilyId::path, 6)));
  CHECK(maximal_matching_profile(fam(FamilyId::path, 6)) == SizeProfile::of({{2, 3}, {3, 1}}));
  CHECK(maximal_matching_profile(Graph(1, {})) == SizeProfile::of({{0, 1}}));
  CHECK(maximal_matching_profile(Graph(0, {})) == SizeProfile::of({{0, 1}}));
}

TEST_CASE("serial, parallel and oracle agree on random graphs") {
  std::mt19937 rng(11);
  for (int t = 0; t < 120; ++t) {
    const int n = 2 + t % 9;
    const auto g = random_graph(rng, n, 0.2 + 0.05 * (t % 10));
    if (g.size() > 20) continue;
    const auto serial = maximal_matching_profile_serial(g);
    CHECK(oracle::to_map(serial.counts()) == oracle::maximal_profile(g));
    for (int w : {1, 2, 3}) CHECK(maximal_matching_profile_parallel(g, {kDefaultVertexCap, w}) == serial);
    CHECK(oracle::to_map(matching_profile(g).counts()) == oracle::matching_profile(g));
  }
}

TEST_CASE("parallel kernel matches on larger family members") {
  for (const auto& g : {fam(FamilyId::ladder, 12), fam(FamilyId::thorn_ladder, 5),
                        fam(FamilyId::hexagon_chain, 3, 2), fam(FamilyId::complete, 9)})
    CHECK(maximal_matching_profile_parallel(g) == maximal_matching_profile_serial(g));
}

TEST_CASE("maximality equals independence of the uncovered set") {
  // Dual enumeration over every matching of every graph on up to 6 vertices
  // plus sampled graphs on 7 and 8 vertices.
  std::vector<Graph> graphs;
  for (int n = 0; n <= 6; ++n)
    for (auto& g : all_graphs(n)) graphs.push_back(g);
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) graphs.push_back(random_graph(rng, 7 + t % 2, 0.35));
  for (const auto& g : graphs) {
    if (g.size() > 18) continue;
    const std::uint32_t total = 1u << g.size();
    for (std::uint32_t s = 0; s < total; ++s) {
      if (!oracle::is_matching(g, s)) continue;
      VertexSet uncovered(g.order());
      for (int v = 0; v < g.order(); ++v) uncovered.insert(v);
      for (std::size_t e = 0; e < g.size(); ++e)
        if (s >> e & 1) {
          uncovered.erase(g.edges()[e].first);
          uncovered.erase(g.edges()[e].second);
        }
      REQUIRE(oracle::is_maximal(g, s) == is_independent(g, uncovered));
    }
  }
}

TEST_CASE("matching profiles") {
  CHECK(matching_profile(Graph(2, {{0, 1}})) == SizeProfile::of({{0, 1}, {1, 1}}));
  CHECK(matching_profile(fam(FamilyId::path, 4)) == SizeProfile::of({{0, 1}, {1, 3}, {2, 1}}));
  CHECK(matching_profile(Graph(0, {})) == SizeProfile::of({{0, 1}}));
}

TEST_CASE("maximum matching size") {
  CHECK(max_matching_size(fam(FamilyId::path, 5)) == 2);
  CHECK(max_matching_size(fam(FamilyId::thorn_complete, 3)) == 3);
  CHECK(max_matching_size(Graph(1, {})) == 0);
}

TEST_CASE("randomized greedy expectation") {
  CHECK(rg_expected_size(Graph(2, {{0, 1}})) == 1);
  CHECK(rg_expected_size(fam(FamilyId::path, 4)) == Rational(5, 3));
  CHECK(rg_expected_size(fam(FamilyId::thorn_complete, 3)) == Rational(7, 3));
  CHECK(rg_expected_size(Graph(3, {})) == 0);
}

TEST_CASE("recursion for mu agrees with the permutation definition and p(M) sums to 1") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) {
      if (g.size() > 5) continue;
      Rational mass = 0, size = 0;
      for_each_rg_outcome(g, [&](const RgOutcome& o) {
        mass += Rational(1, o.p);
        size += Rational(static_cast<long long>(o.sequence.size()), o.p);
      });
      CHECK(mass == 1);
      CHECK(size == rg_expected_size(g));
      CHECK(rg_expected_size(g) == oracle::mu_by_permutations(g));
    }
}

TEST_CASE("invariant reports") {
  const auto k3 = invariant_report(fam(FamilyId::thorn_complete, 3));
  CHECK(k3.i_avg == Rational(3, 4));
  CHECK(k3.i_ord == Rational(5, 6));
  CHECK(k3.i_df == Rational(7, 9));
  CHECK(k3.t0_ord == 12);
  CHECK(k3.t1_ord == 30);

  const auto p4 = invariant_report(fam(FamilyId::path, 4));
  CHECK(p4.i_avg == Rational(3, 4));
  CHECK(p4.i_ord == Rational(5, 6));
  CHECK(p4.i_df == Rational(5, 6));

  const auto k33 = invariant_report(fam(FamilyId::complete_bipartite, 3, 0, 3));
  CHECK(k33.i_avg == 1);
  CHECK(k33.i_ord == 1);
  CHECK(k33.i_df == 1);

  const auto empty = invariant_report(Graph(0, {}));
  CHECK(empty.nu == 0);
  CHECK(empty.i_avg == 1);
  CHECK(empty.i_ord == 1);
  CHECK(empty.i_arw == 1);
  CHECK(empty.i_df == 1);

  const auto k2 = invariant_report(Graph(2, {{0, 1}}));
  CHECK(k2.t0_arw == 2);
  CHECK(k2.i_arw == Rational(1, 2));
}

TEST_CASE("ordered totals follow k! S(G,k)") {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_graph(rng, 7, 0.4);
    const auto r = invariant_report(g);
    BigInt t0 = 0, t1 = 0;
    for (std::size_t k = 0; k < r.maximal.counts().size(); ++k) {
      t0 += factorial(k) * r.maximal.counts()[k];
      t1 += factorial(k) * k * r.maximal.counts()[k];
    }
    CHECK(r.t0_ord == t0);
    CHECK(r.t1_ord == t1);
  }
}

TEST_CASE("cap handling") {
  const auto big = fam(FamilyId::path, 27);
  CHECK_THROWS_AS(maximal_matching_profile(big), CapExceeded);
  CHECK_THROWS_AS(invariant_report(big), CapExceeded);
  CHECK(maximal_matching_profile(big, {27, 0}) == path_profile(27));
  try {
    rg_expected_size(big, {10, 0});
  } catch (const CapExceeded& e) {
    CHECK(e.order() == 27);
    CHECK(e.cap() == 10);
  }
}

TEST_CASE("clique counts") {
  CHECK(clique_maximal_count(3) == 3);
  CHECK(clique_maximal_count(2) == 1);
  CHECK(clique_maximal_count(6) == 15);
  CHECK(clique_maximal_count(0) == 1);
  CHECK(clique_maximal_count(-1) == 1);
  for (int s = 0; s <= 8; ++s) {
    CHECK(clique_maximal_count(s) == oracle::clique_count(s));
    CHECK(maximal_matching_profile(fam(FamilyId::complete, s)).total() == clique_maximal_count(s));
  }
}

TEST_CASE("wheel closed form") {
  CHECK(wheel_profile(6) == SizeProfile::of({{2, 5}, {3, 5}}));
  CHECK(wheel_profile(5) == SizeProfile::of({{2, 10}}));
  CHECK(wheel_profile(4) == SizeProfile::of({{2, 3}}));
  for (int n = 4; n <= 12; ++n)
    CHECK(wheel_profile(n) == maximal_matching_profile(fam(FamilyId::wheel, n)));
  CHECK_THROWS_AS(wheel_profile(3), InputError);
}

TEST_CASE("thorn complete bipartite closed form") {
  CHECK(thorn_bipartite_profile(1, 2) == SizeProfile::of({{2, 2}, {3, 1}}));
  CHECK(thorn_bipartite_profile(0, 3) == SizeProfile::of({{3, 1}}));
  CHECK(thorn_bipartite_profile(2, 2) == SizeProfile::of({{2, 2}, {3, 4}, {4, 1}}));
  for (int c = 0; c <= 3; ++c)
    for (int n = 0; n <= 5; ++n)
      CHECK(thorn_bipartite_profile(c, n) ==
            maximal_matching_profile(fam(FamilyId::thorn_complete_bipartite, n, 0, c)));
}

TEST_CASE("path closed form") {
  for (int n = 0; n <= 16; ++n)
    CHECK(oracle::to_map(path_profile(n).counts()) == oracle::maximal_profile(fam(FamilyId::path, n)));
}

TEST_CASE("average ratio convention") {
  CHECK(average_ratio(SizeProfile::of({{1, 1}, {2, 1}}), 2) == Rational(3, 4));
  CHECK(average_ratio(SizeProfile::of({{0, 1}}), 0) == 1);
}
