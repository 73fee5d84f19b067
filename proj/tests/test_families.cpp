#include "doctest.h"

#include "mmatch/errors.hpp"
#include "mmatch/exact.hpp"
#include "mmatch/families.hpp"
#include "oracle.hpp"

using namespace mmatch;

namespace {

std::vector<FamilyKey> sample_keys() {
  std::vector<FamilyKey> keys;
  for (auto id : all_family_ids()) {
    if (id == FamilyId::hexagon_chain) {
      for (int s = 1; s <= 3; ++s) keys.push_back({id, s});
    } else if (id == FamilyId::c4_chain) {
      for (int s = 1; s <= 2; ++s) keys.push_back({id, s});
    } else if (id == FamilyId::clique_pendant_chain) {
      for (int s = 1; s <= 5; ++s) keys.push_back({id, s});
    } else if (id == FamilyId::clique_link_chain) {
      for (int s = 2; s <= 5; ++s) keys.push_back({id, s});
    } else if (family_uses_c(id)) {
      for (int c = 0; c <= 3; ++c) keys.push_back({id, 0, c});
    } else {
      keys.push_back({id});
    }
  }
  return keys;
}

}  // namespace

TEST_CASE("documented examples") {
  CHECK(generate({FamilyId::path}, 4) == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));

  const auto meta_chain = generate({FamilyId::hexagon_chain, 2}, 3);
  CHECK(meta_chain.order() == 18);
  CHECK(meta_chain.size() == 20);
  // Bridges leave the third ring vertex of each hexagon.
  CHECK(meta_chain.has_edge(2, 6));
  CHECK(meta_chain.has_edge(8, 12));

  const auto ladder = generate({FamilyId::ladder}, 3);
  CHECK(ladder.order() == 6);
  CHECK(ladder.size() == 7);

  const auto g43 = generate({FamilyId::clique_pendant_chain, 3}, 3);
  CHECK(g43.order() == 12);
  CHECK(g43.size() == 3 * 3 + 3 + 2);
  int pendants = 0;
  for (int v = 0; v < 12; ++v) pendants += g43.degree(v) == 1;
  CHECK(pendants == 3);
}

TEST_CASE("vertex and edge counts follow the closed forms") {
  for (const auto& key : sample_keys()) {
    const auto meta = family_metadata(key);
    for (int n = meta.min_n; n <= 10; ++n) {
      const auto g = meta.generator(n);
      INFO(family_label(key) << " n=" << n);
      CHECK(g.order() == meta.vertex_count(n));
      CHECK(g.size() == meta.edge_count(n));
    }
  }
  CHECK(generate({FamilyId::hexagon_chain, 1}, 4).order() == 24);
  CHECK(generate({FamilyId::caterpillar_tree}, 5).order() == 18);
  CHECK(generate({FamilyId::thorn_ladder}, 5).order() == 20);
}

TEST_CASE("nu formulas agree with enumeration") {
  for (const auto& key : sample_keys()) {
    const auto meta = family_metadata(key);
    for (int n = meta.min_n; n <= 14 && meta.vertex_count(n) <= 22; ++n) {
      INFO(family_label(key) << " n=" << n);
      CHECK(meta.nu_of(n) == max_matching_size(meta.generator(n)));
    }
  }
}

TEST_CASE("growth constants") {
  CHECK(family_metadata({FamilyId::path}).growth == Rational(1, 2));
  CHECK(family_metadata({FamilyId::clique_pendant_chain, 3}).growth == 2);
  CHECK(family_metadata({FamilyId::clique_link_chain, 3}).growth == Rational(3, 2));
  const auto trees = family_metadata(parse_family("trees"));
  CHECK(trees.growth == 2);
  CHECK(trees.nu_of(1) == 1);
  CHECK(trees.nu_of(2) == 3);
  CHECK(trees.nu_of(3) == 5);

  for (const auto& key : sample_keys()) {
    const auto meta = family_metadata(key);
    // nu is affine in n; the two bipartite families carry the fixed side c in
    // their intercept, so their bound scales with c.
    const double slack = family_uses_c(key.id) ? std::max(1, key.c) : 1;
    for (int n = std::max(1, meta.min_n); n <= 60; ++n) {
      INFO(family_label(key) << " n=" << n);
      CHECK(std::abs(static_cast<double>(meta.nu_of(n)) / n - to_double(meta.growth)) <=
            slack / n + 1e-12);
    }
  }
}

TEST_CASE("clique-pendant chain with s = 1 has the thorn path profile") {
  for (int n = 1; n <= 9; ++n)
    CHECK(maximal_matching_profile(generate({FamilyId::clique_pendant_chain, 1}, n)) ==
          maximal_matching_profile(generate({FamilyId::thorn_path}, n)));
}

TEST_CASE("family id parsing") {
  CHECK(parse_family("hexagon-chain2") == FamilyKey{FamilyId::hexagon_chain, 2});
  CHECK(parse_family("hexagon-chain", 3) == FamilyKey{FamilyId::hexagon_chain, 3});
  CHECK(parse_family("thorn-complete-bipartite3") ==
        FamilyKey{FamilyId::thorn_complete_bipartite, 0, 3});
  CHECK(parse_family("complete-bipartite", {}, 2) == FamilyKey{FamilyId::complete_bipartite, 0, 2});
  CHECK(parse_family("trees").id == FamilyId::caterpillar_tree);
  CHECK(family_label({FamilyId::c4_chain, 1}) == "c4-chain1");

  try {
    parse_family("hexagon");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("thorn-ladder") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_family("hexagon-chain4"), InputError);
  CHECK_THROWS_AS(parse_family("c4-chain3"), InputError);
  CHECK_THROWS_AS(parse_family("clique-link-chain1"), InputError);
  CHECK_THROWS_AS(parse_family("hexagon-chain"), InputError);
}

TEST_CASE("out-of-range indices") {
  CHECK_THROWS_AS(generate({FamilyId::cycle}, 2), InputError);
  CHECK_THROWS_AS(generate({FamilyId::wheel}, 3), InputError);
  CHECK_THROWS_AS(generate({FamilyId::caterpillar_tree}, 0), InputError);
  CHECK(generate({FamilyId::cycle}, 3).size() == 3);
}
