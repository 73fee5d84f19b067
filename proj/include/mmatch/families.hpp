#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmatch/graph.hpp"
#include "mmatch/numeric.hpp"

namespace mmatch {

// Vertex layouts (0-indexed):
//   path             v_i = i, edges (i, i+1).
//   cycle            path plus (0, n-1).
//   wheel            hub 0, rim 1..n-1 forms a cycle.
//   complete         K_n.
//   complete-bipartite  K_{c,n}: side A = 0..c-1, side B = c..c+n-1.
//   thorn-*          thorn() of the base graph: pendant of v is n_base + v.
//   hexagon-chain s  hexagon i occupies 6i..6i+5 as a ring; bridge
//                    (6i + s, 6(i+1)) joins v_i^{s+1} to v_{i+1}^1.
//   c4-chain s       square i occupies 4i..4i+3; bridge (4i + s, 4(i+1)).
//   triangle-chain   spine 0..n, apex n+1+i; triangle i = {i, i+1, n+1+i}.
//   clique-pendant-chain s  clique i occupies s*i..s*i+s-1 with v_i = s*i;
//                    pendant w_i = s*n + i; spine edges (s*i, s*(i+1)).
//   clique-link-chain s     clique i occupies s*i..s*i+s-1, v_{i,1} = s*i,
//                    v_{i,2} = s*i+1; link (s*i+1, s*(i+1)).
//   ladder           v_i = i, w_i = n+i; rails (i,i+1), (n+i,n+i+1); rungs (i,n+i).
//   caterpillar-tree spine v_1..v_{3n-2} = 0..3n-3, leg w_i = 3n-2+i on v_{3i-2}.
enum class FamilyId {
  path,
  cycle,
  wheel,
  complete,
  complete_bipartite,
  thorn_path,
  thorn_cycle,
  thorn_complete,
  hexagon_chain,
  c4_chain,
  triangle_chain,
  clique_pendant_chain,
  clique_link_chain,
  ladder,
  thorn_ladder,
  caterpillar_tree,
  thorn_complete_bipartite,
};

struct FamilyKey {
  FamilyId id = FamilyId::path;
  int s = 0;  // hexagon/c4 bridge offset or clique order
  int c = 0;  // fixed side of the (thorn) complete bipartite families

  friend bool operator==(const FamilyKey&, const FamilyKey&) = default;
};

std::string_view family_name(FamilyId id);
const std::vector<FamilyId>& all_family_ids();

// Accepts the plain ids ("hexagon-chain"), ids with a trailing parameter
// ("hexagon-chain2", "thorn-complete-bipartite3") and the alias "trees".
// Explicit s / c override a trailing parameter. Throws InputError listing the
// valid ids on failure.
FamilyKey parse_family(std::string_view text, std::optional<int> s = {},
                       std::optional<int> c = {});

// "hexagon-chain2", "path", "thorn-complete-bipartite1".
std::string family_label(const FamilyKey& key);

bool family_uses_s(FamilyId id);
bool family_uses_c(FamilyId id);

struct ProfileRule {
  enum class Kind { recurrence, closed_form, enumeration_only };
  Kind kind = Kind::enumeration_only;
  std::string rule_id;
};

struct FamilyEntry {
  FamilyKey key;
  int min_n = 0;
  std::function<Graph(int)> generator;
  std::function<int(int)> nu_of;
  std::function<int(int)> vertex_count;
  std::function<std::size_t(int)> edge_count;
  Rational growth;  // lim nu(G_n)/n
  ProfileRule rule;
  std::string nu_formula;
};

// Throws InputError for parameters outside the analysed ranges.
FamilyEntry family_metadata(const FamilyKey& key);

Graph generate(const FamilyKey& key, int n);

}  // namespace mmatch
