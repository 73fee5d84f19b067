#include "mmatch/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "mmatch/errors.hpp"

namespace mmatch {

namespace {

struct NameEntry {
  FamilyId id;
  std::string_view name;
};

constexpr NameEntry kNames[] = {
    {FamilyId::path, "path"},
    {FamilyId::cycle, "cycle"},
    {FamilyId::wheel, "wheel"},
    {FamilyId::complete, "complete"},
    {FamilyId::complete_bipartite, "complete-bipartite"},
    {FamilyId::thorn_path, "thorn-path"},
    {FamilyId::thorn_cycle, "thorn-cycle"},
    {FamilyId::thorn_complete, "thorn-complete"},
    {FamilyId::hexagon_chain, "hexagon-chain"},
    {FamilyId::c4_chain, "c4-chain"},
    {FamilyId::triangle_chain, "triangle-chain"},
    {FamilyId::clique_pendant_chain, "clique-pendant-chain"},
    {FamilyId::clique_link_chain, "clique-link-chain"},
    {FamilyId::ladder, "ladder"},
    {FamilyId::thorn_ladder, "thorn-ladder"},
    {FamilyId::caterpillar_tree, "caterpillar-tree"},
    {FamilyId::thorn_complete_bipartite, "thorn-complete-bipartite"},
};

std::string valid_ids() {
  std::string out;
  for (const auto& e : kNames) {
    if (!out.empty()) out += ", ";
    out += e.name;
  }
  return out;
}

using Edges = std::vector<Graph::Edge>;

Graph make_path(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph make_cycle(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph make_wheel(int n) {
  Edges e;
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(0, 1 + i);
    e.emplace_back(1 + i, 1 + (i + 1) % rim);
  }
  return Graph(n, std::move(e));
}

void add_clique(Edges& e, int first, int order) {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b) e.emplace_back(first + a, first + b);
}

Graph make_complete(int n) {
  Edges e;
  add_clique(e, 0, n);
  return Graph(n, std::move(e));
}

Graph make_complete_bipartite(int a, int b) {
  Edges e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Graph make_ring_chain(int ring, int s, int n) {
  Edges e;
  for (int i = 0; i < n; ++i) {
    const int base = ring * i;
    for (int j = 0; j < ring; ++j) e.emplace_back(base + j, base + (j + 1) % ring);
    if (i + 1 < n) e.emplace_back(base + s, ring * (i + 1));
  }
  return Graph(ring * n, std::move(e));
}

Graph make_triangle_chain(int n) {
  Edges e;
  for (int i = 0; i < n; ++i) {
    const int apex = n + 1 + i;
    e.emplace_back(i, i + 1);
    e.emplace_back(i, apex);
    e.emplace_back(i + 1, apex);
  }
  return Graph(2 * n + 1, std::move(e));
}

Graph make_clique_pendant_chain(int s, int n) {
  Edges e;
  for (int i = 0; i < n; ++i) {
    add_clique(e, s * i, s);
    e.emplace_back(s * i, s * n + i);
    if (i + 1 < n) e.emplace_back(s * i, s * (i + 1));
  }
  return Graph((s + 1) * n, std::move(e));
}

Graph make_clique_link_chain(int s, int n) {
  Edges e;
  for (int i = 0; i < n; ++i) {
    add_clique(e, s * i, s);
    if (i + 1 < n) e.emplace_back(s * i + 1, s * (i + 1));
  }
  return Graph(s * n, std::move(e));
}

Graph make_ladder(int n) {
  Edges e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, n + i);
    if (i + 1 < n) {
      e.emplace_back(i, i + 1);
      e.emplace_back(n + i, n + i + 1);
    }
  }
  return Graph(2 * n, std::move(e));
}

Graph make_caterpillar(int n) {
  const int spine = 3 * n - 2;
  Edges e;
  for (int i = 0; i + 1 < spine; ++i) e.emplace_back(i, i + 1);
  for (int i = 0; i < n; ++i) e.emplace_back(3 * i, spine + i);
  return Graph(4 * n - 2, std::move(e));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

}  // namespace

std::string_view family_name(FamilyId id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.name;
  return "unknown";
}

const std::vector<FamilyId>& all_family_ids() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> out;
    for (const auto& e : kNames) out.push_back(e.id);
    return out;
  }();
  return ids;
}

bool family_uses_s(FamilyId id) {
  return id == FamilyId::hexagon_chain || id == FamilyId::c4_chain ||
         id == FamilyId::clique_pendant_chain || id == FamilyId::clique_link_chain;
}

bool family_uses_c(FamilyId id) {
  return id == FamilyId::complete_bipartite || id == FamilyId::thorn_complete_bipartite;
}

FamilyKey parse_family(std::string_view text, std::optional<int> s, std::optional<int> c) {
  if (text == "trees" || text == "tree") text = "caterpillar-tree";

  std::string_view stem = text;
  std::optional<int> trailing;
  std::size_t digits = 0;
  while (digits < stem.size() && std::isdigit(static_cast<unsigned char>(stem[stem.size() - 1 - digits])))
    ++digits;
  if (digits > 0 && digits < stem.size()) {
    int value = 0;
    const auto tail = stem.substr(stem.size() - digits);
    std::from_chars(tail.data(), tail.data() + tail.size(), value);
    trailing = value;
    stem.remove_suffix(digits);
  }

  for (const auto& e : kNames) {
    FamilyKey key{e.id};
    if (e.name == text) {
      // exact id (may still be parameterised via flags)
    } else if (trailing && e.name == stem && (family_uses_s(e.id) || family_uses_c(e.id))) {
      if (family_uses_s(e.id)) key.s = *trailing;
      else key.c = *trailing;
    } else {
      continue;
    }
    if (s) key.s = *s;
    if (c) key.c = *c;
    if (family_uses_s(e.id) && key.s == 0 && !s && !trailing)
      throw InputError("family " + std::string(e.name) + " needs a parameter --s");
    family_metadata(key);  // validates parameters
    return key;
  }
  throw InputError("unknown family '" + std::string(text) + "'; valid ids: " + valid_ids());
}

std::string family_label(const FamilyKey& key) {
  std::string out(family_name(key.id));
  if (family_uses_s(key.id)) out += std::to_string(key.s);
  if (family_uses_c(key.id)) out += std::to_string(key.c);
  return out;
}

FamilyEntry family_metadata(const FamilyKey& key) {
  FamilyEntry f;
  f.key = key;
  const int s = key.s;
  const int c = key.c;
  using Kind = ProfileRule::Kind;
  const auto label = family_label(key);

  switch (key.id) {
    case FamilyId::path:
      f.min_n = 0;
      f.generator = make_path;
      f.nu_of = [](int n) { return n / 2; };
      f.vertex_count = [](int n) { return n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(std::max(0, n - 1)); };
      f.growth = Rational(1, 2);
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "floor(n/2)";
      break;
    case FamilyId::cycle:
      f.min_n = 3;
      f.generator = make_cycle;
      f.nu_of = [](int n) { return n / 2; };
      f.vertex_count = [](int n) { return n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(n); };
      f.growth = Rational(1, 2);
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "floor(n/2)";
      break;
    case FamilyId::wheel:
      f.min_n = 4;
      f.generator = make_wheel;
      f.nu_of = [](int n) { return n / 2; };
      f.vertex_count = [](int n) { return n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(2 * (n - 1)); };
      f.growth = Rational(1, 2);
      f.rule = {Kind::closed_form, "wheel"};
      f.nu_formula = "floor(n/2)";
      break;
    case FamilyId::complete:
      f.min_n = 0;
      f.generator = make_complete;
      f.nu_of = [](int n) { return n / 2; };
      f.vertex_count = [](int n) { return n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(n) * std::max(0, n - 1) / 2; };
      f.growth = Rational(1, 2);
      f.rule = {Kind::closed_form, "clique"};
      f.nu_formula = "floor(n/2)";
      break;
    case FamilyId::complete_bipartite:
      require(c >= 0, "complete-bipartite needs c >= 0");
      f.min_n = 0;
      f.generator = [c](int n) { return make_complete_bipartite(c, n); };
      f.nu_of = [c](int n) { return std::min(c, n); };
      f.vertex_count = [c](int n) { return c + n; };
      f.edge_count = [c](int n) { return static_cast<std::size_t>(c) * n; };
      f.growth = 0;
      f.rule = {Kind::closed_form, "complete-bipartite"};
      f.nu_formula = "min(c, n)";
      break;
    case FamilyId::thorn_path:
      f.min_n = 0;
      f.generator = [](int n) { return thorn(make_path(n)); };
      f.nu_of = [](int n) { return n; };
      f.vertex_count = [](int n) { return 2 * n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(std::max(0, 2 * n - 1)); };
      f.growth = 1;
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "n";
      break;
    case FamilyId::thorn_cycle:
      f.min_n = 3;
      f.generator = [](int n) { return thorn(make_cycle(n)); };
      f.nu_of = [](int n) { return n; };
      f.vertex_count = [](int n) { return 2 * n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(2 * n); };
      f.growth = 1;
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "n";
      break;
    case FamilyId::thorn_complete:
      f.min_n = 0;
      f.generator = [](int n) { return thorn(make_complete(n)); };
      f.nu_of = [](int n) { return n; };
      f.vertex_count = [](int n) { return 2 * n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(n) * std::max(0, n - 1) / 2 + n; };
      f.growth = 1;
      f.rule = {Kind::enumeration_only, ""};
      f.nu_formula = "n";
      break;
    case FamilyId::hexagon_chain:
      require(s >= 1 && s <= 3, "hexagon-chain needs s in {1, 2, 3}");
      f.min_n = 1;
      f.generator = [s](int n) { return make_ring_chain(6, s, n); };
      f.nu_of = [](int n) { return 3 * n; };
      f.vertex_count = [](int n) { return 6 * n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(7 * n - 1); };
      f.growth = 3;
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "3n";
      break;
    case FamilyId::c4_chain:
      require(s >= 1 && s <= 2, "c4-chain needs s in {1, 2}");
      f.min_n = 1;
      f.generator = [s](int n) { return make_ring_chain(4, s, n); };
      f.nu_of = [](int n) { return 2 * n; };
      f.vertex_count = [](int n) { return 4 * n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(5 * n - 1); };
      f.growth = 2;
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "2n";
      break;
    case FamilyId::triangle_chain:
      f.min_n = 1;
      f.generator = make_triangle_chain;
      f.nu_of = [](int n) { return n; };
      f.vertex_count = [](int n) { return 2 * n + 1; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(3 * n); };
      f.growth = 1;
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "n";
      break;
    case FamilyId::clique_pendant_chain:
      require(s >= 1, "clique-pendant-chain needs s >= 1");
      f.min_n = 1;
      f.generator = [s](int n) { return make_clique_pendant_chain(s, n); };
      f.nu_of = [s](int n) { return (s + 1) / 2 * n; };
      f.vertex_count = [s](int n) { return (s + 1) * n; };
      f.edge_count = [s](int n) {
        return static_cast<std::size_t>(n) * (s * (s - 1) / 2 + 1) + (n - 1);
      };
      f.growth = (s + 1) / 2;
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "ceil(s/2) n";
      break;
    case FamilyId::clique_link_chain:
      require(s >= 2, "clique-link-chain needs s >= 2");
      f.min_n = 1;
      f.generator = [s](int n) { return make_clique_link_chain(s, n); };
      f.nu_of = [s](int n) { return s * n / 2; };
      f.vertex_count = [s](int n) { return s * n; };
      f.edge_count = [s](int n) {
        return static_cast<std::size_t>(n) * (s * (s - 1) / 2) + (n - 1);
      };
      f.growth = Rational(s, 2);
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "floor(s n / 2)";
      break;
    case FamilyId::ladder:
      f.min_n = 1;
      f.generator = make_ladder;
      f.nu_of = [](int n) { return n; };
      f.vertex_count = [](int n) { return 2 * n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(3 * n - 2); };
      f.growth = 1;
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "n";
      break;
    case FamilyId::thorn_ladder:
      f.min_n = 1;
      f.generator = [](int n) { return thorn(make_ladder(n)); };
      f.nu_of = [](int n) { return 2 * n; };
      f.vertex_count = [](int n) { return 4 * n; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(5 * n - 2); };
      f.growth = 2;
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "2n";
      break;
    case FamilyId::caterpillar_tree:
      f.min_n = 1;
      f.generator = make_caterpillar;
      f.nu_of = [](int n) { return 2 * n - 1; };
      f.vertex_count = [](int n) { return 4 * n - 2; };
      f.edge_count = [](int n) { return static_cast<std::size_t>(4 * n - 3); };
      f.growth = 2;
      f.rule = {Kind::recurrence, label};
      f.nu_formula = "2n - 1";
      break;
    case FamilyId::thorn_complete_bipartite:
      require(c >= 0, "thorn-complete-bipartite needs c >= 0");
      f.min_n = 0;
      f.generator = [c](int n) { return thorn(make_complete_bipartite(c, n)); };
      f.nu_of = [c](int n) { return c + n; };
      f.vertex_count = [c](int n) { return 2 * (c + n); };
      f.edge_count = [c](int n) { return static_cast<std::size_t>(c) * n + c + n; };
      f.growth = 1;
      f.rule = {Kind::closed_form, "thorn-complete-bipartite"};
      f.nu_formula = "n + c";
      break;
  }
  return f;
}

Graph generate(const FamilyKey& key, int n) {
  const auto f = family_metadata(key);
  if (n < f.min_n)
    throw InputError(family_label(key) + " is defined for n >= " + std::to_string(f.min_n));
  return f.generator(n);
}

}  // namespace mmatch
