#include "mmatch/catalog.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>

#include <omp.h>

#include "mmatch/errors.hpp"

namespace mmatch {

namespace {

struct Raw {
  int lag, shift;
  BigInt coeff;
};

// Merges equal (lag, shift) pairs and drops vanishing terms.
std::vector<RecurrenceTerm> terms_of(std::initializer_list<Raw> raw) {
  std::map<std::pair<int, int>, BigInt> merged;
  for (const auto& t : raw) merged[{t.lag, t.shift}] += t.coeff;
  std::vector<RecurrenceTerm> out;
  for (const auto& [at, a] : merged)
    if (a != 0) out.push_back({at.first, at.second, Rational(a)});
  return out;
}

BaseProfile base(int index, SizeProfile p, bool conventional = false) {
  return {index, std::move(p), conventional};
}

SizeProfile single(std::size_t k, const BigInt& count) {
  SizeProfile p;
  p.add(k, count);
  return p;
}

BigInt f(int s) { return clique_maximal_count(s); }

// Largest n whose member stays within the default cap, clipped to `most`.
int fit_cap(const FamilyEntry& meta, int most) {
  int n = meta.min_n;
  while (n + 1 <= most && meta.vertex_count(n + 1) <= kDefaultVertexCap) ++n;
  return n;
}

CatalogEntry make(const FamilyKey& key, int depth, std::vector<RecurrenceTerm> terms,
                  std::vector<BaseProfile> bases, int verify_to,
                  std::string closed_form = {}, std::string notes = {}) {
  const auto meta = family_metadata(key);
  CatalogEntry e;
  e.key = key;
  e.spec.depth = depth;
  e.spec.terms = std::move(terms);
  e.spec.bases = std::move(bases);
  e.spec.validate();
  e.c = meta.growth;
  e.closed_form_limit = std::move(closed_form);
  e.notes = std::move(notes);
  e.verify_from = std::max(meta.min_n, e.spec.first_index());
  e.verify_to = verify_to;
  return e;
}

const char* kPlastic = "(2r+2)/(2r+3), r the real root of x^3 = x + 1";

CatalogEntry clique_pendant(const FamilyKey& key) {
  const int s = key.s;
  const int up = (s + 1) / 2, down = s / 2;  // floor((s+1)/2), ceil((s-1)/2)
  const int lower = (s - 1) / 2;
  auto terms = terms_of({{1, up, f(s - 1)},
                         {1, down, BigInt(s - 1) * f(s - 2)},
                         {2, 2 * lower + 1, f(s - 1) * f(s - 1)}});
  SizeProfile g1 = single(up, f(s - 1));
  g1.add(down, BigInt(s - 1) * f(s - 2));
  std::string closed;
  if (s == 1) closed = "(5+sqrt(5))/10";
  if (s == 3) closed = "(39-sqrt(13))/52";
  return make(key, 2, std::move(terms),
              {base(0, SizeProfile::of({{0, 1}}), true), base(1, g1)},
              fit_cap(family_metadata(key), 10), closed,
              "G_0 is the empty chain; s = 1 is the thorn path");
}

CatalogEntry clique_link(const FamilyKey& key) {
  const int s = key.s;
  std::vector<RecurrenceTerm> terms;
  std::string notes;
  if (s % 2 == 1) {
    const int h = (s - 1) / 2;
    const BigInt g = f(s - 2);
    terms = terms_of({{1, h, BigInt(s + 1) * g},
                      {2, s - 1, -BigInt(s + 1) * g * g},
                      {2, s, g * g},
                      {3, 3 * h, g * g * g}});
    notes = "odd s; lag-3 shift 3(s-1)/2 validated by enumeration";
  } else {
    const BigInt g = f(s - 2);
    terms = terms_of({{1, s / 2, BigInt(s) * g},
                      {2, s - 1, BigInt(s) * (s - 2) * g * g},
                      {2, s, -BigInt(s - 1) * g * g},
                      {3, (3 * s - 2) / 2, BigInt(s - 1) * g * g * g}});
    notes = "even s";
  }
  const BigInt u = s % 2 == 1 ? f(s - 1) : BigInt(0);
  SizeProfile g2 = single(2 * (s / 2), f(s) * f(s) - u * u);
  g2.add(1 + 2 * ((s - 1) / 2), f(s - 1) * f(s - 1));
  return make(key, 3, std::move(terms),
              {base(0, SizeProfile::of({{0, 1}}), true), base(1, single(s / 2, f(s))),
               base(2, g2)},
              fit_cap(family_metadata(key), 8), {}, notes);
}

}  // namespace

std::optional<CatalogEntry> catalog_entry(const FamilyKey& key) {
  const auto meta = family_metadata(key);  // validates parameters
  using P = SizeProfile;
  switch (key.id) {
    case FamilyId::path:
      return make(key, 3, terms_of({{2, 1, 1}, {3, 1, 1}}),
                  {base(0, P::of({{0, 1}})), base(1, P::of({{0, 1}})), base(2, P::of({{1, 1}}))},
                  14, kPlastic);
    case FamilyId::cycle:
      return make(key, 3, terms_of({{2, 1, 1}, {3, 1, 1}}),
                  {base(0, P::of({{0, 3}}), true), base(1, P{}, true),
                   base(2, P::of({{1, 2}}), true)},
                  14, kPlastic, "C_0, C_1, C_2 carry conventional values T0 = 3, 0, 2");
    case FamilyId::thorn_path:
      return make(key, 2, terms_of({{1, 1, 1}, {2, 1, 1}}),
                  {base(0, P::of({{0, 1}})), base(1, P::of({{1, 1}}))}, 7, "(5+sqrt(5))/10");
    case FamilyId::thorn_cycle:
      return make(key, 2, terms_of({{1, 1, 1}, {2, 1, 1}}),
                  {base(3, P::of({{2, 3}, {3, 1}})), base(4, P::of({{2, 2}, {3, 4}, {4, 1}}))}, 7,
                  "(5+sqrt(5))/10");
    case FamilyId::hexagon_chain: {
      const P g1 = P::of({{2, 3}, {3, 2}});
      const P g2 = P::of({{4, 8}, {5, 21}, {6, 4}});
      if (key.s == 1)
        return make(key, 3,
                    terms_of({{1, 2, 4}, {1, 3, 3}, {2, 4, -4}, {2, 5, 3}, {2, 6, -2},
                              {3, 6, 1}, {3, 7, -2}, {3, 8, 2}}),
                    {base(1, g1), base(2, g2), base(3, P::of({{6, 21}, {7, 107}, {8, 81}, {9, 8}}))},
                    3);
      if (key.s == 2)
        return make(key, 3,
                    terms_of({{1, 2, 5}, {1, 3, 2}, {2, 4, -7}, {2, 5, 5}, {3, 6, 2}}),
                    {base(1, g1), base(2, g2), base(3, P::of({{6, 21}, {7, 122}, {8, 72}, {9, 8}}))},
                    3);
      return make(key, 3,
                  terms_of({{1, 2, 2}, {1, 3, 3}, {2, 4, 2}, {2, 5, 8}, {2, 6, -2}, {3, 7, 4}}),
                  {base(1, g1), base(2, g2), base(3, P::of({{6, 22}, {7, 98}, {8, 81}, {9, 8}}))},
                  3);
    }
    case FamilyId::c4_chain:
      if (key.s == 1)
        return make(key, 3, terms_of({{1, 2, 3}, {2, 3, 3}, {2, 4, -2}, {3, 5, 2}}),
                    {base(1, P::of({{2, 2}})), base(2, P::of({{3, 4}, {4, 4}})),
                     base(3, P::of({{5, 20}, {6, 8}}))},
                    5);
      return make(key, 2, terms_of({{1, 1, 1}, {1, 2, 2}, {2, 3, 2}}),
                  {base(1, P::of({{2, 2}})), base(2, P::of({{3, 4}, {4, 4}}))}, 5,
                  "(51+sqrt(17))/68");
    case FamilyId::triangle_chain:
      return make(key, 3, terms_of({{1, 1, 2}, {2, 1, 1}, {2, 2, -1}, {3, 2, 1}}),
                  {base(1, P::of({{1, 3}})), base(2, P::of({{2, 5}})),
                   base(3, P::of({{2, 4}, {3, 7}}))},
                  8, {}, "last term sits at lag 3 (alpha_3 = 1, beta_3 = 2); validated by enumeration");
    case FamilyId::clique_pendant_chain:
      return clique_pendant(key);
    case FamilyId::clique_link_chain:
      return clique_link(key);
    case FamilyId::ladder:
      return make(key, 5, terms_of({{1, 1, 2}, {3, 2, 1}, {3, 3, -1}, {4, 3, 1}, {5, 4, 1}}),
                  {base(1, P::of({{1, 1}})), base(2, P::of({{2, 2}})),
                   base(3, P::of({{2, 2}, {3, 3}})), base(4, P::of({{3, 6}, {4, 5}})),
                   base(5, P::of({{4, 16}, {5, 8}}))},
                  6, {}, "dominant root of the quintic x^5 - 2x^4 - x - 1 taken numerically");
    case FamilyId::thorn_ladder:
      return make(key, 3, terms_of({{1, 1, 2}, {1, 2, 1}, {2, 3, 1}, {3, 3, -1}}),
                  {base(1, P::of({{1, 1}, {2, 1}})), base(2, P::of({{2, 2}, {3, 4}, {4, 1}})),
                   base(3, P::of({{3, 3}, {4, 11}, {5, 7}, {6, 1}}))},
                  6);
    case FamilyId::caterpillar_tree:
      return make(key, 2, terms_of({{1, 1, 2}, {1, 2, 1}, {2, 2, -1}, {2, 3, 1}}),
                  {base(1, P::of({{1, 1}})), base(2, P::of({{2, 3}, {3, 1}}))}, 6, "13/18",
                  "nu(T_n) = 2n - 1");
    default:
      (void)meta;
      return std::nullopt;
  }
}

std::vector<CatalogEntry> standard_catalog() {
  std::vector<FamilyKey> keys = {
      {FamilyId::path},           {FamilyId::cycle},
      {FamilyId::thorn_path},     {FamilyId::thorn_cycle},
      {FamilyId::hexagon_chain, 1}, {FamilyId::hexagon_chain, 2},
      {FamilyId::hexagon_chain, 3}, {FamilyId::c4_chain, 1},
      {FamilyId::c4_chain, 2},    {FamilyId::triangle_chain},
  };
  for (int s = 1; s <= 5; ++s) keys.push_back({FamilyId::clique_pendant_chain, s});
  for (int s = 2; s <= 5; ++s) keys.push_back({FamilyId::clique_link_chain, s});
  keys.push_back({FamilyId::ladder});
  keys.push_back({FamilyId::thorn_ladder});
  keys.push_back({FamilyId::caterpillar_tree});
  std::vector<CatalogEntry> out;
  for (const auto& k : keys) out.push_back(*catalog_entry(k));
  return out;
}

LimitRow family_limit(const FamilyKey& key) {
  LimitRow row;
  row.key = key;
  row.label = family_label(key);
  const auto meta = family_metadata(key);
  if (meta.rule.kind == ProfileRule::Kind::recurrence) {
    const auto entry = *catalog_entry(key);
    const auto result = asymptotic_limit(entry.spec, entry.c);
    row.rule = "recurrence";
    row.limit = result.limit;
    row.dominant_root = result.dominant_root;
    row.closed_form_limit = entry.closed_form_limit;
    return row;
  }
  if (key.id == FamilyId::wheel) {
    // S(W_n, k) is (n-1) S(P_{n-2}, k-1) up to O(1) terms, so I(W_n) tracks I(P_n).
    const auto path = family_limit({FamilyId::path});
    row.rule = "closed-form";
    row.limit = path.limit;
    row.dominant_root = path.dominant_root;
    row.closed_form_limit = kPlastic;
    return row;
  }
  if (meta.rule.kind == ProfileRule::Kind::closed_form) {
    // Equimatchable members, or a thorn bipartite profile concentrated at n + c.
    row.rule = "closed-form";
    row.limit = 1;
    row.closed_form_limit = "1";
    return row;
  }
  throw InputError(row.label + " has no recurrence or closed-form rule");
}

std::vector<LimitRow> limit_report() {
  std::vector<LimitRow> rows;
  for (const auto& e : standard_catalog()) rows.push_back(family_limit(e.key));
  rows.push_back(family_limit({FamilyId::wheel}));
  rows.push_back(family_limit({FamilyId::thorn_complete_bipartite, 0, 1}));
  return rows;
}

SizeProfile family_profile(const FamilyKey& key, int n) {
  const auto meta = family_metadata(key);
  if (n < meta.min_n)
    throw InputError(family_label(key) + " is defined for n >= " + std::to_string(meta.min_n));
  switch (key.id) {
    case FamilyId::wheel:
      return wheel_profile(n);
    case FamilyId::complete:
      return single(n / 2, f(n));
    case FamilyId::complete_bipartite: {
      const int lo = std::min(key.c, n), hi = std::max(key.c, n);
      return single(lo, factorial(hi) / factorial(hi - lo));
    }
    case FamilyId::thorn_complete_bipartite:
      return thorn_bipartite_profile(key.c, n);
    default:
      break;
  }
  const auto entry = catalog_entry(key);
  if (!entry) throw InputError(family_label(key) + " has no recurrence; use enumeration");
  return extend_profiles(entry->spec, n);
}

bool VerifyReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.match; });
}

VerifyReport verify_recurrence(const CatalogEntry& entry, int from, int to,
                               const EnumerationLimits& limits) {
  VerifyReport report;
  report.label = family_label(entry.key);
  const auto meta = family_metadata(entry.key);
  const int lo = std::max({from, meta.min_n, entry.spec.first_index()});
  if (to < lo) return report;

  const auto predicted = extend_sequence(entry.spec, to);
  for (int n = lo; n <= to; ++n) {
    VerifyRow row;
    row.n = n;
    row.predicted = predicted[n - entry.spec.first_index()];
    report.rows.push_back(std::move(row));
  }
  for (const auto& row : report.rows) check_cap(meta.generator(row.n), limits);

  std::exception_ptr failure;
  const int count = static_cast<int>(report.rows.size());
  const int workers = limits.workers > 0 ? limits.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int i = 0; i < count; ++i) {
    try {
      auto& row = report.rows[i];
      row.enumerated = maximal_matching_profile_serial(meta.generator(row.n), limits);
      row.match = row.enumerated == row.predicted;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

namespace {

nlohmann::json count_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

nlohmann::json rational_json(const Rational& q) {
  if (denominator(q) == 1) return count_json(numerator(q));
  return to_fraction_string(q);
}

}  // namespace

nlohmann::json catalog_json(const CatalogEntry& entry) {
  nlohmann::json j;
  j["family"] = family_label(entry.key);
  j["depth"] = entry.spec.depth;
  j["coeffs"] = nlohmann::json::array();
  for (const auto& t : entry.spec.terms)
    j["coeffs"].push_back({t.lag, t.shift, rational_json(t.coeff)});
  j["base_profiles"] = nlohmann::json::array();
  for (const auto& b : entry.spec.bases) {
    nlohmann::json counts = nlohmann::json::object();
    const auto& c = b.profile.counts();
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) counts[std::to_string(k)] = count_json(c[k]);
    j["base_profiles"].push_back(
        {{"n", b.index}, {"profile", counts}, {"conventional", b.conventional}});
  }
  j["n_min"] = entry.spec.n_min();
  j["c"] = to_fraction_string(entry.c);
  j["closed_form_limit"] =
      entry.closed_form_limit.empty() ? nlohmann::json() : nlohmann::json(entry.closed_form_limit);
  j["notes"] = entry.notes;
  j["verify_range"] = {entry.verify_from, entry.verify_to};
  return j;
}

nlohmann::json catalog_json(const std::vector<CatalogEntry>& entries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries) out.push_back(catalog_json(e));
  return out;
}

}  // namespace mmatch
