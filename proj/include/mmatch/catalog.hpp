#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mmatch/exact.hpp"
#include "mmatch/families.hpp"
#include "mmatch/recurrence.hpp"

namespace mmatch {

struct CatalogEntry {
  FamilyKey key;
  RecurrenceSpec spec;
  Rational c;
  std::string closed_form_limit;  // expression, empty when none is known
  std::string notes;
  // Default oracle range: every n in [verify_from, verify_to] is generatable
  // within the default enumeration cap.
  int verify_from = 0;
  int verify_to = 0;
};

// Recurrence entry for a family, or nullopt for families handled by a closed
// form or by enumeration only. Throws InputError for invalid parameters.
std::optional<CatalogEntry> catalog_entry(const FamilyKey& key);

// Every recurrence family the report covers, in report order.
std::vector<CatalogEntry> standard_catalog();

struct LimitRow {
  FamilyKey key;
  std::string label;
  std::string rule;  // "recurrence" or "closed-form"
  double limit = 0;
  std::optional<double> dominant_root;
  std::string closed_form_limit;
};

// lim I(G_n) for one family: dominant-root evaluation for recurrence families,
// exact values for closed-form families (wheel shares the path limit; cliques,
// complete bipartite and thorn complete bipartite graphs give 1).
// Throws HypothesisError / InputError.
LimitRow family_limit(const FamilyKey& key);

// One row per catalog family plus the closed-form rows (wheel,
// thorn-complete-bipartite).
std::vector<LimitRow> limit_report();

// Exact profile of G_n from the family's recurrence or closed form, without
// enumeration. Throws InputError for enumeration-only families.
SizeProfile family_profile(const FamilyKey& key, int n);

struct VerifyRow {
  int n = 0;
  SizeProfile predicted;
  SizeProfile enumerated;
  bool match = false;
};

struct VerifyReport {
  std::string label;
  std::vector<VerifyRow> rows;
  bool all_match() const;
};

// Compares recurrence-extended profiles with enumeration for every n in
// [from, to] that the family can generate. Per-n enumerations run on OpenMP
// workers; rows come back in n order whatever the worker count.
VerifyReport verify_recurrence(const CatalogEntry& entry, int from, int to,
                               const EnumerationLimits& limits = {});

nlohmann::json catalog_json(const CatalogEntry& entry);
nlohmann::json catalog_json(const std::vector<CatalogEntry>& entries);

}  // namespace mmatch
