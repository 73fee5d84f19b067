#pragma once

#include <string>

#include "json.hpp"

#include "mmatch/exact.hpp"
#include "mmatch/recurrence.hpp"
#include "mmatch/size_profile.hpp"

namespace mmatch {

// Counts as decimal strings (they outgrow 64 bits quickly).
nlohmann::json profile_json(const SizeProfile& profile);

// Flat object: integers as strings, rationals as "p/q" plus a "<name>_dec"
// number carrying 17 significant digits.
nlohmann::json report_json(const InvariantReport& report);

nlohmann::json asymptotic_json(const AsymptoticResult& result);

// Parses "p/q", "p" or a JSON integer. Throws InputError.
Rational rational_from_json(const nlohmann::json& j);

struct SpecWithGrowth {
  RecurrenceSpec spec;
  Rational c;
};

// Reads the catalog entry layout: {depth, coeffs [[i, j, a]], base_profiles
// [{n, profile {k: count}, conventional}], c}. Throws InputError.
SpecWithGrowth spec_from_json(const nlohmann::json& j);

// "p/q" and 17-digit decimal under name and name_dec.
void put_rational(nlohmann::json& j, const std::string& name, const Rational& q);

}  // namespace mmatch
