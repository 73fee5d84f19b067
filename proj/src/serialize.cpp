#include "mmatch/serialize.hpp"

#include <cmath>
#include <string>

#include "mmatch/errors.hpp"

namespace mmatch {

void put_rational(nlohmann::json& j, const std::string& name, const Rational& q) {
  j[name] = to_fraction_string(q);
  j[name + "_dec"] = std::stod(to_decimal_string(q, 17));
}

nlohmann::json profile_json(const SizeProfile& profile) {
  nlohmann::json j = nlohmann::json::object();
  const auto& c = profile.counts();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) j[std::to_string(k)] = c[k].str();
  return j;
}

nlohmann::json report_json(const InvariantReport& r) {
  nlohmann::json j;
  j["nu"] = r.nu;
  j["t0"] = r.t0.str();
  j["t1"] = r.t1.str();
  put_rational(j, "i_avg", r.i_avg);
  j["t0_ord"] = r.t0_ord.str();
  j["t1_ord"] = r.t1_ord.str();
  put_rational(j, "i_ord", r.i_ord);
  j["t0_arw"] = r.t0_arw.str();
  j["t1_arw"] = r.t1_arw.str();
  put_rational(j, "i_arw", r.i_arw);
  put_rational(j, "mu", r.mu);
  put_rational(j, "i_df", r.i_df);
  return j;
}

nlohmann::json asymptotic_json(const AsymptoticResult& a) {
  nlohmann::json j;
  auto list = [](const std::vector<Rational>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& q : v) out.push_back(to_fraction_string(q));
    return out;
  };
  j["alpha"] = list(a.alpha);
  j["beta"] = list(a.beta);
  j["dominant_root"] = a.dominant_root;
  j["all_roots"] = nlohmann::json::array();
  for (const auto& z : a.all_roots) j["all_roots"].push_back({z.real(), z.imag()});
  j["limit"] = std::isnan(a.limit) ? nlohmann::json() : nlohmann::json(a.limit);
  j["hypothesis_report"] = {{"root_unique", a.hypothesis.root_unique},
                            {"multiplicity_one", a.hypothesis.multiplicity_one},
                            {"p_nonzero", a.hypothesis.p_nonzero},
                            {"p_value", a.hypothesis.p_value}};
  if (!a.failure.empty()) j["failure"] = a.failure;
  return j;
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError("expected an integer or a \"p/q\" string");
  const auto text = j.get<std::string>();
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(BigInt(text.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw InputError("unparsable rational '" + text + "'");
  }
}

SpecWithGrowth spec_from_json(const nlohmann::json& j) {
  SpecWithGrowth out;
  try {
    out.spec.depth = j.at("depth").get<int>();
    for (const auto& t : j.at("coeffs")) {
      if (!t.is_array() || t.size() != 3) throw InputError("each coefficient is [i, j, a]");
      out.spec.terms.push_back({t[0].get<int>(), t[1].get<int>(), rational_from_json(t[2])});
    }
    for (const auto& b : j.at("base_profiles")) {
      BaseProfile base;
      base.index = b.at("n").get<int>();
      base.conventional = b.value("conventional", false);
      for (const auto& [k, count] : b.at("profile").items()) {
        const auto q = rational_from_json(count);
        if (denominator(q) != 1) throw InputError("profile counts must be integers");
        base.profile.add(std::stoul(k), numerator(q));
      }
      out.spec.bases.push_back(std::move(base));
    }
    out.c = j.contains("c") ? rational_from_json(j.at("c")) : Rational(1);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed recurrence spec: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("malformed recurrence spec: profile keys must be integers");
  }
  out.spec.validate();
  return out;
}

}  // namespace mmatch
