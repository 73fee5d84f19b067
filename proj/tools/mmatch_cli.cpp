// mmatch: maximal-matching invariants, family profiles and asymptotic limits.
//
// Exit codes: 0 ok, 1 verification mismatch or internal error, 2 input error,
// 3 recurrence hypothesis failure, 4 enumeration cap exceeded.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mmatch/catalog.hpp"
#include "mmatch/errors.hpp"
#include "mmatch/exact.hpp"
#include "mmatch/families.hpp"
#include "mmatch/graph.hpp"
#include "mmatch/recurrence.hpp"
#include "mmatch/serialize.hpp"
#include "mmatch/sweep.hpp"

namespace {

using namespace mmatch;
using nlohmann::json;

constexpr int kTextDigits = 12;

struct Common {
  std::string format = "text";
  int cap = kDefaultVertexCap;
  int workers = 0;

  EnumerationLimits limits() const {
    if (cap < 0 || cap > kMaxVertexCap)
      throw InputError("--cap must lie in 0.." + std::to_string(kMaxVertexCap));
    return {cap, workers};
  }
};

struct Source {
  std::string edge_list;
  std::string graph6;
  std::string family;
  std::optional<int> n, s, c;

  bool has_family() const { return !family.empty(); }

  FamilyKey key() const {
    if (family.empty()) throw InputError("--family is required");
    return parse_family(family, s, c);
  }

  Graph graph() const {
    const int given = !edge_list.empty() + !graph6.empty() + !family.empty();
    if (given != 1) throw InputError("give exactly one of --edge-list, --graph6, --family");
    if (!graph6.empty()) return graph6_decode(graph6);
    if (!edge_list.empty()) {
      std::stringstream text;
      if (edge_list == "-") {
        text << std::cin.rdbuf();
      } else {
        std::ifstream in(edge_list);
        if (!in) throw InputError("cannot read " + edge_list);
        text << in.rdbuf();
      }
      return parse_edge_list(text.str());
    }
    if (!n) throw InputError("--family needs --n");
    return generate(key(), *n);
  }
};

void add_common(CLI::App* cmd, Common& common, bool csv = false) {
  std::vector<std::string> formats{"text", "json"};
  if (csv) formats.push_back("csv");
  cmd->add_option("--format", common.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--cap", common.cap, "enumeration vertex cap (env MMATCH_CAP)");
  cmd->add_option("--workers", common.workers, "OpenMP workers, 0 = runtime default");
}

void add_family(CLI::App* cmd, Source& src) {
  cmd->add_option("--family", src.family, "family id, e.g. path, hexagon-chain2, trees");
  cmd->add_option("--s", src.s, "family parameter s");
  cmd->add_option("--c", src.c, "family parameter c");
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--edge-list", src.edge_list, "edge-list file ('-' for stdin)");
  cmd->add_option("--graph6", src.graph6, "graph6 string");
  add_family(cmd, src);
  cmd->add_option("--n", src.n, "family index n");
}

std::string dec(const Rational& q) { return to_decimal_string(q, kTextDigits); }

std::string dec(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kTextDigits, x);
  return buf;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---- invariants -----------------------------------------------------------

int cmd_invariants(const Source& src, const Common& common) {
  const auto g = src.graph();
  const auto r = invariant_report(g, common.limits());
  if (common.format == "json") {
    auto j = report_json(r);
    j["n"] = g.order();
    j["m"] = g.size();
    j["maximal_profile"] = profile_json(r.maximal);
    j["matching_profile"] = profile_json(r.all);
    print_json(j);
    return 0;
  }
  if (common.format == "csv") {
    ComparisonRow row{g.order() <= 62 ? graph6_encode(g) : "", g.order(), g.size(), r.nu,
                      r.i_avg, r.i_ord, r.i_df, r.i_arw};
    std::cout << comparison_csv({row});
    return 0;
  }
  std::cout << "n      " << g.order() << "\nm      " << g.size() << "\nnu     " << r.nu
            << "\nS      " << r.maximal.to_string() << "\nT0     " << r.t0 << "\nT1     " << r.t1
            << "\nI      " << to_fraction_string(r.i_avg) << "  " << dec(r.i_avg)
            << "\nT0_ord " << r.t0_ord << "\nT1_ord " << r.t1_ord
            << "\nI_ord  " << to_fraction_string(r.i_ord) << "  " << dec(r.i_ord)
            << "\nT0_ARW " << r.t0_arw << "\nT1_ARW " << r.t1_arw
            << "\nI_ARW  " << to_fraction_string(r.i_arw) << "  " << dec(r.i_arw)
            << "\nmu     " << to_fraction_string(r.mu) << "  " << dec(r.mu)
            << "\nI_DF   " << to_fraction_string(r.i_df) << "  " << dec(r.i_df) << '\n';
  return 0;
}

// ---- profile ---------------------------------------------------------------

int cmd_profile(const Source& src, const Common& common, bool enumerate) {
  SizeProfile profile;
  std::string method = "enumeration";
  int nu = 0;
  if (src.has_family() && !enumerate && src.edge_list.empty() && src.graph6.empty()) {
    if (!src.n) throw InputError("--family needs --n");
    const auto key = src.key();
    const auto meta = family_metadata(key);
    if (meta.rule.kind != ProfileRule::Kind::enumeration_only) {
      profile = family_profile(key, *src.n);
      method = meta.rule.kind == ProfileRule::Kind::recurrence ? "recurrence" : "closed-form";
      nu = meta.nu_of(*src.n);
    }
  }
  if (method == "enumeration") {
    const auto g = src.graph();
    profile = maximal_matching_profile(g, common.limits());
    nu = std::max(0, profile.max_index());
  }
  const auto ratio = finite_ratio(profile, nu);
  if (common.format == "json") {
    json j{{"method", method}, {"nu", nu}, {"profile", profile_json(profile)},
           {"t0", profile.total().str()}, {"t1", profile.first_moment().str()}};
    put_rational(j, "i_avg", ratio);
    print_json(j);
    return 0;
  }
  std::cout << "method " << method << "\nnu     " << nu << "\nS      " << profile.to_string()
            << "\nT0     " << profile.total() << "\nT1     " << profile.first_moment()
            << "\nI      " << dec(ratio) << '\n';
  return 0;
}

// ---- asymptote -------------------------------------------------------------

int cmd_asymptote(const Source& src, const Common& common, const std::string& spec_file) {
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) throw InputError("cannot read " + spec_file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("spec file: ") + e.what());
    }
    const auto custom = spec_from_json(j);
    const auto result = asymptotic_limit(custom.spec, custom.c);
    if (common.format == "json") {
      print_json(asymptotic_json(result));
    } else {
      std::cout << "limit  " << dec(result.limit) << "\nroot   " << dec(result.dominant_root)
                << "\nP      " << dec(result.hypothesis.p_value) << '\n';
    }
    return 0;
  }

  const auto key = src.key();
  const auto row = family_limit(key);
  json j{{"family", row.label}, {"rule", row.rule}, {"limit", row.limit}};
  if (!row.closed_form_limit.empty()) j["closed_form_limit"] = row.closed_form_limit;
  if (const auto entry = catalog_entry(key)) {
    const auto result = asymptotic_limit(entry->spec, entry->c);
    j["c"] = to_fraction_string(entry->c);
    j["result"] = asymptotic_json(result);
  }
  if (common.format == "json") {
    print_json(j);
    return 0;
  }
  std::cout << "family " << row.label << "\nrule   " << row.rule << "\nlimit  " << dec(row.limit)
            << '\n';
  if (row.dominant_root) std::cout << "root   " << dec(*row.dominant_root) << '\n';
  if (j.contains("result")) {
    const auto& h = j["result"]["hypothesis_report"];
    std::cout << "P      " << dec(h["p_value"].get<double>()) << "\nc      "
              << j["c"].get<std::string>() << '\n';
  }
  if (!row.closed_form_limit.empty()) std::cout << "exact  " << row.closed_form_limit << '\n';
  return 0;
}

// ---- converge --------------------------------------------------------------

int cmd_converge(const Source& src, const Common& common, int n_max, std::optional<int> from) {
  const auto key = src.key();
  const auto meta = family_metadata(key);
  const auto row = family_limit(key);
  const int lo = std::max(meta.min_n, from.value_or(meta.min_n));
  if (n_max < lo)
    throw InputError("--n-max must be at least " + std::to_string(lo) + " for " + row.label);

  std::vector<SizeProfile> profiles;
  int first = lo;
  if (const auto entry = catalog_entry(key)) {
    profiles = extend_sequence(entry->spec, n_max);
    first = entry->spec.first_index();
  } else {
    for (int n = lo; n <= n_max; ++n) profiles.push_back(family_profile(key, n));
  }

  struct Row {
    int n;
    Rational ratio;
    double gap;
  };
  std::vector<Row> rows;
  for (int n = lo; n <= n_max; ++n) {
    const auto ratio = finite_ratio(profiles[n - first], meta.nu_of(n));
    rows.push_back({n, ratio, std::abs(to_double(ratio) - row.limit)});
  }
  bool monotone = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].gap > rows[i - 1].gap) monotone = false;

  if (common.format == "json") {
    json j{{"family", row.label}, {"limit", row.limit}, {"monotone_gap", monotone},
           {"rows", json::array()}};
    for (const auto& r : rows) {
      json e{{"n", r.n}, {"gap", r.gap}};
      put_rational(e, "I", r.ratio);
      j["rows"].push_back(std::move(e));
    }
    print_json(j);
    return 0;
  }
  if (common.format == "csv") {
    std::cout << "n,I,I_dec,gap,n_gap\n";
    for (const auto& r : rows)
      std::cout << r.n << ',' << to_fraction_string(r.ratio) << ','
                << to_decimal_string(r.ratio, 17) << ',' << dec(r.gap) << ','
                << dec(r.n * r.gap) << '\n';
    return 0;
  }
  std::cout << "family " << row.label << "  limit " << dec(row.limit) << '\n';
  std::printf("%6s  %-16s  %-12s  %s\n", "n", "I(G_n)", "gap", "n*gap");
  for (const auto& r : rows)
    std::printf("%6d  %-16s  %-12s  %s\n", r.n, dec(r.ratio).c_str(), dec(r.gap).c_str(),
                dec(r.n * r.gap).c_str());
  std::cout << "monotone gap: " << (monotone ? "yes" : "no") << '\n';
  return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Source& src, const Common& common, std::optional<int> from,
               std::optional<int> to) {
  std::vector<CatalogEntry> entries;
  if (src.has_family()) {
    const auto entry = catalog_entry(src.key());
    if (!entry) throw InputError(src.family + " has no catalog recurrence");
    entries.push_back(*entry);
  } else {
    entries = standard_catalog();
  }
  bool ok = true;
  json out = json::array();
  for (const auto& e : entries) {
    const auto report =
        verify_recurrence(e, from.value_or(e.verify_from), to.value_or(e.verify_to),
                          common.limits());
    ok = ok && report.all_match();
    if (common.format == "json") {
      json j{{"family", report.label}, {"pass", report.all_match()}, {"rows", json::array()}};
      for (const auto& r : report.rows)
        j["rows"].push_back({{"n", r.n},
                             {"match", r.match},
                             {"predicted", profile_json(r.predicted)},
                             {"enumerated", profile_json(r.enumerated)}});
      out.push_back(std::move(j));
      continue;
    }
    int lo = report.rows.empty() ? 0 : report.rows.front().n;
    int hi = report.rows.empty() ? -1 : report.rows.back().n;
    std::cout << (report.all_match() ? "PASS " : "FAIL ") << report.label << "  n in [" << lo
              << ", " << hi << "]\n";
    for (const auto& r : report.rows)
      if (!r.match)
        std::cout << "  n=" << r.n << " recurrence " << r.predicted.to_string() << " enumeration "
                  << r.enumerated.to_string() << '\n';
  }
  if (common.format == "json") print_json(out);
  return ok ? 0 : 1;
}

// ---- sweep -----------------------------------------------------------------

json summary_json(const ComparisonSummary& s) {
  return {{"graphs", s.graphs},
          {"df_above_ord", s.df_above_ord},
          {"df_below_avg", s.df_below_avg},
          {"ord_below_avg", s.ord_below_avg},
          {"df_above_ord_witnesses", s.df_above_ord_witnesses},
          {"df_below_avg_witnesses", s.df_below_avg_witnesses}};
}

int cmd_sweep(const Common& common, std::optional<int> n, bool from_stdin, bool connected) {
  if (n.has_value() == from_stdin) throw InputError("give exactly one of --n, --stdin");
  auto graphs = from_stdin ? read_graph6_stream(std::cin) : all_graphs(*n);
  if (connected) std::erase_if(graphs, [](const Graph& g) { return !is_connected(g); });
  const auto cmp = compare_invariants(graphs, common.limits());
  if (common.format == "json") {
    json j{{"rows", json::array()}, {"summary", summary_json(cmp.summary)}};
    for (const auto& r : cmp.rows) {
      json e{{"graph6", r.graph6}, {"n", r.n}, {"m", r.m}, {"nu", r.nu}};
      put_rational(e, "I", r.i_avg);
      put_rational(e, "I_ord", r.i_ord);
      put_rational(e, "I_DF", r.i_df);
      put_rational(e, "I_ARW", r.i_arw);
      j["rows"].push_back(std::move(e));
    }
    print_json(j);
    return 0;
  }
  if (common.format == "csv") {
    std::cout << comparison_csv(cmp.rows);
    // Keep stdout a clean CSV; the summary goes to stderr.
    std::cerr << summary_json(cmp.summary).dump() << '\n';
    return 0;
  }
  const auto& s = cmp.summary;
  std::cout << "graphs          " << s.graphs << "\nI_DF > I_ord    " << s.df_above_ord
            << "\nI_DF < I        " << s.df_below_avg << "\nI_ord < I       " << s.ord_below_avg
            << '\n';
  for (const auto& w : s.df_above_ord_witnesses) std::cout << "  I_DF > I_ord: " << w << '\n';
  for (const auto& w : s.df_below_avg_witnesses) std::cout << "  I_DF < I:     " << w << '\n';
  return 0;
}

int cmd_trees(const Common& common, int n) {
  const auto report = tree_extremal_check(n, common.limits());
  if (common.format == "json") {
    json j{{"n", n}, {"path_minimal", report.path_minimal}, {"ranking", json::array()}};
    put_rational(j, "path_value", report.path_value);
    for (const auto& t : report.ranking) {
      json e{{"graph6", t.graph6}, {"is_path", t.is_path}};
      put_rational(e, "I_thorn", t.i_thorn);
      j["ranking"].push_back(std::move(e));
    }
    print_json(j);
  } else {
    for (const auto& t : report.ranking)
      std::cout << t.graph6 << "  " << to_fraction_string(t.i_thorn) << "  " << dec(t.i_thorn)
                << (t.is_path ? "  path" : "") << '\n';
    std::cout << "thorn path minimal: " << (report.path_minimal ? "yes" : "no") << '\n';
  }
  return report.path_minimal ? 0 : 1;
}

// ---- report / catalog ------------------------------------------------------

int cmd_report(const Common& common) {
  const auto rows = limit_report();
  if (common.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json e{{"family", r.label}, {"rule", r.rule}, {"limit", r.limit}};
      if (r.dominant_root) e["dominant_root"] = *r.dominant_root;
      if (!r.closed_form_limit.empty()) e["closed_form_limit"] = r.closed_form_limit;
      j.push_back(std::move(e));
    }
    print_json(j);
    return 0;
  }
  std::printf("%-26s %-12s %-16s %s\n", "family", "rule", "limit", "root");
  for (const auto& r : rows)
    std::printf("%-26s %-12s %-16s %s\n", r.label.c_str(), r.rule.c_str(), dec(r.limit).c_str(),
                r.dominant_root ? dec(*r.dominant_root).c_str() : "-");
  return 0;
}

int cmd_catalog(const Source& src) {
  if (src.has_family()) {
    const auto entry = catalog_entry(src.key());
    if (!entry) throw InputError(src.family + " has no catalog recurrence");
    print_json(catalog_json(*entry));
  } else {
    print_json(catalog_json(standard_catalog()));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal-matching invariants and asymptotic limits of graph families"};
  app.require_subcommand(1);

  Common common;
  if (const char* env = std::getenv("MMATCH_CAP")) {
    try {
      common.cap = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: MMATCH_CAP is not an integer\n";
      return 2;
    }
  }
  Source src;
  std::optional<int> from, to, sweep_n;
  int n_max = 0, tree_n = 0;
  bool enumerate = false, from_stdin = false, connected = false;
  std::string spec_file;

  auto* inv = app.add_subcommand("invariants", "all invariants of one graph");
  add_source(inv, src);
  add_common(inv, common, true);

  auto* prof = app.add_subcommand("profile", "maximal-matching size profile S(G,k)");
  add_source(prof, src);
  add_common(prof, common);
  prof->add_flag("--enumerate", enumerate, "enumerate even when a recurrence exists");

  auto* asym = app.add_subcommand("asymptote", "lim I(G_n) from the dominant-root formula");
  add_family(asym, src);
  add_common(asym, common);
  asym->add_option("--spec", spec_file, "recurrence JSON in the catalog layout");

  auto* conv = app.add_subcommand("converge", "I(G_n) and its gap to the limit");
  add_family(conv, src);
  add_common(conv, common, true);
  conv->add_option("--n-max", n_max, "last index")->required();
  conv->add_option("--from", from, "first index");

  auto* ver = app.add_subcommand("verify", "recurrence profiles against enumeration");
  add_family(ver, src);
  add_common(ver, common);
  ver->add_option("--from", from, "first index");
  ver->add_option("--to", to, "last index");

  auto* sweep = app.add_subcommand("sweep", "invariant comparison over all graphs of order n");
  add_common(sweep, common, true);
  sweep->add_option("--n", sweep_n, "order (<= 6)");
  sweep->add_flag("--stdin", from_stdin, "read graph6 lines from stdin instead");
  sweep->add_flag("--connected", connected, "keep connected graphs only");

  auto* trees = app.add_subcommand("trees", "rank I(thorn(T)) over trees of order n");
  add_common(trees, common);
  trees->add_option("--n", tree_n, "order (1..6)")->required();

  auto* rep = app.add_subcommand("report", "limit table for every catalog family");
  add_common(rep, common);

  auto* cat = app.add_subcommand("catalog", "recurrence catalog as JSON");
  add_family(cat, src);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*inv) return cmd_invariants(src, common);
    if (*prof) return cmd_profile(src, common, enumerate);
    if (*asym) return cmd_asymptote(src, common, spec_file);
    if (*conv) return cmd_converge(src, common, n_max, from);
    if (*ver) return cmd_verify(src, common, from, to);
    if (*sweep) return cmd_sweep(common, sweep_n, from_stdin, connected);
    if (*trees) return cmd_trees(common, tree_n);
    if (*rep) return cmd_report(common);
    if (*cat) return cmd_catalog(src);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis failure: " << e.what() << '\n';
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
