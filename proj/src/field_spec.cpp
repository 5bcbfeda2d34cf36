#include "premetric/field_spec.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace premetric {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownKeys = {
    "dimension", "coordinates", "E",   "B", "alpha", "beta",       "catalog",
    "identify_alpha_with_E",    "checks", "sample_plan", "tolerance", "X", "u", "mode"};

std::string expr_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw SpecError(where + ": expected an expression string or a number");
}

template <std::size_t N>
std::array<std::string, N> expr_array(const json& j, const std::string& key) {
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != N) {
    throw SpecError("'" + key + "' must be an array of " + std::to_string(N) + " expressions");
  }
  std::array<std::string, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = expr_text(v[i], key + "[" + std::to_string(i) + "]");
  return out;
}

SamplePlan parse_plan(const json& j, int dim) {
  SamplePlan plan = SamplePlan::standard(dim);
  if (!j.is_object()) throw SpecError("'sample_plan' must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") {
      const std::string kind = value.get<std::string>();
      if (kind == "grid") {
        plan.kind = SamplePlan::Kind::grid;
      } else if (kind == "random") {
        plan.kind = SamplePlan::Kind::random;
      } else {
        throw SpecError("sample_plan.kind must be 'grid' or 'random'");
      }
    } else if (key == "box") {
      plan.box.clear();
      for (const json& axis : value) {
        if (!axis.is_array() || axis.size() != 2) throw SpecError("sample_plan.box entries are [lo, hi]");
        plan.box.emplace_back(axis[0].get<double>(), axis[1].get<double>());
      }
    } else if (key == "points_per_axis") {
      plan.points_per_axis = value.get<int>();
    } else if (key == "count") {
      plan.count = value.get<int>();
    } else if (key == "seed") {
      plan.seed = value.get<std::uint64_t>();
    } else {
      throw SpecError("unknown sample_plan key '" + key + "'");
    }
  }
  if (static_cast<int>(plan.box.size()) != dim) {
    throw SpecError("sample_plan.box must have one [lo, hi] pair per coordinate");
  }
  try {
    plan.validate();
  } catch (const ContractViolation& e) {
    throw SpecError(e.what());
  }
  return plan;
}

Expr parse_component(const std::string& text, const Chart& chart, const std::string& where) {
  try {
    return parse(text, chart);
  } catch (const ParseError& e) {
    throw SpecError(where + ": " + e.what());
  }
}

template <std::size_t N>
std::array<Expr, N> parse_components(const std::array<std::string, N>& texts, const Chart& chart,
                                     const std::string& key) {
  std::array<Expr, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = parse_component(texts[i], chart, key + "[" + std::to_string(i) + "]");
  }
  return out;
}

struct Resolved {
  std::optional<EMConfig> em;
  std::optional<VectorFieldConfig> vec;
};

Resolved resolve_fields(const FieldSpec& spec) {
  const Chart chart(spec.coordinates);
  Resolved r;
  const bool inline_em = spec.E || spec.B || spec.alpha || spec.beta;
  if (spec.catalog_name) {
    if (inline_em || spec.u) throw SpecError("give either a catalog reference or inline fields, not both");
    CatalogItem item;
    try {
      item = catalog(*spec.catalog_name, spec.catalog_params);
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    } catch (const ParseError& e) {
      throw SpecError(std::string("catalog parameter: ") + e.what());
    }
    if (auto* cfg = std::get_if<EMConfig>(&item)) {
      r.em = *cfg;
    } else {
      r.vec = std::get<VectorFieldConfig>(item);
    }
  } else if (inline_em) {
    EMConfig cfg;
    cfg.chart = chart;
    if (spec.E) cfg.E = parse_components(*spec.E, chart, "E");
    if (spec.B) cfg.B = parse_components(*spec.B, chart, "B");
    if (spec.alpha) cfg.alpha = parse_components(*spec.alpha, chart, "alpha");
    if (spec.beta) cfg.beta = parse_components(*spec.beta, chart, "beta");
    r.em = cfg;
  }
  if (r.em && spec.identify_alpha_with_E) r.em->identify_alpha_with_E = spec.identify_alpha_with_E;
  if (spec.u) {
    VectorFieldConfig v;
    v.chart = chart;
    v.u = parse_components(*spec.u, chart, "u");
    const std::string mode = spec.mode.value_or("timelike");
    if (mode == "timelike") {
      v.mode = AutoparallelMode::timelike;
    } else if (mode == "null") {
      v.mode = AutoparallelMode::null;
    } else {
      throw SpecError("mode must be 'timelike' or 'null'");
    }
    r.vec = v;
  }
  if (!r.em && !r.vec) throw SpecError("no fields given: use a catalog reference, E/B/alpha/beta, or u");
  return r;
}

std::vector<std::string> effective_checks(const FieldSpec& spec, const Resolved& r) {
  std::vector<std::string> requested = spec.checks;
  if (requested.empty() && spec.catalog_name) requested = catalog_entry(*spec.catalog_name).checks;
  if (requested.empty()) throw SpecError("no checks requested");
  std::vector<std::string> ordered;
  for (const std::string& name : registered_checks()) {
    if (std::find(requested.begin(), requested.end(), name) != requested.end()) ordered.push_back(name);
  }
  for (const std::string& name : ordered) {
    const bool needs_vec = name == "autoparallel";
    if (needs_vec && !r.vec) throw SpecError("check 'autoparallel' needs a vector field 'u'");
    if (!needs_vec && !r.em) throw SpecError("check '" + name + "' needs E, B, alpha, beta fields");
  }
  return ordered;
}

ResidualSet build_check(const std::string& name, const EMConfig& cfg, const FieldSpec& spec,
                        const std::vector<std::vector<double>>& points) {
  if (name == "linear_prerel") return prerel_linear_residuals(cfg);
  if (name == "cross_helicity") return cross_helicity_residual(cfg);
  if (name == "integrability") {
    ResidualSet set = integrability_residual(cfg);
    set.warnings = independence_warnings(cfg, points);
    return set;
  }
  if (name == "static_balance") return static_balance_residual(cfg);
  if (name == "time_balance") return time_balance_residual(cfg);
  if (name == "invariant_relations") return invariant_relations(cfg);
  const SpacetimePair pair = build_spacetime(cfg);
  if (name == "linear_spacetime") return linear_spacetime_residuals(pair);
  if (name == "nonlinear_spacetime") return spacetime_balance_residual(pair);
  if (name == "null_conditions") return null_condition_check(pair);
  if (name == "conservation") {
    Field x = vector_field({0.0, 0.0, 0.0, 1.0});
    if (spec.X) {
      const auto comps = parse_components(*spec.X, cfg.chart, "X");
      x = vector_field({comps.begin(), comps.end()});
    }
    return conservation_residual(pair, x);
  }
  throw std::logic_error("unregistered check " + name);
}

}  // namespace

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = {
      "linear_prerel",   "cross_helicity", "integrability",   "linear_spacetime",
      "nonlinear_spacetime", "static_balance", "time_balance", "conservation",
      "null_conditions", "invariant_relations", "autoparallel"};
  return names;
}

FieldSpec parse_field_spec(const json& j) {
  if (!j.is_object()) throw SpecError("field spec must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKnownKeys.count(key)) throw SpecError("unknown field-spec key '" + key + "'");
  }
  FieldSpec s;
  try {
    if (j.contains("dimension")) s.dimension = j.at("dimension").get<int>();
    if (s.dimension != 4) throw SpecError("dimension must be 4 (x, y, z, xi)");
    if (j.contains("coordinates")) s.coordinates = j.at("coordinates").get<std::vector<std::string>>();
    if (static_cast<int>(s.coordinates.size()) != s.dimension) {
      throw SpecError("coordinates must list one name per dimension");
    }
    if (s.coordinates.back() != "xi") throw SpecError("the last coordinate must be 'xi'");
    try {
      Chart check(s.coordinates);
    } catch (const std::exception& e) {
      throw SpecError(std::string("coordinates: ") + e.what());
    }
    if (j.contains("E")) s.E = expr_array<3>(j, "E");
    if (j.contains("B")) s.B = expr_array<3>(j, "B");
    if (j.contains("alpha")) s.alpha = expr_array<3>(j, "alpha");
    if (j.contains("beta")) s.beta = expr_array<3>(j, "beta");
    if (j.contains("X")) s.X = expr_array<4>(j, "X");
    if (j.contains("u")) s.u = expr_array<4>(j, "u");
    if (j.contains("mode")) s.mode = j.at("mode").get<std::string>();
    if (j.contains("catalog")) {
      const json& c = j.at("catalog");
      if (c.is_string()) {
        s.catalog_name = c.get<std::string>();
      } else {
        s.catalog_name = c.at("name").get<std::string>();
        if (c.contains("params")) {
          for (const auto& [k, v] : c.at("params").items()) s.catalog_params[k] = expr_text(v, k);
        }
      }
    }
    if (j.contains("identify_alpha_with_E")) {
      s.identify_alpha_with_E = j.at("identify_alpha_with_E").get<bool>();
    }
    if (j.contains("checks")) s.checks = j.at("checks").get<std::vector<std::string>>();
    for (const std::string& c : s.checks) {
      const auto& reg = registered_checks();
      if (std::find(reg.begin(), reg.end(), c) == reg.end()) {
        std::string known;
        for (const auto& r : reg) known += (known.empty() ? "" : ", ") + r;
        throw SpecError("unknown check '" + c + "'; registered: " + known);
      }
    }
    if (j.contains("sample_plan")) s.sample_plan = parse_plan(j.at("sample_plan"), s.dimension);
    if (j.contains("tolerance")) s.tolerance = j.at("tolerance").get<double>();
    if (!(s.tolerance > 0.0)) throw SpecError("tolerance must be positive");
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed field spec: ") + e.what());
  }
  return s;
}

FieldSpec load_field_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw SpecError(path.string() + ": " + e.what());
  }
  return parse_field_spec(j);
}

ResidualReport run_check(const FieldSpec& spec) {
  const Resolved r = resolve_fields(spec);
  const std::vector<std::string> checks = effective_checks(spec, r);
  const std::vector<std::vector<double>> points = sample_points(spec.sample_plan);

  ResidualReport report;
  for (const std::string& name : checks) {
    if (name == "autoparallel") {
      const ResidualSet set = autoparallel_residuals(r.vec->field(), r.vec->mode);
      const double scale = derivative_scale({r.vec->u.begin(), r.vec->u.end()}, points);
      report.append(evaluate_residuals(set, points, spec.tolerance, scale));
      continue;
    }
    try {
      r.em->validate();
    } catch (const ContractViolation& e) {
      throw SpecError(e.what());
    }
    const ResidualSet set = build_check(name, *r.em, spec, points);
    report.append(evaluate_residuals(set, points, spec.tolerance, config_scale(*r.em, points)));
  }
  return report;
}

json report_to_json(const ResidualReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.results) {
    checks.push_back({{"check", c.check},
                      {"name", c.name},
                      {"max_abs_residual", c.max_abs_residual},
                      {"rms_residual", c.rms_residual},
                      {"n_points", c.n_points},
                      {"scale", c.scale},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  return {{"verdict", report.all_pass() ? "pass" : "fail"},
          {"checks", checks},
          {"warnings", report.warnings}};
}

std::string report_to_csv(const ResidualReport& report) {
  std::ostringstream out;
  out << "check,name,max_abs_residual,rms_residual,n_points,scale,tolerance,pass\n";
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const CheckResult& c : report.results) {
    out << c.check << ',' << c.name << ',' << num(c.max_abs_residual) << ','
        << num(c.rms_residual) << ',' << c.n_points << ',' << num(c.scale) << ','
        << num(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

json identities_to_json(const IdentityReport& report, const std::vector<int>& dims, int trials,
                        std::uint64_t seed) {
  json rows = json::array();
  for (const IdentityResult& r : report.results) {
    rows.push_back({{"identity", r.name},
                    {"dim", r.dim},
                    {"trials", r.trials},
                    {"failures", r.failures},
                    {"pass", r.pass()}});
  }
  return {{"verdict", report.all_pass() ? "pass" : "fail"},
          {"dims", dims},
          {"trials", trials},
          {"seed", seed},
          {"results", rows}};
}

json catalog_to_json() {
  json entries = json::array();
  for (const CatalogEntry& e : catalog_entries()) {
    json params = json::array();
    for (const CatalogParam& p : e.params) {
      params.push_back({{"name", p.name}, {"default", p.default_value}, {"doc", p.doc}});
    }
    entries.push_back({{"name", e.name},
                       {"description", e.description},
                       {"params", params},
                       {"checks", e.checks},
                       {"gated", e.gated}});
  }
  return {{"entries", entries}};
}

}  // namespace premetric
