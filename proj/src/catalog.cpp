#include "premetric/catalog.hpp"

#include <stdexcept>

namespace premetric {

namespace {

std::vector<CatalogEntry> build_entries() {
  const CatalogParam direction{"direction", "1", "propagation sign along z, +1 or -1"};
  return {
      {"plane_wave",
       "charge-free linear plane wave E=(u,0,0), B=(0,eps u,0), u = amplitude sin(z - eps xi), "
       "alpha and beta carry the components of E and B",
       {{"amplitude", "1", "wave amplitude"}, direction},
       {"linear_prerel", "cross_helicity", "integrability", "linear_spacetime",
        "nonlinear_spacetime", "time_balance", "conservation", "null_conditions",
        "invariant_relations"},
       true},
      {"static_equilibrium",
       "xi-independent solution of the static balance: E=(cos y sin z,0,0), "
       "B=(0,cos z exp x,0), alpha = tanh(x) dx, beta = sin(y) dy",
       {},
       {"static_balance", "time_balance", "invariant_relations"},
       false},
      {"running_wave_null",
       "null running-wave family of the nonlinear system: E=(u,p,0), B=eps(-p,u,0), "
       "alpha, beta identified with E, B, u and p arbitrary in (x, y, z - eps xi)",
       {{"u", "exp(-(x^2+y^2))*cos(z)", "profile u(x, y, z); z is shifted to z - eps xi"},
        {"p", "exp(-(x^2+y^2))*sin(z)", "profile p(x, y, z); z is shifted to z - eps xi"},
        direction},
       {"nonlinear_spacetime", "time_balance", "conservation", "null_conditions",
        "integrability", "invariant_relations"},
       true},
      {"bump_photon",
       "running wave with finite spatial support in x and y: "
       "u = bump(x) bump(y) bump((z - eps xi)/2) cos(k (z - eps xi)), p the same with sin",
       {{"wavenumber", "1", "k"}, direction},
       {"nonlinear_spacetime", "time_balance", "conservation", "null_conditions",
        "integrability", "invariant_relations"},
       true},
      {"autoparallel_timelike",
       "soliton-like timelike field u = (0, 0, s r f, f), f = bump(x) bump(y) bump(z - s r xi), "
       "r = v/c",
       {{"speed_ratio", "0.5", "v/c, in (0, 1)"},
        {"direction", "1", "sign s of the velocity along z"},
        {"slope_mismatch", "0", "added to r inside f only; nonzero breaks the solution"}},
       {"autoparallel"},
       false},
      {"autoparallel_null",
       "null field u = (0, 0, s f, f), f = bump(x) bump(y) bump(z - s xi)",
       {{"direction", "1", "sign s of the velocity along z"},
        {"slope_mismatch", "0", "added to the unit slope inside f only"}},
       {"autoparallel"},
       false},
      {"random_nonsolution",
       "deterministic pseudo-random polynomial fields, generically failing every differential "
       "check",
       {{"seed", "1", "generator seed"}, {"degree", "2", "maximum total degree"}},
       {},
       false},
  };
}

std::string lookup(const CatalogEntry& entry, const CatalogParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it != params.end()) return it->second;
  for (const auto& p : entry.params) {
    if (p.name == key) return p.default_value;
  }
  throw std::logic_error("catalog parameter without default: " + key);
}

double number(const CatalogEntry& entry, const CatalogParams& params, const std::string& key) {
  const std::string text = lookup(entry, params, key);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw std::invalid_argument("catalog parameter '" + key + "' is not a number: " + text);
  }
  return v;
}

int sign(const CatalogEntry& entry, const CatalogParams& params) {
  const double d = number(entry, params, "direction");
  if (d != 1.0 && d != -1.0) throw std::invalid_argument("direction must be +1 or -1");
  return d > 0 ? 1 : -1;
}

void check_params(const CatalogEntry& entry, const CatalogParams& params) {
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& p : entry.params) known = known || p.name == key;
    if (!known) {
      throw std::invalid_argument("catalog entry '" + entry.name + "' has no parameter '" + key + "'");
    }
  }
}

Expr var(const char* name) { return Expr::var(Chart::spacetime().index_of(name)); }

Expr spatial_profile(const CatalogEntry& entry, const CatalogParams& params, const std::string& key) {
  const Expr e = parse(lookup(entry, params, key), Chart::spacetime());
  if (max_var_index(e) > 2) {
    throw std::invalid_argument("profile '" + key + "' must depend on x, y, z only");
  }
  return e;
}

}  // namespace

Field VectorFieldConfig::field() const { return vector_field({u.begin(), u.end()}); }

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name == name) return e;
  }
  std::string known;
  for (const auto& e : catalog_entries()) known += (known.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown catalog entry '" + name + "'; available: " + known);
}

EMConfig running_wave(const Expr& u, const Expr& p, int direction) {
  const Expr shifted = var("z") - Expr(static_cast<double>(direction)) * var("xi");
  const Expr us = substitute(u, 2, shifted);
  const Expr ps = substitute(p, 2, shifted);
  const Expr eps(static_cast<double>(direction));
  EMConfig cfg;
  cfg.E = {us, ps, Expr(0.0)};
  cfg.B = {-(eps * ps), eps * us, Expr(0.0)};
  cfg.alpha = cfg.E;
  cfg.beta = cfg.B;
  return cfg;
}

EMConfig random_polynomial_config(std::uint64_t seed, int degree) {
  if (degree < 0 || degree > 6) throw std::invalid_argument("degree must be in [0, 6]");
  Rng rng(seed);
  auto poly = [&]() {
    Expr sum(0.0);
    for (int a = 0; a <= degree; ++a) {
      for (int b = 0; a + b <= degree; ++b) {
        for (int c = 0; a + b + c <= degree; ++c) {
          for (int e = 0; a + b + c + e <= degree; ++e) {
            const int coeff = rng.integer(-3, 3);
            if (coeff == 0) continue;
            Expr term(static_cast<double>(coeff));
            const int exps[4] = {a, b, c, e};
            for (int k = 0; k < 4; ++k) {
              if (exps[k] > 0) term = term * pow(Expr::var(k), exps[k]);
            }
            sum = sum + term;
          }
        }
      }
    }
    return sum;
  };
  EMConfig cfg;
  for (auto* a : {&cfg.E, &cfg.B, &cfg.alpha, &cfg.beta}) {
    for (Expr& e : *a) e = poly();
  }
  return cfg;
}

CatalogItem catalog(const std::string& name, const CatalogParams& params) {
  const CatalogEntry& entry = catalog_entry(name);
  check_params(entry, params);
  const Expr x = var("x"), y = var("y"), z = var("z"), xi = var("xi");

  if (name == "plane_wave") {
    const Expr u = Expr(number(entry, params, "amplitude")) * sin(z);
    return running_wave(u, Expr(0.0), sign(entry, params));
  }
  if (name == "static_equilibrium") {
    EMConfig cfg;
    cfg.E = {cos(y) * sin(z), Expr(0.0), Expr(0.0)};
    cfg.B = {Expr(0.0), cos(z) * exp(x), Expr(0.0)};
    cfg.alpha = {tanh(x), Expr(0.0), Expr(0.0)};
    cfg.beta = {Expr(0.0), sin(y), Expr(0.0)};
    return cfg;
  }
  if (name == "running_wave_null") {
    return running_wave(spatial_profile(entry, params, "u"), spatial_profile(entry, params, "p"),
                        sign(entry, params));
  }
  if (name == "bump_photon") {
    const Expr k(number(entry, params, "wavenumber"));
    const Expr envelope = bump(x) * bump(y) * bump(z / Expr(2.0));
    return running_wave(envelope * cos(k * z), envelope * sin(k * z), sign(entry, params));
  }
  if (name == "autoparallel_timelike" || name == "autoparallel_null") {
    const bool timelike = name == "autoparallel_timelike";
    const double s = sign(entry, params);
    const double r = timelike ? number(entry, params, "speed_ratio") : 1.0;
    if (timelike && !(r > 0.0 && r < 1.0)) {
      throw std::invalid_argument("speed_ratio must lie in (0, 1)");
    }
    const double slope = s * (r + number(entry, params, "slope_mismatch"));
    const Expr f = bump(x) * bump(y) * bump(z - Expr(slope) * xi);
    VectorFieldConfig v;
    v.u = {Expr(0.0), Expr(0.0), Expr(s * r) * f, f};
    v.mode = timelike ? AutoparallelMode::timelike : AutoparallelMode::null;
    return v;
  }
  if (name == "random_nonsolution") {
    const double seed = number(entry, params, "seed");
    const double degree = number(entry, params, "degree");
    if (seed < 0 || seed != static_cast<double>(static_cast<std::uint64_t>(seed))) {
      throw std::invalid_argument("seed must be a non-negative integer");
    }
    return random_polynomial_config(static_cast<std::uint64_t>(seed), static_cast<int>(degree));
  }
  throw std::logic_error("catalog entry without builder: " + name);
}

EMConfig catalog_config(const std::string& name, const CatalogParams& params) {
  CatalogItem item = catalog(name, params);
  if (auto* cfg = std::get_if<EMConfig>(&item)) return *cfg;
  throw std::invalid_argument("catalog entry '" + name + "' is a vector field, not a field configuration");
}

VectorFieldConfig catalog_vector_field(const std::string& name, const CatalogParams& params) {
  CatalogItem item = catalog(name, params);
  if (auto* v = std::get_if<VectorFieldConfig>(&item)) return *v;
  throw std::invalid_argument("catalog entry '" + name + "' is a field configuration, not a vector field");
}

}  // namespace premetric
