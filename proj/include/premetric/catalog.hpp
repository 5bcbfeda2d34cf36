#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "premetric/electrodyn.hpp"

namespace premetric {

/// A vector field on the spacetime chart for the autoparallel checks.
struct VectorFieldConfig {
  Chart chart = Chart::spacetime();
  std::array<Expr, 4> u;
  AutoparallelMode mode = AutoparallelMode::timelike;

  Field field() const;
};

using CatalogItem = std::variant<EMConfig, VectorFieldConfig>;
using CatalogParams = std::map<std::string, std::string>;

struct CatalogParam {
  std::string name;
  std::string default_value;
  std::string doc;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<CatalogParam> params;
  std::vector<std::string> checks;  // checks the entry is expected to pass
  bool gated = false;  // verified by the finite-difference gate at build time
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);

/// Instantiates a catalog entry. Unknown names and unknown parameters throw
/// std::invalid_argument; the message for an unknown name lists the catalog.
CatalogItem catalog(const std::string& name, const CatalogParams& params = {});
EMConfig catalog_config(const std::string& name, const CatalogParams& params = {});
VectorFieldConfig catalog_vector_field(const std::string& name, const CatalogParams& params = {});

/// E = (u, p, 0), B = eps (-p, u, 0), alpha_i = E^i, beta_i = B^i, where u and
/// p are given on (x, y, z) and z is replaced by z - eps xi.
EMConfig running_wave(const Expr& u, const Expr& p, int direction);

/// Pseudo-random polynomial configuration of total degree <= `degree` in
/// (x, y, z, xi) with small integer coefficients; alpha, beta independent.
EMConfig random_polynomial_config(std::uint64_t seed, int degree = 2);

}  // namespace premetric
