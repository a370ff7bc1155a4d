#include "topoq/io.hpp"

#include <string>

#include "topoq/error.hpp"

namespace topoq::io {

namespace {

std::size_t positive_size(const Json& spec, const char* key) {
  if (!spec.contains(key) || !spec[key].is_number_integer() || spec[key].get<long long>() < 1) {
    throw ValidationError(std::string("group spec needs a positive integer \"") + key + "\"");
  }
  return spec[key].get<std::size_t>();
}

}  // namespace

FiniteGroup parse_group(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string()) {
    throw ValidationError("group spec must be an object with a string \"kind\"");
  }
  const auto kind = spec["kind"].get<std::string>();
  if (kind == "cyclic") return group_cyclic(positive_size(spec, "n"));
  if (kind == "dihedral") return group_dihedral(positive_size(spec, "n"));
  if (kind == "symmetric") return group_symmetric(positive_size(spec, "n"));
  if (kind == "quaternion") return group_quaternion();
  if (kind == "product") {
    if (!spec.contains("of") || !spec["of"].is_array() || spec["of"].empty()) {
      throw ValidationError("product spec needs a nonempty \"of\" array");
    }
    FiniteGroup g = parse_group(spec["of"][0]);
    for (std::size_t i = 1; i < spec["of"].size(); ++i) g = group_product(g, parse_group(spec["of"][i]));
    return g;
  }
  if (kind == "table") {
    if (!spec.contains("table") || !spec["table"].is_array()) {
      throw ValidationError("table spec needs a \"table\" array");
    }
    CayleyTable table;
    for (const auto& row : spec["table"]) table.push_back(parse_indices(row, "Cayley table row"));
    return from_cayley_table(table);
  }
  throw ValidationError("unknown group kind \"" + kind + "\"");
}

std::vector<std::size_t> parse_indices(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ValidationError(std::string(what) + " entries must be non-negative integers");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

Complex parse_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ValidationError("complex entries must be numbers or [re, im] pairs");
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

LinearMap parse_matrix(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw ValidationError("matrix must be a nonempty array of nonempty rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ValidationError("matrix rows differ in length");
    for (const auto& v : row) entries.push_back(parse_complex(v));
  }
  return LinearMap(rows, cols, std::move(entries));
}

Json matrix_json(const LinearMap& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.cod(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dom(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ProjectorFamily parse_projectors(const Json& j, const IrrepSet& irreps) {
  if (!j.is_object()) throw ValidationError("projectors must be an object keyed by irrep index");
  ProjectorFamily p = ProjectorFamily::zeros(irreps);
  for (const auto& [key, value] : j.items()) {
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ValidationError("projector key \"" + key + "\" is not an irrep index");
    }
    if (index >= irreps.size()) {
      throw ValidationError("projector key " + key + " exceeds the " +
                            std::to_string(irreps.size()) + " irreps");
    }
    p.projectors[index] = value == "identity" ? LinearMap::identity(irreps[index].dim())
                                              : parse_matrix(value);
  }
  return p;
}

Json irreps_json(const IrrepSet& irreps) {
  Json dims = Json::array();
  Json list = Json::array();
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const auto& rho = irreps[i];
    dims.push_back(rho.dim());
    Json character = Json::array();
    for (Complex c : rho.character()) character.push_back(complex_json(c));
    Json matrices = Json::array();
    for (const auto& m : rho.matrices()) matrices.push_back(matrix_json(m));
    list.push_back(Json{{"index", i},
                        {"dim", rho.dim()},
                        {"character", std::move(character)},
                        {"matrices", std::move(matrices)}});
  }
  return Json{{"dims", std::move(dims)}, {"irreps", std::move(list)}};
}

Json distribution_json(const Distribution& d) {
  Json outcomes = Json::array();
  for (const auto& o : d.outcomes) outcomes.push_back(Json{{"label", o.label}, {"p", o.p}});
  return Json{{"outcomes", std::move(outcomes)}};
}

}  // namespace topoq::io
