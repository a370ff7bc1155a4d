#include "topoq/setalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "topoq/error.hpp"

namespace topoq {

FiniteSet::FiniteSet(std::size_t n, std::string text) : size(n), label(std::move(text)) {
  if (n == 0) throw ValidationError("finite sets must be nonempty");
}

FunctionTable::FunctionTable(FiniteSet dom, FiniteSet cod, std::vector<std::size_t> image)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
  if (image_.size() != dom_.size) {
    throw ValidationError("function table has " + std::to_string(image_.size()) +
                          " entries for a domain of size " + std::to_string(dom_.size));
  }
  for (std::size_t s = 0; s < image_.size(); ++s) {
    if (image_[s] >= cod_.size) {
      throw ValidationError("image of " + std::to_string(s) + " is " + std::to_string(image_[s]) +
                            ", outside a codomain of size " + std::to_string(cod_.size));
    }
  }
}

FunctionTable FunctionTable::from_image(std::vector<std::size_t> image) {
  if (image.empty()) throw ValidationError("function table is empty");
  const std::size_t cod = *std::max_element(image.begin(), image.end()) + 1;
  const std::size_t dom = image.size();
  return FunctionTable(FiniteSet(dom), FiniteSet(cod), std::move(image));
}

FunctionTable FunctionTable::after(const FunctionTable& inner) const {
  if (inner.cod_.size != dom_.size) {
    throw DimensionMismatch("cannot compose functions: codomain size " +
                            std::to_string(inner.cod_.size) + " vs domain size " +
                            std::to_string(dom_.size));
  }
  std::vector<std::size_t> out(inner.dom_.size);
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = image_[inner.image_[s]];
  return FunctionTable(inner.dom_, cod_, std::move(out));
}

LinearMap multiply(const FiniteSet& s) {
  LinearMap m(s.size, s.size * s.size);
  for (std::size_t i = 0; i < s.size; ++i) m(i, i * s.size + i) = 1.0;
  return m;
}

LinearMap unit(const FiniteSet& s) {
  LinearMap u(s.size, 1);
  for (std::size_t i = 0; i < s.size; ++i) u(i, 0) = 1.0;
  return u;
}

LinearMap copy(const FiniteSet& s) { return adjoint(multiply(s)); }

LinearMap del(const FiniteSet& s) { return adjoint(unit(s)); }

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult& Report::at(const std::string& check_name) const {
  for (const auto& c : checks) {
    if (c.name == check_name) return c;
  }
  throw std::out_of_range("no check named " + check_name);
}

void Report::add(std::string check_name, const LinearMap& lhs, const LinearMap& rhs, double tol) {
  const double residual = max_abs_diff(lhs, rhs);
  checks.push_back({std::move(check_name), residual <= tol, residual});
}

Report verify_classical_structure(const LinearMap& m, const LinearMap& u, double tol) {
  const std::size_t d = m.cod();
  if (m.dom() != d * d || u.cod() != d || u.dom() != 1) {
    throw DimensionMismatch("(m, u) do not describe an algebra on one space");
  }
  const auto id = LinearMap::identity(d);
  const auto md = adjoint(m);

  Report r;
  r.add("associativity", compose(m, tensor(m, id)), compose(m, tensor(id, m)), tol);
  r.add("commutativity", compose(m, swap(d, d)), m, tol);
  r.add("left_unit", compose(m, tensor(u, id)), id, tol);
  r.add("right_unit", compose(m, tensor(id, u)), id, tol);
  r.add("specialness", compose(m, md), id, tol);
  const auto frob_middle = compose(md, m);
  r.add("frobenius_left", compose(tensor(m, id), tensor(id, md)), frob_middle, tol);
  r.add("frobenius_right", compose(tensor(id, m), tensor(md, id)), frob_middle, tol);
  r.add("frobenius_outer", compose(tensor(m, id), tensor(id, md)),
        compose(tensor(id, m), tensor(md, id)), tol);
  return r;
}

std::vector<SpiderComposite> spider_catalog(const FiniteSet& s) {
  const auto m = multiply(s);
  const auto u = unit(s);
  const auto md = copy(s);
  const auto id = LinearMap::identity(s.size);

  std::vector<SpiderComposite> cat;
  cat.push_back({"2->1", "m", m});
  cat.push_back({"2->1", "m.(m x id).(id x u x id)",
                 compose(m, compose(tensor(m, id), tensor_all({id, u, id})))});
  cat.push_back({"2->1", "m.swap", compose(m, swap(s.size, s.size))});
  cat.push_back({"2->1", "m.m+.m", compose(m, compose(md, m))});
  cat.push_back({"2->2", "m+.m", compose(md, m)});
  cat.push_back({"2->2", "(m x id).(id x m+)", compose(tensor(m, id), tensor(id, md))});
  cat.push_back({"2->2", "(id x m).(m+ x id)", compose(tensor(id, m), tensor(md, id))});
  cat.push_back({"1->1", "id", id});
  cat.push_back({"1->1", "m.m+", compose(m, md)});
  cat.push_back({"1->1", "m.(id x u)", compose(m, tensor(id, u))});
  return cat;
}

Report verify_spider_instances(const FiniteSet& s, double tol) {
  const auto cat = spider_catalog(s);
  Report r;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i].connectivity != cat[j].connectivity) continue;
      r.add(cat[i].description + " == " + cat[j].description, cat[i].value, cat[j].value, tol);
    }
  }
  return r;
}

LinearMap linearize(const FunctionTable& f) {
  LinearMap out(f.cod().size, f.dom().size);
  for (std::size_t s = 0; s < f.dom().size; ++s) out(f(s), s) = 1.0;
  return out;
}

bool is_comonoid_homomorphism(const LinearMap& f, const FiniteSet& s, const FiniteSet& t,
                              double tol) {
  if (f.dom() != s.size || f.cod() != t.size) {
    throw DimensionMismatch("map is " + std::to_string(f.cod()) + "x" + std::to_string(f.dom()) +
                            " but sets have sizes " + std::to_string(s.size) + ", " +
                            std::to_string(t.size));
  }
  const bool copies = approx_eq(compose(copy(t), f), compose(tensor(f, f), copy(s)), tol);
  const bool deletes = approx_eq(compose(del(t), f), del(s), tol);
  return copies && deletes;
}

bool is_injective_as_isometry(const FunctionTable& f, double tol) {
  const auto lin = linearize(f);
  return approx_eq(compose(adjoint(lin), lin), LinearMap::identity(f.dom().size), tol);
}

std::optional<std::size_t> even_surjectivity_multiplicity(const FunctionTable& f) {
  std::vector<std::size_t> fiber(f.cod().size, 0);
  for (auto v : f.image()) ++fiber[v];
  const std::size_t n = fiber.front();
  if (n == 0) return std::nullopt;
  for (auto c : fiber) {
    if (c != n) return std::nullopt;
  }
  return n;
}

}  // namespace topoq
