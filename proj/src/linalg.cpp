#include "topoq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "topoq/error.hpp"
#include "topoq/kernels.hpp"

namespace topoq {

namespace {

std::string shape(const LinearMap& m) {
  return std::to_string(m.cod()) + "x" + std::to_string(m.dom());
}

void require_positive(std::size_t cod, std::size_t dom) {
  if (cod == 0 || dom == 0) {
    throw DimensionMismatch("linear maps need positive dimensions, got " + std::to_string(cod) +
                            "x" + std::to_string(dom));
  }
}

}  // namespace

LinearMap::LinearMap(std::size_t cod, std::size_t dom)
    : cod_(cod), dom_(dom), entries_(cod * dom, Complex{0.0, 0.0}) {
  require_positive(cod, dom);
}

LinearMap::LinearMap(std::size_t cod, std::size_t dom, std::vector<Complex> entries)
    : cod_(cod), dom_(dom), entries_(std::move(entries)) {
  require_positive(cod, dom);
  if (entries_.size() != cod * dom) {
    throw DimensionMismatch("expected " + std::to_string(cod * dom) + " entries, got " +
                            std::to_string(entries_.size()));
  }
  if (!is_finite()) throw NumericalError("linear map has non-finite entries");
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

LinearMap LinearMap::scalar(Complex value) { return LinearMap(1, 1, {value}); }

LinearMap LinearMap::basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionMismatch("basis index out of range");
  LinearMap m(dim, 1);
  m(index, 0) = 1.0;
  return m;
}

LinearMap LinearMap::basis_effect(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionMismatch("basis index out of range");
  LinearMap m(1, dim);
  m(0, index) = 1.0;
  return m;
}

LinearMap LinearMap::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t cod = rows.size();
  const std::size_t dom = cod == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(cod * dom);
  for (const auto& row : rows) {
    if (row.size() != dom) throw DimensionMismatch("ragged rows in matrix literal");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return LinearMap(cod, dom, std::move(entries));
}

LinearMap LinearMap::column(std::span<const Complex> amplitudes) {
  return LinearMap(amplitudes.size(), 1, {amplitudes.begin(), amplitudes.end()});
}

double LinearMap::max_abs() const noexcept {
  double best = 0.0;
  for (const auto& z : entries_) best = std::max(best, std::abs(z));
  return best;
}

double LinearMap::norm() const noexcept {
  double sum = 0.0;
  for (const auto& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

bool LinearMap::is_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

LinearMap& LinearMap::operator+=(const LinearMap& other) {
  if (cod_ != other.cod_ || dom_ != other.dom_) {
    throw DimensionMismatch("cannot add " + shape(*this) + " and " + shape(other));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& other) {
  if (cod_ != other.cod_ || dom_ != other.dom_) {
    throw DimensionMismatch("cannot subtract " + shape(other) + " from " + shape(*this));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

LinearMap& LinearMap::operator*=(Complex factor) {
  for (auto& z : entries_) z *= factor;
  return *this;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.cod() != g.dom()) {
    throw DimensionMismatch("compose: f is " + shape(f) + " but g is " + shape(g));
  }
  std::vector<Complex> out(g.cod() * f.dom());
  kernels::matmul(g.entries(), f.entries(), out, g.cod(), g.dom(), f.dom());
  return LinearMap(g.cod(), f.dom(), std::move(out));
}

LinearMap tensor(const LinearMap& a, const LinearMap& b) {
  std::vector<Complex> out(a.entries().size() * b.entries().size());
  kernels::kron(a.entries(), a.cod(), a.dom(), b.entries(), b.cod(), b.dom(), out);
  return LinearMap(a.cod() * b.cod(), a.dom() * b.dom(), std::move(out));
}

LinearMap tensor_all(std::initializer_list<LinearMap> factors) {
  LinearMap result = LinearMap::scalar(1.0);
  for (const auto& f : factors) result = tensor(result, f);
  return result;
}

LinearMap adjoint(const LinearMap& f) {
  LinearMap out(f.dom(), f.cod());
  for (std::size_t r = 0; r < f.cod(); ++r) {
    for (std::size_t c = 0; c < f.dom(); ++c) out(c, r) = std::conj(f(r, c));
  }
  return out;
}

Complex trace(const LinearMap& m) {
  if (!m.is_square()) throw NotSquare("trace of a " + shape(m) + " map");
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < m.dom(); ++i) sum += m(i, i);
  return sum;
}

LinearMap name(const LinearMap& m) {
  if (!m.is_square()) throw NotSquare("name of a " + shape(m) + " map");
  // Row-major storage is already the vectorization sum_ij L[i][j] |i>|j>.
  return LinearMap(m.cod() * m.dom(), 1, {m.entries().begin(), m.entries().end()});
}

LinearMap unname(const LinearMap& state) {
  if (!state.is_state()) throw DimensionMismatch("unname expects a state, got " + shape(state));
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(state.cod()))));
  if (n * n != state.cod()) {
    throw DimensionMismatch("state dimension " + std::to_string(state.cod()) + " is not square");
  }
  return LinearMap(n, n, {state.entries().begin(), state.entries().end()});
}

LinearMap comp(std::size_t n) {
  const std::size_t n2 = n * n;
  LinearMap out(n2, n2 * n2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        // |i j> (x) |j l>  ->  |i l>
        out(i * n + l, (i * n + j) * n2 + (j * n + l)) = 1.0;
      }
    }
  }
  return out;
}

LinearMap swap(std::size_t dim_a, std::size_t dim_b) {
  LinearMap out(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t a = 0; a < dim_a; ++a) {
    for (std::size_t b = 0; b < dim_b; ++b) out(b * dim_a + a, a * dim_b + b) = 1.0;
  }
  return out;
}

double max_abs_diff(const LinearMap& a, const LinearMap& b) {
  if (a.cod() != b.cod() || a.dom() != b.dom()) return std::numeric_limits<double>::infinity();
  double best = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) best = std::max(best, std::abs(ea[i] - eb[i]));
  return best;
}

bool approx_eq(const LinearMap& a, const LinearMap& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

Complex inner(const LinearMap& x, const LinearMap& y) {
  if (!x.is_state() || !y.is_state() || x.cod() != y.cod()) {
    throw DimensionMismatch("inner product of " + shape(x) + " and " + shape(y));
  }
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < x.cod(); ++i) sum += std::conj(x(i, 0)) * y(i, 0);
  return sum;
}

}  // namespace topoq
