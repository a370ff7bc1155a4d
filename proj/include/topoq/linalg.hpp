#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace topoq {

using Complex = std::complex<double>;

/// Default absolute tolerance for comparing diagram values.
inline constexpr double kDefaultTol = 1e-9;

/// A dense complex matrix with explicit domain and codomain dimensions.
///
/// Entries are stored row-major, `cod` rows by `dom` columns; the row index is
/// the output basis element. A map with dom == 1 is a state and one with
/// cod == 1 is an effect. Every diagram in the library evaluates to one of
/// these.
class LinearMap {
 public:
  /// The zero map C^dom -> C^cod.
  LinearMap(std::size_t cod, std::size_t dom);

  /// Takes ownership of `entries` (row-major). Throws DimensionMismatch when
  /// the entry count is wrong and NumericalError on non-finite entries.
  LinearMap(std::size_t cod, std::size_t dom, std::vector<Complex> entries);

  static LinearMap identity(std::size_t n);
  static LinearMap zero(std::size_t n) { return LinearMap(n, n); }
  static LinearMap scalar(Complex value);
  static LinearMap basis_state(std::size_t dim, std::size_t index);
  static LinearMap basis_effect(std::size_t dim, std::size_t index);
  /// Row-major literal, e.g. `from_rows({{1, -1}})`.
  static LinearMap from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// Column vector (state) with the given amplitudes.
  static LinearMap column(std::span<const Complex> amplitudes);

  std::size_t dom() const noexcept { return dom_; }
  std::size_t cod() const noexcept { return cod_; }
  bool is_state() const noexcept { return dom_ == 1; }
  bool is_effect() const noexcept { return cod_ == 1; }
  bool is_square() const noexcept { return dom_ == cod_; }

  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dom_ + col]; }
  // Mutable access is for building a map before it is shared.
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dom_ + col]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  /// Largest entry modulus.
  double max_abs() const noexcept;
  /// Frobenius norm; the vector norm for states.
  double norm() const noexcept;
  bool is_finite() const noexcept;

  LinearMap& operator+=(const LinearMap& other);
  LinearMap& operator-=(const LinearMap& other);
  LinearMap& operator*=(Complex factor);

  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(Complex k, LinearMap a) { return a *= k; }
  friend LinearMap operator*(LinearMap a, Complex k) { return a *= k; }
  friend LinearMap operator-(LinearMap a) { return a *= Complex{-1.0, 0.0}; }

 private:
  std::size_t cod_;
  std::size_t dom_;
  std::vector<Complex> entries_;
};

/// g after f. Throws DimensionMismatch when f.cod != g.dom.
LinearMap compose(const LinearMap& g, const LinearMap& f);

/// Kronecker product; composite index (i, j) -> i * dim(b) + j.
LinearMap tensor(const LinearMap& a, const LinearMap& b);

/// Tensor product of a list, left to right. Empty list gives the 1x1 identity.
LinearMap tensor_all(std::initializer_list<LinearMap> factors);

LinearMap adjoint(const LinearMap& f);

/// Sum of diagonal entries. Throws NotSquare.
Complex trace(const LinearMap& m);

/// Choi name of a square map: the state sum_ij L[i][j] |i>|j>. Throws NotSquare.
LinearMap name(const LinearMap& m);

/// Inverse of `name` for a state of dimension n*n.
LinearMap unname(const LinearMap& state);

/// Matrix-algebra multiplication on names: comp(name(A) (x) name(B)) = name(A B).
/// Domain n^4, codomain n^2.
LinearMap comp(std::size_t n);

/// The symmetry |a>|b> -> |b>|a> on C^dim_a (x) C^dim_b.
LinearMap swap(std::size_t dim_a, std::size_t dim_b);

/// Max entrywise |a - b|; +infinity when the shapes differ.
double max_abs_diff(const LinearMap& a, const LinearMap& b);

/// Same shape and max entrywise absolute difference <= tol.
bool approx_eq(const LinearMap& a, const LinearMap& b, double tol = kDefaultTol);

/// Standard inner product <x, y> of two states (conjugate-linear in x).
Complex inner(const LinearMap& x, const LinearMap& y);

}  // namespace topoq
