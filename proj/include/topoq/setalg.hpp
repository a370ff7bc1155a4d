#pragma once

// Classical structures on the free Hilbert space of a finite set, and
// linearized functions between finite sets.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topoq/linalg.hpp"

namespace topoq {

/// A finite set {0, ..., size-1}. The label is display metadata only.
struct FiniteSet {
  std::size_t size = 1;
  std::string label;

  explicit FiniteSet(std::size_t n, std::string text = {});
};

/// A total function between finite sets, stored as an image table.
class FunctionTable {
 public:
  /// Throws ValidationError unless `image` has dom.size entries, all < cod.size.
  FunctionTable(FiniteSet dom, FiniteSet cod, std::vector<std::size_t> image);

  /// Codomain size defaults to max(image) + 1.
  static FunctionTable from_image(std::vector<std::size_t> image);

  const FiniteSet& dom() const noexcept { return dom_; }
  const FiniteSet& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  std::size_t operator()(std::size_t s) const { return image_.at(s); }

  /// this after `inner`. Throws DimensionMismatch when the sets do not match.
  FunctionTable after(const FunctionTable& inner) const;

 private:
  FiniteSet dom_;
  FiniteSet cod_;
  std::vector<std::size_t> image_;
};

LinearMap multiply(const FiniteSet& s);  // |i>|j> -> delta_ij |i>
LinearMap unit(const FiniteSet& s);      // sum_i |i>
LinearMap copy(const FiniteSet& s);      // adjoint of multiply
LinearMap del(const FiniteSet& s);       // adjoint of unit

/// One named equality check with its residual (max entrywise difference).
struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// Throws std::out_of_range for an unknown check name.
  const CheckResult& at(const std::string& check_name) const;
  void add(std::string check_name, const LinearMap& lhs, const LinearMap& rhs, double tol);
};

/// Checks associativity, commutativity, both unit laws, specialness and the
/// three displayed forms of the Frobenius law for the algebra (m, u) on one
/// space, with the comultiplication and counit taken as adjoints.
/// Throws DimensionMismatch when the shapes do not describe an algebra.
Report verify_classical_structure(const LinearMap& m, const LinearMap& u, double tol = kDefaultTol);

/// A composite of m, u and their adjoints, tagged with a connectivity class.
/// Members of the same class have the same inputs, outputs and connectivity.
struct SpiderComposite {
  std::string connectivity;
  std::string description;
  LinearMap value;
};

/// The fixed catalog of ten composites used for spider-theorem instances.
std::vector<SpiderComposite> spider_catalog(const FiniteSet& s);

/// Compares every pair in the catalog with equal connectivity.
Report verify_spider_instances(const FiniteSet& s, double tol = kDefaultTol);

LinearMap linearize(const FunctionTable& f);

/// copy(T) F == (F (x) F) copy(S) and del(T) F == del(S), within tol.
bool is_comonoid_homomorphism(const LinearMap& f, const FiniteSet& s, const FiniteSet& t,
                              double tol = kDefaultTol);

/// Injectivity tested as an isometry condition on the linearization.
bool is_injective_as_isometry(const FunctionTable& f, double tol = kDefaultTol);

/// n when every codomain element has exactly n preimages, otherwise empty.
std::optional<std::size_t> even_surjectivity_multiplicity(const FunctionTable& f);

}  // namespace topoq
