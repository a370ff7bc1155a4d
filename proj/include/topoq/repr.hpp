#pragma once

// Unitary representations of finite groups, their numerical decomposition
// into irreducibles, and the group-algebra identities they satisfy.

#include <cstdint>
#include <optional>
#include <vector>

#include "topoq/group.hpp"
#include "topoq/linalg.hpp"

namespace topoq {

/// A homomorphism G -> U(n), one n x n matrix per group element.
class Representation {
 public:
  /// Checks only shapes; use `representation_residual` for the algebraic laws.
  Representation(FiniteGroup group, std::vector<LinearMap> matrices);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  const LinearMap& operator()(std::size_t g) const { return matrices_.at(g); }
  const std::vector<LinearMap>& matrices() const noexcept { return matrices_; }

  std::vector<Complex> character() const;

 private:
  FiniteGroup group_;
  std::size_t dim_;
  std::vector<LinearMap> matrices_;
};

/// Largest violation of homomorphism, unitality and unitarity.
double representation_residual(const Representation& rho);

/// <chi_a, chi_b> = (1/|G|) sum_g conj(chi_a(g)) chi_b(g).
Complex character_inner(const Representation& a, const Representation& b);

/// Character self-inner-product is 1 (equivalently, sum |chi|^2 == |G|).
bool is_irreducible(const Representation& rho, double tol = kDefaultTol);

/// One irrep per equivalence class, in canonical order: dimension ascending,
/// then characters compared element by element, larger real part first and
/// then larger imaginary part first. The trivial representation is first.
struct IrrepSet {
  FiniteGroup group;
  std::vector<Representation> irreps;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return irreps.size(); }
  const Representation& operator[](std::size_t i) const { return irreps.at(i); }
  std::vector<std::size_t> dims() const;
};

/// Left multiplication as permutation matrices.
Representation regular_representation(const FiniteGroup& g);

/// Splits the regular representation with seeded random commutant elements.
/// Deterministic for a given seed. Throws DecompositionFailed(seed) if a
/// subspace refuses to split; callers may retry with another seed.
IrrepSet compute_irreps(const FiniteGroup& g, std::uint64_t seed = 0);

/// The map G -> Mat(n) whose column g is name(rho(g)).
LinearMap rep_as_linear_map(const Representation& rho);

/// sqrt(n/|G|) * rep_as_linear_map(rho); a partial isometry for irreducible rho.
LinearMap measurement_isometry(const Representation& rho);

/// max |rho rho^dag - (|G|/n) id|.
double repnorm_residual(const Representation& rho);
bool verify_repnorm(const Representation& rho, double tol = kDefaultTol);

/// Residual of m == (1/|G|) sum_rho dim(rho) rho^dag . comp . (rho (x) rho).
/// Throws IncompleteIrreps unless sum dim^2 == |G|.
double mdecomp_residual(const FiniteGroup& g, const std::vector<Representation>& irreps);
bool verify_mdecomp(const FiniteGroup& g, const std::vector<Representation>& irreps,
                    double tol = kDefaultTol);
inline bool verify_mdecomp(const IrrepSet& set, double tol = kDefaultTol) {
  return verify_mdecomp(set.group, set.irreps, tol);
}

/// Pulling an irrep adjoint through the multiplication vertex on either lower
/// leg:
///   m . (id_G (x) s^dag) == s^dag . comp . (s (x) id)
///   m . (s^dag (x) id_G) == s^dag . comp . (id (x) s)
/// where s is `rho_map`, a |G| -> n^2 map. Returns the larger residual.
double copy_on_leg_residual(const FiniteGroup& g, const LinearMap& rho_map, std::size_t n);
bool verify_copy_on_leg(const Representation& sigma, double tol = kDefaultTol);

/// Outcome of testing an irrep against a normal subgroup H.
struct Classification {
  enum class Arm { FactorsThrough, Annihilated };
  Arm arm;
  /// The irrep of G/H with rho = tau . q, when the irrep factors.
  std::optional<Representation> tau;
  /// Max of the sum-over-H residual and the arm's own check (rho == tau . q,
  /// or sum_g rho(g) (x) q(g) == 0).
  double residual = 0.0;
};

/// Throws Inconsistent when sum_{h in H} rho(h) is neither |H| id nor 0, and
/// NotNormal when H is not normal.
Classification classify_irrep_vs_normal_subgroup(const Representation& rho, const Subgroup& h,
                                                 double tol = kDefaultTol);

/// One orthogonal projector per irrep class, in the irrep set's basis.
struct ProjectorFamily {
  std::vector<LinearMap> projectors;

  static ProjectorFamily zeros(const IrrepSet& irreps);
  static ProjectorFamily identities(const IrrepSet& irreps);
  /// Identity on irrep `index`, zero elsewhere.
  static ProjectorFamily only(const IrrepSet& irreps, std::size_t index);
  /// `p` on irrep `index`, zero elsewhere.
  static ProjectorFamily only(const IrrepSet& irreps, std::size_t index, LinearMap p);

  /// Throws NonProjector (wrong shape, non-Hermitian or non-idempotent) or
  /// AllProjectorsZero.
  void validate(const IrrepSet& irreps, double tol = kDefaultTol) const;
  bool is_zero(std::size_t index, double tol = kDefaultTol) const;
};

/// An element of the group algebra C[G].
struct GroupAlgebraState {
  std::vector<Complex> amplitudes;

  LinearMap state() const { return LinearMap::column(amplitudes); }
  double norm() const { return state().norm(); }
};

/// phi = sum_rho c_rho rho^dag(name(P_rho)), normalized. Default weights are 1
/// for every irrep; supplied weights must be nonzero wherever P_rho != 0.
GroupAlgebraState make_phi(const IrrepSet& irreps, const ProjectorFamily& p,
                           const std::optional<std::vector<Complex>>& weights = std::nullopt,
                           double tol = kDefaultTol);

}  // namespace topoq
