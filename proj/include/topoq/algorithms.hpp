#pragma once

// Exact state-vector runs of Deutsch-Jozsa, single-shot Grover and the hidden
// subgroup protocol over finite groups, with the classical predicates their
// outcomes are checked against.
//
// Registers are ordered (S, G): the composite index of |s>|g> is s * |G| + g.

#include <cstdint>
#include <optional>
#include <vector>

#include "topoq/group.hpp"
#include "topoq/linalg.hpp"
#include "topoq/repr.hpp"
#include "topoq/setalg.hpp"

namespace topoq {

/// Probabilities below this are rounding noise; further below is a bug.
inline constexpr double kProbabilityFloor = 1e-12;

struct Outcome {
  std::size_t label = 0;
  double p = 0.0;
};

struct Distribution {
  std::vector<Outcome> outcomes;

  double total() const;
  /// 0 for labels that are not listed.
  double probability(std::size_t label) const;
  /// Labels with p > tol, in listed order.
  std::vector<std::size_t> support(double tol = kDefaultTol) const;
};

/// Maps [-1e-12, 0) to 0 and (1, 1 + 1e-12] to 1; throws NumericalError
/// outside [-1e-12, 1 + 1e-12].
double clamp_probability(double p);

enum class Verdict { Constant, Balanced, Inconclusive };
const char* to_string(Verdict v);

struct DJResult {
  double success_probability = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// f : G -> S constant on the cosets of `hidden` and injective across them.
/// The S register carries the cyclic group Z_|S| with identity 0.
struct HSPInstance {
  FiniteGroup group;
  Subgroup hidden;
  FunctionTable oracle;
};

/// Infers the hidden subgroup as the fibre of f(0) and validates the promise.
/// Throws DimensionMismatch, or PromiseViolated naming an offending pair.
HSPInstance infer_hsp_instance(const FiniteGroup& g, const FunctionTable& f);
/// Throws PromiseViolated unless `inst.hidden` is normal and f respects it.
void validate_hsp_instance(const HSPInstance& inst);

/// |s>|b> -> |s>|f(s) b>, assembled from copy, the linearized f and the
/// group multiplication, then checked unitary. Throws DimensionMismatch when
/// f's codomain is not the group's carrier, NumericalError if not unitary.
LinearMap build_oracle_unitary(const FunctionTable& f, const FiniteGroup& x);

/// The same action applied directly to a state on S (x) X.
LinearMap apply_oracle(const FunctionTable& f, const FiniteGroup& x, const LinearMap& state);

bool is_constant(const FunctionTable& f);
/// Requires a codomain of at most two elements. Odd domains are never
/// balanced. The set-level answer is cross-checked against sigma . f . u == 0
/// and Inconsistent is thrown if they disagree.
bool is_balanced(const FunctionTable& f, double tol = kDefaultTol);

/// sigma^dag / sqrt 2 for the sign character of Z_2.
LinearMap sign_input_state();

/// Pre-measurement state of the protocol: oracle applied to the uniform
/// superposition on S tensored with `phi` on G.
LinearMap dj_state(const FunctionTable& f, const FiniteGroup& g, const LinearMap& phi);

/// Probability of finding S in the uniform superposition.
double uniform_projection_probability(const LinearMap& state, std::size_t s_dim,
                                      std::size_t g_dim);

/// f must map into a set of at most two elements.
DJResult deutsch_jozsa(const FunctionTable& f, double tol = kDefaultTol);

/// rho(f(s)) P_rho agrees for all s, for every rho.
bool is_P_constant(const FunctionTable& f, const IrrepSet& irreps, const ProjectorFamily& p,
                   double tol = kDefaultTol);
/// sum_s rho(f(s)) P_rho vanishes for every rho.
bool is_P_balanced(const FunctionTable& f, const IrrepSet& irreps, const ProjectorFamily& p,
                   double tol = kDefaultTol);

DJResult generalized_deutsch_jozsa(const FunctionTable& f, const IrrepSet& irreps,
                                   const ProjectorFamily& p,
                                   const std::optional<std::vector<Complex>>& weights = std::nullopt,
                                   double tol = kDefaultTol);

/// id - (2/n) J, with J the all-ones matrix.
LinearMap diffusion_operator(std::size_t n);

/// dj_state followed by the diffusion operator on S.
LinearMap grover_state(const FunctionTable& f, const FiniteGroup& g, const LinearMap& phi);

/// Computational-basis distribution of S, the G register traced out. Throws
/// ZeroState when the marginal has norm below tol.
Distribution s_marginal_distribution(const LinearMap& state, std::size_t s_dim,
                                     std::size_t g_dim, double tol = kDefaultTol);

/// Tr(rho_S^2) for the reduced state of S.
double s_marginal_purity(const LinearMap& state, std::size_t s_dim, std::size_t g_dim);

Distribution grover_single_shot(const FunctionTable& f, double tol = kDefaultTol);

/// Elements s with rho(f(s)) P_rho == (2/|S|) sum_t rho(f(t)) P_rho for all rho.
std::vector<std::size_t> balanced_elements(const FunctionTable& f, const IrrepSet& irreps,
                                           const ProjectorFamily& p, double tol = kDefaultTol);

Distribution generalized_grover(const FunctionTable& f, const IrrepSet& irreps,
                                const ProjectorFamily& p,
                                const std::optional<std::vector<Complex>>& weights = std::nullopt,
                                double tol = kDefaultTol);

/// Oracle applied to the uniform superposition on G tensored with |0> on S.
/// Registers are ordered (G, S) here.
LinearMap hsp_state(const HSPInstance& inst);

/// Branch probability per irrep index. Throws IncompleteIrreps, and
/// NumericalError if the branches do not sum to 1.
Distribution hsp_distribution(const HSPInstance& inst, const IrrepSet& irreps);

/// Intersection of the kernels of the observed irreps.
Subgroup hsp_reconstruct(const FiniteGroup& g, const IrrepSet& irreps,
                         const std::vector<std::size_t>& observed, double tol = kDefaultTol);

/// Multinomial counts aligned with d.outcomes. Throws ValidationError for
/// trials == 0.
std::vector<std::size_t> sample(const Distribution& d, std::uint64_t seed, std::size_t trials);

}  // namespace topoq
