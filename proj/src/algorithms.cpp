#include "topoq/algorithms.hpp"

#include <cmath>
#include <random>
#include <string>

#include "topoq/error.hpp"

namespace topoq {

namespace {

constexpr double kTotalTol = 1e-9;

std::string pair_text(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Widens a function into at most two values to one into exactly two.
FunctionTable into_two(const FunctionTable& f) {
  if (f.cod().size > 2) {
    throw DimensionMismatch("expected a function into a 2-element set, codomain has " +
                            std::to_string(f.cod().size));
  }
  return FunctionTable(f.dom(), FiniteSet(2), f.image());
}

void require_into_group(const FunctionTable& f, const FiniteGroup& g) {
  if (f.cod().size != g.order()) {
    throw DimensionMismatch("function codomain has " + std::to_string(f.cod().size) +
                            " elements but the group has order " + std::to_string(g.order()));
  }
}

LinearMap uniform_state(std::size_t n) {
  LinearMap u = unit(FiniteSet(n));
  u *= Complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0};
  return u;
}

// rho(f(s)) P_rho for one irrep and every s.
std::vector<LinearMap> projected_values(const FunctionTable& f, const Representation& rho,
                                        const LinearMap& p) {
  std::vector<LinearMap> out;
  out.reserve(f.dom().size);
  for (std::size_t s = 0; s < f.dom().size; ++s) out.push_back(compose(rho(f(s)), p));
  return out;
}

void require_projectors(const FunctionTable& f, const IrrepSet& irreps, const ProjectorFamily& p,
                        double tol) {
  require_into_group(f, irreps.group);
  p.validate(irreps, tol);
}

}  // namespace

double Distribution::total() const {
  double t = 0.0;
  for (const auto& o : outcomes) t += o.p;
  return t;
}

double Distribution::probability(std::size_t label) const {
  for (const auto& o : outcomes) {
    if (o.label == label) return o.p;
  }
  return 0.0;
}

std::vector<std::size_t> Distribution::support(double tol) const {
  std::vector<std::size_t> out;
  for (const auto& o : outcomes) {
    if (o.p > tol) out.push_back(o.label);
  }
  return out;
}

double clamp_probability(double p) {
  if (!std::isfinite(p) || p < -kProbabilityFloor || p > 1.0 + kProbabilityFloor) {
    throw NumericalError("probability " + std::to_string(p) + " outside [0, 1]");
  }
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Constant:
      return "constant";
    case Verdict::Balanced:
      return "balanced";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

void validate_hsp_instance(const HSPInstance& inst) {
  const auto& g = inst.group;
  const auto& f = inst.oracle;
  const auto& h = inst.hidden;
  if (f.dom().size != g.order()) {
    throw DimensionMismatch("oracle domain has " + std::to_string(f.dom().size) +
                            " elements but the group has order " + std::to_string(g.order()));
  }
  for (std::size_t x : h.members()) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (!h.contains(g.mul(g.mul(y, x), g.inv(y)))) {
        throw PromiseViolated("hidden subgroup is not normal: conjugating " + std::to_string(x) +
                              " by " + std::to_string(y) + " leaves it");
      }
    }
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      const bool same_value = f(a) == f(b);
      const bool same_coset = h.contains(g.mul(g.inv(a), b));
      if (same_value && !same_coset) {
        throw PromiseViolated("pair " + pair_text(a, b) +
                              " share a value but lie in different cosets");
      }
      if (!same_value && same_coset) {
        throw PromiseViolated("pair " + pair_text(a, b) +
                              " lie in one coset but take different values");
      }
    }
  }
}

HSPInstance infer_hsp_instance(const FiniteGroup& g, const FunctionTable& f) {
  if (f.dom().size != g.order()) {
    throw DimensionMismatch("oracle domain has " + std::to_string(f.dom().size) +
                            " elements but the group has order " + std::to_string(g.order()));
  }
  std::vector<std::size_t> fibre;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (f(x) == f(FiniteGroup::identity())) fibre.push_back(x);
  }
  for (std::size_t a : fibre) {
    for (std::size_t b : fibre) {
      if (f(g.mul(a, b)) != f(FiniteGroup::identity())) {
        throw PromiseViolated("pair " + pair_text(a, b) +
                              " share the identity's value but their product does not");
      }
    }
  }
  HSPInstance inst{g, Subgroup(g, fibre), f};
  validate_hsp_instance(inst);
  return inst;
}

LinearMap build_oracle_unitary(const FunctionTable& f, const FiniteGroup& x) {
  require_into_group(f, x);
  const FiniteSet s = f.dom();
  const std::size_t ns = s.size;
  const std::size_t nx = x.order();
  const LinearMap id_s = LinearMap::identity(ns);
  const LinearMap id_x = LinearMap::identity(nx);
  const LinearMap split = tensor(copy(s), id_x);
  const LinearMap apply_f = tensor_all({id_s, linearize(f), id_x});
  const LinearMap act = tensor(id_s, group_multiplication_map(x));
  LinearMap u = compose(act, compose(apply_f, split));
  if (max_abs_diff(compose(adjoint(u), u), LinearMap::identity(ns * nx)) > kProbabilityFloor) {
    throw NumericalError("oracle is not unitary");
  }
  return u;
}

LinearMap apply_oracle(const FunctionTable& f, const FiniteGroup& x, const LinearMap& state) {
  require_into_group(f, x);
  const std::size_t ns = f.dom().size;
  const std::size_t nx = x.order();
  if (!state.is_state() || state.cod() != ns * nx) {
    throw DimensionMismatch("oracle acts on dimension " + std::to_string(ns * nx) +
                            ", state is " + std::to_string(state.cod()) + "x" +
                            std::to_string(state.dom()));
  }
  LinearMap out(ns * nx, 1);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t b = 0; b < nx; ++b) {
      out(s * nx + x.mul(f(s), b), 0) = state(s * nx + b, 0);
    }
  }
  return out;
}

bool is_constant(const FunctionTable& f) {
  for (std::size_t s = 1; s < f.dom().size; ++s) {
    if (f(s) != f(0)) return false;
  }
  return true;
}

bool is_balanced(const FunctionTable& f, double tol) {
  const FunctionTable two = into_two(f);
  const std::size_t n = two.dom().size;
  std::size_t ones = 0;
  for (std::size_t s = 0; s < n; ++s) ones += two(s);
  const bool set_level = n % 2 == 0 && 2 * ones == n;

  const LinearMap sigma = LinearMap::from_rows({{1.0, -1.0}});
  const LinearMap value = compose(sigma, compose(linearize(two), unit(two.dom())));
  const bool numeric = value.max_abs() <= tol;
  if (set_level != numeric) {
    throw Inconsistent("balance by counting and by sigma . f . u disagree");
  }
  return set_level;
}

LinearMap sign_input_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return LinearMap::from_rows({{r}, {-r}});
}

LinearMap dj_state(const FunctionTable& f, const FiniteGroup& g, const LinearMap& phi) {
  require_into_group(f, g);
  if (!phi.is_state() || phi.cod() != g.order()) {
    throw DimensionMismatch("input state must live on the group algebra");
  }
  return apply_oracle(f, g, tensor(uniform_state(f.dom().size), phi));
}

double uniform_projection_probability(const LinearMap& state, std::size_t s_dim,
                                      std::size_t g_dim) {
  if (!state.is_state() || state.cod() != s_dim * g_dim) {
    throw DimensionMismatch("state does not live on S (x) G");
  }
  const double k = 1.0 / std::sqrt(static_cast<double>(s_dim));
  double p = 0.0;
  for (std::size_t b = 0; b < g_dim; ++b) {
    Complex a{0.0, 0.0};
    for (std::size_t s = 0; s < s_dim; ++s) a += state(s * g_dim + b, 0);
    p += std::norm(k * a);
  }
  return clamp_probability(p);
}

namespace {

DJResult verdict_for(double p, double tol) {
  DJResult r{p, Verdict::Inconclusive};
  if (std::abs(p - 1.0) <= tol) r.verdict = Verdict::Constant;
  if (std::abs(p) <= tol) r.verdict = Verdict::Balanced;
  return r;
}

}  // namespace

DJResult deutsch_jozsa(const FunctionTable& f, double tol) {
  const FunctionTable two = into_two(f);
  const FiniteGroup z2 = group_cyclic(2);
  const LinearMap state = dj_state(two, z2, sign_input_state());
  return verdict_for(uniform_projection_probability(state, two.dom().size, 2), tol);
}

bool is_P_constant(const FunctionTable& f, const IrrepSet& irreps, const ProjectorFamily& p,
                   double tol) {
  require_projectors(f, irreps, p, tol);
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (p.is_zero(i, tol)) continue;
    const auto values = projected_values(f, irreps[i], p.projectors[i]);
    for (const auto& v : values) {
      if (!approx_eq(v, values.front(), tol)) return false;
    }
  }
  return true;
}

bool is_P_balanced(const FunctionTable& f, const IrrepSet& irreps, const ProjectorFamily& p,
                   double tol) {
  require_projectors(f, irreps, p, tol);
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (p.is_zero(i, tol)) continue;
    const auto values = projected_values(f, irreps[i], p.projectors[i]);
    LinearMap sum(irreps[i].dim(), irreps[i].dim());
    for (const auto& v : values) sum += v;
    if (sum.max_abs() > tol) return false;
  }
  return true;
}

DJResult generalized_deutsch_jozsa(const FunctionTable& f, const IrrepSet& irreps,
                                   const ProjectorFamily& p,
                                   const std::optional<std::vector<Complex>>& weights,
                                   double tol) {
  require_projectors(f, irreps, p, tol);
  const LinearMap phi = make_phi(irreps, p, weights, tol).state();
  const LinearMap state = dj_state(f, irreps.group, phi);
  return verdict_for(
      uniform_projection_probability(state, f.dom().size, irreps.group.order()), tol);
}

LinearMap diffusion_operator(std::size_t n) {
  const FiniteSet s(n);
  const LinearMap u = unit(s);
  return LinearMap::identity(n) -
         Complex{2.0 / static_cast<double>(n), 0.0} * compose(u, adjoint(u));
}

LinearMap grover_state(const FunctionTable& f, const FiniteGroup& g, const LinearMap& phi) {
  LinearMap state = dj_state(f, g, phi);
  const std::size_t ns = f.dom().size;
  const std::size_t ng = g.order();
  // id - (2/|S|) J on S, column by column of G.
  for (std::size_t b = 0; b < ng; ++b) {
    Complex mean{0.0, 0.0};
    for (std::size_t s = 0; s < ns; ++s) mean += state(s * ng + b, 0);
    mean /= static_cast<double>(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      state(s * ng + b, 0) -= 2.0 * mean;
    }
  }
  return state;
}

Distribution s_marginal_distribution(const LinearMap& state, std::size_t s_dim,
                                     std::size_t g_dim, double tol) {
  if (!state.is_state() || state.cod() != s_dim * g_dim) {
    throw DimensionMismatch("state does not live on S (x) G");
  }
  std::vector<double> raw(s_dim, 0.0);
  double total = 0.0;
  for (std::size_t s = 0; s < s_dim; ++s) {
    for (std::size_t b = 0; b < g_dim; ++b) raw[s] += std::norm(state(s * g_dim + b, 0));
    total += raw[s];
  }
  if (std::sqrt(total) < tol) throw ZeroState("S marginal vanished");
  if (std::abs(total - 1.0) > kTotalTol) {
    throw NumericalError("S marginal has total probability " + std::to_string(total));
  }
  Distribution d;
  for (std::size_t s = 0; s < s_dim; ++s) d.outcomes.push_back({s, clamp_probability(raw[s])});
  return d;
}

double s_marginal_purity(const LinearMap& state, std::size_t s_dim, std::size_t g_dim) {
  if (!state.is_state() || state.cod() != s_dim * g_dim) {
    throw DimensionMismatch("state does not live on S (x) G");
  }
  double purity = 0.0;
  for (std::size_t s = 0; s < s_dim; ++s) {
    for (std::size_t t = 0; t < s_dim; ++t) {
      Complex rho{0.0, 0.0};
      for (std::size_t b = 0; b < g_dim; ++b) {
        rho += state(s * g_dim + b, 0) * std::conj(state(t * g_dim + b, 0));
      }
      purity += std::norm(rho);
    }
  }
  return purity;
}

Distribution grover_single_shot(const FunctionTable& f, double tol) {
  const FunctionTable two = into_two(f);
  const LinearMap state = grover_state(two, group_cyclic(2), sign_input_state());
  return s_marginal_distribution(state, two.dom().size, 2, tol);
}

std::vector<std::size_t> balanced_elements(const FunctionTable& f, const IrrepSet& irreps,
                                           const ProjectorFamily& p, double tol) {
  require_projectors(f, irreps, p, tol);
  const std::size_t ns = f.dom().size;
  std::vector<bool> balanced(ns, true);
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (p.is_zero(i, tol)) continue;
    const auto values = projected_values(f, irreps[i], p.projectors[i]);
    LinearMap twice_mean(irreps[i].dim(), irreps[i].dim());
    for (const auto& v : values) twice_mean += v;
    twice_mean *= Complex{2.0 / static_cast<double>(ns), 0.0};
    for (std::size_t s = 0; s < ns; ++s) {
      if (!approx_eq(values[s], twice_mean, tol)) balanced[s] = false;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < ns; ++s) {
    if (balanced[s]) out.push_back(s);
  }
  return out;
}

Distribution generalized_grover(const FunctionTable& f, const IrrepSet& irreps,
                                const ProjectorFamily& p,
                                const std::optional<std::vector<Complex>>& weights, double tol) {
  require_projectors(f, irreps, p, tol);
  const LinearMap phi = make_phi(irreps, p, weights, tol).state();
  const LinearMap state = grover_state(f, irreps.group, phi);
  return s_marginal_distribution(state, f.dom().size, irreps.group.order(), tol);
}

LinearMap hsp_state(const HSPInstance& inst) {
  validate_hsp_instance(inst);
  const std::size_t ng = inst.group.order();
  const std::size_t ns = inst.oracle.cod().size;
  const LinearMap input = tensor(uniform_state(ng), LinearMap::basis_state(ns, 0));
  return apply_oracle(inst.oracle, group_cyclic(ns), input);
}

Distribution hsp_distribution(const HSPInstance& inst, const IrrepSet& irreps) {
  const std::size_t ng = inst.group.order();
  if (irreps.group.order() != ng) {
    throw DimensionMismatch("irreps belong to a group of order " +
                            std::to_string(irreps.group.order()));
  }
  std::size_t dim_sq = 0;
  for (std::size_t d : irreps.dims()) dim_sq += d * d;
  if (dim_sq != ng) {
    throw IncompleteIrreps("sum of squared dimensions is " + std::to_string(dim_sq) +
                           ", group order is " + std::to_string(ng));
  }
  const LinearMap psi = hsp_state(inst);
  const std::size_t ns = inst.oracle.cod().size;

  Distribution d;
  double total = 0.0;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const LinearMap v = measurement_isometry(irreps[i]);
    double p = 0.0;
    for (std::size_t k = 0; k < v.cod(); ++k) {
      for (std::size_t x = 0; x < ns; ++x) {
        Complex a{0.0, 0.0};
        for (std::size_t g = 0; g < ng; ++g) a += v(k, g) * psi(g * ns + x, 0);
        p += std::norm(a);
      }
    }
    p = clamp_probability(p);
    total += p;
    d.outcomes.push_back({i, p});
  }
  if (std::abs(total - 1.0) > kTotalTol) {
    throw NumericalError("irrep branches sum to " + std::to_string(total));
  }
  return d;
}

Subgroup hsp_reconstruct(const FiniteGroup& g, const IrrepSet& irreps,
                         const std::vector<std::size_t>& observed, double tol) {
  if (observed.empty()) throw ValidationError("no observed irreps to reconstruct from");
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool in_all = true;
    for (std::size_t i : observed) {
      if (i >= irreps.size()) throw ValidationError("irrep index " + std::to_string(i));
      const auto& rho = irreps[i];
      if (max_abs_diff(rho(x), LinearMap::identity(rho.dim())) > tol) {
        in_all = false;
        break;
      }
    }
    if (in_all) members.push_back(x);
  }
  return Subgroup(g, members);
}

std::vector<std::size_t> sample(const Distribution& d, std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw ValidationError("trials must be at least 1");
  if (d.outcomes.empty()) throw ValidationError("cannot sample an empty distribution");
  std::vector<double> weights;
  for (const auto& o : d.outcomes) weights.push_back(clamp_probability(o.p));
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::vector<std::size_t> counts(weights.size(), 0);
  for (std::size_t t = 0; t < trials; ++t) ++counts[pick(rng)];
  return counts;
}

}  // namespace topoq
