#include "topoq/repr.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "topoq/error.hpp"

namespace topoq {

namespace {

using Mat = Eigen::MatrixXcd;

// Splitting thresholds. The irreducibility test compares sum |chi|^2 / |G|
// with 1; eigenvalue clusters break at a relative gap of 1e-6.
constexpr double kIrreducibleTol = 1e-8;
constexpr double kClusterGap = 1e-6;
constexpr int kSplitAttempts = 8;
constexpr double kSortGrid = 1e6;

Mat to_eigen(const LinearMap& m) {
  Mat out(static_cast<Eigen::Index>(m.cod()), static_cast<Eigen::Index>(m.dom()));
  for (std::size_t r = 0; r < m.cod(); ++r) {
    for (std::size_t c = 0; c < m.dom(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    }
  }
  return out;
}

LinearMap from_eigen(const Mat& m) {
  LinearMap out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
    }
  }
  return out;
}

double character_norm(const std::vector<Mat>& block) {
  double sum = 0.0;
  for (const auto& m : block) sum += std::norm(m.trace());
  return sum / static_cast<double>(block.size());
}

std::vector<Complex> character_of(const std::vector<Mat>& block) {
  std::vector<Complex> chi;
  chi.reserve(block.size());
  for (const auto& m : block) chi.push_back(m.trace());
  return chi;
}

bool same_character(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-6) return false;
  }
  return true;
}

// Random Hermitian matrix averaged over the group action; it commutes with
// every matrix of the block, so its eigenspaces are invariant subspaces.
Mat random_commutant(const std::vector<Mat>& block, std::mt19937_64& rng) {
  const auto d = block.front().rows();
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat a(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) a(r, c) = Complex{normal(rng), normal(rng)};
  }
  const Mat h = (a + a.adjoint()) * 0.5;
  Mat avg = Mat::Zero(d, d);
  for (const auto& m : block) avg += m * h * m.adjoint();
  avg /= static_cast<double>(block.size());
  return (avg + avg.adjoint()) * 0.5;
}

// Returns the restrictions to each eigenvalue cluster, or empty if the
// commutant element was scalar.
std::vector<std::vector<Mat>> split_once(const std::vector<Mat>& block, std::mt19937_64& rng) {
  const Mat h = random_commutant(block, rng);
  Eigen::SelfAdjointEigenSolver<Mat> eig(h);
  const auto& values = eig.eigenvalues();
  const auto& vectors = eig.eigenvectors();
  const auto d = values.size();
  const double scale = std::max({values.cwiseAbs().maxCoeff(), 1e-300});

  std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;  // [begin, end)
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= d; ++i) {
    if (i == d || values(i) - values(i - 1) > kClusterGap * scale) {
      clusters.emplace_back(begin, i);
      begin = i;
    }
  }
  if (clusters.size() < 2) return {};

  std::vector<std::vector<Mat>> parts;
  for (const auto& [b, e] : clusters) {
    const Mat basis = vectors.middleCols(b, e - b);
    std::vector<Mat> part;
    part.reserve(block.size());
    for (const auto& m : block) part.push_back(basis.adjoint() * m * basis);
    parts.push_back(std::move(part));
  }
  return parts;
}

// Canonical order; see IrrepSet.
bool canonical_less(const Representation& a, const Representation& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const auto ca = a.character();
  const auto cb = b.character();
  for (std::size_t g = 0; g < ca.size(); ++g) {
    const auto ra = std::llround(ca[g].real() * kSortGrid);
    const auto rb = std::llround(cb[g].real() * kSortGrid);
    if (ra != rb) return ra > rb;
    const auto ia = std::llround(ca[g].imag() * kSortGrid);
    const auto ib = std::llround(cb[g].imag() * kSortGrid);
    if (ia != ib) return ia > ib;
  }
  return false;
}

LinearMap rho_dagger_of_name(const Representation& rho, const LinearMap& m) {
  return compose(adjoint(rep_as_linear_map(rho)), name(m));
}

}  // namespace

Representation::Representation(FiniteGroup group, std::vector<LinearMap> matrices)
    : group_(std::move(group)), dim_(0), matrices_(std::move(matrices)) {
  if (matrices_.size() != group_.order()) {
    throw DimensionMismatch("representation needs one matrix per group element");
  }
  dim_ = matrices_.front().dom();
  for (const auto& m : matrices_) {
    if (m.dom() != dim_ || m.cod() != dim_) {
      throw DimensionMismatch("representation matrices must all be " + std::to_string(dim_) +
                              "x" + std::to_string(dim_));
    }
  }
}

std::vector<Complex> Representation::character() const {
  std::vector<Complex> chi;
  chi.reserve(matrices_.size());
  for (const auto& m : matrices_) chi.push_back(trace(m));
  return chi;
}

double representation_residual(const Representation& rho) {
  const auto& g = rho.group();
  const auto id = LinearMap::identity(rho.dim());
  double worst = max_abs_diff(rho(0), id);
  for (std::size_t a = 0; a < g.order(); ++a) {
    worst = std::max(worst, max_abs_diff(compose(adjoint(rho(a)), rho(a)), id));
    for (std::size_t b = 0; b < g.order(); ++b) {
      worst = std::max(worst, max_abs_diff(rho(g.mul(a, b)), compose(rho(a), rho(b))));
    }
  }
  return worst;
}

Complex character_inner(const Representation& a, const Representation& b) {
  const auto ca = a.character();
  const auto cb = b.character();
  Complex sum{0.0, 0.0};
  for (std::size_t g = 0; g < ca.size(); ++g) sum += std::conj(ca[g]) * cb[g];
  return sum / static_cast<double>(ca.size());
}

bool is_irreducible(const Representation& rho, double tol) {
  return std::abs(character_inner(rho, rho) - Complex{1.0, 0.0}) <= tol;
}

std::vector<std::size_t> IrrepSet::dims() const {
  std::vector<std::size_t> out;
  for (const auto& r : irreps) out.push_back(r.dim());
  return out;
}

Representation regular_representation(const FiniteGroup& g) {
  std::vector<LinearMap> mats;
  mats.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    LinearMap m(g.order(), g.order());
    for (std::size_t y = 0; y < g.order(); ++y) m(g.mul(x, y), y) = 1.0;
    mats.push_back(std::move(m));
  }
  return Representation(g, std::move(mats));
}

IrrepSet compute_irreps(const FiniteGroup& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Mat>> pending;
  {
    const Representation regular = regular_representation(g);
    std::vector<Mat> reg;
    for (const auto& m : regular.matrices()) reg.push_back(to_eigen(m));
    pending.push_back(std::move(reg));
  }

  std::vector<std::vector<Mat>> found;
  std::vector<std::vector<Complex>> found_chars;
  while (!pending.empty()) {
    auto block = std::move(pending.back());
    pending.pop_back();

    if (std::abs(character_norm(block) - 1.0) <= kIrreducibleTol) {
      auto chi = character_of(block);
      const bool known = std::any_of(found_chars.begin(), found_chars.end(),
                                     [&](const auto& c) { return same_character(c, chi); });
      if (!known) {
        found_chars.push_back(std::move(chi));
        found.push_back(std::move(block));
      }
      continue;
    }

    std::vector<std::vector<Mat>> parts;
    for (int attempt = 0; attempt < kSplitAttempts && parts.empty(); ++attempt) {
      parts = split_once(block, rng);
    }
    if (parts.empty()) {
      throw DecompositionFailed("seed " + std::to_string(seed) + ": a block of dimension " +
                                std::to_string(block.front().rows()) + " did not split");
    }
    for (auto& p : parts) pending.push_back(std::move(p));
  }

  std::vector<Representation> irreps;
  std::size_t dim_squares = 0;
  for (const auto& block : found) {
    std::vector<LinearMap> mats;
    for (const auto& m : block) mats.push_back(from_eigen(m));
    irreps.emplace_back(g, std::move(mats));
    dim_squares += irreps.back().dim() * irreps.back().dim();
  }
  if (dim_squares != g.order()) {
    throw DecompositionFailed("seed " + std::to_string(seed) + ": sum of dim^2 is " +
                              std::to_string(dim_squares) + ", expected " +
                              std::to_string(g.order()));
  }
  std::sort(irreps.begin(), irreps.end(), canonical_less);
  return IrrepSet{g, std::move(irreps), seed};
}

LinearMap rep_as_linear_map(const Representation& rho) {
  const std::size_t n = rho.dim();
  LinearMap out(n * n, rho.group().order());
  for (std::size_t g = 0; g < rho.group().order(); ++g) {
    const auto entries = rho(g).entries();
    for (std::size_t k = 0; k < n * n; ++k) out(k, g) = entries[k];
  }
  return out;
}

LinearMap measurement_isometry(const Representation& rho) {
  const double scale =
      std::sqrt(static_cast<double>(rho.dim()) / static_cast<double>(rho.group().order()));
  return scale * rep_as_linear_map(rho);
}

double repnorm_residual(const Representation& rho) {
  const auto r = rep_as_linear_map(rho);
  const double factor =
      static_cast<double>(rho.group().order()) / static_cast<double>(rho.dim());
  return max_abs_diff(compose(r, adjoint(r)), factor * LinearMap::identity(rho.dim() * rho.dim()));
}

bool verify_repnorm(const Representation& rho, double tol) { return repnorm_residual(rho) <= tol; }

double mdecomp_residual(const FiniteGroup& g, const std::vector<Representation>& irreps) {
  std::size_t dim_squares = 0;
  for (const auto& r : irreps) dim_squares += r.dim() * r.dim();
  if (dim_squares != g.order()) {
    throw IncompleteIrreps("sum of dim^2 is " + std::to_string(dim_squares) + ", |G| is " +
                           std::to_string(g.order()));
  }
  const std::size_t n = g.order();
  LinearMap rhs(n, n * n);
  for (const auto& rho : irreps) {
    const auto r = rep_as_linear_map(rho);
    const auto term = compose(adjoint(r), compose(comp(rho.dim()), tensor(r, r)));
    rhs += (static_cast<double>(rho.dim()) / static_cast<double>(n)) * term;
  }
  return max_abs_diff(group_multiplication_map(g), rhs);
}

bool verify_mdecomp(const FiniteGroup& g, const std::vector<Representation>& irreps, double tol) {
  return mdecomp_residual(g, irreps) <= tol;
}

double copy_on_leg_residual(const FiniteGroup& g, const LinearMap& rho_map, std::size_t n) {
  const std::size_t n2 = n * n;
  if (rho_map.dom() != g.order() || rho_map.cod() != n2) {
    throw DimensionMismatch("copy_on_leg: map must be |G| -> n^2");
  }
  const auto m = group_multiplication_map(g);
  const auto sd = adjoint(rho_map);
  const auto id_g = LinearMap::identity(g.order());
  const auto id_mat = LinearMap::identity(n2);
  const auto c = comp(n);

  const auto right_lhs = compose(m, tensor(id_g, sd));
  const auto right_rhs = compose(sd, compose(c, tensor(rho_map, id_mat)));
  const auto left_lhs = compose(m, tensor(sd, id_g));
  const auto left_rhs = compose(sd, compose(c, tensor(id_mat, rho_map)));
  return std::max(max_abs_diff(right_lhs, right_rhs), max_abs_diff(left_lhs, left_rhs));
}

bool verify_copy_on_leg(const Representation& sigma, double tol) {
  return copy_on_leg_residual(sigma.group(), rep_as_linear_map(sigma), sigma.dim()) <= tol;
}

Classification classify_irrep_vs_normal_subgroup(const Representation& rho, const Subgroup& h,
                                                 double tol) {
  const auto& g = rho.group();
  const auto qd = quotient(g, h);
  const std::size_t n = rho.dim();

  LinearMap sum(n, n);
  for (auto x : h.members()) sum += rho(x);
  const double to_full =
      max_abs_diff(sum, static_cast<double>(h.size()) * LinearMap::identity(n));
  const double to_zero = sum.max_abs();

  if (to_full <= tol) {
    std::vector<LinearMap> tau_mats;
    for (const auto& coset : qd.cosets) tau_mats.push_back(rho(coset.front()));
    Representation tau(qd.quotient, std::move(tau_mats));
    double factor_residual = 0.0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      factor_residual = std::max(factor_residual, max_abs_diff(rho(x), tau(qd.projection(x))));
    }
    return {Classification::Arm::FactorsThrough, std::move(tau), std::max(to_full, factor_residual)};
  }
  if (to_zero <= tol) {
    const std::size_t q = qd.quotient.order();
    LinearMap total(n * q, n);
    for (std::size_t x = 0; x < g.order(); ++x) {
      total += tensor(rho(x), LinearMap::basis_state(q, qd.projection(x)));
    }
    return {Classification::Arm::Annihilated, std::nullopt, std::max(to_zero, total.max_abs())};
  }
  throw Inconsistent("sum over H is neither |H| id (residual " + std::to_string(to_full) +
                     ") nor 0 (residual " + std::to_string(to_zero) + ")");
}

ProjectorFamily ProjectorFamily::zeros(const IrrepSet& irreps) {
  ProjectorFamily p;
  for (const auto& r : irreps.irreps) p.projectors.emplace_back(r.dim(), r.dim());
  return p;
}

ProjectorFamily ProjectorFamily::identities(const IrrepSet& irreps) {
  ProjectorFamily p;
  for (const auto& r : irreps.irreps) p.projectors.push_back(LinearMap::identity(r.dim()));
  return p;
}

ProjectorFamily ProjectorFamily::only(const IrrepSet& irreps, std::size_t index) {
  return only(irreps, index, LinearMap::identity(irreps[index].dim()));
}

ProjectorFamily ProjectorFamily::only(const IrrepSet& irreps, std::size_t index, LinearMap p) {
  auto family = zeros(irreps);
  family.projectors.at(index) = std::move(p);
  return family;
}

void ProjectorFamily::validate(const IrrepSet& irreps, double tol) const {
  if (projectors.size() != irreps.size()) {
    throw NonProjector("expected " + std::to_string(irreps.size()) + " projectors, got " +
                       std::to_string(projectors.size()));
  }
  bool any_nonzero = false;
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    const auto& p = projectors[i];
    const std::size_t n = irreps[i].dim();
    if (p.dom() != n || p.cod() != n) {
      throw NonProjector("projector " + std::to_string(i) + " must be " + std::to_string(n) + "x" +
                         std::to_string(n));
    }
    if (!approx_eq(adjoint(p), p, tol)) {
      throw NonProjector("projector " + std::to_string(i) + " is not Hermitian");
    }
    if (!approx_eq(compose(p, p), p, tol)) {
      throw NonProjector("projector " + std::to_string(i) + " is not idempotent");
    }
    any_nonzero = any_nonzero || p.max_abs() > tol;
  }
  if (!any_nonzero) throw AllProjectorsZero("every projector in the family is zero");
}

bool ProjectorFamily::is_zero(std::size_t index, double tol) const {
  return projectors.at(index).max_abs() <= tol;
}

GroupAlgebraState make_phi(const IrrepSet& irreps, const ProjectorFamily& p,
                           const std::optional<std::vector<Complex>>& weights, double tol) {
  p.validate(irreps, tol);
  if (weights && weights->size() != irreps.size()) {
    throw ValidationError("expected " + std::to_string(irreps.size()) + " weights");
  }
  LinearMap phi(irreps.group.order(), 1);
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (p.is_zero(i, tol)) continue;
    const Complex c = weights ? (*weights)[i] : Complex{1.0, 0.0};
    if (std::abs(c) == 0.0) {
      throw ValidationError("weight for irrep " + std::to_string(i) +
                            " must be nonzero since its projector is nonzero");
    }
    phi += c * rho_dagger_of_name(irreps[i], p.projectors[i]);
  }
  const double norm = phi.norm();
  if (norm <= tol) throw NumericalError("phi vanished before normalization");
  phi *= Complex{1.0 / norm, 0.0};
  return {{phi.entries().begin(), phi.entries().end()}};
}

}  // namespace topoq
