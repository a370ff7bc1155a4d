#pragma once

// Test helpers and independent reference computations. Nothing here calls the
// library routine it is used to check.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "topoq/group.hpp"
#include "topoq/linalg.hpp"

namespace topoq::testing {

using Dense = std::vector<std::vector<Complex>>;

inline LinearMap random_map(std::size_t cod, std::size_t dom, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> e(cod * dom);
  for (auto& z : e) z = {normal(rng), normal(rng)};
  return LinearMap(cod, dom, std::move(e));
}

inline Dense to_dense(const LinearMap& m) {
  Dense d(m.cod(), std::vector<Complex>(m.dom()));
  for (std::size_t r = 0; r < m.cod(); ++r) {
    for (std::size_t c = 0; c < m.dom(); ++c) d[r][c] = m(r, c);
  }
  return d;
}

inline double max_diff(const Dense& a, const LinearMap& b) {
  if (a.size() != b.cod() || a.front().size() != b.dom()) return INFINITY;
  double worst = 0.0;
  for (std::size_t r = 0; r < b.cod(); ++r) {
    for (std::size_t c = 0; c < b.dom(); ++c) worst = std::max(worst, std::abs(a[r][c] - b(r, c)));
  }
  return worst;
}

inline Dense naive_product(const Dense& a, const Dense& b) {
  Dense out(a.size(), std::vector<Complex>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.front().size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline Dense naive_kron(const Dense& a, const Dense& b) {
  const std::size_t ar = a.size(), ac = a.front().size();
  const std::size_t br = b.size(), bc = b.front().size();
  Dense out(ar * br, std::vector<Complex>(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
  return out;
}

/// Brute-force state vector after |s>|b> -> |s>|f(s) b> on the input
/// (uniform on S) (x) phi, using the group table directly.
inline std::vector<Complex> brute_oracle_state(const std::vector<std::size_t>& image,
                                               const FiniteGroup& g,
                                               const std::vector<Complex>& phi) {
  const std::size_t ns = image.size(), ng = g.order();
  std::vector<Complex> psi(ns * ng);
  const double k = 1.0 / std::sqrt(static_cast<double>(ns));
  const CayleyTable t = g.table();
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t b = 0; b < ng; ++b) psi[s * ng + t[image[s]][b]] += k * phi[b];
  return psi;
}

/// |<uniform_S| (x) id) psi|^2 by explicit summation.
inline double brute_uniform_probability(const std::vector<Complex>& psi, std::size_t ns,
                                        std::size_t ng) {
  double p = 0.0;
  for (std::size_t b = 0; b < ng; ++b) {
    Complex a = 0.0;
    for (std::size_t s = 0; s < ns; ++s) a += psi[s * ng + b];
    p += std::norm(a) / static_cast<double>(ns);
  }
  return p;
}

/// id - (2/|S|) J on S, applied by explicit loops.
inline std::vector<Complex> brute_diffuse(std::vector<Complex> psi, std::size_t ns, std::size_t ng) {
  for (std::size_t b = 0; b < ng; ++b) {
    Complex mean = 0.0;
    for (std::size_t s = 0; s < ns; ++s) mean += psi[s * ng + b];
    mean /= static_cast<double>(ns);
    for (std::size_t s = 0; s < ns; ++s) psi[s * ng + b] -= 2.0 * mean;
  }
  return psi;
}

inline std::vector<double> brute_s_marginal(const std::vector<Complex>& psi, std::size_t ns,
                                            std::size_t ng) {
  std::vector<double> p(ns, 0.0);
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t b = 0; b < ng; ++b) p[s] += std::norm(psi[s * ng + b]);
  return p;
}

/// Every function from {0..n-1} into {0..k-1}, as image tables.
inline std::vector<std::vector<std::size_t>> all_functions(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == k) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline std::vector<std::size_t> random_image(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::vector<std::size_t> f(n);
  for (auto& v : f) v = pick(rng);
  return f;
}

}  // namespace topoq::testing
