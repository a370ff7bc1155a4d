#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "support.hpp"
#include "topoq/algorithms.hpp"
#include "topoq/error.hpp"
#include "topoq/protocols.hpp"

using namespace topoq;
using namespace topoq::testing;

namespace {

std::vector<FiniteGroup> catalog() {
  const auto z2 = group_cyclic(2);
  return {z2,
          group_cyclic(3),
          group_cyclic(4),
          group_cyclic(5),
          group_cyclic(6),
          group_product(z2, z2),
          group_symmetric(3),
          group_dihedral(4),
          group_quaternion()};
}

FunctionTable into(const FiniteGroup& g, std::vector<std::size_t> image) {
  const std::size_t n = image.size();
  return FunctionTable(FiniteSet(n), g.as_set(), std::move(image));
}

// A random projector family: on each irrep either 0, the identity, or a
// random rank-one projector. At least one entry is nonzero.
ProjectorFamily random_projectors(const IrrepSet& irreps, std::mt19937_64& rng) {
  ProjectorFamily p = ProjectorFamily::zeros(irreps);
  const std::size_t forced = rng() % irreps.size();
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const std::size_t d = irreps[i].dim();
    const auto choice = i == forced ? 1 + rng() % 2 : rng() % 3;
    if (choice == 1) p.projectors[i] = LinearMap::identity(d);
    if (choice == 2) {
      auto v = random_map(d, 1, rng);
      v *= 1.0 / v.norm();
      p.projectors[i] = compose(v, adjoint(v));
    }
  }
  return p;
}

std::size_t choose(std::size_t n, std::size_t k) {
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST(property, dj_dichotomy_is_exhaustive) {
  for (std::size_t n : {2u, 4u, 6u}) {
    std::size_t constants = 0, balanced = 0;
    for (const auto& image : all_functions(n, 2)) {
      const FunctionTable f(FiniteSet(n), FiniteSet(2), image);
      const auto r = deutsch_jozsa(f);
      if (is_constant(f)) {
        ++constants;
        EXPECT_NEAR(r.success_probability, 1.0, 1e-9);
      } else if (is_balanced(f)) {
        ++balanced;
        EXPECT_NEAR(r.success_probability, 0.0, 1e-9);
      } else {
        EXPECT_EQ(r.verdict, Verdict::Inconclusive);
        EXPECT_GT(r.success_probability, 1e-9);
        EXPECT_LT(r.success_probability, 1.0 - 1e-9);
      }
    }
    EXPECT_EQ(constants, 2u);
    EXPECT_EQ(balanced, choose(n, n / 2));
  }
}

namespace {

// Instances built to have balanced elements: a quarter marked over Z2, the
// 4:1:1 pattern over Z3, and 4:1:1 over S3 with the rare values b.r and b.r^2
// for a 3-cycle r, which sums to zero in the 2-dim irrep only.
struct Structured {
  FunctionTable f;
  std::size_t irrep_set;
  ProjectorFamily p;
};

Structured structured_instance(const std::vector<IrrepSet>& sets, int kind, std::mt19937_64& rng) {
  const std::size_t ns = kind == 0 ? 4 * (1 + rng() % 2) : 6;
  std::vector<std::size_t> slots(ns);
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::size_t> image(ns);
  if (kind == 0) {
    const std::size_t base = rng() % 2;
    for (std::size_t i = 0; i < ns; ++i) image[slots[i]] = i < ns / 4 ? 1 - base : base;
    return {into(sets[0].group, image), 0, ProjectorFamily::only(sets[0], 1)};
  }
  if (kind == 1) {
    const std::size_t base = rng() % 3;
    for (std::size_t i = 0; i < ns; ++i) image[slots[i]] = i < 4 ? base : (base + i - 3) % 3;
    return {into(sets[1].group, image), 1, ProjectorFamily::only(sets[1], 1 + rng() % 2)};
  }
  const auto& s3 = sets[2].group;
  const auto t = s3.table();
  const std::size_t base = rng() % 6;
  for (std::size_t i = 0; i < ns; ++i) image[slots[i]] = i < 4 ? base : t[base][i - 1];
  ProjectorFamily p = ProjectorFamily::only(sets[2], 2);
  if (rng() % 2) {
    auto v = random_map(2, 1, rng);
    v *= 1.0 / v.norm();
    p.projectors[2] = compose(v, adjoint(v));
  }
  return {into(s3, image), 2, p};
}

}  // namespace

TEST(property, grover_excludes_balanced_elements) {
  std::mt19937_64 rng(2024);
  const std::vector<IrrepSet> sets = {compute_irreps(group_cyclic(2)),
                                      compute_irreps(group_cyclic(3)),
                                      compute_irreps(group_symmetric(3))};
  std::size_t nonvacuous = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::optional<Structured> inst;
    if (trial % 2 == 0) {
      inst = structured_instance(sets, (trial / 2) % 3, rng);
    } else {
      const auto& irreps = sets[trial % 3];
      const std::size_t ns = 2 + rng() % 6;
      inst = Structured{into(irreps.group, random_image(ns, irreps.group.order(), rng)),
                        static_cast<std::size_t>(trial % 3), random_projectors(irreps, rng)};
    }
    const auto& irreps = sets[inst->irrep_set];
    const auto excluded = balanced_elements(inst->f, irreps, inst->p);
    if (trial % 2 == 0) EXPECT_FALSE(excluded.empty()) << "trial " << trial;
    if (!excluded.empty()) ++nonvacuous;
    Distribution d;
    try {
      d = generalized_grover(inst->f, irreps, inst->p);
    } catch (const ZeroState&) {
      // Every element balanced leaves nothing to measure.
      EXPECT_EQ(excluded.size(), inst->f.dom().size) << "trial " << trial;
      continue;
    }
    EXPECT_NEAR(d.total(), 1.0, 1e-9);
    for (const auto& o : d.outcomes) {
      EXPECT_GE(o.p, 0.0);
      EXPECT_LE(o.p, 1.0);
    }
    for (std::size_t s : excluded) EXPECT_LT(d.probability(s), 1e-9) << "trial " << trial;
  }
  EXPECT_GE(nonvacuous, 100u);
}

TEST(property, hsp_probability_follows_dimension_squared) {
  for (const auto& g : catalog()) {
    const auto irreps = compute_irreps(g);
    for (const auto& h : normal_subgroups(g)) {
      const auto q = quotient(g, h);
      const auto inst = infer_hsp_instance(g, FunctionTable::from_image(q.projection.image()));
      ASSERT_EQ(inst.hidden, h);
      const auto d = hsp_distribution(inst, irreps);
      EXPECT_NEAR(d.total(), 1.0, 1e-9);
      for (std::size_t i = 0; i < irreps.size(); ++i) {
        const auto c = classify_irrep_vs_normal_subgroup(irreps[i], h);
        const double dim = static_cast<double>(irreps[i].dim());
        const double expect = c.arm == Classification::Arm::FactorsThrough
                                  ? dim * dim * static_cast<double>(h.size()) / g.order()
                                  : 0.0;
        EXPECT_NEAR(d.probability(i), expect, 1e-9);
      }
      std::vector<std::size_t> support = d.support();
      EXPECT_EQ(hsp_reconstruct(g, irreps, support), h);
    }
  }
}

TEST(property, oracle_is_unitary) {
  std::mt19937_64 rng(8);
  for (const auto& g : catalog()) {
    const std::size_t ns = 1 + rng() % 4;
    const auto u = build_oracle_unitary(into(g, random_image(ns, g.order(), rng)), g);
    EXPECT_LE(max_abs_diff(compose(adjoint(u), u), LinearMap::identity(u.dom())), 1e-12);
  }
}

TEST(property, transcriptions_match_direct_states) {
  std::mt19937_64 rng(99);
  const auto groups = catalog();
  for (int trial = 0; trial < 20; ++trial) {
    const auto& g = groups[rng() % groups.size()];
    const auto irreps = compute_irreps(g);
    const std::size_t ns = 1 + rng() % 5;
    const auto f = into(g, random_image(ns, g.order(), rng));
    const auto phi = make_phi(irreps, random_projectors(irreps, rng)).state();
    EXPECT_LE(max_abs_diff(dj_transcription(f, g, phi).evaluate(), dj_state(f, g, phi)), 1e-9);
    EXPECT_LE(max_abs_diff(grover_transcription(f, g, phi).evaluate(), grover_state(f, g, phi)),
              1e-9);

    const auto normals = normal_subgroups(g);
    const auto& h = normals[rng() % normals.size()];
    const auto inst =
        infer_hsp_instance(g, FunctionTable::from_image(quotient(g, h).projection.image()));
    EXPECT_LE(max_abs_diff(hsp_transcription(inst).evaluate(), hsp_state(inst)), 1e-9);
  }
}

TEST(property, protocol_states_are_normalized) {
  std::mt19937_64 rng(5);
  for (const auto& g : catalog()) {
    const auto irreps = compute_irreps(g);
    const auto phi = make_phi(irreps, random_projectors(irreps, rng));
    EXPECT_NEAR(phi.norm(), 1.0, 1e-9);
    const auto f = into(g, random_image(3, g.order(), rng));
    EXPECT_NEAR(dj_state(f, g, phi.state()).norm(), 1.0, 1e-9);
    EXPECT_NEAR(grover_state(f, g, phi.state()).norm(), 1.0, 1e-9);
    const auto constant = FunctionTable::from_image(std::vector<std::size_t>(g.order(), 0));
    EXPECT_NEAR(hsp_state(infer_hsp_instance(g, constant)).norm(), 1.0, 1e-9);
  }
}
