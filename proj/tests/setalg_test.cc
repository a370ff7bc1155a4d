#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "topoq/error.hpp"
#include "topoq/group.hpp"
#include "topoq/setalg.hpp"

using namespace topoq;
using namespace topoq::testing;

TEST(setalg, multiply_examples) {
  EXPECT_TRUE(approx_eq(multiply(FiniteSet(1)), LinearMap::identity(1)));
  const FiniteSet two(2);
  const auto m = multiply(two);
  EXPECT_TRUE(approx_eq(compose(m, LinearMap::basis_state(4, 0)), LinearMap::basis_state(2, 0)));
  EXPECT_EQ(compose(m, LinearMap::basis_state(4, 1)).max_abs(), 0.0);
  const FiniteSet three(3);
  EXPECT_TRUE(approx_eq(compose(multiply(three), tensor(unit(three), LinearMap::identity(3))),
                        LinearMap::identity(3)));
}

TEST(setalg, unit_examples) {
  EXPECT_TRUE(approx_eq(unit(FiniteSet(1)), LinearMap::scalar(1.0)));
  EXPECT_TRUE(approx_eq(unit(FiniteSet(4)), LinearMap::from_rows({{1.0}, {1.0}, {1.0}, {1.0}})));
  const FiniteSet six(6);
  EXPECT_TRUE(approx_eq(compose(adjoint(unit(six)), unit(six)), LinearMap::scalar(6.0)));
}

TEST(setalg, copy_and_delete) {
  const FiniteSet five(5);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto ket = LinearMap::basis_state(5, i);
    EXPECT_TRUE(approx_eq(compose(copy(five), ket), tensor(ket, ket)));
    EXPECT_TRUE(approx_eq(compose(del(five), ket), LinearMap::scalar(1.0)));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const FiniteSet s(n);
    EXPECT_TRUE(approx_eq(compose(multiply(s), copy(s)), LinearMap::identity(n), 1e-12));
  }
}

TEST(setalg, classical_structure_axioms_hold_for_sizes_1_to_6) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const FiniteSet s(n);
    const Report r = verify_classical_structure(multiply(s), unit(s), 1e-12);
    EXPECT_TRUE(r.all_pass()) << "size " << n;
    EXPECT_EQ(r.checks.size(), 8u);
  }
}

TEST(setalg, group_algebra_is_frobenius_but_not_special) {
  const auto z2 = group_cyclic(2);
  const Report r =
      verify_classical_structure(group_multiplication_map(z2), LinearMap::basis_state(2, 0));
  EXPECT_TRUE(r.at("frobenius_left").pass);
  EXPECT_TRUE(r.at("frobenius_right").pass);
  EXPECT_TRUE(r.at("associativity").pass);
  EXPECT_FALSE(r.at("specialness").pass);
}

TEST(setalg, zero_algebra_fails_unit_law) {
  const Report r = verify_classical_structure(LinearMap(2, 4), LinearMap(2, 1));
  EXPECT_FALSE(r.at("left_unit").pass);
  EXPECT_FALSE(r.all_pass());
  EXPECT_THROW(verify_classical_structure(LinearMap(2, 3), LinearMap(2, 1)), DimensionMismatch);
}

TEST(setalg, spider_catalog_instances) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const FiniteSet s(n);
    const auto cat = spider_catalog(s);
    EXPECT_EQ(cat.size(), 10u);
    const Report r = verify_spider_instances(s, 1e-12);
    EXPECT_TRUE(r.all_pass()) << "size " << n;
    EXPECT_EQ(r.checks.size(), 6u + 3u + 3u);
  }
}

TEST(setalg, function_table_validates) {
  EXPECT_THROW(FunctionTable(FiniteSet(2), FiniteSet(2), {0}), ValidationError);
  EXPECT_THROW(FunctionTable(FiniteSet(2), FiniteSet(2), {0, 2}), ValidationError);
  EXPECT_THROW(FiniteSet(0), ValidationError);
  EXPECT_EQ(FunctionTable::from_image({0, 3, 1}).cod().size, 4u);
}

TEST(setalg, linearize_examples) {
  EXPECT_TRUE(approx_eq(linearize(FunctionTable::from_image({0, 1, 2})), LinearMap::identity(3)));
  const auto c = linearize(FunctionTable(FiniteSet(4), FiniteSet(2), {1, 1, 1, 1}));
  for (std::size_t s = 0; s < 4; ++s) {
    EXPECT_EQ(c(1, s), Complex(1.0));
    EXPECT_EQ(c(0, s), Complex(0.0));
  }
}

TEST(setalg, linearize_is_functorial_and_comonoidal) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteSet a(1 + rng() % 4), b(1 + rng() % 4), c(1 + rng() % 4);
    const FunctionTable f(a, b, random_image(a.size, b.size, rng));
    const FunctionTable g(b, c, random_image(b.size, c.size, rng));
    EXPECT_TRUE(approx_eq(linearize(g.after(f)), compose(linearize(g), linearize(f))));
    EXPECT_TRUE(is_comonoid_homomorphism(linearize(f), a, b));
  }
  EXPECT_THROW(FunctionTable::from_image({0, 1}).after(FunctionTable::from_image({0, 1, 2})),
               DimensionMismatch);
}

TEST(setalg, comonoid_homomorphism_rejects_non_functions) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto h = LinearMap::from_rows({{r, r}, {r, -r}});
  EXPECT_FALSE(is_comonoid_homomorphism(h, FiniteSet(2), FiniteSet(2)));
  EXPECT_TRUE(is_comonoid_homomorphism(LinearMap::identity(3), FiniteSet(3), FiniteSet(3)));
  EXPECT_THROW(is_comonoid_homomorphism(h, FiniteSet(3), FiniteSet(2)), DimensionMismatch);

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_map(3, 3, rng);
    EXPECT_FALSE(is_comonoid_homomorphism(m, FiniteSet(3), FiniteSet(3)));
  }
}

TEST(setalg, injectivity_agrees_with_collision_scan) {
  EXPECT_TRUE(is_injective_as_isometry(FunctionTable::from_image({0, 1, 2})));
  EXPECT_FALSE(is_injective_as_isometry(FunctionTable(FiniteSet(2), FiniteSet(1), {0, 0})));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5, k = 1 + rng() % 5;
    const auto image = random_image(n, k, rng);
    const bool collision_free = std::set<std::size_t>(image.begin(), image.end()).size() == n;
    EXPECT_EQ(is_injective_as_isometry(FunctionTable(FiniteSet(n), FiniteSet(k), image)),
              collision_free);
  }
}

TEST(setalg, even_surjectivity) {
  const FunctionTable mod2(FiniteSet(4), FiniteSet(2), {0, 1, 0, 1});
  ASSERT_EQ(even_surjectivity_multiplicity(mod2), 2u);
  EXPECT_TRUE(approx_eq(compose(linearize(mod2), unit(FiniteSet(4))),
                        Complex{2.0, 0.0} * unit(FiniteSet(2))));
  EXPECT_EQ(even_surjectivity_multiplicity(FunctionTable::from_image({2, 0, 1})), 1u);

  const FunctionTable ragged(FiniteSet(3), FiniteSet(2), {0, 0, 1});
  EXPECT_FALSE(even_surjectivity_multiplicity(ragged).has_value());
  const auto pushed = compose(linearize(ragged), unit(FiniteSet(3)));
  for (Complex n : {Complex{1.0}, Complex{2.0}}) {
    EXPECT_FALSE(approx_eq(pushed, n * unit(FiniteSet(2))));
  }
}
