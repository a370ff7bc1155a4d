#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "topoq/diagram.hpp"
#include "topoq/error.hpp"
#include "topoq/group.hpp"
#include "topoq/setalg.hpp"

using namespace topoq;
using namespace topoq::testing;

namespace {

Environment classical_env(std::size_t n) {
  const FiniteSet s(n);
  Environment env;
  env.bind("m", multiply(s)).bind("u", unit(s)).bind("copy", copy(s)).bind("delete", del(s));
  return env;
}

// A random well-typed tree over generators a (2->2), b (2->3), c (3->2), with
// its value computed alongside by direct composition and tensoring.
struct Built {
  Diagram d;
  LinearMap value;
};

Built random_tree(std::mt19937_64& rng, const Environment& env, int depth) {
  const int pick = depth == 0 ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 6);
  switch (pick) {
    case 0:
      return {Diagram::gen("a"), env.lookup("a")};
    case 1:
      return {Diagram::seq(Diagram::gen("c"), Diagram::gen("b")),
              compose(env.lookup("c"), env.lookup("b"))};
    case 2:
      return {Diagram::scalar({0.5, -1.0}), LinearMap::scalar({0.5, -1.0})};
    case 3: {
      auto l = random_tree(rng, env, depth - 1);
      auto r = random_tree(rng, env, depth - 1);
      return {Diagram::par(l.d, r.d), tensor(l.value, r.value)};
    }
    case 4: {
      // Square maps compose with themselves.
      auto x = random_tree(rng, env, depth - 1);
      if (!x.value.is_square()) return x;
      return {Diagram::seq(x.d, x.d), compose(x.value, x.value)};
    }
    default: {
      auto x = random_tree(rng, env, depth - 1);
      return {Diagram::seq(Diagram::swap(x.value.cod(), 1), x.d),
              compose(swap(x.value.cod(), 1), x.value)};
    }
  }
}

}  // namespace

TEST(diagram, unit_law_composite) {
  const auto d = parse("(seq (gen m) (par (gen u) (id 2)))");
  EXPECT_TRUE(approx_eq(evaluate(d, classical_env(2)), LinearMap::identity(2)));
}

TEST(diagram, empty_diagram_is_scalar_one) {
  EXPECT_TRUE(approx_eq(evaluate(parse("(scalar 1 0)"), {}), LinearMap::identity(1)));
}

TEST(diagram, syntax_errors_carry_position) {
  try {
    parse("(seq (gen m)");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.col(), 13u);
  }
  try {
    parse("(seq\n  (gen m)\n  (id x))");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.col(), 7u);
  }
  EXPECT_THROW(parse("(gen m) (gen u)"), SyntaxError);
  EXPECT_THROW(parse("gen m"), SyntaxError);
  EXPECT_THROW(parse("(id 0)"), SyntaxError);
  EXPECT_THROW(parse("(scalar 1 nan)"), SyntaxError);
  EXPECT_THROW(parse("(gen \xc3\xa9)"), SyntaxError);
  EXPECT_THROW(parse("(tensor (id 2) (id 2))"), UnknownForm);
}

TEST(diagram, evaluation_errors) {
  const auto env = classical_env(2);
  try {
    evaluate(parse("(par (id 2) (seq (gen m) (gen m)))"), env);
    FAIL();
  } catch (const DimensionMismatch& e) {
    EXPECT_NE(e.detail().find("root/right"), std::string::npos) << e.detail();
  }
  EXPECT_THROW(evaluate(parse("(gen nope)"), env), UnboundGenerator);
  EXPECT_THROW(Environment().bind("bad", LinearMap::identity(1) * Complex{INFINITY, 0.0}),
               NumericalError);
}

TEST(diagram, cap_and_cup_bindings) {
  const Environment env;
  EXPECT_TRUE(env.contains("cap_3"));
  EXPECT_FALSE(env.contains("cap_x"));
  EXPECT_TRUE(approx_eq(env.lookup("cap_2"), name(LinearMap::identity(2))));
  // Snake: (cup (x) id) . (id (x) cap) == id.
  const auto snake = parse("(seq (par (gen cup_2) (id 2)) (par (id 2) (gen cap_2)))");
  EXPECT_TRUE(approx_eq(evaluate(snake, env), LinearMap::identity(2)));
}

TEST(diagram, interchange_and_sliding) {
  std::mt19937_64 rng(41);
  Environment env;
  env.bind("s", random_map(2, 2, rng)).bind("t", random_map(3, 2, rng));
  env.bind("u", random_map(2, 3, rng)).bind("v", random_map(2, 2, rng));
  const auto lhs = parse("(par (seq (gen t) (gen s)) (seq (gen v) (gen u)))");
  const auto rhs = parse("(seq (par (gen t) (gen v)) (par (gen s) (gen u)))");
  EXPECT_TRUE(diagrams_equal(lhs, rhs, env));

  // Boxes w and x on separate wires may slide past each other in height.
  env.bind("w", random_map(2, 2, rng)).bind("x", random_map(3, 2, rng));
  const auto w_first = parse("(seq (par (id 2) (gen x)) (par (gen w) (id 2)))");
  const auto x_first = parse("(seq (par (gen w) (id 3)) (par (id 2) (gen x)))");
  EXPECT_TRUE(diagrams_equal(w_first, x_first, env));
}

TEST(diagram, spider_and_specialness) {
  const auto env = classical_env(3);
  EXPECT_TRUE(diagrams_equal(parse("(seq (gen m) (gen copy))"), parse("(id 3)"), env));
  // Two composites with the same connectivity: two inputs fused to one output.
  EXPECT_TRUE(diagrams_equal(parse("(gen m)"), parse("(seq (gen m) (swap 3 3))"), env));
  EXPECT_TRUE(diagrams_equal(parse("(seq (gen m) (seq (gen copy) (gen m)))"), parse("(gen m)"),
                             env));
}

TEST(diagram, noncommutative_group_algebra) {
  Environment env;
  env.bind("m", group_multiplication_map(group_symmetric(3)));
  EXPECT_FALSE(diagrams_equal(parse("(gen m)"), parse("(seq (gen m) (swap 6 6))"), env));
}

TEST(diagram, evaluation_is_a_homomorphism_and_round_trips) {
  std::mt19937_64 rng(42);
  Environment env;
  env.bind("a", random_map(2, 2, rng)).bind("b", random_map(3, 2, rng));
  env.bind("c", random_map(2, 3, rng));
  for (int trial = 0; trial < 50; ++trial) {
    const auto built = random_tree(rng, env, 3);
    const auto value = evaluate(built.d, env);
    EXPECT_TRUE(approx_eq(value, built.value, 1e-12));
    const auto text = print(built.d);
    EXPECT_EQ(print(parse(text)), text);
    EXPECT_TRUE(approx_eq(evaluate(parse(text), env), value, 1e-12));
  }
}

TEST(diagram, seq_chain_order) {
  Environment env;
  env.bind("f", LinearMap::from_rows({{1.0, 2.0}})).bind("g", LinearMap::scalar(3.0));
  const auto d = Diagram::seq_chain({Diagram::gen("f"), Diagram::gen("g")});
  EXPECT_TRUE(approx_eq(evaluate(d, env), LinearMap::from_rows({{3.0, 6.0}})));
}
