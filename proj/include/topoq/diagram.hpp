#pragma once

// A small diagram language: trees of named generators under sequential and
// parallel composition, written as s-expressions and evaluated to LinearMaps.
//
//   expr := "(seq" expr expr ")"     upper after lower
//         | "(par" expr expr ")"     tensor product, left factor major
//         | "(gen" NAME ")"
//         | "(id" INT ")"
//         | "(swap" INT INT ")"
//         | "(scalar" FLOAT FLOAT ")"  real and imaginary part

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "topoq/linalg.hpp"

namespace topoq {

class Diagram {
 public:
  enum class Kind { Generator, Seq, Par, Scalar, Id, Swap };

  static Diagram gen(std::string name);
  static Diagram seq(Diagram upper, Diagram lower);
  static Diagram par(Diagram left, Diagram right);
  static Diagram scalar(Complex value);
  static Diagram id(std::size_t dim);
  static Diagram swap(std::size_t dim_a, std::size_t dim_b);

  /// Seq over a bottom-to-top list: seq_chain({a, b, c}) == c . b . a.
  static Diagram seq_chain(std::initializer_list<Diagram> bottom_to_top);

  Kind kind() const noexcept;
  const std::string& name() const;          // Generator
  const Diagram& first() const;             // Seq upper / Par left
  const Diagram& second() const;            // Seq lower / Par right
  Complex value() const;                    // Scalar
  std::size_t dim_a() const;                // Id dim / Swap first dim
  std::size_t dim_b() const;                // Swap second dim

 private:
  struct Node;
  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Name -> LinearMap bindings. Names of the form cap_<n> and cup_<n> resolve
/// without a binding to name(identity(n)) and its adjoint.
class Environment {
 public:
  Environment() = default;
  Environment(std::initializer_list<std::pair<const std::string, LinearMap>> bindings)
      : bindings_(bindings) {}

  /// Throws NumericalError for non-finite maps.
  Environment& bind(std::string name, LinearMap map);
  /// Throws UnboundGenerator.
  LinearMap lookup(const std::string& name) const;
  bool contains(const std::string& name) const;

 private:
  std::map<std::string, LinearMap> bindings_;
};

/// Throws SyntaxError(line, col) or UnknownForm.
Diagram parse(std::string_view text);

/// Canonical s-expression; parse(print(d)) is structurally equal to d.
std::string print(const Diagram& d);

/// Structural fold: Seq -> compose, Par -> tensor. Throws DimensionMismatch
/// naming the offending subterm path, or UnboundGenerator.
LinearMap evaluate(const Diagram& d, const Environment& env);

bool diagrams_equal(const Diagram& a, const Diagram& b, const Environment& env,
                    double tol = kDefaultTol);

}  // namespace topoq
