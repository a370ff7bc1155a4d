#pragma once

// Finite groups presented by Cayley tables.

#include <cstddef>
#include <string>
#include <vector>

#include "topoq/linalg.hpp"
#include "topoq/setalg.hpp"

namespace topoq {

/// Default cap on group order; dense |G|^2 x |G| maps stay small below it.
inline constexpr std::size_t kDefaultOrderCap = 48;

using CayleyTable = std::vector<std::vector<std::size_t>>;

/// A finite group given by its multiplication table. Element 0 is always the
/// identity. Instances are only produced by validated constructors, so every
/// group axiom holds exactly.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return inverses_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inverses_[a]; }
  static constexpr std::size_t identity() noexcept { return 0; }

  CayleyTable table() const;
  const std::vector<std::size_t>& inverses() const noexcept { return inverses_; }
  const std::string& label() const noexcept { return label_; }
  FiniteSet as_set() const { return FiniteSet(order(), label_); }

  bool is_abelian() const;

  /// Validates closure, identity, inverses and associativity, in that order,
  /// and relabels so the identity is element 0. Throws NotAGroup naming the
  /// violated axiom, or TooLarge past the order cap.
  friend FiniteGroup from_cayley_table(const CayleyTable& table, std::size_t cap);

 private:
  FiniteGroup(std::vector<std::size_t> flat, std::vector<std::size_t> inverses, std::string label)
      : table_(std::move(flat)), inverses_(std::move(inverses)), label_(std::move(label)) {}

  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverses_;
  std::string label_;

  friend FiniteGroup relabeled(const FiniteGroup& g, std::string label);
};

FiniteGroup from_cayley_table(const CayleyTable& table, std::size_t cap = kDefaultOrderCap);

/// Same group with a different display label.
FiniteGroup relabeled(const FiniteGroup& g, std::string label);

FiniteGroup group_cyclic(std::size_t n, std::size_t cap = kDefaultOrderCap);
/// Direct product; the pair (a, b) has index a * |G2| + b.
FiniteGroup group_product(const FiniteGroup& g1, const FiniteGroup& g2,
                          std::size_t cap = kDefaultOrderCap);
/// Dihedral group of order 2n; r^k s^j has index j * n + k.
FiniteGroup group_dihedral(std::size_t n, std::size_t cap = kDefaultOrderCap);
/// Symmetric group on n points, permutations in lexicographic order.
FiniteGroup group_symmetric(std::size_t n, std::size_t cap = kDefaultOrderCap);
/// Quaternion group; elements 1, -1, i, -i, j, -j, k, -k.
FiniteGroup group_quaternion();

/// A subgroup, stored as its sorted member list.
class Subgroup {
 public:
  /// Throws ValidationError unless `members` is a subgroup of `g`.
  Subgroup(const FiniteGroup& g, std::vector<std::size_t> members);

  static Subgroup trivial(const FiniteGroup& g) { return Subgroup(g, {0}); }
  static Subgroup whole(const FiniteGroup& g);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t g) const { return g < mask_.size() && mask_[g]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  std::vector<std::size_t> members_;
  std::vector<bool> mask_;
};

struct QuotientData {
  FiniteGroup quotient;
  FunctionTable projection;
  /// Cosets sorted by their smallest member; coset 0 is the subgroup.
  std::vector<std::vector<std::size_t>> cosets;
};

/// Smallest subgroup containing the generators.
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<std::size_t>& generators);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// Throws NotNormal when h is not normal.
QuotientData quotient(const FiniteGroup& g, const Subgroup& h);

/// Linearized multiplication: |a>|b> -> |ab>.
LinearMap group_multiplication_map(const FiniteGroup& g);

/// The multiplication as a function G x G -> G (index a * |G| + b).
FunctionTable multiplication_function(const FiniteGroup& g);

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

/// Every subgroup, sorted by (order, members).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);

}  // namespace topoq
