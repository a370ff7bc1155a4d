#include "topoq/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "topoq/error.hpp"

namespace topoq {

namespace {

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap) {
    throw TooLarge("group order " + std::to_string(order) + " exceeds the cap " +
                   std::to_string(cap));
  }
}

CayleyTable table_from(std::size_t n, auto&& product) {
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = product(a, b);
  }
  return t;
}

}  // namespace

CayleyTable FiniteGroup::table() const {
  const std::size_t n = order();
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = mul(a, b);
  }
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup from_cayley_table(const CayleyTable& table, std::size_t cap) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("closure: empty table");
  check_cap(n, cap);
  for (const auto& row : table) {
    if (row.size() != n) throw NotAGroup("closure: table is not square");
    for (auto v : row) {
      if (v >= n) throw NotAGroup("closure: entry " + std::to_string(v) + " out of range");
    }
  }

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[c][a] == a && table[a][c] == a;
    if (ok) e = c;
  }
  if (e == n) throw NotAGroup("identity: no two-sided identity element");

  // Swap labels 0 and e.
  auto relabel = [e](std::size_t x) { return x == e ? 0 : (x == 0 ? e : x); };
  std::vector<std::size_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
    }
  }
  auto mul = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };

  std::vector<std::size_t> inverses(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverses[a] = b;
        break;
      }
    }
    if (inverses[a] == n) {
      throw NotAGroup("inverses: element " + std::to_string(a) + " has no inverse");
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw NotAGroup("associativity: fails at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  return FiniteGroup(std::move(flat), std::move(inverses), "table");
}

FiniteGroup relabeled(const FiniteGroup& g, std::string label) {
  return FiniteGroup(g.table_, g.inverses_, std::move(label));
}

FiniteGroup group_cyclic(std::size_t n, std::size_t cap) {
  if (n == 0) throw ValidationError("cyclic group needs n >= 1");
  check_cap(n, cap);
  return relabeled(
      from_cayley_table(table_from(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }),
                        cap),
      "Z" + std::to_string(n));
}

FiniteGroup group_product(const FiniteGroup& g1, const FiniteGroup& g2, std::size_t cap) {
  const std::size_t n2 = g2.order();
  const std::size_t n = g1.order() * n2;
  check_cap(n, cap);
  auto t = table_from(n, [&](std::size_t x, std::size_t y) {
    return g1.mul(x / n2, y / n2) * n2 + g2.mul(x % n2, y % n2);
  });
  return relabeled(from_cayley_table(t, cap), g1.label() + "x" + g2.label());
}

FiniteGroup group_dihedral(std::size_t n, std::size_t cap) {
  if (n == 0) throw ValidationError("dihedral group needs n >= 1");
  check_cap(2 * n, cap);
  // (r^a s^i)(r^b s^j) = r^(a + (-1)^i b) s^(i + j)
  auto t = table_from(2 * n, [n](std::size_t x, std::size_t y) {
    const std::size_t a = x % n, i = x / n, b = y % n, j = y / n;
    const std::size_t rot = i == 0 ? (a + b) % n : (a + n - b) % n;
    return ((i + j) % 2) * n + rot;
  });
  return relabeled(from_cayley_table(t, cap), "D" + std::to_string(n));
}

FiniteGroup group_symmetric(std::size_t n, std::size_t cap) {
  if (n == 0) throw ValidationError("symmetric group needs n >= 1");
  std::size_t order = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    order *= k;
    check_cap(order, cap);
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  // (p q)(x) = p(q(x))
  auto t = table_from(perms.size(), [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> r(n);
    for (std::size_t x = 0; x < n; ++x) r[x] = perms[a][perms[b][x]];
    return index.at(r);
  });
  return relabeled(from_cayley_table(t, cap), "S" + std::to_string(n));
}

FiniteGroup group_quaternion() {
  // Units 1, i, j, k as 0..3; unit_product[x][y] = (sign, unit).
  constexpr std::array<std::array<std::pair<int, std::size_t>, 4>, 4> unit_product{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  // Element index 2 * unit + (negative ? 1 : 0).
  auto t = table_from(8, [&](std::size_t x, std::size_t y) {
    const auto [sign, u] = unit_product[x / 2][y / 2];
    const bool negative = (sign < 0) != ((x % 2) != (y % 2));
    return 2 * u + (negative ? 1 : 0);
  });
  return relabeled(from_cayley_table(t), "Q8");
}

Subgroup::Subgroup(const FiniteGroup& g, std::vector<std::size_t> members)
    : members_(std::move(members)), mask_(g.order(), false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto m : members_) {
    if (m >= g.order()) throw ValidationError("subgroup member out of range");
    mask_[m] = true;
  }
  if (!contains(0)) throw ValidationError("subgroup must contain the identity");
  for (auto a : members_) {
    if (!contains(g.inv(a))) throw ValidationError("subgroup is not closed under inverses");
    for (auto b : members_) {
      if (!contains(g.mul(a, b))) throw ValidationError("subgroup is not closed under products");
    }
  }
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<std::size_t> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<std::size_t>& generators) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> members{0};
  seen[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto gen : generators) {
      if (gen >= g.order()) throw ValidationError("generator out of range");
      const auto next = g.mul(members[i], gen);
      if (!seen[next]) {
        seen[next] = true;
        members.push_back(next);
      }
    }
  }
  return Subgroup(g, std::move(members));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (auto m : h.members()) {
      if (!h.contains(g.mul(g.mul(x, m), g.inv(x)))) return false;
    }
  }
  return true;
}

QuotientData quotient(const FiniteGroup& g, const Subgroup& h) {
  if (!is_normal(g, h)) throw NotNormal("subgroup of order " + std::to_string(h.size()) +
                                        " is not normal in " + g.label());
  const std::size_t n = g.order();
  constexpr auto unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(n, unassigned);
  std::vector<std::vector<std::size_t>> cosets;
  // Scanning elements in increasing order labels cosets by their minimal member.
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_of[x] != unassigned) continue;
    std::vector<std::size_t> coset;
    for (auto m : h.members()) coset.push_back(g.mul(x, m));
    std::sort(coset.begin(), coset.end());
    for (auto y : coset) coset_of[y] = cosets.size();
    cosets.push_back(std::move(coset));
  }
  const std::size_t q = cosets.size();
  CayleyTable t(q, std::vector<std::size_t>(q));
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) t[a][b] = coset_of[g.mul(cosets[a][0], cosets[b][0])];
  }
  FunctionTable projection(g.as_set(), FiniteSet(q, g.label() + "/H"), coset_of);
  return {relabeled(from_cayley_table(t, n), g.label() + "/H"), std::move(projection),
          std::move(cosets)};
}

LinearMap group_multiplication_map(const FiniteGroup& g) {
  return linearize(multiplication_function(g));
}

FunctionTable multiplication_function(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> image(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) image[a * n + b] = g.mul(a, b);
  }
  return FunctionTable(FiniteSet(n * n), g.as_set(), std::move(image));
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> cls;
    for (std::size_t y = 0; y < g.order(); ++y) cls.insert(g.mul(g.mul(y, x), g.inv(y)));
    for (auto c : cls) seen[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  // Every subgroup is reached by adjoining one element at a time to a smaller one.
  std::set<std::vector<std::size_t>> found{{0}};
  std::vector<std::vector<std::size_t>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& members : frontier) {
      std::vector<bool> in(g.order(), false);
      for (auto m : members) in[m] = true;
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (in[x]) continue;
        auto gens = members;
        gens.push_back(x);
        auto sub = subgroup_closure(g, gens).members();
        if (found.insert(sub).second) next.push_back(std::move(sub));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& members : found) out.emplace_back(g, members);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g)) {
    if (is_normal(g, h)) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace topoq
