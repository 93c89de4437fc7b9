#pragma once

// Permutation-generator constructions for the bundled catalog: cyclic,
// dihedral, symmetric and alternating groups plus direct products stay in
// their natural small-degree representations; everything built from an
// abstract table (dicyclic groups, semidirect and central products) is
// emitted through its left regular representation.

#include <string>
#include <vector>

#include "nilact/abelian_actions.hpp"
#include "nilact/action.hpp"
#include "nilact/group.hpp"

namespace nilact {

struct GenSet {
  int degree = 1;
  std::vector<Permutation> gens;
};

inline GenSet cyclic_gens(int n) {
  if (n == 1) return GenSet{1, {}};
  Permutation c;
  c.images.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) c.images[static_cast<size_t>(i)] = (i + 1) % n;
  return GenSet{n, {c}};
}

/// Dihedral group of order 2m acting on m points (m >= 3).
inline GenSet dihedral_gens(int m) {
  GenSet g = cyclic_gens(m);
  Permutation s;
  s.images.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) s.images[static_cast<size_t>(i)] = (m - i) % m;
  g.gens.push_back(s);
  return g;
}

inline GenSet symmetric_gens(int n) {
  GenSet g = cyclic_gens(n);
  if (n >= 2) g.gens.insert(g.gens.begin(), parse_cycles("(0 1)", n));
  return g;
}

inline GenSet alternating_gens(int n) {
  // (0 1 2) together with an even n-rotation-like generator
  GenSet g{n, {parse_cycles("(0 1 2)", n)}};
  if (n == 4) g.gens.push_back(parse_cycles("(0 1)(2 3)", 4));
  if (n >= 5) {
    if (n % 2 == 1) {
      g.gens.push_back(cyclic_gens(n).gens[0]);
    } else {
      Permutation c;  // rotation of the last n-1 points
      c.images.resize(static_cast<size_t>(n));
      c.images[0] = 0;
      for (int i = 1; i < n; ++i) c.images[static_cast<size_t>(i)] = 1 + (i % (n - 1));
      g.gens.push_back(c);
    }
  }
  return g;
}

/// Disjoint-union generators of a direct product.
inline GenSet product_gens(const GenSet& a, const GenSet& b) {
  GenSet g;
  g.degree = a.degree + b.degree;
  for (const Permutation& p : a.gens) {
    Permutation q = Permutation::identity(g.degree);
    for (int i = 0; i < a.degree; ++i) q.images[static_cast<size_t>(i)] = p(i);
    g.gens.push_back(std::move(q));
  }
  for (const Permutation& p : b.gens) {
    Permutation q = Permutation::identity(g.degree);
    for (int i = 0; i < b.degree; ++i) q.images[static_cast<size_t>(a.degree + i)] = a.degree + p(i);
    g.gens.push_back(std::move(q));
  }
  return g;
}

/// Left regular representation of a table's generating set.
inline GenSet regular_gens(const GroupRef& g) {
  GenSet out;
  out.degree = g->order;
  for (int s : g->generators) {
    Permutation p;
    p.images.resize(static_cast<size_t>(g->order));
    for (int x = 0; x < g->order; ++x) p.images[static_cast<size_t>(x)] = g->mul(s, x);
    out.gens.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table constructions

/// Dicyclic group of order 4n: <a, b | a^{2n} = 1, b^2 = a^n, bab^-1 = a^-1>.
/// n = 2 gives the quaternion group.
inline GroupRef dicyclic_table(int n) {
  const int order = 4 * n;
  const int two_n = 2 * n;
  auto idx = [&](int i, int j) { return j * two_n + i; };
  auto table = std::make_shared<GroupTable>();
  table->order = order;
  table->identity = idx(0, 0);
  table->mul_table.resize(static_cast<size_t>(order) * order);
  table->inv_table.resize(static_cast<size_t>(order));
  auto mul_rule = [&](int i, int j, int i2, int j2) {
    if (j == 0) return idx(((i + i2) % two_n + two_n) % two_n, j2);
    if (j2 == 0) return idx(((i - i2) % two_n + two_n) % two_n, 1);
    return idx(((i - i2 + n) % two_n + two_n) % two_n, 0);
  };
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < two_n; ++i)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < two_n; ++i2)
          table->mul_table[detail::idx(idx(i, j), order, idx(i2, j2))] = mul_rule(i, j, i2, j2);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      if (table->mul_table[detail::idx(x, order, y)] == table->identity)
        table->inv_table[static_cast<size_t>(x)] = y;
  table->generators = {idx(1, 0), idx(0, 1)};
  table->labels.resize(static_cast<size_t>(order));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < two_n; ++i)
      table->labels[static_cast<size_t>(idx(i, j))] =
          "a" + std::to_string(i) + (j ? "b" : "");
  check_group_axioms(*table);
  return table;
}

/// Semidirect product N x| H from an action of H on N:
/// (n, h)(n', h') = (n * h.n', h h').
inline GroupRef semidirect_table(const Action& act) {
  const GroupTable& h = *act.actor;
  const GroupTable& n = *act.target;
  const int order = n.order * h.order;
  auto idx = [&](int ni, int hi) { return ni * h.order + hi; };
  auto table = std::make_shared<GroupTable>();
  table->order = order;
  table->identity = idx(n.identity, h.identity);
  table->mul_table.resize(static_cast<size_t>(order) * order);
  table->inv_table.resize(static_cast<size_t>(order));
  for (int ni = 0; ni < n.order; ++ni)
    for (int hi = 0; hi < h.order; ++hi)
      for (int nj = 0; nj < n.order; ++nj)
        for (int hj = 0; hj < h.order; ++hj)
          table->mul_table[detail::idx(idx(ni, hi), order, idx(nj, hj))] =
              idx(n.mul(ni, act.act(hi, nj)), h.mul(hi, hj));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      if (table->mul_table[detail::idx(x, order, y)] == table->identity)
        table->inv_table[static_cast<size_t>(x)] = y;
  for (int s : n.generators) table->generators.push_back(idx(s, h.identity));
  for (int s : h.generators) table->generators.push_back(idx(n.identity, s));
  table->labels.resize(static_cast<size_t>(order));
  for (int ni = 0; ni < n.order; ++ni)
    for (int hi = 0; hi < h.order; ++hi)
      table->labels[static_cast<size_t>(idx(ni, hi))] = n.label(ni) + "." + h.label(hi);
  check_group_axioms(*table);
  return table;
}

/// C_m acting on C_n by x -> kx, with k^m = 1 (mod n). The target table is
/// in primary coordinates, where multiplication by k is the scalar matrix.
inline GroupRef semidirect_cyclic_table(int n, int m, long long k) {
  AbTable nt = ab_to_table(AbGroup::from_factors({n}));
  GroupRef ht = group_from_perms(cyclic_gens(m).degree, cyclic_gens(m).gens);
  const int t = nt.shape.torsion_count();
  std::vector<long long> mat(static_cast<size_t>(t) * t, 0);
  for (int i = 0; i < t; ++i) mat[static_cast<size_t>(i) * t + i] = k;
  AbHom h = make_hom(nt.shape, nt.shape, mat);
  if (!is_automorphism(h)) throw NotAutomorphism("multiplier is not a unit");
  Action act = action_from_generator_images(ht, nt.table, {hom_to_perm(h, nt)});
  return semidirect_table(act);
}

inline GroupRef direct_product_table(const GroupRef& a, const GroupRef& b) {
  return semidirect_table(trivial_action(b, a));
}

/// Central product (A x B) / <(za, zb)> for central elements of equal order.
inline GroupRef central_product_table(const GroupRef& a, const GroupRef& b, int za, int zb) {
  Action triv = trivial_action(b, a);
  GroupRef prod = semidirect_table(triv);
  // identify indices in the product: (x, y) -> x * |B| + y
  int diag = za * b->order + zb;
  Subgroup z = subgroup_closure(prod, {diag});
  return quotient(prod, z).group;
}

}  // namespace nilact
