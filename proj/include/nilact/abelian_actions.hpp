#pragma once

// Actions whose targets are tabulated abelian groups and whose acting
// automorphisms come from integer matrices.

#include <vector>

#include "nilact/abelian.hpp"
#include "nilact/action.hpp"

namespace nilact {

/// Tautological action of a permutation group on the points it permutes.
inline Action tautological_action(const PermGroup& pg, GroupRef target) {
  if (!pg.elements.empty() && pg.elements.front().degree() != target->order)
    throw ShapeMismatch("permutation degree does not match target order");
  return action_from_perms(pg.table, std::move(target), pg.elements);
}

/// The matrix group generated by gen_matrices acting on a tabulated abelian
/// group. Each matrix is given row-major over the torsion coordinates.
inline Action matrix_action(const AbTable& at, const std::vector<std::vector<long long>>& gen_matrices,
                            int order_cap = kDefaultOrderCap) {
  std::vector<Permutation> gens;
  gens.reserve(gen_matrices.size());
  for (const auto& m : gen_matrices) {
    AbHom h = make_hom(at.shape, at.shape, m);
    if (!is_automorphism(h)) throw NotAutomorphism("generator matrix is not an automorphism");
    gens.push_back(hom_to_perm(h, at));
  }
  PermGroup pg = perm_group_from_gens(at.table->order, gens, order_cap);
  return tautological_action(pg, at.table);
}

/// <xk> acting diagonally (every coordinate scaled by the same unit).
inline Action multiplier_action(const AbTable& at, const std::vector<long long>& multipliers,
                                int order_cap = kDefaultOrderCap) {
  const int t = at.shape.torsion_count();
  std::vector<std::vector<long long>> mats;
  for (long long k : multipliers) {
    std::vector<long long> m(static_cast<size_t>(t) * t, 0);
    for (int i = 0; i < t; ++i) m[static_cast<size_t>(i) * t + i] = k;
    mats.push_back(std::move(m));
  }
  return matrix_action(at, mats, order_cap);
}

/// The full automorphism group (or any closed member list) acting on its
/// own group's table.
inline Action tautological_aut_action(const AutGroup& ag, const AbTable& at) {
  if (!(ag.base == at.shape)) throw ShapeMismatch("automorphism group does not match the table");
  std::vector<Permutation> per;
  per.reserve(ag.elems.size());
  for (const AbHom& h : ag.elems) per.push_back(hom_to_perm(h, at));
  return action_from_perms(ag.table, at.table, per);
}

}  // namespace nilact
