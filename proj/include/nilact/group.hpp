#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilact/error.hpp"
#include "nilact/perm.hpp"

namespace nilact {

/// Default bound on group orders produced by closure operations.
inline constexpr int kDefaultOrderCap = 10080;

/// A finite group as a dense multiplication table over element indices.
/// Instances are immutable once built and are shared through GroupRef.
struct GroupTable {
  int order = 1;
  std::vector<int> mul_table;  // order*order, row-major
  std::vector<int> inv_table;
  int identity = 0;
  std::vector<std::string> labels;  // may be empty
  std::vector<int> generators;

  int mul(int a, int b) const { return mul_table[static_cast<size_t>(a) * order + b]; }
  int inv(int a) const { return inv_table[static_cast<size_t>(a)]; }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }

  std::string label(int a) const {
    if (a >= 0 && static_cast<size_t>(a) < labels.size()) return labels[static_cast<size_t>(a)];
    return "e" + std::to_string(a);
  }
};

using GroupRef = std::shared_ptr<const GroupTable>;

/// A subgroup as a sorted member-index set over a parent table, with the
/// generating witnesses that produced it. Holds the parent alive.
struct Subgroup {
  GroupRef parent;
  std::vector<int> members;     // sorted, unique
  std::vector<int> generators;  // witness; closure(generators) == members

  int order() const { return static_cast<int>(members.size()); }
  bool is_trivial() const { return members.size() == 1; }
  bool contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }
};

inline bool same_subgroup(const Subgroup& a, const Subgroup& b) {
  return a.parent == b.parent && a.members == b.members;
}

inline bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw MismatchedParents("subgroup comparison across different groups");
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

enum class SeriesVerdict { NilpotentOfOrder, StabilizedNontrivial, DepthCapReached };

/// A descending chain of subgroups together with how it ended.
/// For NilpotentOfOrder r, terms[r] is trivial and r is minimal.
/// For StabilizedNontrivial k, terms[k] == terms[k+1] != {1} with k minimal.
struct SeriesReport {
  std::vector<Subgroup> terms;
  SeriesVerdict verdict = SeriesVerdict::NilpotentOfOrder;
  int value = 0;  // r or k

  bool nilpotent() const { return verdict == SeriesVerdict::NilpotentOfOrder; }

  /// Series term with the tail convention: past the computed range the
  /// series is constant (trivial in the nilpotent case).
  const Subgroup& term(int n) const {
    size_t i = std::min(static_cast<size_t>(n), terms.size() - 1);
    return terms[i];
  }
};

inline std::string to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::NilpotentOfOrder: return "nilpotent-of-order";
    case SeriesVerdict::StabilizedNontrivial: return "stabilized-nontrivial";
    case SeriesVerdict::DepthCapReached: return "depth-cap-reached";
  }
  return "?";
}

namespace detail {

inline size_t idx(int a, int order, int b) { return static_cast<size_t>(a) * order + b; }

}  // namespace detail

/// Exhaustive verification of the group axioms on a table. O(order^3).
inline void check_group_axioms(const GroupTable& g) {
  const int n = g.order;
  for (int a = 0; a < n; ++a) {
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a)
      throw ValidationError("identity axiom fails at element " + std::to_string(a));
    if (g.mul(a, g.inv(a)) != g.identity || g.mul(g.inv(a), a) != g.identity)
      throw ValidationError("inverse axiom fails at element " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw ValidationError("associativity fails at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
  // generators must generate
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> frontier{g.identity};
  seen[static_cast<size_t>(g.identity)] = 1;
  size_t count = 1;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int s : g.generators) {
      int y = g.mul(x, s);
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  if (count != static_cast<size_t>(n))
    throw ValidationError("generator list does not generate the whole group");
}

/// A permutation group kept together with its element permutations
/// (elements[i] realizes table element i).
struct PermGroup {
  GroupRef table;
  std::vector<Permutation> elements;
};

/// Closure of permutation generators under composition. Element 0 is the
/// identity; the remaining elements appear in breadth-first discovery order,
/// which makes the table deterministic.
inline PermGroup perm_group_from_gens(int degree, const std::vector<Permutation>& gens,
                                      int order_cap = kDefaultOrderCap) {
  for (const auto& p : gens) require_permutation(p, degree);

  std::vector<Permutation> elems;
  std::map<Permutation, int> index_of;
  const Permutation id = Permutation::identity(degree);
  elems.push_back(id);
  index_of.emplace(id, 0);
  std::queue<int> todo;
  todo.push(0);
  std::vector<int> gen_indices;

  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      Permutation prod = compose(elems[static_cast<size_t>(cur)], g);
      auto [it, inserted] = index_of.emplace(std::move(prod), static_cast<int>(elems.size()));
      if (inserted) {
        elems.push_back(it->first);
        if (static_cast<int>(elems.size()) > order_cap)
          throw ClosureExceedsCap("permutation closure exceeds order cap " +
                                  std::to_string(order_cap));
        todo.push(it->second);
      }
    }
  }

  for (const auto& g : gens) gen_indices.push_back(index_of.at(g));

  auto table = std::make_shared<GroupTable>();
  const int n = static_cast<int>(elems.size());
  table->order = n;
  table->identity = 0;
  table->mul_table.resize(static_cast<size_t>(n) * n);
  table->inv_table.resize(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      table->mul_table[detail::idx(a, n, b)] =
          index_of.at(compose(elems[static_cast<size_t>(a)], elems[static_cast<size_t>(b)]));
    table->inv_table[static_cast<size_t>(a)] = index_of.at(inverse(elems[static_cast<size_t>(a)]));
  }
  table->labels.reserve(static_cast<size_t>(n));
  for (const auto& e : elems) table->labels.push_back(to_cycles(e));
  // deduplicate generator indices, preserving order
  for (int gi : gen_indices)
    if (std::find(table->generators.begin(), table->generators.end(), gi) ==
        table->generators.end())
      table->generators.push_back(gi);
  if (table->generators.empty() && n == 1) table->generators = {};
  return PermGroup{std::move(table), std::move(elems)};
}

inline GroupRef group_from_perms(int degree, const std::vector<Permutation>& gens,
                                 int order_cap = kDefaultOrderCap) {
  return perm_group_from_gens(degree, gens, order_cap).table;
}

/// Smallest subgroup containing the seed set.
inline Subgroup subgroup_closure(const GroupRef& g, const std::vector<int>& seed) {
  for (int s : seed)
    if (s < 0 || s >= g->order)
      throw ValidationError("seed index " + std::to_string(s) + " out of range");
  std::vector<char> in(static_cast<size_t>(g->order), 0);
  std::vector<int> frontier;
  auto add = [&](int x) {
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      frontier.push_back(x);
    }
  };
  add(g->identity);
  for (int s : seed) add(s);
  // products with each known member on both sides; inverses
  std::vector<int> members{};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    members.push_back(x);
    add(g->inv(x));
    for (int y = 0; y < g->order; ++y) {
      if (!in[static_cast<size_t>(y)]) continue;
      add(g->mul(x, y));
      add(g->mul(y, x));
    }
  }
  std::sort(members.begin(), members.end());
  Subgroup h;
  h.parent = g;
  h.members = std::move(members);
  h.generators = seed;
  return h;
}

inline Subgroup trivial_subgroup(const GroupRef& g) { return subgroup_closure(g, {}); }

inline Subgroup full_subgroup(const GroupRef& g) {
  Subgroup h;
  h.parent = g;
  h.members.resize(static_cast<size_t>(g->order));
  std::iota(h.members.begin(), h.members.end(), 0);
  h.generators = g->generators;
  return h;
}

/// Subgroup generated by {h^-1 k^-1 h k : h in H, k in K}.
inline Subgroup commutator_subgroup(const GroupRef& g, const Subgroup& h, const Subgroup& k) {
  if (h.parent != g || k.parent != g)
    throw MismatchedParents("commutator arguments live in different groups");
  std::set<int> seeds;
  for (int a : h.members)
    for (int b : k.members) seeds.insert(g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b)));
  std::vector<int> seed(seeds.begin(), seeds.end());
  return subgroup_closure(g, seed);
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw MismatchedParents("intersection across different groups");
  Subgroup r;
  r.parent = a.parent;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(r.members));
  r.generators = r.members;  // trivial witness
  return r;
}

inline Subgroup center(const GroupRef& g) {
  std::vector<int> seed;
  for (int z = 0; z < g->order; ++z) {
    bool central = true;
    for (int x = 0; x < g->order && central; ++x) central = g->mul(z, x) == g->mul(x, z);
    if (central) seed.push_back(z);
  }
  Subgroup h;
  h.parent = g;
  h.members = seed;  // already sorted; the centre is a subgroup
  h.generators = seed;
  return h;
}

inline bool is_normal(const GroupRef& g, const Subgroup& h) {
  if (h.parent != g) throw MismatchedParents("normality test across different groups");
  for (int x = 0; x < g->order; ++x)
    for (int m : h.members)
      if (!h.contains(g->conj(x, m))) return false;
  return true;
}

inline bool is_abelian(const GroupTable& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

inline int element_order(const GroupTable& g, int x) {
  int ord = 1;
  int cur = x;
  while (cur != g.identity) {
    cur = g.mul(cur, x);
    ++ord;
  }
  return ord;
}

/// Result of forming G/H: the coset table plus the projection map.
struct Quotient {
  GroupRef group;
  std::vector<int> projection;  // parent element -> coset index
};

/// Coset group of a normal subgroup. Cosets are indexed by ascending
/// minimal member, so the identity coset is index 0.
inline Quotient quotient(const GroupRef& g, const Subgroup& h) {
  if (h.parent != g) throw MismatchedParents("quotient across different groups");
  if (!is_normal(g, h)) throw NotNormal("subgroup is not normal; quotient undefined");

  const int n = g->order;
  std::vector<int> coset_min(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    if (coset_min[static_cast<size_t>(x)] >= 0) continue;
    int mn = x;  // first unvisited x is minimal in its coset: smaller ones are assigned
    for (int m : h.members) {
      int y = g->mul(x, m);
      coset_min[static_cast<size_t>(y)] = mn;
    }
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (coset_min[static_cast<size_t>(x)] == x) reps.push_back(x);
  std::vector<int> proj(static_cast<size_t>(n));
  std::map<int, int> rep_index;
  for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);
  for (int x = 0; x < n; ++x) proj[static_cast<size_t>(x)] = rep_index.at(coset_min[static_cast<size_t>(x)]);

  const int q = static_cast<int>(reps.size());
  auto table = std::make_shared<GroupTable>();
  table->order = q;
  table->identity = proj[static_cast<size_t>(g->identity)];
  table->mul_table.resize(static_cast<size_t>(q) * q);
  table->inv_table.resize(static_cast<size_t>(q));
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b)
      table->mul_table[detail::idx(a, q, b)] = proj[static_cast<size_t>(g->mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]))];
    table->inv_table[static_cast<size_t>(a)] = proj[static_cast<size_t>(g->inv(reps[static_cast<size_t>(a)]))];
  }
  table->labels.reserve(static_cast<size_t>(q));
  for (int r : reps) table->labels.push_back(g->label(r) + "H");
  for (int s : g->generators) {
    int c = proj[static_cast<size_t>(s)];
    if (c != table->identity &&
        std::find(table->generators.begin(), table->generators.end(), c) ==
            table->generators.end())
      table->generators.push_back(c);
  }
  if (table->generators.empty() && q > 1) {
    for (int c = 1; c < q; ++c) table->generators.push_back(c);
  }
  return Quotient{std::move(table), std::move(proj)};
}

/// A subgroup re-indexed as a standalone table, with both index maps.
struct SubTable {
  GroupRef group;
  std::vector<int> to_parent;    // sub index -> parent index
  std::vector<int> from_parent;  // parent index -> sub index or -1
};

inline SubTable subgroup_to_table(const Subgroup& h) {
  const GroupRef& g = h.parent;
  std::vector<int> to_parent = h.members;  // sorted; identity (=0 in our tables) first
  // ensure the identity sits at index 0 even for nonzero parent identity
  auto it = std::find(to_parent.begin(), to_parent.end(), g->identity);
  std::rotate(to_parent.begin(), it, it + 1);
  std::vector<int> from_parent(static_cast<size_t>(g->order), -1);
  for (size_t i = 0; i < to_parent.size(); ++i) from_parent[static_cast<size_t>(to_parent[i])] = static_cast<int>(i);

  const int n = static_cast<int>(to_parent.size());
  auto table = std::make_shared<GroupTable>();
  table->order = n;
  table->identity = 0;
  table->mul_table.resize(static_cast<size_t>(n) * n);
  table->inv_table.resize(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int p = g->mul(to_parent[static_cast<size_t>(a)], to_parent[static_cast<size_t>(b)]);
      int s = from_parent[static_cast<size_t>(p)];
      if (s < 0) throw InternalInvariantViolation("member set not closed under multiplication");
      table->mul_table[detail::idx(a, n, b)] = s;
    }
    table->inv_table[static_cast<size_t>(a)] = from_parent[static_cast<size_t>(g->inv(to_parent[static_cast<size_t>(a)]))];
  }
  if (!g->labels.empty())
    for (int p : to_parent) table->labels.push_back(g->label(p));
  for (int s : h.generators) {
    int c = from_parent[static_cast<size_t>(s)];
    if (c > 0 && std::find(table->generators.begin(), table->generators.end(), c) ==
                     table->generators.end())
      table->generators.push_back(c);
  }
  if (table->generators.empty() && n > 1)
    for (int c = 1; c < n; ++c) table->generators.push_back(c);
  return SubTable{std::move(table), std::move(to_parent), std::move(from_parent)};
}

/// Lower central series: terms[0] = G, terms[n] = [G, terms[n-1]].
inline SeriesReport lower_central_series(const GroupRef& g, int depth_cap = -1) {
  if (depth_cap < 0) depth_cap = g->order;
  SeriesReport rep;
  rep.terms.push_back(full_subgroup(g));
  const Subgroup whole = rep.terms.front();
  for (int n = 1; n <= depth_cap; ++n) {
    Subgroup next = commutator_subgroup(g, whole, rep.terms.back());
    bool repeated = same_subgroup(next, rep.terms.back());
    rep.terms.push_back(std::move(next));
    if (rep.terms.back().is_trivial()) {
      rep.verdict = SeriesVerdict::NilpotentOfOrder;
      rep.value = repeated ? n - 1 : n;
      if (repeated) rep.terms.pop_back();
      return rep;
    }
    if (repeated) {
      rep.verdict = SeriesVerdict::StabilizedNontrivial;
      rep.value = n - 1;
      return rep;
    }
  }
  rep.verdict = SeriesVerdict::DepthCapReached;
  rep.value = depth_cap;
  return rep;
}

/// Nilpotency class, or no value when the series stabilizes above {1}.
inline std::optional<int> nilpotency_class(const GroupRef& g) {
  SeriesReport rep = lower_central_series(g);
  if (rep.nilpotent()) return rep.value;
  return std::nullopt;
}

inline bool is_nilpotent(const GroupRef& g) { return nilpotency_class(g).has_value(); }

/// A reasonably small generating set, chosen greedily and deterministically.
inline std::vector<int> small_generating_set(const GroupRef& g) {
  std::vector<int> gens;
  Subgroup cur = subgroup_closure(g, {});
  while (cur.order() < g->order) {
    int next = -1;
    for (int x = 0; x < g->order; ++x)
      if (!cur.contains(x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    cur = subgroup_closure(g, gens);
  }
  return gens;
}

/// All automorphisms of a small table, found by backtracking over images of
/// a generating set. Intended for catalog-scale groups.
inline std::vector<Permutation> automorphism_perms(const GroupRef& g, size_t limit = 1u << 22) {
  std::vector<int> gens = small_generating_set(g);
  if (gens.empty()) return {Permutation::identity(g->order)};

  const int n = g->order;
  std::vector<int> gen_order;
  gen_order.reserve(gens.size());
  for (int s : gens) gen_order.push_back(element_order(*g, s));

  std::vector<Permutation> found;
  std::vector<int> images(gens.size(), -1);
  size_t attempts = 0;

  // extend the partial generator assignment to a full map; fail on clash
  auto extend = [&](const std::vector<int>& img) -> std::optional<std::vector<int>> {
    std::vector<int> phi(static_cast<size_t>(n), -1);
    phi[static_cast<size_t>(g->identity)] = g->identity;
    std::vector<int> frontier{g->identity};
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (size_t k = 0; k < gens.size(); ++k) {
        int y = g->mul(x, gens[k]);
        int fy = g->mul(phi[static_cast<size_t>(x)], img[k]);
        int& slot = phi[static_cast<size_t>(y)];
        if (slot < 0) {
          slot = fy;
          frontier.push_back(y);
        } else if (slot != fy) {
          return std::nullopt;
        }
      }
    }
    // must be total (gens generate) and bijective, and preserve products
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : phi) {
      if (v < 0 || seen[static_cast<size_t>(v)]) return std::nullopt;
      seen[static_cast<size_t>(v)] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (phi[static_cast<size_t>(g->mul(a, b))] !=
            g->mul(phi[static_cast<size_t>(a)], phi[static_cast<size_t>(b)]))
          return std::nullopt;
    return phi;
  };

  // candidate images share the generator's order
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    for (int x = 0; x < n; ++x)
      if (element_order(*g, x) == gen_order[k]) candidates[k].push_back(x);

  std::vector<size_t> cursor(gens.size(), 0);
  size_t depth = 0;
  while (true) {
    if (cursor[depth] == candidates[depth].size()) {
      cursor[depth] = 0;
      if (depth == 0) break;
      --depth;
      ++cursor[depth];
      continue;
    }
    images[depth] = candidates[depth][cursor[depth]];
    if (depth + 1 < gens.size()) {
      ++depth;
      continue;
    }
    if (++attempts > limit) throw TooLarge("automorphism search exceeded attempt limit");
    if (auto phi = extend(images)) found.emplace_back(std::move(*phi));
    ++cursor[depth];
  }
  return found;
}

/// Isomorphism test by generator-image backtracking; catalog scale only.
inline bool is_isomorphic(const GroupRef& g, const GroupRef& h) {
  if (g->order != h->order) return false;
  const int n = g->order;
  // cheap invariants first
  std::map<int, int> go, ho;
  for (int x = 0; x < n; ++x) {
    go[element_order(*g, x)]++;
    ho[element_order(*h, x)]++;
  }
  if (go != ho) return false;
  if (is_abelian(*g) != is_abelian(*h)) return false;

  std::vector<int> gens = small_generating_set(g);
  if (gens.empty()) return true;

  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    int ord = element_order(*g, gens[k]);
    for (int x = 0; x < n; ++x)
      if (element_order(*h, x) == ord) candidates[k].push_back(x);
  }

  std::vector<int> images(gens.size(), -1);
  auto try_extend = [&](const std::vector<int>& img) -> bool {
    std::vector<int> phi(static_cast<size_t>(n), -1);
    phi[static_cast<size_t>(g->identity)] = h->identity;
    std::vector<int> frontier{g->identity};
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (size_t k = 0; k < gens.size(); ++k) {
        int y = g->mul(x, gens[k]);
        int fy = h->mul(phi[static_cast<size_t>(x)], img[k]);
        int& slot = phi[static_cast<size_t>(y)];
        if (slot < 0) {
          slot = fy;
          frontier.push_back(y);
        } else if (slot != fy) {
          return false;
        }
      }
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : phi) {
      if (v < 0 || seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (phi[static_cast<size_t>(g->mul(a, b))] !=
            h->mul(phi[static_cast<size_t>(a)], phi[static_cast<size_t>(b)]))
          return false;
    return true;
  };

  size_t depth = 0;
  std::vector<size_t> cursor(gens.size(), 0);
  while (true) {
    if (cursor[depth] == candidates[depth].size()) {
      cursor[depth] = 0;
      if (depth == 0) return false;
      --depth;
      ++cursor[depth];
      continue;
    }
    images[depth] = candidates[depth][cursor[depth]];
    if (depth + 1 < gens.size()) {
      ++depth;
      continue;
    }
    if (try_extend(images)) return true;
    ++cursor[depth];
  }
}

}  // namespace nilact
