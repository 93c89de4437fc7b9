#pragma once

#include <set>
#include <vector>

#include "nilact/error.hpp"
#include "nilact/group.hpp"

namespace nilact {

/// An action of G on A by automorphisms, materialized as the full
/// |G| x |A| image table. Construction validates that every element acts
/// as an automorphism and that the assignment is a homomorphism, so
/// consumers never re-verify.
struct Action {
  GroupRef actor;
  GroupRef target;
  std::vector<int> table;  // table[g * |A| + a]

  int act(int g, int a) const { return table[static_cast<size_t>(g) * target->order + a]; }

  Permutation perm_of(int g) const {
    Permutation p;
    p.images.assign(table.begin() + static_cast<size_t>(g) * target->order,
                    table.begin() + static_cast<size_t>(g + 1) * target->order);
    return p;
  }
};

namespace detail {

inline void validate_action(const Action& act) {
  const GroupTable& g = *act.actor;
  const GroupTable& a = *act.target;
  // identity acts as identity
  for (int x = 0; x < a.order; ++x)
    if (act.act(g.identity, x) != x)
      throw ValidationError("identity of the actor does not act trivially");
  // every element acts by an automorphism
  for (int gi = 0; gi < g.order; ++gi) {
    Permutation p = act.perm_of(gi);
    if (!is_bijection(p)) throw ValidationError("an element acts non-bijectively");
    for (int x = 0; x < a.order; ++x)
      for (int y = 0; y < a.order; ++y)
        if (act.act(gi, a.mul(x, y)) != a.mul(act.act(gi, x), act.act(gi, y)))
          throw ValidationError("element " + std::to_string(gi) +
                                " does not act by an automorphism");
  }
  // homomorphism: (gh).x == g.(h.x) for every pair
  for (int gi = 0; gi < g.order; ++gi)
    for (int hi = 0; hi < g.order; ++hi) {
      int gh = g.mul(gi, hi);
      for (int x = 0; x < a.order; ++x)
        if (act.act(gh, x) != act.act(gi, act.act(hi, x)))
          throw ValidationError("assignment is not a homomorphism at pair (" +
                                std::to_string(gi) + "," + std::to_string(hi) + ")");
    }
}

}  // namespace detail

/// Action from one permutation of A's indices per element of G.
inline Action action_from_perms(GroupRef g, GroupRef a, const std::vector<Permutation>& per_element) {
  if (per_element.size() != static_cast<size_t>(g->order))
    throw ShapeMismatch("need exactly one permutation per actor element");
  Action act;
  act.actor = std::move(g);
  act.target = std::move(a);
  act.table.resize(static_cast<size_t>(act.actor->order) * act.target->order);
  for (int gi = 0; gi < act.actor->order; ++gi) {
    require_permutation(per_element[static_cast<size_t>(gi)], act.target->order);
    for (int x = 0; x < act.target->order; ++x)
      act.table[static_cast<size_t>(gi) * act.target->order + x] =
          per_element[static_cast<size_t>(gi)](x);
  }
  detail::validate_action(act);
  return act;
}

/// Action from images of the actor's generators, extended along the Cayley
/// graph. The extension is then validated in full.
inline Action action_from_generator_images(GroupRef g, GroupRef a,
                                           const std::vector<Permutation>& images) {
  if (images.size() != g->generators.size())
    throw ShapeMismatch("need exactly one image per generator");
  for (const auto& p : images) require_permutation(p, a->order);

  std::vector<Permutation> per_element(static_cast<size_t>(g->order));
  std::vector<char> known(static_cast<size_t>(g->order), 0);
  per_element[static_cast<size_t>(g->identity)] = Permutation::identity(a->order);
  known[static_cast<size_t>(g->identity)] = 1;
  std::vector<int> frontier{g->identity};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (size_t k = 0; k < g->generators.size(); ++k) {
      int y = g->mul(x, g->generators[k]);
      Permutation img = compose(per_element[static_cast<size_t>(x)], images[k]);
      if (!known[static_cast<size_t>(y)]) {
        per_element[static_cast<size_t>(y)] = std::move(img);
        known[static_cast<size_t>(y)] = 1;
        frontier.push_back(y);
      } else if (!(per_element[static_cast<size_t>(y)] == img)) {
        throw ValidationError("generator images do not satisfy the actor's relations");
      }
    }
  }
  return action_from_perms(std::move(g), std::move(a), per_element);
}

inline Action trivial_action(GroupRef g, GroupRef a) {
  std::vector<Permutation> per(static_cast<size_t>(g->order), Permutation::identity(a->order));
  return action_from_perms(std::move(g), std::move(a), per);
}

/// G acting on itself by conjugation: g.a = g a g^-1.
inline Action conjugation_action(GroupRef g) {
  std::vector<Permutation> per(static_cast<size_t>(g->order));
  for (int gi = 0; gi < g->order; ++gi) {
    Permutation p;
    p.images.resize(static_cast<size_t>(g->order));
    for (int x = 0; x < g->order; ++x) p.images[static_cast<size_t>(x)] = g->conj(gi, x);
    per[static_cast<size_t>(gi)] = std::move(p);
  }
  GroupRef target = g;
  return action_from_perms(std::move(g), std::move(target), per);
}

// ---------------------------------------------------------------------------
// Mixed commutators and the G-commutator series
//
// Conventions, fixed project-wide:
//   [g,a] = (g.a^-1) a   in A, for g in G, a in A
//   [a,g] = a^-1 (g.a)   in A
//   [g,h] = g^-1 h^-1 g h   in G
// Products in A are evaluated left to right.

/// [g,a] = (g.a^-1)a.
inline int mixed_bracket_ga(const Action& act, int g, int a) {
  const GroupTable& t = *act.target;
  return t.mul(act.act(g, t.inv(a)), a);
}

/// [a,g] = a^-1 (g.a).
inline int mixed_bracket_ag(const Action& act, int a, int g) {
  const GroupTable& t = *act.target;
  return t.mul(t.inv(a), act.act(g, a));
}

/// Subgroup of A generated by {[s,b] : s in S, b in B}.
inline Subgroup mixed_commutator(const Action& act, const Subgroup& s, const Subgroup& b) {
  if (s.parent != act.actor) throw MismatchedParents("first argument must live in the actor");
  if (b.parent != act.target) throw MismatchedParents("second argument must live in the target");
  std::set<int> seeds;
  for (int g : s.members)
    for (int a : b.members) seeds.insert(mixed_bracket_ga(act, g, a));
  return subgroup_closure(act.target, {seeds.begin(), seeds.end()});
}

/// The G-commutator series: terms[0] = A, terms[n] generated by
/// {[g,a] : g in G, a in terms[n-1]}.
inline SeriesReport gamma_series(const Action& act, int depth_cap = -1) {
  if (depth_cap < 0) depth_cap = act.target->order;
  SeriesReport rep;
  rep.terms.push_back(full_subgroup(act.target));
  const Subgroup whole_actor = full_subgroup(act.actor);
  for (int n = 1; n <= depth_cap; ++n) {
    Subgroup next = mixed_commutator(act, whole_actor, rep.terms.back());
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

/// Nilpotency order of the action, when the series reaches {1}.
inline std::optional<int> action_nil_order(const Action& act) {
  SeriesReport rep = gamma_series(act);
  if (rep.nilpotent()) return rep.value;
  return std::nullopt;
}

/// Is the member set invariant under every acting automorphism?
inline bool is_invariant_subgroup(const Action& act, const Subgroup& b) {
  if (b.parent != act.target) throw MismatchedParents("subgroup must live in the target");
  for (int g = 0; g < act.actor->order; ++g)
    for (int x : b.members)
      if (!b.contains(act.act(g, x))) return false;
  return true;
}

/// Restriction of the action to an invariant subgroup, re-indexed as a
/// standalone table.
struct RestrictedAction {
  Action action;
  SubTable carrier;
};

inline RestrictedAction restrict_action(const Action& act, const Subgroup& b) {
  if (!is_invariant_subgroup(act, b))
    throw ValidationError("cannot restrict to a non-invariant subgroup");
  SubTable st = subgroup_to_table(b);
  std::vector<Permutation> per(static_cast<size_t>(act.actor->order));
  for (int g = 0; g < act.actor->order; ++g) {
    Permutation p;
    p.images.resize(static_cast<size_t>(st.group->order));
    for (int i = 0; i < st.group->order; ++i)
      p.images[static_cast<size_t>(i)] =
          st.from_parent[static_cast<size_t>(act.act(g, st.to_parent[static_cast<size_t>(i)]))];
    per[static_cast<size_t>(g)] = std::move(p);
  }
  Action res = action_from_perms(act.actor, st.group, per);
  return RestrictedAction{std::move(res), std::move(st)};
}

/// Quotient of A by gamma term 1 with the induced action. The returned
/// action has been verified trivial; a failure here would falsify a
/// structural guarantee, so it raises InternalInvariantViolation.
struct QuotientAction {
  Quotient carrier;  // A / Gamma^1
  Action induced;
  bool induced_trivial = false;
};

inline QuotientAction quotient_action(const Action& act) {
  Subgroup gamma1 = mixed_commutator(act, full_subgroup(act.actor), full_subgroup(act.target));
  if (!is_normal(act.target, gamma1))
    throw InternalInvariantViolation("gamma term 1 is not normal in the target");
  if (!is_invariant_subgroup(act, gamma1))
    throw InternalInvariantViolation("gamma term 1 is not invariant under the action");
  Quotient q = quotient(act.target, gamma1);
  std::vector<Permutation> per(static_cast<size_t>(act.actor->order));
  for (int g = 0; g < act.actor->order; ++g) {
    Permutation p;
    p.images.assign(static_cast<size_t>(q.group->order), -1);
    for (int x = 0; x < act.target->order; ++x) {
      int from = q.projection[static_cast<size_t>(x)];
      int to = q.projection[static_cast<size_t>(act.act(g, x))];
      if (p.images[static_cast<size_t>(from)] < 0)
        p.images[static_cast<size_t>(from)] = to;
      else if (p.images[static_cast<size_t>(from)] != to)
        throw InternalInvariantViolation("induced quotient action is ill-defined");
    }
    per[static_cast<size_t>(g)] = std::move(p);
  }
  Action induced = action_from_perms(act.actor, q.group, per);
  bool trivial = true;
  for (int g = 0; g < act.actor->order && trivial; ++g)
    trivial = is_identity(induced.perm_of(g));
  if (!trivial)
    throw InternalInvariantViolation("induced action on the quotient is not trivial");
  return QuotientAction{std::move(q), std::move(induced), trivial};
}

// ---------------------------------------------------------------------------
// Identity and containment checkers

/// One instance of the mixed Witt-Hall identity:
///   [[f^-1,g^-1], g.b] b^-1 [[g,b^-1], f] b [[f,b], f g f^-1] = 1.
inline bool check_witt_hall(const Action& act, int f, int g, int b) {
  const GroupTable& gt = *act.actor;
  const GroupTable& at = *act.target;

  int c1 = gt.mul(gt.mul(f, g), gt.mul(gt.inv(f), gt.inv(g)));  // [f^-1, g^-1]
  int gb = act.act(g, b);
  int term1 = mixed_bracket_ga(act, c1, gb);

  int term2 = at.inv(b);

  int gb_inv = mixed_bracket_ga(act, g, at.inv(b));  // [g, b^-1]
  int term3 = mixed_bracket_ag(act, gb_inv, f);      // [[g,b^-1], f]

  int term4 = b;

  int fb = mixed_bracket_ga(act, f, b);               // [f, b]
  int fgf = gt.mul(gt.mul(f, g), gt.inv(f));          // f g f^-1
  int term5 = mixed_bracket_ag(act, fb, fgf);         // [[f,b], fgf^-1]

  int prod = at.mul(at.mul(at.mul(at.mul(term1, term2), term3), term4), term5);
  return prod == at.identity;
}

/// Exhaustive Witt-Hall check over all triples; returns the number of
/// triples verified, or throws nothing and reports the first failure.
struct WittHallResult {
  bool holds = true;
  long long triples = 0;
  int f = -1, g = -1, b = -1;  // first failing triple, if any
};

inline WittHallResult check_witt_hall_all(const Action& act) {
  WittHallResult r;
  for (int f = 0; f < act.actor->order; ++f)
    for (int g = 0; g < act.actor->order; ++g)
      for (int b = 0; b < act.target->order; ++b) {
        ++r.triples;
        if (!check_witt_hall(act, f, g, b)) {
          r.holds = false;
          r.f = f;
          r.g = g;
          r.b = b;
          return r;
        }
      }
  return r;
}

/// [[H,K],A] is contained in < [K,[H,A]], [H,[K,A]] >, for K normal in H.
inline bool check_jo2(const Action& act, const Subgroup& h, const Subgroup& k) {
  if (h.parent != act.actor || k.parent != act.actor)
    throw MismatchedParents("subgroups must live in the actor");
  if (!subgroup_leq(k, h)) throw ValidationError("second subgroup must lie inside the first");
  // normality of K in H
  for (int x : h.members)
    for (int m : k.members)
      if (!k.contains(act.actor->conj(x, m))) throw NotNormal("K is not normal in H");

  Subgroup hk = commutator_subgroup(act.actor, h, k);
  Subgroup whole = full_subgroup(act.target);
  Subgroup lhs = mixed_commutator(act, hk, whole);

  Subgroup ha = mixed_commutator(act, h, whole);
  Subgroup ka = mixed_commutator(act, k, whole);
  Subgroup r1 = mixed_commutator(act, k, ha);
  Subgroup r2 = mixed_commutator(act, h, ka);
  std::vector<int> seed = r1.members;
  seed.insert(seed.end(), r2.members.begin(), r2.members.end());
  Subgroup rhs = subgroup_closure(act.target, seed);
  return subgroup_leq(lhs, rhs);
}

/// [Gamma^n(G), Gamma^m_G(A)] is contained in Gamma^{n+m+1}_G(A) for all
/// n, m with n+m+1 <= nil order. NotApplicable when the action is not
/// nilpotent.
struct Jo3Result {
  CheckOutcome outcome = CheckOutcome::NotApplicable;
  int nil_order = -1;
  int fail_n = -1, fail_m = -1;
};

inline Jo3Result check_jo3(const Action& act, int depth_cap = -1) {
  Jo3Result r;
  SeriesReport gamma = gamma_series(act, depth_cap);
  if (!gamma.nilpotent()) return r;
  r.nil_order = gamma.value;
  SeriesReport lcs = lower_central_series(act.actor, r.nil_order + 1);
  r.outcome = CheckOutcome::Pass;
  for (int n = 0; n + 1 <= r.nil_order; ++n)
    for (int m = 0; n + m + 1 <= r.nil_order; ++m) {
      Subgroup lhs = mixed_commutator(act, lcs.term(n), gamma.term(m));
      if (!subgroup_leq(lhs, gamma.term(n + m + 1))) {
        r.outcome = CheckOutcome::Fail;
        r.fail_n = n;
        r.fail_m = m;
        return r;
      }
    }
  return r;
}

/// The faithful image of the actor: G / ker(G -> Aut(A)), acting on A.
inline Action faithful_image_action(const Action& act) {
  std::vector<int> kernel_members;
  for (int g = 0; g < act.actor->order; ++g)
    if (is_identity(act.perm_of(g))) kernel_members.push_back(g);
  Subgroup kernel;
  kernel.parent = act.actor;
  kernel.members = std::move(kernel_members);
  kernel.generators = kernel.members;
  Quotient q = quotient(act.actor, kernel);
  // one representative per coset acts; well-defined because the kernel acts
  // trivially
  std::vector<Permutation> per(static_cast<size_t>(q.group->order),
                               Permutation::identity(act.target->order));
  for (int g = 0; g < act.actor->order; ++g)
    per[static_cast<size_t>(q.projection[static_cast<size_t>(g)])] = act.perm_of(g);
  return action_from_perms(q.group, act.target, per);
}

/// nil G <= nil_G A - 1 for G acting faithfully (the bound is applied to
/// the faithful image of the actor). NotApplicable when the action is not
/// nilpotent.
struct NilBoundResult {
  CheckOutcome outcome = CheckOutcome::NotApplicable;
  int nil_action = -1;
  int nil_group = -1;  // -1 when the image group is not nilpotent
};

inline NilBoundResult nil_bound_check(const Action& act) {
  NilBoundResult r;
  auto nil_a = action_nil_order(act);
  if (!nil_a) return r;
  r.nil_action = *nil_a;
  Action faithful = faithful_image_action(act);
  auto nil_g = nilpotency_class(faithful.actor);
  if (!nil_g) {
    r.outcome = CheckOutcome::Fail;  // the bound forces nilpotency of G
    return r;
  }
  r.nil_group = *nil_g;
  r.outcome = (r.nil_group <= r.nil_action - 1) ? CheckOutcome::Pass : CheckOutcome::Fail;
  return r;
}

}  // namespace nilact
