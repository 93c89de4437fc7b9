#pragma once

#include <numeric>
#include <vector>

#include "nilact/action.hpp"
#include "nilact/error.hpp"
#include "nilact/group.hpp"
#include "nilact/numutil.hpp"

namespace nilact {

namespace detail {

inline int table_pow(const GroupTable& g, int x, long long e) {
  int r = g.identity;
  int base = x;
  while (e > 0) {
    if (e & 1) r = g.mul(r, base);
    base = g.mul(base, base);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

inline void require_nilpotent(const GroupRef& g) {
  if (!is_nilpotent(g)) throw NotNilpotent("group is not nilpotent");
}

/// The p-part of an element of a nilpotent group: with |g| = p^a m,
/// gcd(p, m) = 1, returns g^u for u = 1 (mod p^a), u = 0 (mod m).
inline int p_component(const GroupRef& g, int x, long long p, bool verified_nilpotent = false) {
  if (!detail::is_prime(p) && p != 0) throw ValidationError("p must be prime or 0");
  if (!verified_nilpotent) require_nilpotent(g);
  if (p == 0) return g->identity;
  long long ord = element_order(*g, x);
  long long pa = 1;
  while (ord % p == 0) {
    ord /= p;
    pa *= p;
  }
  const long long m = ord;  // prime-to-p part
  if (pa == 1) return g->identity;
  // u = m * (m^-1 mod pa): 1 mod pa and 0 mod m
  long long minv = 0;
  for (long long t = 1; t < pa; ++t)
    if ((m % pa) * t % pa == 1) {
      minv = t;
      break;
    }
  return detail::table_pow(*g, x, m * minv);
}

/// p-localization of a finite nilpotent group: the subgroup of p-elements
/// together with the morphism g -> p_component(g). p = 0 yields the trivial
/// group and the constant morphism.
struct Localization {
  SubTable carrier;            // the p-part as a standalone table
  std::vector<int> morphism;   // parent index -> localized index
  Subgroup part;               // the p-part inside the parent
};

inline Localization localize_group(const GroupRef& g, long long p) {
  require_nilpotent(g);
  std::vector<int> members;
  if (p == 0) {
    members.push_back(g->identity);
  } else {
    if (!detail::is_prime(p)) throw ValidationError("p must be prime or 0");
    for (int x = 0; x < g->order; ++x) {
      long long ord = element_order(*g, x);
      while (ord % p == 0) ord /= p;
      if (ord == 1) members.push_back(x);
    }
  }
  Subgroup part;
  part.parent = g;
  part.members = members;
  part.generators = members;
  {
    // the p-elements of a nilpotent group form a subgroup; verify
    Subgroup closed = subgroup_closure(g, members);
    if (closed.members != part.members)
      throw InternalInvariantViolation("p-elements are not closed under multiplication");
  }
  Localization loc{subgroup_to_table(part), {}, std::move(part)};
  loc.morphism.resize(static_cast<size_t>(g->order));
  for (int x = 0; x < g->order; ++x) {
    int px = p_component(g, x, p, /*verified_nilpotent=*/true);
    int s = loc.carrier.from_parent[static_cast<size_t>(px)];
    if (s < 0) throw InternalInvariantViolation("p-part fell outside the p-subgroup");
    loc.morphism[static_cast<size_t>(x)] = s;
  }
  // morphism must be a homomorphism
  for (int x = 0; x < g->order; ++x)
    for (int y = 0; y < g->order; ++y)
      if (loc.morphism[static_cast<size_t>(g->mul(x, y))] !=
          loc.carrier.group->mul(loc.morphism[static_cast<size_t>(x)],
                                 loc.morphism[static_cast<size_t>(y)]))
        throw InternalInvariantViolation("localization morphism is not a homomorphism");
  return loc;
}

/// The induced action on the p-localization of a nilpotent target. Each
/// acting automorphism preserves element orders, hence the p-part; this is
/// still verified before restriction.
struct LocalizedAction {
  Action action;
  Localization loc;
};

inline LocalizedAction localize_action(const Action& act, long long p) {
  Localization loc = localize_group(act.target, p);
  if (!is_invariant_subgroup(act, loc.part))
    throw InternalInvariantViolation("the p-part is not invariant under the action");
  std::vector<Permutation> per(static_cast<size_t>(act.actor->order));
  const int n = loc.carrier.group->order;
  for (int g = 0; g < act.actor->order; ++g) {
    Permutation perm;
    perm.images.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      perm.images[static_cast<size_t>(i)] = loc.carrier.from_parent[static_cast<size_t>(
          act.act(g, loc.carrier.to_parent[static_cast<size_t>(i)]))];
    per[static_cast<size_t>(g)] = std::move(perm);
  }
  Action res = action_from_perms(act.actor, loc.carrier.group, per);
  return LocalizedAction{std::move(res), std::move(loc)};
}

/// Gamma^m(A) localized at p equals Gamma^m of the localized action, as
/// subgroups of A_(p).
struct Lema2Result {
  CheckOutcome outcome = CheckOutcome::NotApplicable;
  std::vector<int> lhs;  // p-part of Gamma^m(A), in localized indices
  std::vector<int> rhs;  // Gamma^m of the localized action
};

inline Lema2Result check_lema2(const Action& act, long long p, int m) {
  Lema2Result r;
  if (!is_nilpotent(act.target)) return r;
  LocalizedAction la = localize_action(act, p);

  SeriesReport full = gamma_series(act);
  const Subgroup& gm = full.term(m);
  for (int x : gm.members) {
    int s = la.loc.carrier.from_parent[static_cast<size_t>(x)];
    if (s >= 0) r.lhs.push_back(s);
  }
  std::sort(r.lhs.begin(), r.lhs.end());

  SeriesReport local = gamma_series(la.action);
  r.rhs = local.term(m).members;
  r.outcome = (r.lhs == r.rhs) ? CheckOutcome::Pass : CheckOutcome::Fail;
  return r;
}

/// The action is nilpotent iff all its localizations at primes dividing |A|
/// (and the trivial rationalization) are nilpotent.
struct UfResult {
  CheckOutcome outcome = CheckOutcome::NotApplicable;
  bool global_nilpotent = false;
  std::vector<std::pair<long long, bool>> local_nilpotent;  // per prime
};

inline UfResult check_uf(const Action& act) {
  UfResult r;
  if (!is_nilpotent(act.target)) return r;
  r.global_nilpotent = action_nil_order(act).has_value();
  bool all_local = true;
  for (auto [p, e] : detail::factorize(act.target->order)) {
    LocalizedAction la = localize_action(act, p);
    bool nil = action_nil_order(la.action).has_value();
    r.local_nilpotent.emplace_back(p, nil);
    all_local = all_local && nil;
  }
  // rationalization of a finite group is trivial, hence always nilpotent
  r.outcome = (r.global_nilpotent == all_local) ? CheckOutcome::Pass : CheckOutcome::Fail;
  return r;
}

}  // namespace nilact
