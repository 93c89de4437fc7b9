#pragma once

// Self-equivalences of Eilenberg-MacLane spaces K(A, n), n >= 2, where the
// equivalence group is realized as Aut(A). Homotopy with Z/p coefficients
// enters through the split sequence
//   0 -> Ext(Z/p, pi_{i+1}) -> pi_i(X; Z/p) -> hom(Z/p, pi_i) -> 0,
// which for K(A, n) is nonzero only in degrees n and n-1.

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <vector>

#include "nilact/abelian.hpp"
#include "nilact/abelian_actions.hpp"
#include "nilact/frattini.hpp"
#include "nilact/group.hpp"

namespace nilact {

struct EMSpace {
  AbGroup coeff;
  int degree = 2;
};

inline EMSpace em_space(AbGroup a, int n) {
  if (n < 2) throw ValidationError("Eilenberg-MacLane degree must be at least 2");
  return EMSpace{std::move(a), n};
}

/// The self-equivalence group of K(A, n) is Aut(A).
inline AutGroup self_equivalences(const EMSpace& x, int order_cap = kDefaultOrderCap,
                                  size_t candidate_limit = 1u << 24) {
  if (!x.coeff.is_finite()) throw TooLarge("self-equivalence table requires finite coefficients");
  return aut_group(x.coeff, order_cap, candidate_limit);
}

/// pi_i(X; Z/p) for X = K(A, n), split into its hom and Ext parts.
struct CoeffHomotopy {
  int degree = 0;
  AbGroup hom_part;  // hom(Z/p, pi_i)
  AbGroup ext_part;  // Ext(Z/p, pi_{i+1})

  AbGroup total() const {
    AbGroup t;
    t.torsion = hom_part.torsion;
    t.torsion.insert(t.torsion.end(), ext_part.torsion.begin(), ext_part.torsion.end());
    return t;
  }
};

inline AbGroup homotopy_group(const EMSpace& x, int i) {
  return i == x.degree ? x.coeff : AbGroup{};
}

inline CoeffHomotopy coeff_homotopy(const EMSpace& x, long long p, int i) {
  CoeffHomotopy c;
  c.degree = i;
  c.hom_part = hom_zp(homotopy_group(x, i), p).group;
  c.ext_part = ext_zp(homotopy_group(x, i + 1), p).group;
  return c;
}

/// The pair of maps an automorphism of A induces on pi_i(X; Z/p).
struct CoeffMap {
  AbHom on_hom;
  AbHom on_ext;
};

inline CoeffMap induced_coeff_map(const EMSpace& x, const AbHom& f, long long p, int i) {
  if (!(f.source == x.coeff) || !(f.target == x.coeff))
    throw ShapeMismatch("map must be an endomorphism of the coefficient group");
  AbHom trivial_map = make_hom(AbGroup{}, AbGroup{}, {});
  CoeffMap m{trivial_map, trivial_map};
  if (i == x.degree) m.on_hom = induced_hom_zp(f, p);
  if (i + 1 == x.degree) m.on_ext = induced_ext_zp(f, p);
  return m;
}

/// Membership in the kernel of E(X) -> prod aut(pi_i(X; Z/p)): identity on
/// the p-torsion subgroup and on the mod-p quotient of A.
inline bool in_eshp(const AbGroup& a, const AbHom& f, long long p) {
  if (!(f.source == a) || !(f.target == a))
    throw ShapeMismatch("membership test requires an endomorphism of A");
  return is_identity(induced_hom_zp(f, p)) && is_identity(induced_ext_zp(f, p));
}

/// Kernel membership computed through the coefficient-homotopy route, over
/// every degree i <= n with a nonzero coefficient group.
inline bool in_eshp_via_coeff(const EMSpace& x, const AbHom& f, long long p) {
  for (int i : {x.degree - 1, x.degree}) {
    CoeffMap m = induced_coeff_map(x, f, p, i);
    if (!is_identity(m.on_hom) || !is_identity(m.on_ext)) return false;
  }
  return true;
}

inline std::vector<AbHom> eshp_members(const AbGroup& a, long long p,
                                       size_t candidate_limit = 1u << 24) {
  return enumerate_automorphisms_if(
      a, [&](const AbHom& f) { return in_eshp(a, f, p); }, candidate_limit);
}

/// The subgroup E_#p(X) of a materialized E(X): the kernel members located
/// inside the automorphism table, with closure verified explicitly.
inline Subgroup eshp(const EMSpace& x, const AutGroup& equivalences, long long p) {
  Subgroup k;
  k.parent = equivalences.table;
  for (size_t i = 0; i < equivalences.elems.size(); ++i)
    if (in_eshp(x.coeff, equivalences.elems[i], p)) k.members.push_back(static_cast<int>(i));
  std::sort(k.members.begin(), k.members.end());
  k.generators = k.members;
  Subgroup closed = subgroup_closure(equivalences.table, k.members);
  if (closed.members != k.members)
    throw InternalInvariantViolation("kernel member set is not closed");
  return k;
}

/// E_#(X): classes inducing the identity on all homotopy groups up to the
/// dimension; for K(A, n) this means the identity on A.
inline Subgroup esharp(const EMSpace& x, const AutGroup& equivalences) {
  Subgroup k;
  k.parent = equivalences.table;
  for (size_t i = 0; i < equivalences.elems.size(); ++i)
    if (is_identity(equivalences.elems[i])) k.members.push_back(static_cast<int>(i));
  std::sort(k.members.begin(), k.members.end());
  k.generators = k.members;
  return k;
}

/// E_#p(X) as a standalone group, built without materializing E(X).
inline AutGroup eshp_group(const EMSpace& x, long long p, int order_cap = kDefaultOrderCap,
                           size_t candidate_limit = 1u << 24) {
  if (!x.coeff.is_finite()) throw TooLarge("kernel enumeration requires finite coefficients");
  return aut_group_from_members(x.coeff, eshp_members(x.coeff, p, candidate_limit), order_cap);
}

/// For a p-group A: E_#p(X) is nilpotent of p-power order, and its quotient
/// by E_#(X) is a p-group.
struct TresResult {
  CheckOutcome outcome = CheckOutcome::NotApplicable;
  long long p = 0;
  long long eshp_order = 0;
  bool p_power = false;
  bool nilpotent = false;
  int nil_class = -1;
  long long esharp_order = 0;
  long long quotient_order = 0;
  bool quotient_p_power = false;
};

inline TresResult check_tres(const EMSpace& x, long long p, int order_cap = kDefaultOrderCap,
                             size_t candidate_limit = 1u << 24) {
  TresResult r;
  r.p = p;
  if (!x.coeff.is_p_group(p)) return r;

  AutGroup k = eshp_group(x, p, order_cap, candidate_limit);
  r.eshp_order = k.table->order;
  long long n = r.eshp_order;
  while (n % p == 0) n /= p;
  r.p_power = (n == 1);

  auto cls = nilpotency_class(k.table);
  r.nilpotent = cls.has_value();
  if (cls) r.nil_class = *cls;

  // E_#(X) inside the kernel group
  Subgroup sharp = esharp(x, k);
  r.esharp_order = sharp.order();
  Quotient q = quotient(k.table, sharp);
  r.quotient_order = q.group->order;
  long long qn = r.quotient_order;
  while (qn % p == 0) qn /= p;
  r.quotient_p_power = (qn == 1);

  r.outcome = (r.p_power && r.nilpotent && r.quotient_p_power) ? CheckOutcome::Pass
                                                               : CheckOutcome::Fail;
  return r;
}

// ---------------------------------------------------------------------------
// Finitely generated coefficients

/// Does the automorphism induce the identity on both pi_*(X; Z/p) parts?
/// For positive free rank the Ext part carries the mod-p reduced free block.
inline bool fg_mod_p_identity(const AbHom& f, long long p) {
  if (!is_automorphism(f)) throw NotAutomorphism("membership test requires an automorphism");
  return in_eshp(f.source, f, p);
}

/// A finite set of primes S such that inducing the identity mod every
/// p in S forces the free block to be the identity matrix: one prime
/// exceeding 1 + max |entry of (freeblock - I)| kills off-identity entries,
/// and the torsion primes pin the torsion-coupled columns.
inline std::vector<long long> forcing_primes(const AbHom& f) {
  if (!is_automorphism(f)) throw NotAutomorphism("forcing set requires an automorphism");
  const AbGroup& a = f.source;
  std::set<long long> primes;
  for (long long p : a.torsion_primes()) primes.insert(p);
  long long max_dev = 0;
  for (int i = 0; i < a.free_rank; ++i)
    for (int j = 0; j < a.free_rank; ++j) {
      long long dev = f.at(i, j) - (i == j ? 1 : 0);
      max_dev = std::max(max_dev, dev < 0 ? -dev : dev);
    }
  if (a.free_rank > 0) {
    long long q = max_dev + 2;
    while (!detail::is_prime(q)) ++q;
    primes.insert(q);
  }
  return {primes.begin(), primes.end()};
}

/// Intersection-of-all-primes membership and the nilpotency of the
/// surviving automorphisms' action, per candidate set.
struct CuatroResult {
  CheckOutcome outcome = CheckOutcome::Fail;
  struct Candidate {
    AbHom map;
    bool survives = false;
    long long failing_prime = 0;
  };
  std::vector<Candidate> candidates;
  std::vector<size_t> survivors;
  bool free_blocks_identity = false;
  bool gamma1_in_torsion = false;
  long long torsion_group_order = 0;  // closure of the survivors' torsion blocks
  bool torsion_action_nilpotent = false;
  int torsion_nil_order = -1;
};

inline CuatroResult check_cuatro(const AbGroup& a, const std::vector<AbHom>& candidate_maps,
                                 int order_cap = kDefaultOrderCap) {
  CuatroResult r;
  for (const AbHom& f : candidate_maps) {
    if (!is_automorphism(f)) throw NotAutomorphism("candidate is not an automorphism");
    CuatroResult::Candidate c{f, true, 0};
    for (long long p : forcing_primes(f))
      if (!fg_mod_p_identity(f, p)) {
        c.survives = false;
        c.failing_prime = p;
        break;
      }
    if (c.survives) r.survivors.push_back(r.candidates.size());
    r.candidates.push_back(std::move(c));
  }

  // survivors have identity free block, hence gamma term 1 inside torsion
  r.free_blocks_identity = true;
  r.gamma1_in_torsion = true;
  for (size_t s : r.survivors) {
    const AbHom& f = r.candidates[s].map;
    for (int i = 0; i < a.free_rank && r.free_blocks_identity; ++i)
      for (int j = 0; j < a.free_rank; ++j)
        if (f.at(i, j) != (i == j ? 1 : 0)) {
          r.free_blocks_identity = false;
          break;
        }
    // (f - 1) applied to any generator must have zero free coordinates
    for (int j = 0; j < a.dims() && r.gamma1_in_torsion; ++j)
      for (int i = 0; i < a.free_rank; ++i)
        if (f.at(i, j) != (i == j ? 1 : 0)) {
          r.gamma1_in_torsion = false;
          break;
        }
  }

  // the survivors' torsion blocks generate a finite automorphism group of
  // the torsion subgroup; its tautological action must be nilpotent
  AbGroup torsion;
  torsion.torsion = a.torsion;
  const int t = torsion.torsion_count();
  auto torsion_block = [&](const AbHom& f) {
    std::vector<long long> m(static_cast<size_t>(t) * t);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) m[static_cast<size_t>(i) * t + j] = f.at(a.free_rank + i, a.free_rank + j);
    return make_hom(torsion, torsion, m);
  };
  std::set<std::vector<long long>> seen;
  std::vector<AbHom> closure{identity_hom(torsion)};
  seen.insert(closure.front().m);
  std::vector<AbHom> frontier = closure;
  std::vector<AbHom> gens;
  for (size_t s : r.survivors) {
    AbHom tb = torsion_block(r.candidates[s].map);
    if (seen.insert(tb.m).second) {
      closure.push_back(tb);
      frontier.push_back(tb);
    }
    gens.push_back(std::move(tb));
  }
  while (!frontier.empty()) {
    AbHom cur = std::move(frontier.back());
    frontier.pop_back();
    for (const AbHom& g : gens) {
      for (AbHom prod : {compose(cur, g), compose(g, cur)}) {
        if (seen.insert(prod.m).second) {
          closure.push_back(prod);
          frontier.push_back(prod);
        }
      }
    }
  }
  AutGroup tg = aut_group_from_members(torsion, closure, order_cap);
  r.torsion_group_order = tg.table->order;
  AbTable tt = ab_to_table(torsion, order_cap);
  Action act = tautological_aut_action(tg, tt);
  auto nil = action_nil_order(act);
  r.torsion_action_nilpotent = nil.has_value();
  if (nil) r.torsion_nil_order = *nil;

  r.outcome = (r.free_blocks_identity && r.gamma1_in_torsion && r.torsion_action_nilpotent)
                  ? CheckOutcome::Pass
                  : CheckOutcome::Fail;
  return r;
}

// ---------------------------------------------------------------------------
// Integer 2x2 witnesses for the fg case

using BigInt = boost::multiprecision::cpp_int;

/// A 2x2 integer matrix with exact entries; determinant must stay +-1 for
/// the inverse to exist.
struct Mat2 {
  std::array<BigInt, 4> a;  // row-major

  static Mat2 identity() { return Mat2{{1, 0, 0, 1}}; }
  BigInt det() const { return a[0] * a[3] - a[1] * a[2]; }
  bool is_identity() const { return a[0] == 1 && a[1] == 0 && a[2] == 0 && a[3] == 1; }
  bool operator==(const Mat2&) const = default;
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
  return Mat2{{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
               x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
}

inline Mat2 inverse(const Mat2& x) {
  BigInt d = x.det();
  if (d != 1 && d != -1) throw NotAutomorphism("matrix is not invertible over the integers");
  return Mat2{{x.a[3] * d, -x.a[1] * d, -x.a[2] * d, x.a[0] * d}};
}

inline Mat2 commutator(const Mat2& x, const Mat2& y) {
  return mul(mul(inverse(x), inverse(y)), mul(x, y));
}

inline bool identity_mod(const Mat2& x, long long p) {
  auto red = [&](const BigInt& v) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r;
  };
  const BigInt one_mod = 1 % p;
  return red(x.a[0]) == one_mod && red(x.a[1]) == 0 && red(x.a[2]) == 0 && red(x.a[3]) == one_mod;
}

/// Iterated left-normed commutators d_1 = [n, m], d_k = [d_{k-1}, m]; each
/// d_k lies in the k-th lower central term of <m, n>, so a nonidentity d_k
/// witnesses that the term is nontrivial.
struct Gl2Witness {
  std::vector<Mat2> chain;
  bool all_nontrivial = false;
};

inline Gl2Witness gl2_lcs_witness(const Mat2& m, const Mat2& n, int depth = 8) {
  Gl2Witness w;
  Mat2 cur = commutator(n, m);
  w.all_nontrivial = true;
  for (int k = 1; k <= depth; ++k) {
    if (k > 1) cur = commutator(cur, m);
    if (cur.det() != 1) throw InternalInvariantViolation("commutator left the special linear group");
    w.all_nontrivial = w.all_nontrivial && !cur.is_identity();
    w.chain.push_back(cur);
  }
  return w;
}

}  // namespace nilact
