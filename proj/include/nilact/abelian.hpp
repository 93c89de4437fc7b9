#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "nilact/error.hpp"
#include "nilact/group.hpp"
#include "nilact/numutil.hpp"

namespace nilact {

/// A finitely generated abelian group in primary form: a free rank plus
/// prime-power cyclic factors sorted by (prime, exponent).
struct AbGroup {
  int free_rank = 0;
  std::vector<long long> torsion;

  /// Accepts arbitrary factor orders >= 2 (0 denoting a free factor) and
  /// produces the primary decomposition.
  static AbGroup from_factors(const std::vector<long long>& factors) {
    AbGroup a;
    for (long long d : factors) {
      if (d == 0) {
        ++a.free_rank;
        continue;
      }
      if (d == 1) continue;
      if (d < 0) throw ValidationError("negative cyclic factor order");
      for (auto [p, e] : detail::factorize(d)) a.torsion.push_back(detail::ipow(p, e));
    }
    a.canonicalize();
    return a;
  }

  void canonicalize() {
    std::sort(torsion.begin(), torsion.end(), [](long long x, long long y) {
      auto fx = detail::factorize(x)[0], fy = detail::factorize(y)[0];
      return fx.first != fy.first ? fx.first < fy.first : x < y;
    });
  }

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  int torsion_count() const { return static_cast<int>(torsion.size()); }
  int dims() const { return free_rank + torsion_count(); }

  long long torsion_order() const {
    long long n = 1;
    for (long long d : torsion) n *= d;
    return n;
  }

  /// Distinct primes dividing the torsion order.
  std::vector<long long> torsion_primes() const {
    std::set<long long> ps;
    for (long long d : torsion) ps.insert(detail::factorize(d)[0].first);
    return {ps.begin(), ps.end()};
  }

  bool is_p_group(long long p) const {
    if (free_rank != 0 || torsion.empty()) return false;
    for (long long d : torsion)
      if (detail::factorize(d)[0].first != p) return false;
    return true;
  }

  /// Exponent of a finite p-group (the largest factor).
  long long exponent() const {
    long long e = 1;
    for (long long d : torsion) e = std::lcm(e, d);
    return e;
  }

  /// Modulus of coordinate i: 0 for free coordinates.
  long long modulus(int i) const {
    return i < free_rank ? 0 : torsion[static_cast<size_t>(i - free_rank)];
  }

  bool operator==(const AbGroup&) const = default;

  std::string describe() const {
    std::string s;
    for (int i = 0; i < free_rank; ++i) s += s.empty() ? "Z" : " + Z";
    for (long long d : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
  }
};

/// A homomorphism between abelian groups as an integer matrix: column j
/// holds the image coordinates of source generator j, free coordinates
/// first. Entries into torsion rows are stored reduced.
struct AbHom {
  AbGroup source;
  AbGroup target;
  std::vector<long long> m;  // target.dims() x source.dims(), row-major

  long long at(int i, int j) const {
    return m[static_cast<size_t>(i) * source.dims() + j];
  }
  long long& at(int i, int j) { return m[static_cast<size_t>(i) * source.dims() + j]; }

  bool operator==(const AbHom&) const = default;
};

/// Validates the congruence conditions and returns the reduced form.
inline AbHom make_hom(const AbGroup& source, const AbGroup& target,
                      const std::vector<long long>& entries) {
  const int rows = target.dims(), cols = source.dims();
  if (entries.size() != static_cast<size_t>(rows) * cols)
    throw ShapeMismatch("matrix shape does not match group dimensions");
  AbHom f{source, target, entries};
  for (int i = 0; i < rows; ++i) {
    const long long di = target.modulus(i);
    for (int j = 0; j < cols; ++j) {
      const long long dj = source.modulus(j);
      long long v = f.at(i, j);
      if (di == 0) {
        // free row: a torsion generator must map to an element its own
        // order kills, which in a free group forces 0
        if (dj != 0 && v != 0)
          throw ValidationError("torsion generator mapped to nonzero free coordinate");
      } else {
        v = detail::mod_reduce(v, di);
        if (dj != 0 && (v * dj) % di != 0)
          throw ValidationError("entry " + std::to_string(v) + " at (" + std::to_string(i) +
                                "," + std::to_string(j) + ") violates order congruence");
        f.at(i, j) = v;
      }
    }
  }
  return f;
}

inline AbHom identity_hom(const AbGroup& a) {
  const int d = a.dims();
  std::vector<long long> m(static_cast<size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) m[static_cast<size_t>(i) * d + i] = 1;
  return make_hom(a, a, m);
}

inline bool is_identity(const AbHom& f) {
  if (!(f.source == f.target)) return false;
  return f == identity_hom(f.source);
}

/// compose(f, g) = f after g.
inline AbHom compose(const AbHom& f, const AbHom& g) {
  if (!(g.target == f.source)) throw ShapeMismatch("composition shapes do not match");
  const int rows = f.target.dims(), mid = f.source.dims(), cols = g.source.dims();
  std::vector<long long> m(static_cast<size_t>(rows) * cols, 0);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < mid; ++k) {
      if (f.at(i, k) == 0) continue;
      for (int j = 0; j < cols; ++j) m[static_cast<size_t>(i) * cols + j] += f.at(i, k) * g.at(k, j);
    }
  return make_hom(g.source, f.target, m);
}

namespace detail {

inline long long int_det(std::vector<long long> a, int n) {
  // fraction-free Gaussian elimination (Bareiss)
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[static_cast<size_t>(k) * n + k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<size_t>(i) * n + k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(k) * n + j], a[static_cast<size_t>(swap_row) * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[static_cast<size_t>(i) * n + j] =
            (a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(k) * n + k] -
             a[static_cast<size_t>(i) * n + k] * a[static_cast<size_t>(k) * n + j]) /
            prev;
      }
    prev = a[static_cast<size_t>(k) * n + k];
  }
  return n == 0 ? 1 : sign * a[static_cast<size_t>(n - 1) * n + (n - 1)];
}

inline bool invertible_mod_p(std::vector<long long> a, int n, long long p) {
  for (auto& v : a) v = mod_reduce(v, p);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (a[static_cast<size_t>(i) * n + col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    for (int j = 0; j < n; ++j)
      std::swap(a[static_cast<size_t>(rank) * n + j], a[static_cast<size_t>(pivot) * n + j]);
    // normalize pivot row
    long long inv = 1, piv = a[static_cast<size_t>(rank) * n + col];
    for (long long t = 1; t < p; ++t)
      if ((piv * t) % p == 1) {
        inv = t;
        break;
      }
    for (int j = 0; j < n; ++j)
      a[static_cast<size_t>(rank) * n + j] = (a[static_cast<size_t>(rank) * n + j] * inv) % p;
    for (int i = 0; i < n; ++i) {
      if (i == rank) continue;
      long long factor = a[static_cast<size_t>(i) * n + col];
      if (!factor) continue;
      for (int j = 0; j < n; ++j)
        a[static_cast<size_t>(i) * n + j] =
            mod_reduce(a[static_cast<size_t>(i) * n + j] - factor * a[static_cast<size_t>(rank) * n + j], p);
    }
    ++rank;
  }
  return rank == n;
}

}  // namespace detail

// forward declarations for the Z/p functors (defined below)
inline AbGroup tensor_zp(const AbGroup& a, long long p);
inline AbHom induced_tensor(const AbHom& f, long long p);

/// Automorphism criterion: the free block must lie in GL(Z) and, for each
/// prime p dividing the torsion order, the induced map on A (x) Z/p must be
/// invertible.
inline bool is_automorphism(const AbHom& f) {
  if (!(f.source == f.target)) throw ShapeMismatch("automorphism test requires an endomorphism");
  const AbGroup& a = f.source;
  const int k = a.free_rank;
  if (k > 0) {
    std::vector<long long> block(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) block[static_cast<size_t>(i) * k + j] = f.at(i, j);
    long long det = detail::int_det(block, k);
    if (det != 1 && det != -1) return false;
  }
  for (long long p : a.torsion_primes()) {
    AbHom t = induced_tensor(f, p);
    const int n = t.source.dims();
    // restrict to the torsion part of the tensor reduction: with the free
    // block already unimodular, invertibility of the full reduction and of
    // the torsion block agree, so test the full block directly
    if (!detail::invertible_mod_p(t.m, n, p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bridge to dense tables

/// A finite AbGroup as a GroupTable; element indices are mixed-radix tuples
/// over the torsion factors, so index 0 is the identity.
struct AbTable {
  GroupRef table;
  AbGroup shape;

  std::vector<long long> coords_of(int index) const {
    std::vector<long long> c(static_cast<size_t>(shape.torsion_count()));
    for (int i = shape.torsion_count() - 1; i >= 0; --i) {
      long long d = shape.torsion[static_cast<size_t>(i)];
      c[static_cast<size_t>(i)] = index % d;
      index = static_cast<int>(index / d);
    }
    return c;
  }

  int index_of(const std::vector<long long>& coords) const {
    long long idx = 0;
    for (int i = 0; i < shape.torsion_count(); ++i) {
      long long d = shape.torsion[static_cast<size_t>(i)];
      idx = idx * d + detail::mod_reduce(coords[static_cast<size_t>(i)], d);
    }
    return static_cast<int>(idx);
  }
};

inline AbTable ab_to_table(const AbGroup& a, int order_cap = kDefaultOrderCap) {
  if (!a.is_finite()) throw TooLarge("cannot tabulate a group of positive free rank");
  long long n = a.torsion_order();
  if (n > order_cap)
    throw TooLarge("group order " + std::to_string(n) + " exceeds cap " +
                   std::to_string(order_cap));
  AbTable at;
  at.shape = a;
  auto table = std::make_shared<GroupTable>();
  const int order = static_cast<int>(n);
  table->order = order;
  table->identity = 0;
  table->mul_table.resize(static_cast<size_t>(order) * order);
  table->inv_table.resize(static_cast<size_t>(order));

  const int t = a.torsion_count();
  std::vector<long long> ca(static_cast<size_t>(t)), cb(static_cast<size_t>(t)), cc(static_cast<size_t>(t));
  at.table = table;  // coords_of needs shape only; safe before fill
  for (int x = 0; x < order; ++x) {
    ca = at.coords_of(x);
    for (int i = 0; i < t; ++i) cc[static_cast<size_t>(i)] = -ca[static_cast<size_t>(i)];
    table->inv_table[static_cast<size_t>(x)] = at.index_of(cc);
    for (int y = 0; y < order; ++y) {
      cb = at.coords_of(y);
      for (int i = 0; i < t; ++i) cc[static_cast<size_t>(i)] = ca[static_cast<size_t>(i)] + cb[static_cast<size_t>(i)];
      table->mul_table[detail::idx(x, order, y)] = at.index_of(cc);
    }
  }
  table->labels.reserve(static_cast<size_t>(order));
  for (int x = 0; x < order; ++x) {
    std::string s = "(";
    auto c = at.coords_of(x);
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    table->labels.push_back(s + ")");
  }
  for (int i = 0; i < t; ++i) {
    std::vector<long long> unit(static_cast<size_t>(t), 0);
    unit[static_cast<size_t>(i)] = 1;
    table->generators.push_back(at.index_of(unit));
  }
  return at;
}

/// The permutation a finite-group endomorphism induces on the table.
/// Throws if the matrix fails to act bijectively.
inline Permutation hom_to_perm(const AbHom& f, const AbTable& at, bool require_bijective = true) {
  const AbGroup& a = at.shape;
  if (!(f.source == a) || !(f.target == a))
    throw ShapeMismatch("endomorphism does not match table shape");
  const int t = a.torsion_count();
  Permutation p;
  p.images.resize(static_cast<size_t>(at.table->order));
  std::vector<long long> img(static_cast<size_t>(t));
  for (int x = 0; x < at.table->order; ++x) {
    auto c = at.coords_of(x);
    for (int i = 0; i < t; ++i) {
      long long v = 0;
      for (int j = 0; j < t; ++j) v += f.at(i, j) * c[static_cast<size_t>(j)];
      img[static_cast<size_t>(i)] = v;
    }
    p.images[static_cast<size_t>(x)] = at.index_of(img);
  }
  if (require_bijective && !is_bijection(p)) throw NotAutomorphism("matrix does not act bijectively");
  return p;
}

// ---------------------------------------------------------------------------
// Automorphism enumeration

namespace detail {

/// Valid residues for entry (i,j) of an endomorphism: multiples of
/// d_i / gcd(d_i, d_j) mod d_i. The count is gcd(d_i, d_j).
inline long long entry_choices(long long di, long long dj) { return std::gcd(di, dj); }

}  // namespace detail

/// Enumerates the automorphisms of a finite AbGroup in a fixed odometer
/// order, identity first. The filter, when given, prunes which
/// automorphisms are retained (it does not change enumeration cost).
template <typename Filter>
std::vector<AbHom> enumerate_automorphisms_if(const AbGroup& a, Filter&& keep,
                                              size_t candidate_limit = 1u << 24) {
  if (!a.is_finite())
    throw TooLarge("automorphism enumeration requires a finite group");
  const int t = a.torsion_count();
  if (t == 0) {
    std::vector<AbHom> out;
    AbHom id = identity_hom(a);
    if (keep(id)) out.push_back(id);
    return out;
  }

  // enumeration cost = product of per-entry choice counts
  double cost = 1;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      cost *= static_cast<double>(detail::entry_choices(a.torsion[static_cast<size_t>(i)],
                                                        a.torsion[static_cast<size_t>(j)]));
  if (cost > static_cast<double>(candidate_limit))
    throw TooLarge("automorphism enumeration would scan " + std::to_string(cost) +
                   " candidate matrices");

  struct Slot {
    int i, j;
    long long stride;
    long long count;
  };
  std::vector<Slot> slots;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      long long di = a.torsion[static_cast<size_t>(i)], dj = a.torsion[static_cast<size_t>(j)];
      long long g = detail::entry_choices(di, dj);
      slots.push_back({i, j, di / g, g});
    }

  std::vector<long long> counter(slots.size(), 0);
  std::vector<AbHom> out;
  AbHom f{a, a, std::vector<long long>(static_cast<size_t>(t) * t, 0)};
  bool running = true;
  while (running) {
    for (size_t s = 0; s < slots.size(); ++s)
      f.at(slots[s].i, slots[s].j) = counter[s] * slots[s].stride;
    if (is_automorphism(f) && keep(f)) out.push_back(f);
    // advance odometer
    size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++counter[s] < slots[s].count) break;
      counter[s] = 0;
      if (s == 0) running = false;
    }
    if (slots.empty()) break;
  }

  // identity first, remaining in enumeration order
  AbHom id = identity_hom(a);
  auto it = std::find(out.begin(), out.end(), id);
  if (it != out.end()) std::rotate(out.begin(), it, it + 1);
  return out;
}

inline std::vector<AbHom> enumerate_automorphisms(const AbGroup& a,
                                                  size_t candidate_limit = 1u << 24) {
  return enumerate_automorphisms_if(a, [](const AbHom&) { return true; }, candidate_limit);
}

/// The automorphism group as a table whose element i is elems[i], with
/// multiplication given by composition.
struct AutGroup {
  GroupRef table;
  std::vector<AbHom> elems;
  AbGroup base;
};

inline AutGroup aut_group_from_members(const AbGroup& a, std::vector<AbHom> members,
                                       int order_cap = kDefaultOrderCap) {
  if (members.size() > static_cast<size_t>(order_cap))
    throw TooLarge("automorphism group of order " + std::to_string(members.size()) +
                   " exceeds table cap " + std::to_string(order_cap));
  std::map<std::vector<long long>, int> index_of;
  for (size_t i = 0; i < members.size(); ++i) index_of[members[i].m] = static_cast<int>(i);

  const int n = static_cast<int>(members.size());
  auto table = std::make_shared<GroupTable>();
  table->order = n;
  table->identity = index_of.at(identity_hom(a).m);
  table->mul_table.resize(static_cast<size_t>(n) * n);
  table->inv_table.assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      AbHom c = compose(members[static_cast<size_t>(x)], members[static_cast<size_t>(y)]);
      auto it = index_of.find(c.m);
      if (it == index_of.end())
        throw InternalInvariantViolation("member set not closed under composition");
      table->mul_table[detail::idx(x, n, y)] = it->second;
      if (it->second == table->identity) table->inv_table[static_cast<size_t>(x)] = y;
    }
  for (int x = 0; x < n; ++x)
    if (table->inv_table[static_cast<size_t>(x)] < 0)
      throw InternalInvariantViolation("member set not closed under inversion");
  table->labels.reserve(static_cast<size_t>(n));
  for (const auto& h : members) {
    std::string s = "[";
    for (size_t i = 0; i < h.m.size(); ++i) s += (i ? " " : "") + std::to_string(h.m[i]);
    table->labels.push_back(s + "]");
  }
  AutGroup out{table, std::move(members), a};
  // a small deterministic generating set
  auto mutable_table = std::const_pointer_cast<GroupTable>(out.table);
  mutable_table->generators = small_generating_set(out.table);
  return out;
}

inline AutGroup aut_group(const AbGroup& a, int order_cap = kDefaultOrderCap,
                          size_t candidate_limit = 1u << 24) {
  return aut_group_from_members(a, enumerate_automorphisms(a, candidate_limit), order_cap);
}

// ---------------------------------------------------------------------------
// The Z/p functors

/// Which coordinates of A survive reduction mod p (free ones always do).
inline std::vector<int> mod_p_surviving_coords(const AbGroup& a, long long p) {
  std::vector<int> keep;
  for (int i = 0; i < a.dims(); ++i) {
    long long d = a.modulus(i);
    if (d == 0 || d % p == 0) keep.push_back(i);
  }
  return keep;
}

/// A (x) Z/p: one Z/p per free factor and per torsion factor divisible by p.
inline AbGroup tensor_zp(const AbGroup& a, long long p) {
  AbGroup r;
  r.torsion.assign(mod_p_surviving_coords(a, p).size(), p);
  return r;
}

/// Induced map on A (x) Z/p: entrywise reduction on surviving coordinates.
inline AbHom induced_tensor(const AbHom& f, long long p) {
  auto src = mod_p_surviving_coords(f.source, p);
  auto tgt = mod_p_surviving_coords(f.target, p);
  AbGroup s = tensor_zp(f.source, p), t = tensor_zp(f.target, p);
  std::vector<long long> m(src.size() * tgt.size(), 0);
  for (size_t i = 0; i < tgt.size(); ++i)
    for (size_t j = 0; j < src.size(); ++j)
      m[i * src.size() + j] = detail::mod_reduce(f.at(tgt[i], src[j]), p);
  return make_hom(s, t, m);
}

/// The p-torsion subgroup A[p] = hom(Z/p, A), with its embedding into A.
/// Basis vector i corresponds to (d_i / p) * e_i for each torsion factor
/// divisible by p; free factors contribute nothing.
struct HomZp {
  AbGroup group;                  // (Z/p)^r
  std::vector<int> factor_index;  // which coordinate of A carries each basis vector
  long long p = 0;
};

inline HomZp hom_zp(const AbGroup& a, long long p) {
  HomZp h;
  h.p = p;
  for (int i = a.free_rank; i < a.dims(); ++i)
    if (a.modulus(i) % p == 0) h.factor_index.push_back(i);
  h.group.torsion.assign(h.factor_index.size(), p);
  return h;
}

/// Induced map on A[p]: basis vector j at coordinate cj of order dj maps by
/// f to sum_i f[i][cj]*(dj/p) e_i, re-expressed in the (di/p) e_i basis.
inline AbHom induced_hom_zp(const AbHom& f, long long p) {
  HomZp hs = hom_zp(f.source, p), ht = hom_zp(f.target, p);
  std::vector<long long> m(hs.factor_index.size() * ht.factor_index.size(), 0);
  for (size_t j = 0; j < hs.factor_index.size(); ++j) {
    int cj = hs.factor_index[j];
    long long dj = f.source.modulus(cj);
    for (size_t i = 0; i < ht.factor_index.size(); ++i) {
      int ci = ht.factor_index[i];
      long long di = f.target.modulus(ci);
      long long v = detail::mod_reduce(f.at(ci, cj) * (dj / p), di);
      if (v % (di / p) != 0)
        throw InternalInvariantViolation("image of a p-torsion element is not p-torsion");
      m[i * hs.factor_index.size() + j] = (v / (di / p)) % p;
    }
  }
  return make_hom(hs.group, ht.group, m);
}

/// A / pA = Ext(Z/p, A): realized through coset representatives; one Z/p per
/// free factor and per torsion factor divisible by p.
struct ExtZp {
  AbGroup group;
  std::vector<int> factor_index;  // coordinates of A represented mod p
  long long p = 0;
};

inline ExtZp ext_zp(const AbGroup& a, long long p) {
  ExtZp e;
  e.p = p;
  e.factor_index = mod_p_surviving_coords(a, p);
  e.group.torsion.assign(e.factor_index.size(), p);
  return e;
}

/// Induced map on A/pA via coset representatives: the class of e_j maps to
/// the class of f(e_j).
inline AbHom induced_ext_zp(const AbHom& f, long long p) {
  ExtZp es = ext_zp(f.source, p), et = ext_zp(f.target, p);
  std::vector<long long> m(es.factor_index.size() * et.factor_index.size(), 0);
  for (size_t j = 0; j < es.factor_index.size(); ++j)
    for (size_t i = 0; i < et.factor_index.size(); ++i)
      m[i * es.factor_index.size() + j] =
          detail::mod_reduce(f.at(et.factor_index[i], es.factor_index[j]), p);
  return make_hom(es.group, et.group, m);
}

/// The natural isomorphism Ext(Z/p, A) -> A (x) Z/p. Both functors index
/// their factors by the same surviving coordinates, so the matrix is the
/// identity; it is exposed (and tested) as a map to keep the two routes
/// formally distinct.
inline AbHom tensor_ext_iso(const AbGroup& a, long long p) {
  ExtZp e = ext_zp(a, p);
  AbGroup t = tensor_zp(a, p);
  const int n = e.group.dims();
  std::vector<long long> m(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
  return make_hom(e.group, t, m);
}

}  // namespace nilact
