#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "nilact/abelian.hpp"
#include "oracles.hpp"

using namespace nilact;

TEST_CASE("primary decomposition from invariant factors") {
  AbGroup a = AbGroup::from_factors({12, 2});
  CHECK(a.free_rank == 0);
  CHECK(a.torsion == std::vector<long long>{2, 4, 3});
  CHECK(a.torsion_order() == 24);
  CHECK(a.torsion_primes() == std::vector<long long>{2, 3});

  AbGroup b = AbGroup::from_factors({0, 4, 0});
  CHECK(b.free_rank == 2);
  CHECK(b.torsion == std::vector<long long>{4});
  CHECK_FALSE(b.is_finite());
}

TEST_CASE("table of Z4 + Z2 is abelian of order 8") {
  AbTable at = ab_to_table(AbGroup::from_factors({4, 2}));
  CHECK(at.table->order == 8);
  CHECK(is_abelian(*at.table));
  CHECK_NOTHROW(check_group_axioms(*at.table));
}

TEST_CASE("table of the trivial group has order 1") {
  AbTable at = ab_to_table(AbGroup::from_factors({}));
  CHECK(at.table->order == 1);
}

TEST_CASE("table of (Z2)^2 is the Klein group") {
  AbTable at = ab_to_table(AbGroup::from_factors({2, 2}));
  CHECK(at.table->order == 4);
  for (int x = 0; x < 4; ++x) CHECK(element_order(*at.table, x) <= 2);
}

TEST_CASE("tabulating an infinite or oversized group fails") {
  CHECK_THROWS_AS(ab_to_table(AbGroup::from_factors({0})), TooLarge);
  CHECK_THROWS_AS(ab_to_table(AbGroup::from_factors({64, 64}), 100), TooLarge);
}

TEST_CASE("multiplication by 3 is an automorphism of Z4, by 2 is not") {
  AbGroup z4 = AbGroup::from_factors({4});
  CHECK(is_automorphism(make_hom(z4, z4, {3})));
  CHECK(is_automorphism(identity_hom(z4)));
  CHECK_FALSE(is_automorphism(make_hom(z4, z4, {2})));
}

TEST_CASE("hom validity conditions") {
  AbGroup z4 = AbGroup::from_factors({4});
  AbGroup z2 = AbGroup::from_factors({2});
  AbGroup z(AbGroup::from_factors({0}));
  // Z/2 -> Z/4 must land in {0, 2}
  CHECK_THROWS_AS(make_hom(z2, z4, {1}), ValidationError);
  CHECK_NOTHROW(make_hom(z2, z4, {2}));
  // torsion cannot map to a free coordinate
  CHECK_THROWS_AS(make_hom(z4, z, {1}), ValidationError);
  // entries are stored reduced
  CHECK(make_hom(z4, z4, {7}).at(0, 0) == 3);
  CHECK_THROWS_AS(make_hom(z4, z4, {1, 2}), ShapeMismatch);
}

TEST_CASE("composition matches pointwise evaluation on the table") {
  // canonical coordinates of Z4 + Z2 are (Z2, Z4)
  AbGroup a = AbGroup::from_factors({4, 2});
  AbTable at = ab_to_table(a);
  AbHom f = make_hom(a, a, {1, 1, 0, 3});
  AbHom g = make_hom(a, a, {1, 0, 2, 1});
  AbHom fg = compose(f, g);
  Permutation pf = hom_to_perm(f, at, false);
  Permutation pg = hom_to_perm(g, at, false);
  Permutation pfg = hom_to_perm(fg, at, false);
  CHECK(pfg == compose(pf, pg));
}

TEST_CASE("aut group of (Z2)^2 is the symmetric group on three letters") {
  AutGroup ag = aut_group(AbGroup::from_factors({2, 2}));
  CHECK(ag.table->order == 6);
  CHECK_FALSE(is_abelian(*ag.table));
  CHECK_NOTHROW(check_group_axioms(*ag.table));
}

TEST_CASE("aut group of Z4 is {x1, x3}") {
  AutGroup ag = aut_group(AbGroup::from_factors({4}));
  CHECK(ag.table->order == 2);
  std::set<long long> entries;
  for (const auto& h : ag.elems) entries.insert(h.at(0, 0));
  CHECK(entries == std::set<long long>{1, 3});
}

TEST_CASE("aut group of Z2 is trivial") {
  CHECK(aut_group(AbGroup::from_factors({2})).table->order == 1);
}

TEST_CASE("aut enumeration agrees with the brute-force table oracle") {
  // a spread of shapes: one factor, repeated factors, mixed primes
  for (auto factors : std::vector<std::vector<long long>>{
           {8}, {2, 2}, {4, 2}, {2, 2, 2}, {4, 4}, {9, 3}, {8, 2}, {4, 2, 3}, {27}}) {
    AbGroup a = AbGroup::from_factors(factors);
    AbTable at = ab_to_table(a);
    auto oracle = oracles::brute_force_aut_perms(a, at);
    auto mine = enumerate_automorphisms(a);
    REQUIRE(mine.size() == oracle.size());
    std::set<Permutation> oset(oracle.begin(), oracle.end());
    for (const auto& h : mine) CHECK(oset.count(hom_to_perm(h, at)) == 1);
  }
}

TEST_CASE("aut table respects the order cap") {
  CHECK_THROWS_AS(aut_group(AbGroup::from_factors({2, 2, 2}), 5), TooLarge);
}

TEST_CASE("tensor with Z/p") {
  CHECK(tensor_zp(AbGroup::from_factors({8}), 2) == AbGroup::from_factors({2}));
  CHECK(tensor_zp(AbGroup::from_factors({9}), 2).is_trivial());
  CHECK(tensor_zp(AbGroup::from_factors({0, 4}), 2) == AbGroup::from_factors({2, 2}));
}

TEST_CASE("induced tensor map is functorial") {
  AbGroup a = AbGroup::from_factors({4, 2});
  AbHom f = make_hom(a, a, {1, 1, 0, 3});
  AbHom g = make_hom(a, a, {1, 3, 2, 1});
  for (long long p : {2LL, 3LL}) {
    CHECK(induced_tensor(compose(f, g), p) ==
          compose(induced_tensor(f, p), induced_tensor(g, p)));
  }
}

TEST_CASE("p-torsion subgroup and its induced maps") {
  AbGroup z4 = AbGroup::from_factors({4});
  HomZp h = hom_zp(z4, 2);
  REQUIRE(h.group == AbGroup::from_factors({2}));
  REQUIRE(h.factor_index == std::vector<int>{0});
  // x3 restricts to the identity on {0, 2}
  CHECK(is_identity(induced_hom_zp(make_hom(z4, z4, {3}), 2)));

  CHECK(hom_zp(AbGroup::from_factors({0, 0, 0}), 5).group.is_trivial());
  CHECK(hom_zp(AbGroup::from_factors({9}), 2).group.is_trivial());
}

TEST_CASE("mod-p quotient and its induced maps") {
  AbGroup z4 = AbGroup::from_factors({4});
  ExtZp e = ext_zp(z4, 2);
  REQUIRE(e.group == AbGroup::from_factors({2}));
  CHECK(is_identity(induced_ext_zp(make_hom(z4, z4, {3}), 2)));
}

TEST_CASE("ext and tensor routes are naturally isomorphic") {
  for (auto factors : std::vector<std::vector<long long>>{{4, 2}, {8}, {9, 3}, {2, 2}}) {
    AbGroup a = AbGroup::from_factors(factors);
    for (long long p : {2LL, 3LL}) {
      AbHom iso = tensor_ext_iso(a, p);
      CHECK(is_automorphism(make_hom(iso.source, iso.source, iso.m)));
      for (const AbHom& f : enumerate_automorphisms(a)) {
        // iso . ext(f) == tensor(f) . iso
        CHECK(compose(iso, induced_ext_zp(f, p)) == compose(induced_tensor(f, p), iso));
      }
    }
  }
}

TEST_CASE("hom and ext ranks agree on finite p-groups") {
  for (auto factors : std::vector<std::vector<long long>>{{4, 2}, {8, 8}, {2, 2, 2}, {27, 3}}) {
    AbGroup a = AbGroup::from_factors(factors);
    long long p = a.torsion_primes()[0];
    CHECK(hom_zp(a, p).group == ext_zp(a, p).group);
  }
}

TEST_CASE("free-block automorphism criterion uses the determinant") {
  AbGroup za = AbGroup::from_factors({0, 0});
  CHECK(is_automorphism(make_hom(za, za, {1, 2, 0, 1})));
  CHECK(is_automorphism(make_hom(za, za, {0, 1, 1, 0})));
  CHECK_FALSE(is_automorphism(make_hom(za, za, {1, 0, 0, 2})));
  AbGroup mixed = AbGroup::from_factors({0, 4});
  // det -1 free block with a unit on the torsion factor
  CHECK(is_automorphism(make_hom(mixed, mixed, {-1, 0, 2, 3})));
  CHECK_FALSE(is_automorphism(make_hom(mixed, mixed, {-1, 0, 2, 2})));
}

TEST_CASE("tensor functor agrees with the quotient-table route") {
  AbGroup a = AbGroup::from_factors({4, 2});
  AbTable at = ab_to_table(a);
  const long long p = 2;

  // independent route: A/pA as a quotient of the dense table by {p*x}
  std::vector<int> seeds;
  for (int x = 0; x < at.table->order; ++x) {
    int px = at.table->identity;
    for (long long k = 0; k < p; ++k) px = at.table->mul(px, x);
    seeds.push_back(px);
  }
  Quotient q = quotient(at.table, subgroup_closure(at.table, seeds));
  AbTable tt = ab_to_table(tensor_zp(a, p));
  REQUIRE(q.group->order == tt.table->order);

  // reduction map A -> A (x) Z/p in coordinates
  auto red = [&](int x) {
    auto c = at.coords_of(x);
    std::vector<long long> r;
    for (size_t i = 0; i < c.size(); ++i)
      if (a.torsion[i] % p == 0) r.push_back(c[i] % p);
    return tt.index_of(r);
  };
  // the reduction factors through the coset projection bijectively
  std::vector<int> coset_to_red(static_cast<size_t>(q.group->order), -1);
  for (int x = 0; x < at.table->order; ++x) {
    int& slot = coset_to_red[static_cast<size_t>(q.projection[static_cast<size_t>(x)])];
    if (slot < 0)
      slot = red(x);
    else
      REQUIRE(slot == red(x));
  }

  for (const AbHom& f : enumerate_automorphisms(a)) {
    Permutation pf = hom_to_perm(f, at);
    Permutation tensor_side = hom_to_perm(induced_tensor(f, p), tt);
    for (int x = 0; x < at.table->order; ++x) CHECK(red(pf(x)) == tensor_side(red(x)));
  }
}
