#include <catch2/catch_amalgamated.hpp>

#include "nilact/abelian_actions.hpp"
#include "nilact/action.hpp"

using namespace nilact;

namespace {

GroupRef sym3() {
  return group_from_perms(3, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)});
}

/// <xm> acting on the cyclic group Z/n.
Action mult_action(long long n, long long m) {
  AbGroup a = AbGroup::from_factors({n});
  return multiplier_action(ab_to_table(a), {m});
}

}  // namespace

TEST_CASE("trivial action fixes everything") {
  AbTable z4 = ab_to_table(AbGroup::from_factors({4}));
  Action act = trivial_action(sym3(), z4.table);
  for (int g = 0; g < act.actor->order; ++g)
    for (int a = 0; a < act.target->order; ++a) CHECK(act.act(g, a) == a);
}

TEST_CASE("multiplication action evaluates pointwise") {
  Action act = mult_action(4, 3);
  REQUIRE(act.actor->order == 2);
  int g = act.actor->generators.at(0);
  CHECK(act.act(g, 1) == 3);
  CHECK(act.act(g, 2) == 2);
  CHECK(act.act(act.actor->identity, 1) == 1);
}

TEST_CASE("conjugation action agrees with the table") {
  GroupRef g = sym3();
  Action act = conjugation_action(g);
  for (int x = 0; x < g->order; ++x)
    for (int a = 0; a < g->order; ++a) CHECK(act.act(x, a) == g->conj(x, a));
}

TEST_CASE("action axioms hold: identity and mixed associativity") {
  Action act = mult_action(8, 3);
  for (int g = 0; g < act.actor->order; ++g)
    for (int h = 0; h < act.actor->order; ++h)
      for (int a = 0; a < act.target->order; ++a)
        CHECK(act.act(act.actor->mul(g, h), a) == act.act(g, act.act(h, a)));
}

TEST_CASE("invalid generator images are rejected") {
  GroupRef c2 = group_from_perms(2, {parse_cycles("(0 1)", 2)});
  AbTable z4 = ab_to_table(AbGroup::from_factors({4}));
  // x1 has order 1, but the generator has order 2: still fine (non-faithful)
  CHECK_NOTHROW(action_from_generator_images(c2, z4.table, {Permutation::identity(4)}));
  // a non-automorphism image: swap 0 and 1 moves the identity
  CHECK_THROWS_AS(action_from_generator_images(c2, z4.table, {parse_cycles("(0 1)", 4)}),
                  ValidationError);
  // images violating the actor's relations: an order-4 automorphism for an
  // order-2 generator
  GroupRef c2b = group_from_perms(2, {parse_cycles("(0 1)", 2)});
  AbTable z5 = ab_to_table(AbGroup::from_factors({5}));
  CHECK_THROWS_AS(action_from_generator_images(c2b, z5.table, {parse_cycles("(1 2 4 3)", 5)}),
                  ValidationError);
}

TEST_CASE("gamma series of a trivial action on a nontrivial group has order 1") {
  AbTable z4 = ab_to_table(AbGroup::from_factors({4}));
  SeriesReport rep = gamma_series(trivial_action(sym3(), z4.table));
  REQUIRE(rep.verdict == SeriesVerdict::NilpotentOfOrder);
  CHECK(rep.value == 1);
}

TEST_CASE("gamma series of <x3> on Z4 descends through {0,2}") {
  SeriesReport rep = gamma_series(mult_action(4, 3));
  REQUIRE(rep.verdict == SeriesVerdict::NilpotentOfOrder);
  CHECK(rep.value == 2);
  REQUIRE(rep.terms.size() == 3);
  CHECK(rep.terms[1].members == std::vector<int>{0, 2});
  CHECK(rep.terms[2].is_trivial());
}

TEST_CASE("gamma series of S3 conjugating itself stabilizes at A3") {
  SeriesReport rep = gamma_series(conjugation_action(sym3()));
  REQUIRE(rep.verdict == SeriesVerdict::StabilizedNontrivial);
  CHECK(rep.value == 1);
  CHECK(rep.terms[1].order() == 3);
}

TEST_CASE("depth cap is honored") {
  SeriesReport rep = gamma_series(mult_action(16, 9), 1);
  CHECK(rep.verdict == SeriesVerdict::DepthCapReached);
}

TEST_CASE("quotient action by gamma term 1 is trivial") {
  SECTION("<x3> on Z4") {
    QuotientAction qa = quotient_action(mult_action(4, 3));
    CHECK(qa.carrier.group->order == 2);
    CHECK(qa.induced_trivial);
  }
  SECTION("trivial action") {
    AbTable z4 = ab_to_table(AbGroup::from_factors({4}));
    QuotientAction qa = quotient_action(trivial_action(sym3(), z4.table));
    CHECK(qa.carrier.group->order == 4);
    CHECK(qa.induced_trivial);
  }
  SECTION("S3 conjugation") {
    QuotientAction qa = quotient_action(conjugation_action(sym3()));
    CHECK(qa.carrier.group->order == 2);
    CHECK(qa.induced_trivial);
  }
}

TEST_CASE("quotient map is initial among maps to trivial targets") {
  // for every invariant normal N: induced action on A/N trivial iff
  // Gamma^1 lies inside N
  Action act = mult_action(8, 3);
  Subgroup gamma1 = mixed_commutator(act, full_subgroup(act.actor), full_subgroup(act.target));
  for (int x = 0; x < act.target->order; ++x) {
    Subgroup n = subgroup_closure(act.target, {x});
    if (!is_invariant_subgroup(act, n) || !is_normal(act.target, n)) continue;
    Quotient q = quotient(act.target, n);
    bool trivial = true;
    for (int g = 0; g < act.actor->order && trivial; ++g)
      for (int a = 0; a < act.target->order && trivial; ++a)
        trivial = q.projection[static_cast<size_t>(act.act(g, a))] ==
                  q.projection[static_cast<size_t>(a)];
    CHECK(trivial == subgroup_leq(gamma1, n));
  }
}

TEST_CASE("mixed commutator basics") {
  Action act = mult_action(4, 3);
  Subgroup id_only = trivial_subgroup(act.actor);
  CHECK(mixed_commutator(act, id_only, full_subgroup(act.target)).is_trivial());

  Subgroup gamma1 = mixed_commutator(act, full_subgroup(act.actor), full_subgroup(act.target));
  SeriesReport rep = gamma_series(act);
  CHECK(same_subgroup(gamma1, rep.terms[1]));

  Subgroup b = subgroup_closure(act.target, {2});
  CHECK(mixed_commutator(act, full_subgroup(act.actor), b).is_trivial());
}

TEST_CASE("lower central series equals the conjugation gamma series") {
  for (GroupRef g : {sym3(), group_from_perms(8, {parse_cycles("(0 1 2 3)(4 5 6 7)", 8),
                                                  parse_cycles("(0 4 2 6)(1 7 3 5)", 8)})}) {
    SeriesReport lcs = lower_central_series(g);
    SeriesReport conj = gamma_series(conjugation_action(g));
    REQUIRE(lcs.terms.size() == conj.terms.size());
    for (size_t i = 0; i < lcs.terms.size(); ++i)
      CHECK(lcs.terms[i].members == conj.terms[i].members);
    CHECK(lcs.verdict == conj.verdict);
    CHECK(lcs.value == conj.value);
  }
}

TEST_CASE("witt-hall identity holds exhaustively") {
  SECTION("identity pair is trivially fine") {
    Action act = mult_action(4, 3);
    CHECK(check_witt_hall(act, act.actor->identity, act.actor->identity, 1));
  }
  SECTION("<x3> on Z4, all triples") {
    WittHallResult r = check_witt_hall_all(mult_action(4, 3));
    CHECK(r.holds);
    CHECK(r.triples == 2 * 2 * 4);
  }
  SECTION("S3 conjugation, all triples") {
    WittHallResult r = check_witt_hall_all(conjugation_action(sym3()));
    CHECK(r.holds);
    CHECK(r.triples == 6 * 6 * 6);
  }
}

TEST_CASE("jo2 containment") {
  SECTION("K trivial") {
    Action act = mult_action(4, 3);
    CHECK(check_jo2(act, full_subgroup(act.actor), trivial_subgroup(act.actor)));
  }
  SECTION("H = K = G for <x3> on Z4") {
    Action act = mult_action(4, 3);
    CHECK(check_jo2(act, full_subgroup(act.actor), full_subgroup(act.actor)));
  }
  SECTION("H = S3, K = A3 under conjugation") {
    Action act = conjugation_action(sym3());
    Subgroup a3 = commutator_subgroup(act.actor, full_subgroup(act.actor), full_subgroup(act.actor));
    CHECK(check_jo2(act, full_subgroup(act.actor), a3));
  }
  SECTION("non-normal K is rejected") {
    Action act = conjugation_action(sym3());
    int t = -1;
    for (int x = 0; x < act.actor->order; ++x)
      if (element_order(*act.actor, x) == 2) t = x;
    CHECK_THROWS_AS(check_jo2(act, full_subgroup(act.actor), subgroup_closure(act.actor, {t})),
                    NotNormal);
  }
}

TEST_CASE("jo3 containments") {
  SECTION("trivial action is vacuously fine") {
    AbTable z4 = ab_to_table(AbGroup::from_factors({4}));
    Jo3Result r = check_jo3(trivial_action(sym3(), z4.table));
    CHECK(r.outcome == CheckOutcome::Pass);
  }
  SECTION("<x3> on Z4") {
    Jo3Result r = check_jo3(mult_action(4, 3));
    CHECK(r.outcome == CheckOutcome::Pass);
    CHECK(r.nil_order == 2);
  }
  SECTION("non-nilpotent action is not applicable") {
    Jo3Result r = check_jo3(conjugation_action(sym3()));
    CHECK(r.outcome == CheckOutcome::NotApplicable);
  }
}

TEST_CASE("gamma series restricted to its own terms composes") {
  for (Action act : {mult_action(8, 3), mult_action(16, 9), mult_action(4, 3)}) {
    SeriesReport rep = gamma_series(act);
    REQUIRE(rep.nilpotent());
    int r = rep.value;
    for (int n = 0; n <= r; ++n) {
      REQUIRE(is_invariant_subgroup(act, rep.term(n)));
      RestrictedAction res = restrict_action(act, rep.term(n));
      SeriesReport inner = gamma_series(res.action);
      for (int m = 0; n + m <= r; ++m) {
        // Gamma^m of the restriction, mapped back into A
        std::vector<int> mapped;
        for (int s : inner.term(m).members)
          mapped.push_back(res.carrier.to_parent[static_cast<size_t>(s)]);
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == rep.term(n + m).members);
      }
    }
  }
}

TEST_CASE("nil bound for the faithful image") {
  SECTION("<x3> <= Aut(Z4)") {
    NilBoundResult r = nil_bound_check(mult_action(4, 3));
    CHECK(r.outcome == CheckOutcome::Pass);
    CHECK(r.nil_action == 2);
    CHECK(r.nil_group == 1);
  }
  SECTION("trivial actor") {
    AbTable z4 = ab_to_table(AbGroup::from_factors({4}));
    NilBoundResult r = nil_bound_check(trivial_action(group_from_perms(1, {}), z4.table));
    CHECK(r.outcome == CheckOutcome::Pass);
    CHECK(r.nil_group == 0);
    CHECK(r.nil_action == 1);
  }
  SECTION("non-nilpotent action is not applicable") {
    NilBoundResult r = nil_bound_check(conjugation_action(sym3()));
    CHECK(r.outcome == CheckOutcome::NotApplicable);
  }
}

TEST_CASE("unitriangular action on (Z2)^3 is nilpotent of order 3") {
  AbGroup a = AbGroup::from_factors({2, 2, 2});
  AbTable at = ab_to_table(a);
  Action act = matrix_action(at, {{1, 1, 0, 0, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 1, 1, 0, 0, 1}});
  SeriesReport rep = gamma_series(act);
  REQUIRE(rep.verdict == SeriesVerdict::NilpotentOfOrder);
  CHECK(rep.value == 3);
  NilBoundResult nb = nil_bound_check(act);
  CHECK(nb.outcome == CheckOutcome::Pass);
}
