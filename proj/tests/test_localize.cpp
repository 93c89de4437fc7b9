#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "nilact/abelian_actions.hpp"
#include "nilact/localize.hpp"

using namespace nilact;

namespace {

GroupRef sym3() {
  return group_from_perms(3, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)});
}

}  // namespace

TEST_CASE("p-component examples") {
  AbTable z6 = ab_to_table(AbGroup::from_factors({6}));
  // the generator (1,1) of Z2+Z3 ~ Z6 has order 6; its 2-part is cubing
  int g = -1;
  for (int x = 0; x < 6; ++x)
    if (element_order(*z6.table, x) == 6) {
      g = x;
      break;
    }
  REQUIRE(g >= 0);
  int cube = z6.table->mul(z6.table->mul(g, g), g);
  CHECK(p_component(z6.table, g, 2) == cube);
  CHECK(p_component(z6.table, z6.table->identity, 2) == z6.table->identity);

  AbTable z4 = ab_to_table(AbGroup::from_factors({4}));
  CHECK(p_component(z4.table, 1, 2) == 1);
  CHECK(p_component(z4.table, 1, 3) == z4.table->identity);
}

TEST_CASE("p-component is idempotent and multiplicative on commuting elements") {
  AbTable a = ab_to_table(AbGroup::from_factors({12, 2}));
  for (long long p : {2LL, 3LL})
    for (int x = 0; x < a.table->order; ++x) {
      int px = p_component(a.table, x, p);
      CHECK(p_component(a.table, px, p) == px);
      for (int y = 0; y < a.table->order; ++y)
        CHECK(p_component(a.table, a.table->mul(x, y), p) ==
              a.table->mul(px, p_component(a.table, y, p)));
    }
}

TEST_CASE("p-component requires a nilpotent group") {
  CHECK_THROWS_AS(p_component(sym3(), 1, 2), NotNilpotent);
}

TEST_CASE("localizing Z12") {
  AbTable z12 = ab_to_table(AbGroup::from_factors({12}));
  Localization at2 = localize_group(z12.table, 2);
  CHECK(at2.carrier.group->order == 4);
  CHECK(element_order(*at2.carrier.group, 1) == 4);  // cyclic of order 4
  Localization at3 = localize_group(z12.table, 3);
  CHECK(at3.carrier.group->order == 3);
  Localization at5 = localize_group(z12.table, 5);
  CHECK(at5.carrier.group->order == 1);
  Localization rational = localize_group(z12.table, 0);
  CHECK(rational.carrier.group->order == 1);
}

TEST_CASE("localizing a 2-group at 2 is the identity") {
  GroupRef q8 = group_from_perms(8, {parse_cycles("(0 1 2 3)(4 5 6 7)", 8),
                                     parse_cycles("(0 4 2 6)(1 7 3 5)", 8)});
  Localization loc = localize_group(q8, 2);
  CHECK(loc.carrier.group->order == 8);
  CHECK(is_isomorphic(loc.carrier.group, q8));
}

TEST_CASE("localization kills q-elements and is the identity on p-elements") {
  AbTable a = ab_to_table(AbGroup::from_factors({4, 9}));
  Localization loc = localize_group(a.table, 2);
  for (int x = 0; x < a.table->order; ++x) {
    long long ord = element_order(*a.table, x);
    // prime-to-2 elements die
    if (ord % 2 != 0) CHECK(loc.morphism[static_cast<size_t>(x)] == 0);
    // the morphism restricted to the 2-part is the identity there
    if (loc.carrier.from_parent[static_cast<size_t>(x)] >= 0)
      CHECK(loc.morphism[static_cast<size_t>(x)] ==
            loc.carrier.from_parent[static_cast<size_t>(x)]);
  }
}

TEST_CASE("nilpotent groups reconstruct from their localizations") {
  for (auto factors : std::vector<std::vector<long long>>{{12}, {4, 9}, {6, 6}}) {
    AbTable a = ab_to_table(AbGroup::from_factors(factors));
    long long product = 1;
    std::vector<Localization> locs;
    for (auto [p, e] : detail::factorize(a.table->order)) {
      locs.push_back(localize_group(a.table, p));
      product *= locs.back().carrier.group->order;
    }
    CHECK(product == a.table->order);
    // componentwise map is injective
    std::set<std::vector<int>> images;
    for (int x = 0; x < a.table->order; ++x) {
      std::vector<int> tuple;
      for (const auto& loc : locs) tuple.push_back(loc.morphism[static_cast<size_t>(x)]);
      CHECK(images.insert(tuple).second);
    }
  }
}

TEST_CASE("localized action of <x5> on Z12") {
  AbTable z12 = ab_to_table(AbGroup::from_factors({12}));
  Action act = multiplier_action(z12, {5});
  SECTION("at 2: x5 becomes the identity on Z4") {
    LocalizedAction la = localize_action(act, 2);
    CHECK(la.action.target->order == 4);
    for (int g = 0; g < la.action.actor->order; ++g)
      CHECK(is_identity(la.action.perm_of(g)));
  }
  SECTION("at 3: x5 acts as inversion on Z3") {
    LocalizedAction la = localize_action(act, 3);
    CHECK(la.action.target->order == 3);
    SeriesReport rep = gamma_series(la.action);
    CHECK(rep.verdict == SeriesVerdict::StabilizedNontrivial);
  }
  SECTION("at 7: everything collapses") {
    LocalizedAction la = localize_action(act, 7);
    CHECK(la.action.target->order == 1);
  }
}

TEST_CASE("lema2: localization commutes with the commutator series") {
  SECTION("m = 0 is the whole localized group") {
    AbTable z12 = ab_to_table(AbGroup::from_factors({12}));
    Action act = multiplier_action(z12, {5});
    Lema2Result r = check_lema2(act, 2, 0);
    CHECK(r.outcome == CheckOutcome::Pass);
    CHECK(static_cast<int>(r.lhs.size()) == 4);
  }
  SECTION("<x5> on Z12 at p=3, m=1") {
    AbTable z12 = ab_to_table(AbGroup::from_factors({12}));
    Action act = multiplier_action(z12, {5});
    Lema2Result r = check_lema2(act, 3, 1);
    CHECK(r.outcome == CheckOutcome::Pass);
    CHECK(r.lhs.size() == 3);  // Gamma^1 = 4 Z12 ~ Z3, fully 3-local
  }
  SECTION("all m and p for a mixed-prime action") {
    AbTable a = ab_to_table(AbGroup::from_factors({4, 3}));
    Action act = multiplier_action(a, {7});  // 7 = 3 mod 4 and 1 mod 3
    for (auto [p, e] : detail::factorize(a.table->order))
      for (int m = 0; m <= 4; ++m) CHECK(check_lema2(act, p, m).outcome == CheckOutcome::Pass);
  }
  SECTION("non-nilpotent targets are not applicable") {
    Lema2Result r = check_lema2(conjugation_action(sym3()), 2, 1);
    CHECK(r.outcome == CheckOutcome::NotApplicable);
  }
}

TEST_CASE("uf: nilpotent iff every localization is nilpotent") {
  SECTION("nilpotent multiplier actions") {
    AbTable z12 = ab_to_table(AbGroup::from_factors({12}));
    UfResult r = check_uf(multiplier_action(z12, {7}));
    CHECK(r.outcome == CheckOutcome::Pass);
    CHECK(r.global_nilpotent);
  }
  SECTION("trivial action") {
    AbTable z4 = ab_to_table(AbGroup::from_factors({4}));
    UfResult r = check_uf(trivial_action(sym3(), z4.table));
    CHECK(r.outcome == CheckOutcome::Pass);
  }
  SECTION("non-nilpotent action on (Z2)^2: both sides fail together") {
    AbTable v4 = ab_to_table(AbGroup::from_factors({2, 2}));
    Action taut = matrix_action(v4, {{0, 1, 1, 0}, {0, 1, 1, 1}});
    REQUIRE(taut.actor->order == 6);
    UfResult r = check_uf(taut);
    CHECK(r.outcome == CheckOutcome::Pass);
    CHECK_FALSE(r.global_nilpotent);
    REQUIRE(r.local_nilpotent.size() == 1);
    CHECK(r.local_nilpotent[0].first == 2);
    CHECK_FALSE(r.local_nilpotent[0].second);
  }
  SECTION("<x5> on Z12: non-nilpotent, witnessed at p=3") {
    AbTable z12 = ab_to_table(AbGroup::from_factors({12}));
    UfResult r = check_uf(multiplier_action(z12, {5}));
    CHECK(r.outcome == CheckOutcome::Pass);
    CHECK_FALSE(r.global_nilpotent);
  }
}
