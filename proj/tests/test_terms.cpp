#include "doctest.h"
#include "stratos/terms.hpp"

using namespace stratos;

namespace {
const Atom a0{0, 0};
const Atom b0{0, 1};
const Atom a1{1, 0};
const Atom b1{1, 1};
const Atom c1{1, 2};
const Atom a2{2, 0};
}  // namespace

TEST_CASE("elt enforces the level rule") {
    CHECK_NOTHROW(pred_elt(set_atm(a0), a1));
    CHECK_THROWS_AS(pred_elt(set_atm(a1), b1), LevelMismatch);
    CHECK_THROWS_AS(pred_elt(set_atm(a2), a1), LevelMismatch);
}

TEST_CASE("conjunctions are sorted sets") {
    PredPtr x = pred_elt(set_atm(a0), a1);
    PredPtr y = pred_elt(set_atm(b0), b1);
    CHECK(alpha_eq(pred_and({x, y}), pred_and({y, x, y})));
    CHECK(compare(pred_and({x, y}), pred_and({y, x})) == 0);
    CHECK_FALSE(alpha_eq(pred_and({x}), pred_and({x, y})));
}

TEST_CASE("alpha-equal abstractions are structurally identical") {
    PredPtr body = pred_elt(set_atm(a0), b1);
    PredPtr viaB = pred_all(b1, body);
    PredPtr viaC = pred_all(c1, permute(Permutation::swap(c1, b1), body));
    CHECK(alpha_eq(viaB, viaC));
    CHECK(compare(viaB, viaC) == 0);
    // Binder not free in the body: abstraction over any atom of the level.
    CHECK(alpha_eq(pred_all(b1, top()), pred_all(c1, top())));
    // Renaming the binder is free; changing the free part is not.
    CHECK(alpha_eq(pred_all(b1, body), pred_all(a1, pred_elt(set_atm(a0), a1))));
    CHECK_FALSE(alpha_eq(pred_all(b1, body), pred_all(b1, pred_elt(set_atm(b0), b1))));
}

TEST_CASE("support drops the binder") {
    PredPtr body = pred_elt(set_atm(a0), b1);
    CHECK(body->support() == AtomSet{a0, b1});
    CHECK(pred_all(b1, body)->support() == AtomSet{a0});
    CHECK(set_comp(b1, body)->support() == AtomSet{a0});
    CHECK(set_comp(b1, body)->level() == 2);
}

TEST_CASE("age counts rule steps, comprehension is free") {
    CHECK(set_atm(a0)->measures().age == 0);
    CHECK(top()->measures().age == 1);
    PredPtr e = pred_elt(set_atm(a0), a1);  // 1 + age(atm) = 1
    CHECK(e->measures().age == 1);
    CHECK(set_comp(a0, e)->measures().age == 1);
    CHECK(pred_elt(set_comp(a0, e), a2)->measures().age == 2);
    CHECK(pred_neg(e)->measures().age == 2);
    CHECK(pred_all(a1, e)->measures().age == 2);
    CHECK(pred_and({e, pred_neg(e)})->measures().age == 3);
}

TEST_CASE("minlev reaches through binders") {
    CHECK(set_atm(Atom{-2, 0})->measures().minlev == -2);
    PredPtr e = pred_elt(set_atm(Atom{-2, 0}), Atom{-1, 0});
    CHECK(e->measures().minlev == -2);
    CHECK(set_comp(Atom{-1, 0}, e)->measures().minlev == -2);
    CHECK(pred_all(Atom{3, 0}, e)->measures().minlev == -2);
}

TEST_CASE("permutation acts on terms equivariantly") {
    PredPtr e = pred_elt(set_atm(a0), b1);
    Permutation t = Permutation::theta();
    PredPtr shifted = permute(t, e);
    CHECK(alpha_eq(shifted, pred_elt(set_atm(a1), Atom{2, 1})));
    CHECK(alpha_eq(permute(t.inverse(), shifted), e));
    // Binders move too.
    CHECK(alpha_eq(permute(t, pred_all(b1, e)), pred_all(Atom{2, 1}, shifted)));
    CHECK(permute(t, set_atm(a0))->level() == 1);
}

TEST_CASE("concretion inverts abstraction") {
    PredPtr body = pred_elt(set_atm(a0), b1);
    SetTermPtr s = set_comp(b1, body);
    CHECK(alpha_eq(concrete(s, b1), body));
    CHECK(alpha_eq(concrete(s, c1), pred_elt(set_atm(a0), c1)));
    CHECK_THROWS_AS(concrete(set_atm(a1), a0), NotAComprehension);
    CHECK_THROWS_AS(concrete(s, a2), LevelMismatch);
    // The binder itself is fine (it is not in the support); a free atom is not.
    SetTermPtr shadow = set_comp(a0, pred_elt(set_atm(a0), b1));
    CHECK(alpha_eq(concrete(shadow, a0), pred_elt(set_atm(a0), b1)));
    SetTermPtr open = set_comp(a0, pred_elt(set_atm(b0), b1));
    CHECK_THROWS_AS(concrete(open, b0), FreshnessViolation);
}

TEST_CASE("sugar desugars through neg and and") {
    CHECK(alpha_eq(bot(), pred_neg(top())));
    PredPtr x = pred_elt(set_atm(a0), a1);
    PredPtr y = pred_elt(set_atm(b0), b1);
    CHECK(alpha_eq(pred_or({x, y}), pred_neg(pred_and({pred_neg(x), pred_neg(y)}))));
    CHECK(alpha_eq(pred_imp(x, y), pred_or({pred_neg(x), y})));
    CHECK(alpha_eq(pred_iff(x, y), pred_and({pred_imp(x, y), pred_imp(y, x)})));
}

TEST_CASE("constants and membership sugar") {
    CHECK(empty_set(1)->level() == 1);
    CHECK(alpha_eq(empty_set(1), set_comp(a0, bot())));
    CHECK(alpha_eq(full_set(-1), set_comp(Atom{-2, 4}, top())));
    CHECK(alpha_eq(tin(set_atm(a0), a1), pred_elt(set_atm(a0), a1)));
    // Membership in a comprehension normalizes to the instantiated body.
    CHECK(alpha_eq(tin(set_atm(a0), full_set(1)), top()));
    CHECK(alpha_eq(tin(set_atm(a0), empty_set(1)), bot()));
    SetTermPtr selfish = set_comp(a0, pred_elt(set_atm(a0), b1));
    CHECK(alpha_eq(tin(set_atm(Atom{0, 9}), selfish), pred_elt(set_atm(Atom{0, 9}), b1)));
    CHECK_THROWS_AS(tin(set_atm(a1), full_set(1)), LevelMismatch);
}

TEST_CASE("teq is extensional equality at the next level down") {
    SetTermPtr u = set_atm(a1);
    PredPtr e = teq(u, u);
    const auto* all = std::get_if<Pred::All>(&e->node());
    REQUIRE(all != nullptr);
    CHECK(all->binder.level == 0);
    CHECK(e->support() == AtomSet{a1});
}

TEST_CASE("set operations keep the level and bind fresh") {
    SetTermPtr u = set_comp(a0, pred_elt(set_atm(a0), b1));
    SetTermPtr v = full_set(1);
    CHECK(set_intersection({u, v})->level() == 1);
    CHECK(set_union_of({u, v})->level() == 1);
    CHECK(set_complement(u)->level() == 1);
    // Complement negates the body without collapsing double negations.
    CHECK(alpha_eq(tin(set_atm(a0), set_complement(empty_set(1))), pred_neg(bot())));
    CHECK_THROWS_AS(set_intersection({}), LevelMismatch);
    CHECK_THROWS_AS(set_intersection({u, set_atm(a2)}), NotAComprehension);
    CHECK_THROWS_AS(set_union_of({u, full_set(2)}), LevelMismatch);
}

TEST_CASE("numerals") {
    CHECK(alpha_eq(numeral(0, 2), empty_set(2)));
    CHECK(alpha_eq(numeral(1, 2), set_comp(c1, pred_elt(empty_set(0), c1))));
    CHECK(numeral(3, 6)->level() == 6);
    CHECK(numeral(3, 6)->support().empty());
    CHECK(alpha_eq(contains(empty_set(0)), numeral(1, 2)));
}

TEST_CASE("collect_atoms sees binders") {
    AtomSet seen;
    collect_atoms(pred_all(b1, top()), seen);
    REQUIRE(seen.size() == 1);
    CHECK(seen.begin()->level == 1);
    AtomSet s2;
    collect_atoms(set_comp(a0, pred_elt(set_atm(a0), b1)), s2);
    CHECK(s2.count(a0) == 1);
    CHECK(s2.count(b1) == 1);
}
