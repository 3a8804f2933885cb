#include "doctest.h"
#include "stratos/models.hpp"

using namespace stratos;

namespace {
const Atom a0{0, 0};
const Atom b0{0, 1};
const Atom a1{1, 0};
const Atom b1{1, 1};
const Atom n1{1, 13};
}  // namespace

TEST_CASE("base facts decide membership on the empty stack") {
    Prepoint p = Prepoint{}.with_fact(a1, set_atm(b0));
    CHECK(member(p, a1, set_atm(b0)));
    CHECK_FALSE(member(p, a1, set_atm(a0)));
    CHECK_FALSE(member(p, b1, set_atm(b0)));
    CHECK(sat(p, pred_elt(set_atm(b0), a1)));
    CHECK_FALSE(sat(Prepoint{}, pred_elt(set_atm(b0), a1)));
}

TEST_CASE("facts compare up to alpha") {
    Prepoint p = Prepoint{}.with_fact(a1, full_set(0)).with_fact(a1, full_set(0));
    CHECK(p.base().size() == 1);
    CHECK(member(p, a1, set_comp(Atom{-1, 6}, top())));
}

TEST_CASE("satisfaction is classical on the connectives") {
    Prepoint p = Prepoint{}.with_fact(a1, set_atm(b0));
    PredPtr in = pred_elt(set_atm(b0), a1);
    PredPtr out = pred_elt(set_atm(a0), a1);
    CHECK(sat(p, top()));
    CHECK_FALSE(sat(p, bot()));
    CHECK(sat(p, pred_and({in, pred_neg(out)})));
    CHECK(sat(p, pred_or({out, in})));
    CHECK(sat(p, pred_imp(out, in)));
    CHECK_FALSE(sat(p, pred_and({in, out})));
}

TEST_CASE("universal quantification tests one fresh atom") {
    // Nothing is believed, so nothing is a member of anything.
    CHECK(sat(Prepoint{}, pred_all(a1, pred_neg(pred_elt(set_atm(b0), a1)))));
    Prepoint p = Prepoint{}.with_fact(a1, set_atm(b0));
    // The witness is fresh for the prepoint, so facts about named atoms
    // stay invisible under the binder even when the bound name collides.
    CHECK(sat(p, pred_all(a1, pred_neg(pred_elt(set_atm(b0), a1)))));
    CHECK_FALSE(sat(p, pred_all(a1, pred_elt(set_atm(b0), a1))));
    CHECK(sat(p, pred_elt(set_atm(b0), a1)));
    CHECK(sat(p, pred_all(b1, pred_imp(pred_elt(set_atm(b0), b1),
                                       pred_elt(set_atm(b0), b1)))));
}

TEST_CASE("amgis pops as a substitution on the query") {
    CHECK_FALSE(member(amgis(Prepoint{}, set_atm(n1), a1), a1, set_atm(b0)));
    CHECK(member(amgis(Prepoint{}, full_set(1), a1), a1, set_atm(b0)));
    // member(p[x <- a], a, y) = sat(p, elt(y, a)[a -> x]) = sat(p, y tin x).
    Prepoint p = Prepoint{}.with_fact(n1, set_atm(b0));
    Prepoint q = amgis(p, set_atm(n1), a1);
    CHECK(member(q, a1, set_atm(b0)));
    CHECK_FALSE(member(q, a1, set_atm(a0)));
    // Other targets still see the base.
    CHECK(member(q, n1, set_atm(b0)));
}

TEST_CASE("duality on a fixed instance") {
    Prepoint p = Prepoint{}.with_fact(a1, set_atm(b0)).with_fact(b1, set_atm(a0));
    SetTermPtr x = set_comp(Atom{0, 5}, pred_elt(set_atm(b0), a1));
    PredPtr X = pred_elt(set_atm(a0), Atom{1, 3});
    Atom target{1, 3};
    CHECK(sat(p, subst_pred(X, target, x)) == sat(amgis(p, x, target), X));
    PredPtr Y = pred_all(b1, pred_elt(set_atm(a0), b1));
    CHECK(sat(p, subst_pred(Y, target, x)) == sat(amgis(p, x, target), Y));
}

TEST_CASE("theta-closed pushes answer the whole orbit") {
    Prepoint q = amgis(Prepoint{}, full_set(1), a1, true);
    CHECK(member(q, a1, set_atm(b0)));
    CHECK(member(q, Atom{2, 0}, set_atm(b1)));
    CHECK_FALSE(member(q, b1, set_atm(b0)));
}

TEST_CASE("prepoints move equivariantly under level-preserving maps") {
    Prepoint p = Prepoint{}.with_fact(a1, set_atm(b0));
    Permutation pi = Permutation::swap(a1, n1);
    PredPtr X = pred_elt(set_atm(b0), a1);
    CHECK(sat(permute(pi, p), permute(pi, X)) == sat(p, X));
    CHECK_FALSE(sat(permute(pi, p), X));
}

TEST_CASE("exteq probes the universe") {
    Prepoint p = Prepoint{}.with_fact(a1, set_atm(b0));
    std::vector<SetTermPtr> universe{set_atm(a0), set_atm(b0)};
    CHECK(exteq_bounded(p, full_set(1), full_set(1), universe));
    CHECK_FALSE(exteq_bounded(p, empty_set(1), full_set(1), universe));
    // a@1 and {c | c in a@1} believe the same members of the universe.
    SetTermPtr wrap = set_comp(Atom{0, 9}, pred_elt(set_atm(Atom{0, 9}), a1));
    CHECK(exteq_bounded(p, set_atm(a1), wrap, universe));
    CHECK(exteq_bounded(p, set_atm(a1), empty_set(1), {set_atm(a0)}));
    CHECK_FALSE(exteq_bounded(p, set_atm(a1), empty_set(1), universe));
}

TEST_CASE("inteq probes contexts") {
    Prepoint p = Prepoint{}.with_fact(Atom{2, 0}, full_set(1));
    SetTermPtr z = set_atm(a1);
    std::vector<InteqProbe> probes{{set_atm(a1), a1, Atom{2, 0}}};
    CHECK(inteq_bounded(p, full_set(1), full_set(1), probes));
}

TEST_CASE("numeral witnesses separate distinct numerals") {
    auto [p, c] = numeral_witness(0, 1, 6);
    CHECK(c.level == 5);
    bool in0 = sat(p, tin(set_atm(c), numeral(0, 6)));
    bool in1 = sat(p, tin(set_atm(c), numeral(1, 6)));
    CHECK(in0 != in1);
    CHECK_THROWS_AS(numeral_witness(2, 2, 6), NotDistinct);
}
