#include "doctest.h"
#include "stratos/sigma.hpp"

using namespace stratos;

namespace {
const Atom a0{0, 0};
const Atom b0{0, 1};
const Atom a1{1, 0};
const Atom b1{1, 1};
const Atom n1{1, 13};
}  // namespace

TEST_CASE("substitution retargets and normalizes membership") {
    PredPtr e = pred_elt(set_atm(b0), a1);
    CHECK(alpha_eq(subst_pred(e, a1, full_set(1)), top()));
    CHECK(alpha_eq(subst_pred(e, a1, empty_set(1)), bot()));
    CHECK(alpha_eq(subst_pred(e, a1, set_atm(n1)), pred_elt(set_atm(b0), n1)));
    CHECK(alpha_eq(subst_pred(e, b1, set_atm(n1)), e));
    CHECK(alpha_eq(subst_set(set_atm(a1), a1, full_set(1)), full_set(1)));
    CHECK(alpha_eq(subst_set(set_atm(b1), a1, full_set(1)), set_atm(b1)));
}

TEST_CASE("substitution rejects level clashes") {
    PredPtr e = pred_elt(set_atm(b0), a1);
    CHECK_THROWS_AS(subst_pred(e, a1, full_set(2)), LevelMismatch);
    CHECK_THROWS_AS(subst_set(set_atm(a1), a1, set_atm(a0)), LevelMismatch);
}

TEST_CASE("substitution under an elem position rebuilds the set") {
    // elt([c]X, b) with the target untouched: the substitution maps into X.
    SetTermPtr z = set_comp(a0, pred_elt(set_atm(a0), a1));
    PredPtr e = pred_elt(z, Atom{2, 3});
    PredPtr r = subst_pred(e, a1, full_set(1));
    CHECK(alpha_eq(r, pred_elt(set_comp(a0, top()), Atom{2, 3})));
}

TEST_CASE("binders are freshened against capture") {
    // The canonical binder of all [b@1] elt(a@0, b@1) is a@1; pick an image
    // with a@1 free so the binder must move.
    PredPtr body = pred_elt(set_atm(a0), b1);
    PredPtr Z = pred_all(b1, body);
    SetTermPtr x = set_comp(Atom{-1, 3}, pred_elt(set_atm(Atom{0, 4}), a1));
    REQUIRE(x->support().count(a1) == 1);
    PredPtr r = subst_pred(Z, a0, x);
    const auto* all = std::get_if<Pred::All>(&r->node());
    REQUIRE(all != nullptr);
    CHECK(x->support().count(all->binder) == 0);
    CHECK(alpha_eq(r, pred_all(Atom{1, 9}, pred_elt(x, Atom{1, 9}))));
}

TEST_CASE("sigma laws on fixed instances") {
    PredPtr Z = pred_elt(set_atm(b0), a1);
    SetTermPtr x = full_set(1);
    // identity
    CHECK(alpha_eq(subst_pred(Z, a1, set_atm(a1)), Z));
    // garbage collection: b1 is not free in Z
    CHECK(alpha_eq(subst_pred(Z, b1, x), Z));
    // renaming is a transposition
    CHECK(alpha_eq(subst_pred(Z, a1, set_atm(n1)),
                   permute(Permutation::swap(n1, a1), Z)));
    // composition
    PredPtr lhs = subst_pred(subst_pred(Z, a1, set_atm(b1)), b1, x);
    PredPtr rhs = subst_pred(subst_pred(Z, b1, x), a1, subst_set(set_atm(b1), b1, x));
    CHECK(alpha_eq(lhs, rhs));
}

TEST_CASE("support and minlev bounds on a fixed instance") {
    PredPtr Z = pred_all(b1, pred_elt(set_atm(Atom{0, 7}), b1));
    SetTermPtr x = set_atm(Atom{0, 8});
    PredPtr r = subst_pred(Z, Atom{0, 7}, x);
    for (const Atom& atom : r->support()) {
        CHECK(set_union(set_minus(Z->support(), Atom{0, 7}), x->support()).count(atom) == 1);
    }
    CHECK(r->measures().minlev >= std::min(Z->measures().minlev, 0));
}

TEST_CASE("singleton small substitutions") {
    SmallSubst s = SmallSubst::singleton(a1, full_set(1));
    CHECK(alpha_eq(s.apply(pred_elt(set_atm(b0), a1)), top()));
    CHECK(alpha_eq(s.apply(set_atm(a1)), full_set(1)));
    CHECK_FALSE(s.theta_closed());
    // The singleton form is exempt from the domain-freshness condition.
    CHECK_NOTHROW(SmallSubst::singleton(a1, set_atm(a1)));
    CHECK(alpha_eq(SmallSubst::singleton(a1, set_atm(a1)).apply(set_atm(a1)), set_atm(a1)));
}

TEST_CASE("multi-entry maps need domain fresh for images") {
    std::map<Atom, SetTermPtr> bad{{a1, set_atm(b1)}, {b1, set_atm(n1)}};
    CHECK_THROWS_AS(SmallSubst::make(bad), FreshnessViolation);
    std::map<Atom, SetTermPtr> good{{a1, set_atm(n1)}, {b1, set_atm(Atom{1, 14})}};
    SmallSubst s = SmallSubst::make(good);
    PredPtr e = pred_and({pred_elt(set_atm(b0), a1), pred_elt(set_atm(b0), b1)});
    CHECK(alpha_eq(s.apply(e),
                   pred_and({pred_elt(set_atm(b0), n1), pred_elt(set_atm(b0), Atom{1, 14})})));
}

TEST_CASE("theta entries act on the whole orbit") {
    SmallSubst s = SmallSubst::theta(a1, full_set(1));
    CHECK(s.theta_closed());
    // One theta step up: a@2 is the image of a@1 under the shift.
    PredPtr e = pred_elt(set_atm(b1), Atom{2, 0});
    CHECK(alpha_eq(s.apply(e), top()));
    // Off-orbit atoms are untouched.
    PredPtr f = pred_elt(set_atm(b1), Atom{2, 1});
    CHECK(alpha_eq(s.apply(f), f));
    // Seed index must avoid the image support's indices.
    CHECK_THROWS_AS(SmallSubst::theta(a1, set_atm(a1)), FreshnessViolation);
    CHECK_NOTHROW(SmallSubst::theta(a1, set_atm(b1)));
}

TEST_CASE("fuel guard trips and restores") {
    std::uint64_t old = sigma_fuel();
    set_sigma_fuel(3);
    PredPtr deep = pred_elt(set_atm(b0), a1);
    for (int i = 0; i < 6; ++i) deep = pred_and({pred_neg(deep)});
    CHECK_THROWS_AS(subst_pred(deep, a1, full_set(1)), FuelExhausted);
    set_sigma_fuel(old);
    CHECK_NOTHROW(subst_pred(deep, a1, full_set(1)));
}
