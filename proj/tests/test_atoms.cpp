#include "doctest.h"
#include "stratos/atoms.hpp"

using namespace stratos;

TEST_CASE("atom names encode the index") {
    CHECK(atom_name(0) == "a");
    CHECK(atom_name(1) == "b");
    CHECK(atom_name(25) == "z");
    CHECK(atom_name(26) == "a1");
    CHECK(atom_name(79) == "b3");
    CHECK(to_string(Atom{2, 0}) == "a@2");
    CHECK(to_string(Atom{-1, 79}) == "b3@-1");
}

TEST_CASE("fresh avoids the given atoms and banned indices") {
    AtomSet avoid{Atom{1, 0}, Atom{1, 1}, Atom{2, 0}};
    Atom a = fresh(1, avoid);
    CHECK(a.level == 1);
    CHECK(avoid.count(a) == 0);
    Atom b = fresh(2, avoid, {0, 1, 2});
    CHECK(b.level == 2);
    CHECK(b.index > 2);
}

TEST_CASE("swap exchanges exactly the two atoms") {
    Atom a{1, 0}, b{1, 5}, c{1, 2};
    Permutation s = Permutation::swap(a, b);
    CHECK(s.apply(a) == b);
    CHECK(s.apply(b) == a);
    CHECK(s.apply(c) == c);
    CHECK(s.apply(Atom{2, 0}) == Atom{2, 0});
    CHECK(s.compose(s).is_identity());
    CHECK_THROWS_AS(Permutation::swap(Atom{1, 0}, Atom{2, 0}), LevelMismatch);
}

TEST_CASE("theta shifts levels and keeps indices") {
    Permutation t = Permutation::theta();
    CHECK(t.apply(Atom{0, 3}) == Atom{1, 3});
    CHECK(t.apply(Atom{-2, 0}) == Atom{-1, 0});
    CHECK(t.shift() == 1);
    CHECK(t.inverse().apply(Atom{1, 3}) == Atom{0, 3});
    CHECK(t.power(3).apply(Atom{0, 7}) == Atom{3, 7});
    CHECK(t.power(0).is_identity());
    CHECK(t.compose(t.inverse()).is_identity());
}

TEST_CASE("compose applies right-to-left") {
    Atom a{0, 0}, b{0, 1};
    Permutation s = Permutation::swap(a, b);
    Permutation t = Permutation::theta();
    Permutation ts = t.compose(s);
    CHECK(ts.apply(a) == Atom{1, 1});
    Permutation st = s.compose(t);
    // theta first, so the level-0 swap never fires.
    CHECK(st.apply(a) == Atom{1, 0});
    CHECK(ts.inverse().compose(ts).is_identity());
}

TEST_CASE("swaps conjugated by theta move with the shift") {
    Atom a{0, 0}, b{0, 1};
    Permutation t = Permutation::theta();
    Permutation conj = t.compose(Permutation::swap(a, b)).compose(t.inverse());
    CHECK(conj == Permutation::swap(Atom{1, 0}, Atom{1, 1}));
}
