#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "stratos/atoms.hpp"

namespace stratos {

class Pred;
class SetTerm;
using PredPtr = std::shared_ptr<const Pred>;
using SetTermPtr = std::shared_ptr<const SetTerm>;

struct Measures {
    unsigned age = 0;
    int minlev = 0;
};

// Internal predicates. Abstraction nodes store one canonical representative:
// the binder is the smallest-index atom at its level outside the support of
// the abstraction, so alpha-equal trees are structurally identical and
// conjunct sets can be kept sorted and deduplicated.
class Pred {
public:
    struct And {
        std::vector<PredPtr> conjuncts;  // canonically sorted, duplicate-free
    };
    struct Neg {
        PredPtr body;
    };
    struct All {
        Atom binder;  // canonical
        PredPtr body;
    };
    struct Elt {
        SetTermPtr elem;  // level(elem) == level(target) - 1
        Atom target;
    };
    using Node = std::variant<And, Neg, All, Elt>;

    const Node& node() const { return node_; }
    const AtomSet& support() const { return support_; }
    Measures measures() const { return measures_; }

private:
    Node node_;
    AtomSet support_;
    Measures measures_;

    friend PredPtr pred_and(std::vector<PredPtr> conjuncts);
    friend PredPtr pred_neg(PredPtr body);
    friend PredPtr pred_all(Atom binder, PredPtr body);
    friend PredPtr pred_elt(SetTermPtr elem, Atom target);
    Pred() = default;
};

// Internal sets: an atom, or a comprehension abstracting one atom out of an
// internal predicate. level(atm(a)) = level(a); level([a]X) = level(a) + 1.
class SetTerm {
public:
    struct Atm {
        Atom atom;
    };
    struct Comp {
        Atom binder;  // canonical
        PredPtr body;
    };
    using Node = std::variant<Atm, Comp>;

    const Node& node() const { return node_; }
    int level() const { return level_; }
    const AtomSet& support() const { return support_; }
    Measures measures() const { return measures_; }

private:
    Node node_;
    int level_ = 0;
    AtomSet support_;
    Measures measures_;

    friend SetTermPtr set_atm(Atom a);
    friend SetTermPtr set_comp(Atom binder, PredPtr body);
    SetTerm() = default;
};

// Constructors. pred_and sorts and deduplicates; pred_all/set_comp rename the
// binder to its canonical representative; pred_elt enforces the level rule.
PredPtr pred_and(std::vector<PredPtr> conjuncts);
PredPtr pred_neg(PredPtr body);
PredPtr pred_all(Atom binder, PredPtr body);
PredPtr pred_elt(SetTermPtr elem, Atom target);
SetTermPtr set_atm(Atom a);
SetTermPtr set_comp(Atom binder, PredPtr body);

// Structural total order; 0 means equal. Equality of canonical trees is
// alpha-equality of the values they represent.
int compare(const PredPtr& a, const PredPtr& b);
int compare(const SetTermPtr& a, const SetTermPtr& b);
bool alpha_eq(const PredPtr& a, const PredPtr& b);
bool alpha_eq(const SetTermPtr& a, const SetTermPtr& b);

struct PredLess {
    bool operator()(const PredPtr& a, const PredPtr& b) const { return compare(a, b) < 0; }
};
struct SetTermLess {
    bool operator()(const SetTermPtr& a, const SetTermPtr& b) const { return compare(a, b) < 0; }
};

// Permutation action; acts on binders too and re-canonicalizes them.
PredPtr permute(const Permutation& p, const PredPtr& t);
SetTermPtr permute(const Permutation& p, const SetTermPtr& t);

// Concretion ([a]X)@b: the stored body when b is the stored binder, otherwise
// the swapped body for fresh b. Errors: NotAComprehension on atm(_),
// LevelMismatch unless level(b) = level(s) - 1, FreshnessViolation when b is
// free in s.
PredPtr concrete(const SetTermPtr& s, Atom b);

// Sugar. top = and{}; bot = or of nothing = neg(and{}); or / imp / iff are the
// standard desugarings through neg and and.
PredPtr top();
PredPtr bot();
PredPtr pred_or(std::vector<PredPtr> disjuncts);
PredPtr pred_imp(PredPtr x, PredPtr y);
PredPtr pred_iff(PredPtr x, PredPtr y);

// empty(i) = [a@(i-1)] bot, full(i) = [a@(i-1)] top.
SetTermPtr empty_set(int level);
SetTermPtr full_set(int level);

// Membership y tin x: elt(y, a) against an atom, the instantiated body against
// a comprehension (which is where comprehension normalization happens).
PredPtr tin(const SetTermPtr& y, Atom a);
PredPtr tin(const SetTermPtr& y, const SetTermPtr& x);

// teq(x, y) = all [c] (tin(atm(c), x) iff tin(atm(c), y)), c fresh.
PredPtr teq(const SetTermPtr& x, const SetTermPtr& y);

// Set operations over comprehensions; the result binder is fresh for all
// inputs. Families must be nonempty (an empty family has no level to live at).
SetTermPtr set_intersection(const std::vector<SetTermPtr>& zs);
SetTermPtr set_union_of(const std::vector<SetTermPtr>& zs);
SetTermPtr set_complement(const SetTermPtr& z);
SetTermPtr set_every(Atom c, const SetTermPtr& z);

// contains(x) = [c] elt(x, c) two levels up; numeral(0, i) = empty(i),
// numeral(n, i) = contains(numeral(n-1, i-2)). Numerals have empty support.
SetTermPtr contains(const SetTermPtr& x);
SetTermPtr numeral(unsigned n, int level);

AtomSet support(const PredPtr& t);
AtomSet support(const SetTermPtr& t);
Measures measures(const PredPtr& t);
Measures measures(const SetTermPtr& t);

// Every atom in the tree, binders included; used for witness pools and
// globally fresh choices.
void collect_atoms(const PredPtr& t, AtomSet& out);
void collect_atoms(const SetTermPtr& t, AtomSet& out);

}  // namespace stratos
