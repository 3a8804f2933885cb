#pragma once

#include <map>

#include "stratos/terms.hpp"

namespace stratos {

// The sigma-action: capture-avoiding substitution of an internal set for an
// atom, including the re-normalizing rule for membership in a comprehension
// (elt(y, a)[a -> [b]X] = X[b -> y[a -> [b]X]]). Requires level(x) = level(a).
// Terminates on the (level(a), age) lexicographic measure; a recursion-depth
// guard (sigma_fuel) turns runaway recursion into FuelExhausted.
PredPtr subst_pred(const PredPtr& X, Atom a, const SetTermPtr& x);
SetTermPtr subst_set(const SetTermPtr& z, Atom a, const SetTermPtr& x);

// A finite-domain substitution of internal sets for atoms, applied entrywise.
// Multi-entry maps must have every domain atom fresh for every image, which
// makes the application order irrelevant; single-entry maps are exempt (one
// entry is trivially order-independent, and the semantic duality with the
// amgis-action places no freshness condition on single pushes).
//
// A theta-closed substitution is generated by one seed (a, x) and logically
// maps theta^j(a) to theta^j(x) for every integer j; application materializes
// exactly the instances whose domain atom occurs in the target's support. The
// seed must satisfy index(a) not-in indices(supp(x)), which is equivalent to
// freshness of every instance's domain for every instance's image.
class SmallSubst {
public:
    static SmallSubst singleton(Atom a, SetTermPtr x);
    static SmallSubst make(std::map<Atom, SetTermPtr> entries);
    static SmallSubst theta(Atom a, SetTermPtr x);

    PredPtr apply(const PredPtr& t) const;
    SetTermPtr apply(const SetTermPtr& t) const;

    bool theta_closed() const { return theta_; }
    const std::map<Atom, SetTermPtr>& entries() const { return entries_; }

    // The instances that act on a value with the given support, in domain order.
    std::vector<std::pair<Atom, SetTermPtr>> materialize(const AtomSet& support) const;

    // Atoms contributing to this substitution's support (seed only for theta).
    AtomSet support_upper() const;
    // For theta-closed entries the whole index orbit is in the support; these
    // indices are excluded when picking fresh atoms near a prepoint.
    std::set<std::uint64_t> banned_indices() const;

private:
    std::map<Atom, SetTermPtr> entries_;
    bool theta_ = false;
};

}  // namespace stratos
