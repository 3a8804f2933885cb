#pragma once

#include <set>
#include <utility>
#include <vector>

#include "stratos/sigma.hpp"

namespace stratos {

// One atomic fact of a prepoint: target holds body, with
// level(body) = level(target) - 1.
struct BaseFact {
    Atom target;
    SetTermPtr body;
};

struct BaseFactLess {
    bool operator()(const BaseFact& a, const BaseFact& b) const;
};

using BaseFactSet = std::set<BaseFact, BaseFactLess>;

// A finite prepoint: a base set of atomic facts together with a stack of
// substitutions acted on it from the right (most recent last). Membership and
// satisfaction evaluate lazily by popping the stack:
//
//   member(p / s, a, y) = sat(p, s(elt(y, a)))
//
// which is the combined form of the three amgis rules; it needs no freshness
// side condition for single-entry pushes.
class Prepoint {
public:
    Prepoint() = default;

    Prepoint with_fact(Atom target, SetTermPtr body) const;
    Prepoint with_subst(SmallSubst s) const;

    const BaseFactSet& base() const { return base_; }
    const std::vector<SmallSubst>& stack() const { return stack_; }

    // Superset of the semantic support (exact orbit structure not tracked).
    AtomSet support_upper() const;
    // Index orbits occupied by theta-closed stack entries.
    std::set<std::uint64_t> banned_indices() const;

private:
    BaseFactSet base_;
    std::vector<SmallSubst> stack_;
};

// The amgis-action p[x <- a]: the prepoint that believes exactly what p
// believes after substituting x for a. theta pushes a theta-closed entry.
Prepoint amgis(const Prepoint& p, const SetTermPtr& x, Atom a, bool theta = false);

bool member(const Prepoint& p, Atom a, const SetTermPtr& y);
bool sat(const Prepoint& p, const PredPtr& X);

// Pointwise action on base facts and stack entries. Faithful for
// level-preserving finite permutations over theta-free stacks; a theta-closed
// entry's seed is moved pointwise, which tracks the orbit only when pi
// commutes with the shift on the touched atoms.
Prepoint permute(const Permutation& pi, const Prepoint& p);

// Bounded extensional equality probe: u and v agree on membership of every
// candidate element in the given universe.
bool exteq_bounded(const Prepoint& p, const SetTermPtr& u, const SetTermPtr& v,
                   const std::vector<SetTermPtr>& universe);

// One intensional probe: does z[c -> u] and z[c -> v] live in the same sets a?
struct InteqProbe {
    SetTermPtr z;
    Atom c;
    Atom target;
};

bool inteq_bounded(const Prepoint& p, const SetTermPtr& u, const SetTermPtr& v,
                   const std::vector<InteqProbe>& probes);

// A prepoint (with its distinguished atom c at level - 1) that separates the
// numerals n and m at the given level: sat(p, tin(c, numeral(n))) differs
// from sat(p, tin(c, numeral(m))). Requires n != m (NotDistinct otherwise)
// and level large enough for both numerals to exist.
std::pair<Prepoint, Atom> numeral_witness(unsigned n, unsigned m, int level);

}  // namespace stratos
