#include "stratos/sigma.hpp"

#include <string>
#include <vector>

#include "stratos/errors.hpp"

namespace stratos {

namespace {

thread_local std::uint64_t g_depth = 0;

struct DepthGuard {
    DepthGuard() {
        if (g_depth >= sigma_fuel()) {
            throw FuelExhausted("substitution recursion limit reached");
        }
        ++g_depth;
    }
    ~DepthGuard() { --g_depth; }
};

void require_level(Atom a, const SetTermPtr& x) {
    if (x->level() != a.level) {
        throw LevelMismatch("substituted set has level " + std::to_string(x->level()) +
                            ", atom " + to_string(a) + " expects " + std::to_string(a.level));
    }
}

// Rename a bound atom so the recursion can go under the binder: the new
// binder avoids the body, the image and the substituted atom.
Atom freshen_binder(Atom binder, const PredPtr& body, Atom a, const SetTermPtr& x) {
    AtomSet avoid = set_union(body->support(), x->support());
    avoid.insert(a);
    return fresh(binder.level, avoid);
}

}  // namespace

PredPtr subst_pred(const PredPtr& X, Atom a, const SetTermPtr& x) {
    require_level(a, x);
    DepthGuard guard;
    if (const auto* n = std::get_if<Pred::And>(&X->node())) {
        std::vector<PredPtr> parts;
        parts.reserve(n->conjuncts.size());
        for (const auto& c : n->conjuncts) parts.push_back(subst_pred(c, a, x));
        return pred_and(std::move(parts));
    }
    if (const auto* n = std::get_if<Pred::Neg>(&X->node())) {
        return pred_neg(subst_pred(n->body, a, x));
    }
    if (const auto* n = std::get_if<Pred::All>(&X->node())) {
        Atom fresh_binder = freshen_binder(n->binder, n->body, a, x);
        PredPtr body = permute(Permutation::swap(fresh_binder, n->binder), n->body);
        return pred_all(fresh_binder, subst_pred(body, a, x));
    }
    const auto& n = std::get<Pred::Elt>(X->node());
    SetTermPtr elem = subst_set(n.elem, a, x);
    if (n.target != a) {
        return pred_elt(std::move(elem), n.target);
    }
    if (const auto* atm = std::get_if<SetTerm::Atm>(&x->node())) {
        return pred_elt(std::move(elem), atm->atom);
    }
    // elt(y, a)[a -> [b]X] = X[b -> y[a -> [b]X]]. The stored binder has
    // level(a) - 1, so it can never collide with a, and the rule's value is
    // independent of the representative chosen for the abstraction.
    const auto& comp = std::get<SetTerm::Comp>(x->node());
    return subst_pred(comp.body, comp.binder, elem);
}

SetTermPtr subst_set(const SetTermPtr& z, Atom a, const SetTermPtr& x) {
    require_level(a, x);
    DepthGuard guard;
    if (const auto* n = std::get_if<SetTerm::Atm>(&z->node())) {
        return n->atom == a ? x : z;
    }
    const auto& n = std::get<SetTerm::Comp>(z->node());
    Atom fresh_binder = freshen_binder(n.binder, n.body, a, x);
    PredPtr body = permute(Permutation::swap(fresh_binder, n.binder), n.body);
    return set_comp(fresh_binder, subst_pred(body, a, x));
}

SmallSubst SmallSubst::singleton(Atom a, SetTermPtr x) {
    require_level(a, x);
    SmallSubst s;
    s.entries_.emplace(a, std::move(x));
    return s;
}

SmallSubst SmallSubst::make(std::map<Atom, SetTermPtr> entries) {
    for (const auto& [a, x] : entries) {
        require_level(a, x);
    }
    if (entries.size() > 1) {
        for (const auto& [a, x] : entries) {
            (void)x;
            for (const auto& [b, y] : entries) {
                (void)b;
                if (y->support().count(a)) {
                    throw FreshnessViolation("domain atom " + to_string(a) +
                                             " occurs in an image of the substitution");
                }
            }
        }
    }
    SmallSubst s;
    s.entries_ = std::move(entries);
    return s;
}

SmallSubst SmallSubst::theta(Atom a, SetTermPtr x) {
    require_level(a, x);
    for (const Atom& b : x->support()) {
        if (b.index == a.index) {
            throw FreshnessViolation("theta-closed seed atom " + to_string(a) +
                                     " shares its index with " + to_string(b) +
                                     " in the image's support");
        }
    }
    SmallSubst s;
    s.theta_ = true;
    s.entries_.emplace(a, std::move(x));
    return s;
}

std::vector<std::pair<Atom, SetTermPtr>> SmallSubst::materialize(const AtomSet& support) const {
    std::vector<std::pair<Atom, SetTermPtr>> out;
    if (!theta_) {
        for (const auto& [a, x] : entries_) {
            if (support.count(a)) out.emplace_back(a, x);
        }
        return out;
    }
    const auto& [seed, image] = *entries_.begin();
    for (const Atom& b : support) {
        if (b.index != seed.index) continue;
        int j = b.level - seed.level;
        out.emplace_back(b, permute(Permutation::theta(j), image));
    }
    return out;
}

PredPtr SmallSubst::apply(const PredPtr& t) const {
    PredPtr out = t;
    for (const auto& [a, x] : materialize(t->support())) {
        out = subst_pred(out, a, x);
    }
    return out;
}

SetTermPtr SmallSubst::apply(const SetTermPtr& t) const {
    SetTermPtr out = t;
    for (const auto& [a, x] : materialize(t->support())) {
        out = subst_set(out, a, x);
    }
    return out;
}

AtomSet SmallSubst::support_upper() const {
    AtomSet out;
    for (const auto& [a, x] : entries_) {
        out.insert(a);
        out = set_union(out, x->support());
    }
    return out;
}

std::set<std::uint64_t> SmallSubst::banned_indices() const {
    std::set<std::uint64_t> out;
    if (!theta_) return out;
    for (const auto& [a, x] : entries_) {
        out.insert(a.index);
        for (const Atom& b : x->support()) out.insert(b.index);
    }
    return out;
}

}  // namespace stratos
