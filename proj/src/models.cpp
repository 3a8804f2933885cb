#include "stratos/models.hpp"

#include <string>

#include "stratos/errors.hpp"

namespace stratos {

bool BaseFactLess::operator()(const BaseFact& a, const BaseFact& b) const {
    if (a.target != b.target) return a.target < b.target;
    return compare(a.body, b.body) < 0;
}

Prepoint Prepoint::with_fact(Atom target, SetTermPtr body) const {
    if (body->level() != target.level - 1) {
        throw LevelMismatch("fact body has level " + std::to_string(body->level()) +
                            ", target " + to_string(target) + " expects " +
                            std::to_string(target.level - 1));
    }
    Prepoint out = *this;
    out.base_.insert(BaseFact{target, std::move(body)});
    return out;
}

Prepoint Prepoint::with_subst(SmallSubst s) const {
    Prepoint out = *this;
    out.stack_.push_back(std::move(s));
    return out;
}

AtomSet Prepoint::support_upper() const {
    AtomSet out;
    for (const BaseFact& f : base_) {
        out.insert(f.target);
        out = set_union(out, f.body->support());
    }
    for (const SmallSubst& s : stack_) {
        out = set_union(out, s.support_upper());
    }
    return out;
}

std::set<std::uint64_t> Prepoint::banned_indices() const {
    std::set<std::uint64_t> out;
    for (const SmallSubst& s : stack_) {
        for (std::uint64_t i : s.banned_indices()) out.insert(i);
    }
    return out;
}

Prepoint amgis(const Prepoint& p, const SetTermPtr& x, Atom a, bool theta) {
    return p.with_subst(theta ? SmallSubst::theta(a, x) : SmallSubst::singleton(a, x));
}

bool member(const Prepoint& p, Atom a, const SetTermPtr& y) {
    if (y->level() != a.level - 1) {
        throw LevelMismatch("candidate element has level " + std::to_string(y->level()) +
                            ", membership in " + to_string(a) + " expects " +
                            std::to_string(a.level - 1));
    }
    if (!p.stack().empty()) {
        const SmallSubst& top = p.stack().back();
        Prepoint rest;
        for (const BaseFact& f : p.base()) rest = rest.with_fact(f.target, f.body);
        for (std::size_t i = 0; i + 1 < p.stack().size(); ++i) {
            rest = rest.with_subst(p.stack()[i]);
        }
        return sat(rest, top.apply(pred_elt(y, a)));
    }
    return p.base().count(BaseFact{a, y}) > 0;
}

bool sat(const Prepoint& p, const PredPtr& X) {
    if (const auto* n = std::get_if<Pred::And>(&X->node())) {
        for (const auto& c : n->conjuncts) {
            if (!sat(p, c)) return false;
        }
        return true;
    }
    if (const auto* n = std::get_if<Pred::Neg>(&X->node())) {
        return !sat(p, n->body);
    }
    if (const auto* n = std::get_if<Pred::All>(&X->node())) {
        // Universal quantification evaluates at one sufficiently fresh atom:
        // fresh for the prepoint (including the index orbits of theta-closed
        // stack entries) and for the abstracted body.
        AtomSet avoid = set_union(p.support_upper(), n->body->support());
        avoid.insert(n->binder);
        Atom c = fresh(n->binder.level, avoid, p.banned_indices());
        return sat(p, permute(Permutation::swap(c, n->binder), n->body));
    }
    const auto& n = std::get<Pred::Elt>(X->node());
    return member(p, n.target, n.elem);
}

Prepoint permute(const Permutation& pi, const Prepoint& p) {
    Prepoint out;
    for (const BaseFact& f : p.base()) {
        out = out.with_fact(pi.apply(f.target), permute(pi, f.body));
    }
    for (const SmallSubst& s : p.stack()) {
        std::map<Atom, SetTermPtr> entries;
        for (const auto& [a, x] : s.entries()) {
            entries.emplace(pi.apply(a), permute(pi, x));
        }
        if (s.theta_closed()) {
            const auto& [a, x] = *entries.begin();
            out = out.with_subst(SmallSubst::theta(a, x));
        } else {
            out = out.with_subst(SmallSubst::make(std::move(entries)));
        }
    }
    return out;
}

bool exteq_bounded(const Prepoint& p, const SetTermPtr& u, const SetTermPtr& v,
                   const std::vector<SetTermPtr>& universe) {
    if (u->level() != v->level()) {
        throw LevelMismatch("compared sets have levels " + std::to_string(u->level()) +
                            " and " + std::to_string(v->level()));
    }
    for (const SetTermPtr& y : universe) {
        if (y->level() != u->level() - 1) {
            throw LevelMismatch("universe element has level " + std::to_string(y->level()) +
                                ", expected " + std::to_string(u->level() - 1));
        }
        if (sat(p, tin(y, u)) != sat(p, tin(y, v))) return false;
    }
    return true;
}

bool inteq_bounded(const Prepoint& p, const SetTermPtr& u, const SetTermPtr& v,
                   const std::vector<InteqProbe>& probes) {
    if (u->level() != v->level()) {
        throw LevelMismatch("compared sets have levels " + std::to_string(u->level()) +
                            " and " + std::to_string(v->level()));
    }
    for (const InteqProbe& probe : probes) {
        if (probe.c.level != u->level()) {
            throw LevelMismatch("probe hole " + to_string(probe.c) + " has level " +
                                std::to_string(probe.c.level) + ", compared sets have level " +
                                std::to_string(u->level()));
        }
        SetTermPtr zu = subst_set(probe.z, probe.c, u);
        SetTermPtr zv = subst_set(probe.z, probe.c, v);
        if (member(p, probe.target, zu) != member(p, probe.target, zv)) return false;
    }
    return true;
}

std::pair<Prepoint, Atom> numeral_witness(unsigned n, unsigned m, int level) {
    if (n == m) {
        throw NotDistinct("numerals " + std::to_string(n) + " and " + std::to_string(m) +
                          " are equal; no separating prepoint exists");
    }
    if (n > m) std::swap(n, m);
    Atom c{level - 1, 0};
    if (n == 0) {
        // Everything at level - 2 belongs to c, so c contains numeral(m - 1)
        // but fails the vacuous membership demanded by the empty set.
        return {amgis(Prepoint{}, full_set(level - 1), c), c};
    }
    auto [q, inner] = numeral_witness(n - 1, m - 1, level - 2);
    // c holds exactly the sets containing the inner witness atom, stepping
    // tin(c, numeral(k)) down to tin(inner, numeral(k - 1)).
    Atom d{level - 2, 0};
    SetTermPtr gadget = set_comp(d, pred_elt(set_atm(inner), d));
    return {amgis(q, gadget, c), c};
}

}  // namespace stratos
