#include "stratos/terms.hpp"

#include <algorithm>

#include "stratos/sigma.hpp"

namespace stratos {

namespace {

int cmp(const Atom& a, const Atom& b) {
    if (a == b) return 0;
    return a < b ? -1 : 1;
}

// Canonical representative of [binder]body: the binder becomes the
// smallest-index atom at its level outside supp(body) \ {binder}.
std::pair<Atom, PredPtr> canonical_binder(Atom binder, PredPtr body) {
    AtomSet rest = set_minus(body->support(), binder);
    Atom canon = fresh(binder.level, rest);
    if (canon == binder) return {binder, std::move(body)};
    return {canon, permute(Permutation::swap(canon, binder), body)};
}

}  // namespace

PredPtr pred_and(std::vector<PredPtr> conjuncts) {
    std::sort(conjuncts.begin(), conjuncts.end(), PredLess{});
    conjuncts.erase(std::unique(conjuncts.begin(), conjuncts.end(),
                                [](const PredPtr& a, const PredPtr& b) { return compare(a, b) == 0; }),
                    conjuncts.end());
    auto p = std::shared_ptr<Pred>(new Pred());
    unsigned age = 0;
    int minlev = 0;
    for (const auto& c : conjuncts) {
        p->support_.insert(c->support().begin(), c->support().end());
        age = std::max(age, c->measures().age);
        minlev = std::min(minlev, c->measures().minlev);
    }
    p->measures_ = {age + 1, minlev};
    p->node_ = Pred::And{std::move(conjuncts)};
    return p;
}

PredPtr pred_neg(PredPtr body) {
    auto p = std::shared_ptr<Pred>(new Pred());
    p->support_ = body->support();
    p->measures_ = {body->measures().age + 1, body->measures().minlev};
    p->node_ = Pred::Neg{std::move(body)};
    return p;
}

PredPtr pred_all(Atom binder, PredPtr body) {
    auto [canon, cbody] = canonical_binder(binder, std::move(body));
    auto p = std::shared_ptr<Pred>(new Pred());
    p->support_ = set_minus(cbody->support(), canon);
    p->measures_ = {cbody->measures().age + 1, std::min(canon.level, cbody->measures().minlev)};
    p->node_ = Pred::All{canon, std::move(cbody)};
    return p;
}

PredPtr pred_elt(SetTermPtr elem, Atom target) {
    if (elem->level() != target.level - 1)
        throw LevelMismatch("elt needs level(elem) = level(target) - 1, got " +
                            std::to_string(elem->level()) + " against " + to_string(target));
    auto p = std::shared_ptr<Pred>(new Pred());
    p->support_ = elem->support();
    p->support_.insert(target);
    p->measures_ = {elem->measures().age + 1, std::min(elem->measures().minlev, target.level)};
    p->node_ = Pred::Elt{std::move(elem), target};
    return p;
}

SetTermPtr set_atm(Atom a) {
    auto s = std::shared_ptr<SetTerm>(new SetTerm());
    s->node_ = SetTerm::Atm{a};
    s->level_ = a.level;
    s->support_ = {a};
    s->measures_ = {0, a.level};
    return s;
}

SetTermPtr set_comp(Atom binder, PredPtr body) {
    auto [canon, cbody] = canonical_binder(binder, std::move(body));
    auto s = std::shared_ptr<SetTerm>(new SetTerm());
    s->level_ = canon.level + 1;
    s->support_ = set_minus(cbody->support(), canon);
    s->measures_ = {cbody->measures().age, std::min(canon.level, cbody->measures().minlev)};
    s->node_ = SetTerm::Comp{canon, std::move(cbody)};
    return s;
}

int compare(const PredPtr& a, const PredPtr& b) {
    if (a == b) return 0;
    if (a->node().index() != b->node().index())
        return a->node().index() < b->node().index() ? -1 : 1;
    if (const auto* x = std::get_if<Pred::And>(&a->node())) {
        const auto& y = std::get<Pred::And>(b->node());
        std::size_t n = std::min(x->conjuncts.size(), y.conjuncts.size());
        for (std::size_t i = 0; i < n; ++i)
            if (int c = compare(x->conjuncts[i], y.conjuncts[i])) return c;
        if (x->conjuncts.size() != y.conjuncts.size())
            return x->conjuncts.size() < y.conjuncts.size() ? -1 : 1;
        return 0;
    }
    if (const auto* x = std::get_if<Pred::Neg>(&a->node()))
        return compare(x->body, std::get<Pred::Neg>(b->node()).body);
    if (const auto* x = std::get_if<Pred::All>(&a->node())) {
        const auto& y = std::get<Pred::All>(b->node());
        if (int c = cmp(x->binder, y.binder)) return c;
        return compare(x->body, y.body);
    }
    const auto& x = std::get<Pred::Elt>(a->node());
    const auto& y = std::get<Pred::Elt>(b->node());
    if (int c = cmp(x.target, y.target)) return c;
    return compare(x.elem, y.elem);
}

int compare(const SetTermPtr& a, const SetTermPtr& b) {
    if (a == b) return 0;
    if (a->node().index() != b->node().index())
        return a->node().index() < b->node().index() ? -1 : 1;
    if (const auto* x = std::get_if<SetTerm::Atm>(&a->node()))
        return cmp(x->atom, std::get<SetTerm::Atm>(b->node()).atom);
    const auto& x = std::get<SetTerm::Comp>(a->node());
    const auto& y = std::get<SetTerm::Comp>(b->node());
    if (int c = cmp(x.binder, y.binder)) return c;
    return compare(x.body, y.body);
}

bool alpha_eq(const PredPtr& a, const PredPtr& b) { return compare(a, b) == 0; }
bool alpha_eq(const SetTermPtr& a, const SetTermPtr& b) { return compare(a, b) == 0; }

PredPtr permute(const Permutation& p, const PredPtr& t) {
    if (p.is_identity()) return t;
    if (const auto* x = std::get_if<Pred::And>(&t->node())) {
        std::vector<PredPtr> out;
        out.reserve(x->conjuncts.size());
        for (const auto& c : x->conjuncts) out.push_back(permute(p, c));
        return pred_and(std::move(out));
    }
    if (const auto* x = std::get_if<Pred::Neg>(&t->node())) return pred_neg(permute(p, x->body));
    if (const auto* x = std::get_if<Pred::All>(&t->node()))
        return pred_all(p.apply(x->binder), permute(p, x->body));
    const auto& x = std::get<Pred::Elt>(t->node());
    return pred_elt(permute(p, x.elem), p.apply(x.target));
}

SetTermPtr permute(const Permutation& p, const SetTermPtr& t) {
    if (p.is_identity()) return t;
    if (const auto* x = std::get_if<SetTerm::Atm>(&t->node())) return set_atm(p.apply(x->atom));
    const auto& x = std::get<SetTerm::Comp>(t->node());
    return set_comp(p.apply(x.binder), permute(p, x.body));
}

PredPtr concrete(const SetTermPtr& s, Atom b) {
    const auto* comp = std::get_if<SetTerm::Comp>(&s->node());
    if (comp == nullptr) throw NotAComprehension("concretion applies to comprehensions only");
    if (b == comp->binder) return comp->body;
    if (b.level != s->level() - 1)
        throw LevelMismatch("concretion at " + to_string(b) + " of a level-" +
                            std::to_string(s->level()) + " set");
    if (s->support().count(b) > 0)
        throw FreshnessViolation("concretion atom " + to_string(b) + " is free in the set");
    return permute(Permutation::swap(b, comp->binder), comp->body);
}

PredPtr top() { return pred_and({}); }
PredPtr bot() { return pred_neg(top()); }

PredPtr pred_or(std::vector<PredPtr> disjuncts) {
    for (auto& d : disjuncts) d = pred_neg(std::move(d));
    return pred_neg(pred_and(std::move(disjuncts)));
}

PredPtr pred_imp(PredPtr x, PredPtr y) {
    return pred_or({pred_neg(std::move(x)), std::move(y)});
}

PredPtr pred_iff(PredPtr x, PredPtr y) {
    return pred_and({pred_imp(x, y), pred_imp(y, x)});
}

SetTermPtr empty_set(int level) { return set_comp(Atom{level - 1, 0}, bot()); }
SetTermPtr full_set(int level) { return set_comp(Atom{level - 1, 0}, top()); }

PredPtr tin(const SetTermPtr& y, Atom a) {
    if (a.level != y->level() + 1)
        throw LevelMismatch("tin against " + to_string(a) + " needs a level-" +
                            std::to_string(a.level - 1) + " element");
    return pred_elt(y, a);
}

PredPtr tin(const SetTermPtr& y, const SetTermPtr& x) {
    if (x->level() != y->level() + 1)
        throw LevelMismatch("tin needs level(set) = level(elem) + 1, got " +
                            std::to_string(x->level()) + " against " + std::to_string(y->level()));
    if (const auto* atm = std::get_if<SetTerm::Atm>(&x->node())) return pred_elt(y, atm->atom);
    const auto& comp = std::get<SetTerm::Comp>(x->node());
    return subst_pred(comp.body, comp.binder, y);
}

PredPtr teq(const SetTermPtr& x, const SetTermPtr& y) {
    if (x->level() != y->level())
        throw LevelMismatch("teq needs equal levels, got " + std::to_string(x->level()) +
                            " and " + std::to_string(y->level()));
    Atom c = fresh(x->level() - 1, set_union(x->support(), y->support()));
    return pred_all(c, pred_iff(tin(set_atm(c), x), tin(set_atm(c), y)));
}

namespace {

// Shared front half of the set operations: validate a nonempty same-level
// family of comprehensions and pick the result binder fresh for all of it.
Atom set_op_binder(const std::vector<SetTermPtr>& zs) {
    if (zs.empty()) throw LevelMismatch("set operation over an empty family has no level");
    AtomSet avoid;
    for (const auto& z : zs) {
        if (std::get_if<SetTerm::Comp>(&z->node()) == nullptr)
            throw NotAComprehension("set operations apply to comprehensions only");
        if (z->level() != zs.front()->level())
            throw LevelMismatch("set operation over mixed levels");
        avoid.insert(z->support().begin(), z->support().end());
    }
    return fresh(zs.front()->level() - 1, avoid);
}

}  // namespace

SetTermPtr set_intersection(const std::vector<SetTermPtr>& zs) {
    Atom a = set_op_binder(zs);
    std::vector<PredPtr> parts;
    for (const auto& z : zs) parts.push_back(concrete(z, a));
    return set_comp(a, pred_and(std::move(parts)));
}

SetTermPtr set_union_of(const std::vector<SetTermPtr>& zs) {
    Atom a = set_op_binder(zs);
    std::vector<PredPtr> parts;
    for (const auto& z : zs) parts.push_back(concrete(z, a));
    return set_comp(a, pred_or(std::move(parts)));
}

SetTermPtr set_complement(const SetTermPtr& z) {
    Atom a = set_op_binder({z});
    return set_comp(a, pred_neg(concrete(z, a)));
}

SetTermPtr set_every(Atom c, const SetTermPtr& z) {
    if (std::get_if<SetTerm::Comp>(&z->node()) == nullptr)
        throw NotAComprehension("set operations apply to comprehensions only");
    AtomSet avoid = z->support();
    avoid.insert(c);
    Atom a = fresh(z->level() - 1, avoid);
    return set_comp(a, pred_all(c, concrete(z, a)));
}

SetTermPtr contains(const SetTermPtr& x) {
    Atom c = fresh(x->level() + 1, x->support());
    return set_comp(c, pred_elt(x, c));
}

SetTermPtr numeral(unsigned n, int level) {
    if (n == 0) return empty_set(level);
    return contains(numeral(n - 1, level - 2));
}

AtomSet support(const PredPtr& t) { return t->support(); }
AtomSet support(const SetTermPtr& t) { return t->support(); }
Measures measures(const PredPtr& t) { return t->measures(); }
Measures measures(const SetTermPtr& t) { return t->measures(); }

void collect_atoms(const PredPtr& t, AtomSet& out) {
    if (const auto* x = std::get_if<Pred::And>(&t->node())) {
        for (const auto& c : x->conjuncts) collect_atoms(c, out);
    } else if (const auto* x = std::get_if<Pred::Neg>(&t->node())) {
        collect_atoms(x->body, out);
    } else if (const auto* x = std::get_if<Pred::All>(&t->node())) {
        out.insert(x->binder);
        collect_atoms(x->body, out);
    } else {
        const auto& e = std::get<Pred::Elt>(t->node());
        out.insert(e.target);
        collect_atoms(e.elem, out);
    }
}

void collect_atoms(const SetTermPtr& t, AtomSet& out) {
    if (const auto* x = std::get_if<SetTerm::Atm>(&t->node())) {
        out.insert(x->atom);
    } else {
        const auto& c = std::get<SetTerm::Comp>(t->node());
        out.insert(c.binder);
        collect_atoms(c.body, out);
    }
}

}  // namespace stratos
