#include "stratos/theories.hpp"

#include <algorithm>
#include <map>

#include "stratos/errors.hpp"

namespace stratos {

namespace {

bool fail(std::string* diag, const std::string& msg) {
    if (diag && diag->empty()) *diag = msg;
    return false;
}

}  // namespace

Theory make_theory(std::vector<std::pair<SetTermPtr, SetTermPtr>> axioms, bool theta_closed) {
    for (const auto& [s, t] : axioms) {
        if (s->level() != t->level()) {
            throw LevelMismatch("theory axiom equates levels " + std::to_string(s->level()) +
                                " and " + std::to_string(t->level()));
        }
    }
    return Theory{std::move(axioms), theta_closed};
}

EqDerivPtr eq_axiom(std::size_t index, int shift) {
    auto d = std::make_shared<EqDeriv>();
    d->kind = EqDeriv::Kind::Axiom;
    d->axiom_index = index;
    d->shift = shift;
    return d;
}

EqDerivPtr eq_refl(SetTermPtr term) {
    auto d = std::make_shared<EqDeriv>();
    d->kind = EqDeriv::Kind::Refl;
    d->term = std::move(term);
    return d;
}

EqDerivPtr eq_sym(EqDerivPtr child) {
    auto d = std::make_shared<EqDeriv>();
    d->kind = EqDeriv::Kind::Sym;
    d->children.push_back(std::move(child));
    return d;
}

EqDerivPtr eq_trans(EqDerivPtr left, EqDerivPtr right) {
    auto d = std::make_shared<EqDeriv>();
    d->kind = EqDeriv::Kind::Trans;
    d->children.push_back(std::move(left));
    d->children.push_back(std::move(right));
    return d;
}

EqDerivPtr eq_cong(SetTermPtr context, Atom hole, EqDerivPtr child) {
    auto d = std::make_shared<EqDeriv>();
    d->kind = EqDeriv::Kind::Cong;
    d->term = std::move(context);
    d->hole = hole;
    d->children.push_back(std::move(child));
    return d;
}

unsigned eq_height(const EqDerivPtr& d) {
    switch (d->kind) {
        case EqDeriv::Kind::Axiom:
        case EqDeriv::Kind::Refl:
            return 0;
        case EqDeriv::Kind::Sym:
            return eq_height(d->children[0]);
        case EqDeriv::Kind::Cong:
            return 1 + eq_height(d->children[0]);
        case EqDeriv::Kind::Trans:
            return 1 + std::max(eq_height(d->children[0]), eq_height(d->children[1]));
    }
    return 0;
}

std::optional<std::pair<SetTermPtr, SetTermPtr>> eq_conclusion(const Theory& T, const EqDerivPtr& d,
                                                               std::string* diag) {
    switch (d->kind) {
        case EqDeriv::Kind::Axiom: {
            if (d->axiom_index >= T.axioms.size()) {
                fail(diag, "axiom index out of range");
                return std::nullopt;
            }
            if (d->shift != 0 && !T.theta_closed) {
                fail(diag, "shifted axiom instance over a theory that is not theta-closed");
                return std::nullopt;
            }
            const auto& [s, t] = T.axioms[d->axiom_index];
            Permutation shift = Permutation::theta(d->shift);
            return std::make_pair(permute(shift, s), permute(shift, t));
        }
        case EqDeriv::Kind::Refl:
            if (!d->term) {
                fail(diag, "refl without a subject term");
                return std::nullopt;
            }
            return std::make_pair(d->term, d->term);
        case EqDeriv::Kind::Sym: {
            auto c = eq_conclusion(T, d->children[0], diag);
            if (!c) return std::nullopt;
            return std::make_pair(c->second, c->first);
        }
        case EqDeriv::Kind::Trans: {
            auto l = eq_conclusion(T, d->children[0], diag);
            if (!l) return std::nullopt;
            auto r = eq_conclusion(T, d->children[1], diag);
            if (!r) return std::nullopt;
            if (!alpha_eq(l->second, r->first)) {
                fail(diag, "trans middle terms differ");
                return std::nullopt;
            }
            return std::make_pair(l->first, r->second);
        }
        case EqDeriv::Kind::Cong: {
            auto c = eq_conclusion(T, d->children[0], diag);
            if (!c) return std::nullopt;
            if (!d->term) {
                fail(diag, "cong without a context term");
                return std::nullopt;
            }
            if (d->hole.level != c->first->level()) {
                fail(diag, "cong hole level differs from equated terms");
                return std::nullopt;
            }
            return std::make_pair(subst_set(d->term, d->hole, c->first),
                                  subst_set(d->term, d->hole, c->second));
        }
    }
    fail(diag, "malformed certificate node");
    return std::nullopt;
}

bool check_eq_derivation(const Theory& T, const EqDerivPtr& d, std::string* diag) {
    return eq_conclusion(T, d, diag).has_value();
}

namespace {

void subterms_set(const PredPtr& t, std::vector<SetTermPtr>& out);

void subterms_set(const SetTermPtr& t, std::vector<SetTermPtr>& out) {
    out.push_back(t);
    if (const auto* n = std::get_if<SetTerm::Comp>(&t->node())) {
        subterms_set(n->body, out);
    }
}

void subterms_set(const PredPtr& t, std::vector<SetTermPtr>& out) {
    if (const auto* n = std::get_if<Pred::And>(&t->node())) {
        for (const auto& c : n->conjuncts) subterms_set(c, out);
    } else if (const auto* n = std::get_if<Pred::Neg>(&t->node())) {
        subterms_set(n->body, out);
    } else if (const auto* n = std::get_if<Pred::All>(&t->node())) {
        subterms_set(n->body, out);
    } else {
        subterms_set(std::get<Pred::Elt>(t->node()).elem, out);
    }
}

PredPtr rewrite_all(const PredPtr& t, const SetTermPtr& from, const SetTermPtr& to);

SetTermPtr rewrite_all(const SetTermPtr& t, const SetTermPtr& from, const SetTermPtr& to) {
    if (t->level() == from->level() && alpha_eq(t, from)) return to;
    if (std::holds_alternative<SetTerm::Atm>(t->node())) return t;
    const auto& n = std::get<SetTerm::Comp>(t->node());
    AtomSet avoid = set_union(n.body->support(), set_union(from->support(), to->support()));
    Atom binder = fresh(n.binder.level, avoid);
    PredPtr body = permute(Permutation::swap(binder, n.binder), n.body);
    return set_comp(binder, rewrite_all(body, from, to));
}

PredPtr rewrite_all(const PredPtr& t, const SetTermPtr& from, const SetTermPtr& to) {
    if (const auto* n = std::get_if<Pred::And>(&t->node())) {
        std::vector<PredPtr> parts;
        parts.reserve(n->conjuncts.size());
        for (const auto& c : n->conjuncts) parts.push_back(rewrite_all(c, from, to));
        return pred_and(std::move(parts));
    }
    if (const auto* n = std::get_if<Pred::Neg>(&t->node())) {
        return pred_neg(rewrite_all(n->body, from, to));
    }
    if (const auto* n = std::get_if<Pred::All>(&t->node())) {
        AtomSet avoid = set_union(n->body->support(), set_union(from->support(), to->support()));
        Atom binder = fresh(n->binder.level, avoid);
        PredPtr body = permute(Permutation::swap(binder, n->binder), n->body);
        return pred_all(binder, rewrite_all(body, from, to));
    }
    const auto& n = std::get<Pred::Elt>(t->node());
    SetTermPtr elem = rewrite_all(n.elem, from, to);
    Atom target = n.target;
    const auto* fa = std::get_if<SetTerm::Atm>(&from->node());
    const auto* ta = std::get_if<SetTerm::Atm>(&to->node());
    if (fa && ta && fa->atom == target) target = ta->atom;
    return pred_elt(std::move(elem), target);
}

// Anti-substitution: a context z with z[hole -> S] = u and z[hole -> T] = v.
// Positional pairing of mismatched conjuncts keeps this deterministic; it is
// a sound heuristic, not a complete one.
std::optional<PredPtr> anti_subst(const PredPtr& u, const PredPtr& v, const SetTermPtr& S,
                                  const SetTermPtr& T, Atom hole);

std::optional<SetTermPtr> anti_subst(const SetTermPtr& u, const SetTermPtr& v, const SetTermPtr& S,
                                     const SetTermPtr& T, Atom hole) {
    if (alpha_eq(u, v)) return u;
    if (u->level() == S->level() && alpha_eq(u, S) && alpha_eq(v, T)) return set_atm(hole);
    if (u->node().index() != v->node().index()) return std::nullopt;
    if (std::holds_alternative<SetTerm::Atm>(u->node())) return std::nullopt;
    const auto& cu = std::get<SetTerm::Comp>(u->node());
    const auto& cv = std::get<SetTerm::Comp>(v->node());
    if (cu.binder.level != cv.binder.level) return std::nullopt;
    AtomSet avoid = set_union(u->support(), v->support());
    avoid = set_union(avoid, set_union(S->support(), T->support()));
    avoid.insert(hole);
    Atom e = fresh(cu.binder.level, avoid);
    auto rec = anti_subst(concrete(u, e), concrete(v, e), S, T, hole);
    if (!rec) return std::nullopt;
    return set_comp(e, *rec);
}

std::optional<PredPtr> anti_subst(const PredPtr& u, const PredPtr& v, const SetTermPtr& S,
                                  const SetTermPtr& T, Atom hole) {
    if (alpha_eq(u, v)) return u;
    if (u->node().index() != v->node().index()) return std::nullopt;
    if (const auto* nu = std::get_if<Pred::And>(&u->node())) {
        const auto& nv = std::get<Pred::And>(v->node());
        std::vector<PredPtr> parts;
        std::vector<PredPtr> ru;
        std::vector<PredPtr> rv;
        for (const auto& c : nu->conjuncts) {
            bool shared = std::any_of(nv.conjuncts.begin(), nv.conjuncts.end(),
                                      [&](const PredPtr& d) { return alpha_eq(c, d); });
            (shared ? parts : ru).push_back(c);
        }
        for (const auto& d : nv.conjuncts) {
            bool shared = std::any_of(nu->conjuncts.begin(), nu->conjuncts.end(),
                                      [&](const PredPtr& c) { return alpha_eq(c, d); });
            if (!shared) rv.push_back(d);
        }
        if (ru.size() != rv.size()) return std::nullopt;
        for (std::size_t i = 0; i < ru.size(); ++i) {
            auto rec = anti_subst(ru[i], rv[i], S, T, hole);
            if (!rec) return std::nullopt;
            parts.push_back(*rec);
        }
        return pred_and(std::move(parts));
    }
    if (const auto* nu = std::get_if<Pred::Neg>(&u->node())) {
        const auto& nv = std::get<Pred::Neg>(v->node());
        auto rec = anti_subst(nu->body, nv.body, S, T, hole);
        if (!rec) return std::nullopt;
        return pred_neg(*rec);
    }
    if (const auto* nu = std::get_if<Pred::All>(&u->node())) {
        const auto& nv = std::get<Pred::All>(v->node());
        if (nu->binder.level != nv.binder.level) return std::nullopt;
        AtomSet avoid = set_union(u->support(), v->support());
        avoid = set_union(avoid, set_union(S->support(), T->support()));
        avoid.insert(hole);
        Atom e = fresh(nu->binder.level, avoid);
        auto rec = anti_subst(permute(Permutation::swap(e, nu->binder), nu->body),
                              permute(Permutation::swap(e, nv.binder), nv.body), S, T, hole);
        if (!rec) return std::nullopt;
        return pred_all(e, *rec);
    }
    const auto& nu = std::get<Pred::Elt>(u->node());
    const auto& nv = std::get<Pred::Elt>(v->node());
    if (nu.target == nv.target) {
        auto rec = anti_subst(nu.elem, nv.elem, S, T, hole);
        if (!rec) return std::nullopt;
        return pred_elt(*rec, nu.target);
    }
    const auto* sa = std::get_if<SetTerm::Atm>(&S->node());
    const auto* ta = std::get_if<SetTerm::Atm>(&T->node());
    if (sa && ta && nu.target == sa->atom && nv.target == ta->atom) {
        auto rec = anti_subst(nu.elem, nv.elem, S, T, hole);
        if (!rec) return std::nullopt;
        return pred_elt(*rec, hole);
    }
    return std::nullopt;
}

struct TermLess {
    bool operator()(const SetTermPtr& a, const SetTermPtr& b) const { return compare(a, b) < 0; }
};

struct PairLess {
    bool operator()(const std::pair<SetTermPtr, SetTermPtr>& a,
                    const std::pair<SetTermPtr, SetTermPtr>& b) const {
        int c = compare(a.first, b.first);
        if (c != 0) return c < 0;
        return compare(a.second, b.second) < 0;
    }
};

class EqSearch {
public:
    explicit EqSearch(const Theory& T) : T_(T) {}

    std::optional<EqDerivPtr> prove(const SetTermPtr& u, const SetTermPtr& v, unsigned budget) {
        if (alpha_eq(u, v)) return eq_refl(u);
        std::pair<SetTermPtr, SetTermPtr> key{u, v};
        if (auto it = found_.find(key); it != found_.end() && it->second.second <= budget) {
            return it->second.first;
        }
        if (auto it = failed_.find(key); it != failed_.end() && it->second >= budget) {
            return std::nullopt;
        }
        if (auto d = by_axiom(u, v)) {
            remember(key, *d);
            return d;
        }
        if (budget == 0) {
            failed_[key] = std::max(failed_[key], budget);
            return std::nullopt;
        }
        if (auto d = by_cong(u, v)) {
            remember(key, *d);
            return d;
        }
        for (const SetTermPtr& m : middles(u, v)) {
            auto left = prove(u, m, budget - 1);
            if (!left) continue;
            auto right = prove(m, v, budget - 1);
            if (!right) continue;
            EqDerivPtr d = eq_trans(*left, *right);
            remember(key, d);
            return d;
        }
        auto& slot = failed_[key];
        slot = std::max(slot, budget);
        return std::nullopt;
    }

private:
    void remember(const std::pair<SetTermPtr, SetTermPtr>& key, const EqDerivPtr& d) {
        found_[key] = {d, eq_height(d)};
    }

    std::vector<int> shift_candidates(const SetTermPtr& u, const SetTermPtr& v, int axiom_level) {
        std::vector<int> out;
        if (!T_.theta_closed) {
            out.push_back(0);
            return out;
        }
        std::vector<SetTermPtr> subs;
        subterms_set(u, subs);
        subterms_set(v, subs);
        for (const SetTermPtr& s : subs) out.push_back(s->level() - axiom_level);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // An axiom instance, possibly reversed, matching (u, v) exactly.
    std::optional<EqDerivPtr> by_axiom(const SetTermPtr& u, const SetTermPtr& v) {
        for (std::size_t i = 0; i < T_.axioms.size(); ++i) {
            const auto& [s, t] = T_.axioms[i];
            int j = u->level() - s->level();
            if (j != 0 && !T_.theta_closed) continue;
            Permutation shift = Permutation::theta(j);
            SetTermPtr si = permute(shift, s);
            SetTermPtr ti = permute(shift, t);
            if (alpha_eq(si, u) && alpha_eq(ti, v)) return eq_axiom(i, j);
            if (alpha_eq(ti, u) && alpha_eq(si, v)) return eq_sym(eq_axiom(i, j));
        }
        return std::nullopt;
    }

    // One congruence step over one axiom instance. Candidate contexts come
    // from positional anti-substitution and from rewriting either side; each
    // candidate is verified by running the action on both sides, which is
    // what keeps normalizing substitutions (the hole in target position)
    // inside the search space.
    std::optional<EqDerivPtr> by_cong(const SetTermPtr& u, const SetTermPtr& v) {
        for (std::size_t i = 0; i < T_.axioms.size(); ++i) {
            const auto& [s, t] = T_.axioms[i];
            for (int j : shift_candidates(u, v, s->level())) {
                Permutation shift = Permutation::theta(j);
                SetTermPtr si = permute(shift, s);
                SetTermPtr ti = permute(shift, t);
                for (int orient = 0; orient < 2; ++orient) {
                    const SetTermPtr& from = orient == 0 ? si : ti;
                    const SetTermPtr& to = orient == 0 ? ti : si;
                    AtomSet avoid;
                    collect_atoms(u, avoid);
                    collect_atoms(v, avoid);
                    collect_atoms(from, avoid);
                    collect_atoms(to, avoid);
                    Atom hole = fresh(from->level(), avoid);
                    std::vector<SetTermPtr> candidates;
                    if (auto z = anti_subst(u, v, from, to, hole)) candidates.push_back(*z);
                    candidates.push_back(rewrite_all(u, from, set_atm(hole)));
                    candidates.push_back(rewrite_all(v, to, set_atm(hole)));
                    for (const SetTermPtr& z : candidates) {
                        if (!z->support().count(hole)) continue;
                        if (!alpha_eq(subst_set(z, hole, from), u)) continue;
                        if (!alpha_eq(subst_set(z, hole, to), v)) continue;
                        EqDerivPtr child = eq_axiom(i, j);
                        if (orient == 1) child = eq_sym(child);
                        return eq_cong(z, hole, child);
                    }
                }
            }
        }
        return std::nullopt;
    }

    std::vector<SetTermPtr> middles(const SetTermPtr& u, const SetTermPtr& v) {
        std::vector<SetTermPtr> pool;
        std::vector<SetTermPtr> subs;
        subterms_set(u, subs);
        subterms_set(v, subs);
        for (const SetTermPtr& s : subs) {
            if (s->level() == u->level()) pool.push_back(s);
        }
        for (std::size_t i = 0; i < T_.axioms.size(); ++i) {
            const auto& [s, t] = T_.axioms[i];
            for (int j : shift_candidates(u, v, s->level())) {
                Permutation shift = Permutation::theta(j);
                SetTermPtr si = permute(shift, s);
                SetTermPtr ti = permute(shift, t);
                if (si->level() == u->level()) {
                    pool.push_back(si);
                    pool.push_back(ti);
                }
                pool.push_back(rewrite_all(u, si, ti));
                pool.push_back(rewrite_all(u, ti, si));
                pool.push_back(rewrite_all(v, si, ti));
                pool.push_back(rewrite_all(v, ti, si));
            }
        }
        std::sort(pool.begin(), pool.end(), TermLess{});
        pool.erase(std::unique(pool.begin(), pool.end(),
                               [](const SetTermPtr& a, const SetTermPtr& b) {
                                   return compare(a, b) == 0;
                               }),
                   pool.end());
        std::vector<SetTermPtr> out;
        for (const SetTermPtr& m : pool) {
            if (m->level() != u->level()) continue;
            if (alpha_eq(m, u) || alpha_eq(m, v)) continue;
            out.push_back(m);
        }
        return out;
    }

    const Theory& T_;
    std::map<std::pair<SetTermPtr, SetTermPtr>, std::pair<EqDerivPtr, unsigned>, PairLess> found_;
    std::map<std::pair<SetTermPtr, SetTermPtr>, unsigned, PairLess> failed_;
};

}  // namespace

std::optional<EqDerivPtr> eqcent_bounded(const Theory& T, const SetTermPtr& u, const SetTermPtr& v,
                                         unsigned depth) {
    if (u->level() != v->level()) {
        throw LevelMismatch("equated terms have levels " + std::to_string(u->level()) + " and " +
                            std::to_string(v->level()));
    }
    EqSearch search(T);
    return search.prove(u, v, depth);
}

std::optional<EqDerivPtr> herbrand_member(const Theory& T, Atom a2, const SetTermPtr& x,
                                          unsigned depth) {
    if (!T.theta_closed) {
        throw TheoryNotThetaClosed("term-model membership needs a theta-closed theory");
    }
    if (x->level() != a2.level - 1) {
        throw LevelMismatch("candidate element has level " + std::to_string(x->level()) +
                            ", membership in " + to_string(a2) + " expects " +
                            std::to_string(a2.level - 1));
    }
    Atom down{a2.level - 1, a2.index};
    return eqcent_bounded(T, set_atm(down), x, depth);
}

namespace {

Tri herbrand_sat_rec(const Theory& T, const PredPtr& X, unsigned depth,
                     const AtomSet& theory_atoms, const std::set<std::uint64_t>& theory_indices) {
    if (const auto* n = std::get_if<Pred::And>(&X->node())) {
        Tri out = Tri::True;
        for (const auto& c : n->conjuncts) {
            Tri r = herbrand_sat_rec(T, c, depth, theory_atoms, theory_indices);
            if (r == Tri::False) return Tri::False;
            if (r == Tri::Unknown) out = Tri::Unknown;
        }
        return out;
    }
    if (const auto* n = std::get_if<Pred::Neg>(&X->node())) {
        Tri r = herbrand_sat_rec(T, n->body, depth, theory_atoms, theory_indices);
        if (r == Tri::True) return Tri::False;
        if (r == Tri::False) return Tri::True;
        return Tri::Unknown;
    }
    if (const auto* n = std::get_if<Pred::All>(&X->node())) {
        AtomSet avoid = set_union(theory_atoms, n->body->support());
        avoid.insert(n->binder);
        Atom c = fresh(n->binder.level, avoid, theory_indices);
        return herbrand_sat_rec(T, permute(Permutation::swap(c, n->binder), n->body), depth,
                                theory_atoms, theory_indices);
    }
    const auto& n = std::get<Pred::Elt>(X->node());
    if (herbrand_member(T, n.target, n.elem, depth)) return Tri::True;
    return Tri::Unknown;
}

}  // namespace

Tri herbrand_sat(const Theory& T, const PredPtr& X, unsigned depth) {
    if (!T.theta_closed) {
        throw TheoryNotThetaClosed("term-model satisfaction needs a theta-closed theory");
    }
    AtomSet theory_atoms;
    std::set<std::uint64_t> theory_indices;
    for (const auto& [s, t] : T.axioms) {
        collect_atoms(s, theory_atoms);
        collect_atoms(t, theory_atoms);
    }
    for (const Atom& a : theory_atoms) theory_indices.insert(a.index);
    return herbrand_sat_rec(T, X, depth, theory_atoms, theory_indices);
}

}  // namespace stratos
