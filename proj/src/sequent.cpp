#include "stratos/sequent.hpp"

#include <algorithm>

#include "stratos/errors.hpp"

namespace stratos {

namespace {

bool pred_eq(const PredPtr& a, const PredPtr& b) { return compare(a, b) == 0; }
bool pred_lt(const PredPtr& a, const PredPtr& b) { return compare(a, b) < 0; }

std::vector<PredPtr> norm(std::vector<PredPtr> v) {
    std::sort(v.begin(), v.end(), pred_lt);
    v.erase(std::unique(v.begin(), v.end(), pred_eq), v.end());
    return v;
}

bool ctx_has(const std::vector<PredPtr>& v, const PredPtr& p) {
    auto it = std::lower_bound(v.begin(), v.end(), p, pred_lt);
    return it != v.end() && pred_eq(*it, p);
}

std::vector<PredPtr> ctx_with(const std::vector<PredPtr>& v, const std::vector<PredPtr>& add) {
    std::vector<PredPtr> out = v;
    out.insert(out.end(), add.begin(), add.end());
    return norm(std::move(out));
}

std::vector<PredPtr> ctx_without(const std::vector<PredPtr>& v, const PredPtr& p) {
    std::vector<PredPtr> out;
    out.reserve(v.size());
    for (const auto& q : v) {
        if (!pred_eq(q, p)) out.push_back(q);
    }
    return out;
}

std::vector<PredPtr> ctx_diff(const std::vector<PredPtr>& a, const std::vector<PredPtr>& b) {
    std::vector<PredPtr> out;
    for (const auto& p : a) {
        if (!ctx_has(b, p)) out.push_back(p);
    }
    return out;
}

bool ctx_eq(const std::vector<PredPtr>& a, const std::vector<PredPtr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!pred_eq(a[i], b[i])) return false;
    }
    return true;
}

bool fail(std::string* diag, const std::string& msg) {
    if (diag && diag->empty()) *diag = msg;
    return false;
}

}  // namespace

Sequent make_sequent(std::vector<PredPtr> left, std::vector<PredPtr> right) {
    return Sequent{norm(std::move(left)), norm(std::move(right))};
}

bool seq_eq(const Sequent& a, const Sequent& b) {
    return ctx_eq(a.left, b.left) && ctx_eq(a.right, b.right);
}

AtomSet seq_support(const Sequent& s) {
    AtomSet out;
    for (const auto& p : s.left) out = set_union(out, p->support());
    for (const auto& p : s.right) out = set_union(out, p->support());
    return out;
}

void collect_atoms(const Sequent& s, AtomSet& out) {
    for (const auto& p : s.left) collect_atoms(p, out);
    for (const auto& p : s.right) collect_atoms(p, out);
}

DerivPtr deriv(Rule rule, Sequent conclusion, PredPtr principal, Atom atom,
               std::vector<DerivPtr> premises) {
    auto d = std::make_shared<Derivation>();
    d->rule = rule;
    d->conclusion = std::move(conclusion);
    d->principal = std::move(principal);
    d->atom = atom;
    d->premises = std::move(premises);
    return d;
}

namespace {

// What a rule adds to its conclusion to form each premise in retained form.
struct PremiseAdds {
    std::vector<std::pair<std::vector<PredPtr>, std::vector<PredPtr>>> adds;
};

bool principal_on_left(Rule r) { return r == Rule::AndL || r == Rule::NegL || r == Rule::AllL; }
bool principal_on_right(Rule r) { return r == Rule::AndR || r == Rule::NegR || r == Rule::AllR; }

std::optional<PremiseAdds> rule_parts(const Derivation& d, std::string* diag) {
    const Sequent& c = d.conclusion;
    const PredPtr& p = d.principal;
    if (!p) {
        fail(diag, "derivation node without a principal formula");
        return std::nullopt;
    }
    PremiseAdds out;
    switch (d.rule) {
        case Rule::Ax:
            if (!ctx_has(c.left, p) || !ctx_has(c.right, p)) {
                fail(diag, "ax principal must appear on both sides");
                return std::nullopt;
            }
            return out;
        case Rule::AndL: {
            if (!ctx_has(c.left, p)) {
                fail(diag, "andl principal missing from the left context");
                return std::nullopt;
            }
            const auto* n = std::get_if<Pred::And>(&p->node());
            if (!n) {
                fail(diag, "andl principal is not a conjunction");
                return std::nullopt;
            }
            out.adds.push_back({n->conjuncts, {}});
            return out;
        }
        case Rule::AndR: {
            if (!ctx_has(c.right, p)) {
                fail(diag, "andr principal missing from the right context");
                return std::nullopt;
            }
            const auto* n = std::get_if<Pred::And>(&p->node());
            if (!n) {
                fail(diag, "andr principal is not a conjunction");
                return std::nullopt;
            }
            for (const auto& x : n->conjuncts) out.adds.push_back({{}, {x}});
            return out;
        }
        case Rule::NegL: {
            if (!ctx_has(c.left, p)) {
                fail(diag, "negl principal missing from the left context");
                return std::nullopt;
            }
            const auto* n = std::get_if<Pred::Neg>(&p->node());
            if (!n) {
                fail(diag, "negl principal is not a negation");
                return std::nullopt;
            }
            out.adds.push_back({{}, {n->body}});
            return out;
        }
        case Rule::NegR: {
            if (!ctx_has(c.right, p)) {
                fail(diag, "negr principal missing from the right context");
                return std::nullopt;
            }
            const auto* n = std::get_if<Pred::Neg>(&p->node());
            if (!n) {
                fail(diag, "negr principal is not a negation");
                return std::nullopt;
            }
            out.adds.push_back({{n->body}, {}});
            return out;
        }
        case Rule::AllL: {
            if (!ctx_has(c.left, p)) {
                fail(diag, "alll principal missing from the left context");
                return std::nullopt;
            }
            const auto* n = std::get_if<Pred::All>(&p->node());
            if (!n) {
                fail(diag, "alll principal is not a universal");
                return std::nullopt;
            }
            if (d.atom.level != n->binder.level) {
                fail(diag, "alll witness level differs from the binder");
                return std::nullopt;
            }
            out.adds.push_back({{subst_pred(n->body, n->binder, set_atm(d.atom))}, {}});
            return out;
        }
        case Rule::AllR: {
            if (!ctx_has(c.right, p)) {
                fail(diag, "allr principal missing from the right context");
                return std::nullopt;
            }
            const auto* n = std::get_if<Pred::All>(&p->node());
            if (!n) {
                fail(diag, "allr principal is not a universal");
                return std::nullopt;
            }
            if (d.atom.level != n->binder.level) {
                fail(diag, "allr eigenatom level differs from the binder");
                return std::nullopt;
            }
            if (seq_support(c).count(d.atom)) {
                fail(diag, "allr eigenatom occurs in the conclusion");
                return std::nullopt;
            }
            out.adds.push_back(
                {{}, {permute(Permutation::swap(d.atom, n->binder), n->body)}});
            return out;
        }
        case Rule::Cut:
            out.adds.push_back({{}, {p}});
            out.adds.push_back({{p}, {}});
            return out;
    }
    fail(diag, "unknown rule");
    return std::nullopt;
}

}  // namespace

bool check_derivation(const DerivPtr& d, std::string* diag) {
    if (!d) return fail(diag, "null derivation");
    auto parts = rule_parts(*d, diag);
    if (!parts) return false;
    if (d->premises.size() != parts->adds.size()) {
        return fail(diag, "wrong number of premises");
    }
    const Sequent& c = d->conclusion;
    for (std::size_t i = 0; i < parts->adds.size(); ++i) {
        const auto& [add_l, add_r] = parts->adds[i];
        std::vector<PredPtr> retained_l = ctx_with(c.left, add_l);
        std::vector<PredPtr> retained_r = ctx_with(c.right, add_r);
        std::vector<PredPtr> dropped_l = principal_on_left(d->rule)
                                             ? ctx_with(ctx_without(c.left, d->principal), add_l)
                                             : retained_l;
        std::vector<PredPtr> dropped_r = principal_on_right(d->rule)
                                             ? ctx_with(ctx_without(c.right, d->principal), add_r)
                                             : retained_r;
        const Sequent& actual = d->premises[i]->conclusion;
        bool ok = (ctx_eq(actual.left, retained_l) && ctx_eq(actual.right, retained_r)) ||
                  (ctx_eq(actual.left, dropped_l) && ctx_eq(actual.right, dropped_r));
        if (!ok) return fail(diag, "premise sequent does not match the rule");
        if (!check_derivation(d->premises[i], diag)) return false;
    }
    return true;
}

unsigned height(const DerivPtr& d) {
    unsigned h = 0;
    for (const auto& p : d->premises) h = std::max(h, 1 + height(p));
    return h;
}

bool cut_free(const DerivPtr& d) {
    if (d->rule == Rule::Cut) return false;
    for (const auto& p : d->premises) {
        if (!cut_free(p)) return false;
    }
    return true;
}

namespace {

class Prover {
public:
    Prover(const Sequent& root, unsigned depth) : depth_(depth) {
        collect_atoms(root, root_atoms_);
    }

    std::optional<DerivPtr> search(const Sequent& s, unsigned budget) {
        for (const PredPtr& p : s.left) {
            if (ctx_has(s.right, p)) return deriv(Rule::Ax, s, p, Atom{0, 0}, {});
        }
        // Invertible steps are applied eagerly (first match) and never
        // backtracked: each replaces its principal by strictly lighter
        // formulas, so saturation terminates without consuming budget.
        for (const PredPtr& p : s.left) {
            const auto* n = std::get_if<Pred::And>(&p->node());
            if (!n) continue;
            Sequent prem{ctx_with(ctx_without(s.left, p), n->conjuncts), s.right};
            auto sub = search(prem, budget);
            if (!sub) return std::nullopt;
            return deriv(Rule::AndL, s, p, Atom{0, 0}, {*sub});
        }
        for (const PredPtr& p : s.right) {
            const auto* n = std::get_if<Pred::And>(&p->node());
            if (!n) continue;
            std::vector<DerivPtr> subs;
            for (const PredPtr& x : n->conjuncts) {
                Sequent prem{s.left, ctx_with(ctx_without(s.right, p), {x})};
                auto sub = search(prem, budget);
                if (!sub) return std::nullopt;
                subs.push_back(*sub);
            }
            return deriv(Rule::AndR, s, p, Atom{0, 0}, std::move(subs));
        }
        for (const PredPtr& p : s.left) {
            const auto* n = std::get_if<Pred::Neg>(&p->node());
            if (!n) continue;
            Sequent prem{ctx_without(s.left, p), ctx_with(s.right, {n->body})};
            auto sub = search(prem, budget);
            if (!sub) return std::nullopt;
            return deriv(Rule::NegL, s, p, Atom{0, 0}, {*sub});
        }
        for (const PredPtr& p : s.right) {
            const auto* n = std::get_if<Pred::Neg>(&p->node());
            if (!n) continue;
            Sequent prem{ctx_with(s.left, {n->body}), ctx_without(s.right, p)};
            auto sub = search(prem, budget);
            if (!sub) return std::nullopt;
            return deriv(Rule::NegR, s, p, Atom{0, 0}, {*sub});
        }
        for (const PredPtr& p : s.right) {
            const auto* n = std::get_if<Pred::All>(&p->node());
            if (!n) continue;
            AtomSet avoid = root_atoms_;
            collect_atoms(s, avoid);
            Atom eigen = fresh(n->binder.level, avoid);
            PredPtr body = permute(Permutation::swap(eigen, n->binder), n->body);
            Sequent prem{s.left, ctx_with(ctx_without(s.right, p), {body})};
            auto sub = search(prem, budget);
            if (!sub) return std::nullopt;
            return deriv(Rule::AllR, s, p, eigen, {*sub});
        }
        if (budget == 0) return std::nullopt;
        for (const PredPtr& p : s.left) {
            const auto* n = std::get_if<Pred::All>(&p->node());
            if (!n) continue;
            for (Atom w : witness_pool(s, n->binder.level)) {
                PredPtr instance = subst_pred(n->body, n->binder, set_atm(w));
                Sequent prem{ctx_with(s.left, {instance}), s.right};
                if (seq_eq(prem, s)) continue;
                if (auto sub = search(prem, budget - 1)) {
                    return deriv(Rule::AllL, s, p, w, {*sub});
                }
            }
        }
        return std::nullopt;
    }

private:
    std::vector<Atom> witness_pool(const Sequent& s, int level) {
        AtomSet seen = root_atoms_;
        collect_atoms(s, seen);
        std::vector<Atom> out;
        for (const Atom& a : seen) {
            if (a.level == level) out.push_back(a);
        }
        AtomSet avoid = seen;
        for (unsigned i = 0; i < depth_; ++i) {
            Atom g = fresh(level, avoid);
            avoid.insert(g);
            out.push_back(g);
        }
        return out;
    }

    unsigned depth_;
    AtomSet root_atoms_;
};

}  // namespace

std::optional<DerivPtr> prove_bounded(const Sequent& s, unsigned depth) {
    Prover prover(s, depth);
    return prover.search(s, depth);
}

DerivPtr permute(const Permutation& pi, const DerivPtr& d) {
    std::vector<PredPtr> left;
    std::vector<PredPtr> right;
    for (const auto& p : d->conclusion.left) left.push_back(permute(pi, p));
    for (const auto& p : d->conclusion.right) right.push_back(permute(pi, p));
    PredPtr principal = d->principal ? permute(pi, d->principal) : nullptr;
    Atom atom = d->atom;
    if (d->rule == Rule::AllL || d->rule == Rule::AllR) atom = pi.apply(atom);
    std::vector<DerivPtr> premises;
    premises.reserve(d->premises.size());
    for (const auto& p : d->premises) premises.push_back(permute(pi, p));
    return deriv(d->rule, make_sequent(std::move(left), std::move(right)), std::move(principal),
                 atom, std::move(premises));
}

namespace {

void subtree_atoms(const DerivPtr& d, AtomSet& out) {
    collect_atoms(d->conclusion, out);
    if (d->principal) collect_atoms(d->principal, out);
    if (d->rule == Rule::AllL || d->rule == Rule::AllR) out.insert(d->atom);
    for (const auto& p : d->premises) subtree_atoms(p, out);
}

// Swap out an AllR eigenatom that would collide with incoming material. The
// conclusion is untouched: neither the old nor the new eigenatom is free in
// it, and the rules are equivariant.
DerivPtr refresh_eigen(const DerivPtr& d, const AtomSet& incoming) {
    if (d->rule != Rule::AllR || !incoming.count(d->atom)) return d;
    AtomSet avoid = incoming;
    subtree_atoms(d, avoid);
    Atom g = fresh(d->atom.level, avoid);
    return permute(Permutation::swap(g, d->atom), d);
}

DerivPtr weaken_rec(const DerivPtr& d0, const std::vector<PredPtr>& add_left,
                    const std::vector<PredPtr>& add_right, const AtomSet& added_support) {
    DerivPtr d = refresh_eigen(d0, added_support);
    Sequent concl{ctx_with(d->conclusion.left, add_left),
                  ctx_with(d->conclusion.right, add_right)};
    std::vector<DerivPtr> premises;
    premises.reserve(d->premises.size());
    for (const auto& p : d->premises) {
        premises.push_back(weaken_rec(p, add_left, add_right, added_support));
    }
    return deriv(d->rule, std::move(concl), d->principal, d->atom, std::move(premises));
}

}  // namespace

DerivPtr weaken(const DerivPtr& d, const std::vector<PredPtr>& add_left,
                const std::vector<PredPtr>& add_right) {
    if (add_left.empty() && add_right.empty()) return d;
    AtomSet added_support;
    for (const auto& p : add_left) added_support = set_union(added_support, p->support());
    for (const auto& p : add_right) added_support = set_union(added_support, p->support());
    return weaken_rec(d, add_left, add_right, added_support);
}

namespace {

DerivPtr rename_rec(const DerivPtr& d0, const std::map<Atom, Atom>& ren, const SmallSubst& subst,
                    const AtomSet& touched) {
    DerivPtr d = refresh_eigen(d0, touched);
    std::vector<PredPtr> left;
    std::vector<PredPtr> right;
    for (const auto& p : d->conclusion.left) left.push_back(subst.apply(p));
    for (const auto& p : d->conclusion.right) right.push_back(subst.apply(p));
    PredPtr principal = d->principal ? subst.apply(d->principal) : nullptr;
    Atom atom = d->atom;
    if (d->rule == Rule::AllL) {
        auto it = ren.find(atom);
        if (it != ren.end()) atom = it->second;
    }
    std::vector<DerivPtr> premises;
    premises.reserve(d->premises.size());
    for (const auto& p : d->premises) premises.push_back(rename_rec(p, ren, subst, touched));
    return deriv(d->rule, make_sequent(std::move(left), std::move(right)), std::move(principal),
                 atom, std::move(premises));
}

}  // namespace

DerivPtr rename_derivation(const DerivPtr& d, const std::map<Atom, Atom>& renaming) {
    std::map<Atom, Atom> ren;
    std::map<Atom, SetTermPtr> entries;
    AtomSet touched;
    for (const auto& [a, b] : renaming) {
        if (a == b) continue;
        if (a.level != b.level) {
            throw LevelMismatch("renaming maps " + to_string(a) + " across levels to " +
                                to_string(b));
        }
        ren.emplace(a, b);
        entries.emplace(a, set_atm(b));
        touched.insert(a);
        touched.insert(b);
    }
    if (ren.empty()) return d;
    for (const auto& [a, b] : ren) {
        (void)a;
        if (ren.count(b)) {
            throw FreshnessViolation("renaming domain meets its image at " + to_string(b));
        }
    }
    SmallSubst subst = SmallSubst::make(std::move(entries));
    return rename_rec(d, ren, subst, touched);
}

namespace {

struct CutBudget {
    std::uint64_t steps = 0;
    void tick() {
        if (++steps > cut_fuel()) throw FuelExhausted("cut elimination exceeded its fuel");
    }
};

// Rebuild so every premise is in retained form (premise contains its
// conclusion); the checker accepts both forms, the rewrite wants one.
DerivPtr normalize_retained(const DerivPtr& d) {
    auto parts = rule_parts(*d, nullptr);
    std::vector<DerivPtr> premises;
    premises.reserve(d->premises.size());
    for (std::size_t i = 0; i < d->premises.size(); ++i) {
        DerivPtr child = normalize_retained(d->premises[i]);
        const auto& [add_l, add_r] = parts->adds[i];
        std::vector<PredPtr> want_l = ctx_with(d->conclusion.left, add_l);
        std::vector<PredPtr> want_r = ctx_with(d->conclusion.right, add_r);
        std::vector<PredPtr> need_l = ctx_diff(want_l, child->conclusion.left);
        std::vector<PredPtr> need_r = ctx_diff(want_r, child->conclusion.right);
        if (!need_l.empty() || !need_r.empty()) {
            child = weaken(child, need_l, need_r);
        }
        premises.push_back(std::move(child));
    }
    return deriv(d->rule, d->conclusion, d->principal, d->atom, std::move(premises));
}

// reduce eliminates one cut between cut-free retained-form derivations
// dL :: (L |- R, X) and dR :: (L, X |- R), producing (L |- R). Termination:
// every recursive call shrinks (age of X, height dL + height dR)
// lexicographically.
DerivPtr reduce(const PredPtr& X, const DerivPtr& dL, const DerivPtr& dR, CutBudget& budget);

DerivPtr commute_left(const PredPtr& X, const DerivPtr& dL, const DerivPtr& dR,
                      const Sequent& goal, CutBudget& budget) {
    auto parts = rule_parts(*dL, nullptr);
    std::vector<DerivPtr> premises;
    for (std::size_t i = 0; i < dL->premises.size(); ++i) {
        const auto& [add_l, add_r] = parts->adds[i];
        premises.push_back(reduce(X, dL->premises[i], weaken(dR, add_l, add_r), budget));
    }
    return deriv(dL->rule, goal, dL->principal, dL->atom, std::move(premises));
}

DerivPtr commute_right(const PredPtr& X, const DerivPtr& dL, const DerivPtr& dR,
                       const Sequent& goal, CutBudget& budget) {
    auto parts = rule_parts(*dR, nullptr);
    std::vector<DerivPtr> premises;
    for (std::size_t i = 0; i < dR->premises.size(); ++i) {
        const auto& [add_l, add_r] = parts->adds[i];
        premises.push_back(reduce(X, weaken(dL, add_l, add_r), dR->premises[i], budget));
    }
    return deriv(dR->rule, goal, dR->principal, dR->atom, std::move(premises));
}

DerivPtr reduce(const PredPtr& X, const DerivPtr& dL, const DerivPtr& dR, CutBudget& budget) {
    budget.tick();
    const std::vector<PredPtr>& l_ctx = dL->conclusion.left;
    const std::vector<PredPtr>& r_ctx = dR->conclusion.right;
    Sequent goal{l_ctx, r_ctx};
    if (ctx_has(r_ctx, X)) return dL;
    if (ctx_has(l_ctx, X)) return dR;
    if (dL->rule == Rule::Ax) {
        // The axiom formula sits in L and in R + {X}; the X case is excluded
        // by the shortcut above, so it survives into the goal.
        return deriv(Rule::Ax, goal, dL->principal, Atom{0, 0}, {});
    }
    if (dR->rule == Rule::Ax) {
        return deriv(Rule::Ax, goal, dR->principal, Atom{0, 0}, {});
    }
    bool left_intro = (dL->rule == Rule::AndR || dL->rule == Rule::NegR ||
                       dL->rule == Rule::AllR) &&
                      alpha_eq(dL->principal, X);
    bool right_intro = (dR->rule == Rule::AndL || dR->rule == Rule::NegL ||
                        dR->rule == Rule::AllL) &&
                       alpha_eq(dR->principal, X);
    if (!left_intro) return commute_left(X, dL, dR, goal, budget);
    if (!right_intro) return commute_right(X, dL, dR, goal, budget);
    // Both sides introduce X: an essential case per connective. Each residual
    // cut is on a formula of smaller age or between smaller derivations.
    if (const auto* n = std::get_if<Pred::And>(&X->node())) {
        const std::vector<PredPtr>& members = n->conjuncts;
        DerivPtr cur = reduce(X, weaken(dL, members, {}), dR->premises[0], budget);
        for (std::size_t j = 0; j < members.size(); ++j) {
            std::vector<PredPtr> rest(members.begin() + j + 1, members.end());
            DerivPtr ej = reduce(X, dL->premises[j], weaken(dR, {}, {members[j]}), budget);
            cur = reduce(members[j], weaken(ej, rest, {}), cur, budget);
        }
        return cur;
    }
    if (const auto* n = std::get_if<Pred::Neg>(&X->node())) {
        const PredPtr& body = n->body;
        DerivPtr d1 = reduce(X, weaken(dL, {}, {body}), dR->premises[0], budget);
        DerivPtr d2 = reduce(X, dL->premises[0], weaken(dR, {body}, {}), budget);
        return reduce(body, d1, d2, budget);
    }
    if (const auto* n = std::get_if<Pred::All>(&X->node())) {
        Atom eigen = dL->atom;
        Atom witness = dR->atom;
        PredPtr instance = subst_pred(n->body, n->binder, set_atm(witness));
        DerivPtr d1 = reduce(X, weaken(dL, {instance}, {}), dR->premises[0], budget);
        DerivPtr renamed = dL->premises[0];
        if (eigen != witness) {
            renamed = rename_derivation(renamed, {{eigen, witness}});
        }
        DerivPtr d2 = reduce(X, renamed, weaken(dR, {}, {instance}), budget);
        return reduce(instance, d2, d1, budget);
    }
    throw InvalidDerivation("cut on an atomic membership cannot be introduced on both sides");
}

}  // namespace

DerivPtr eliminate_cut(const DerivPtr& d) {
    std::string diag;
    if (!check_derivation(d, &diag)) {
        throw InvalidDerivation(diag.empty() ? "derivation failed the checker" : diag);
    }
    CutBudget budget;
    struct Elim {
        CutBudget& budget;
        DerivPtr operator()(const DerivPtr& d) {
            std::vector<DerivPtr> premises;
            premises.reserve(d->premises.size());
            for (const auto& p : d->premises) premises.push_back((*this)(p));
            if (d->rule != Rule::Cut) {
                return deriv(d->rule, d->conclusion, d->principal, d->atom, std::move(premises));
            }
            return reduce(d->principal, premises[0], premises[1], budget);
        }
    };
    Elim elim{budget};
    return elim(normalize_retained(d));
}

}  // namespace stratos
