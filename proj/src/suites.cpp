#include "stratos/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "stratos/errors.hpp"
#include "stratos/format.hpp"
#include "stratos/models.hpp"
#include "stratos/sequent.hpp"
#include "stratos/surface.hpp"
#include "stratos/theories.hpp"

namespace stratos {

bool SuiteResult::ok() const {
    for (const LawResult& l : laws) {
        if (l.failed != 0) return false;
    }
    return true;
}

namespace {

// Raw engine output only, so identical seeds give identical reports on every
// platform (std::uniform_int_distribution is not portable).
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int pick(int lo, int hi) {
        return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    std::uint64_t index(std::uint64_t max = 3) {
        return rng_() % (max + 1);
    }
    bool coin() { return (rng_() & 1) != 0; }

    Atom atom(int lo, int hi) { return Atom{pick(lo, hi), index()}; }

    PredPtr pred(unsigned budget, int lo, int hi) {
        if (budget <= 1) {
            switch (pick(0, 3)) {
                case 0: return top();
                case 1: return bot();
                default: {
                    int t = pick(lo + 1, hi);
                    return pred_elt(set_atm(Atom{t - 1, index()}), Atom{t, index()});
                }
            }
        }
        switch (pick(0, 4)) {
            case 0: {
                unsigned half = budget / 2;
                std::vector<PredPtr> parts{pred(half, lo, hi), pred(budget - 1 - half, lo, hi)};
                return pred_and(std::move(parts));
            }
            case 1: return pred_neg(pred(budget - 1, lo, hi));
            case 2: return pred_all(atom(lo, hi), pred(budget - 1, lo, hi));
            default: {
                int t = pick(lo + 1, hi);
                return pred_elt(set_at(t - 1, budget - 1, lo, hi), Atom{t, index()});
            }
        }
    }

    SetTermPtr set_at(int level, unsigned budget, int lo, int hi) {
        if (budget <= 1 || level - 1 < lo || coin()) {
            return set_atm(Atom{level, index()});
        }
        return set_comp(Atom{level - 1, index()}, pred(budget - 1, lo, hi));
    }

    PredPtr pred_aged(unsigned budget, unsigned max_age, int lo, int hi) {
        for (int tries = 0; tries < 16; ++tries) {
            PredPtr x = pred(budget, lo, hi);
            if (x->measures().age <= max_age) return x;
        }
        int t = pick(lo + 1, hi);
        return pred_elt(set_atm(Atom{t - 1, index()}), Atom{t, index()});
    }

    Prepoint prepoint(unsigned max_facts, unsigned max_stack, int lo, int hi) {
        Prepoint p;
        int facts = pick(0, static_cast<int>(max_facts));
        for (int i = 0; i < facts; ++i) {
            int tl = pick(lo + 1, hi);
            p = p.with_fact(Atom{tl, index()}, set_at(tl - 1, 3, lo, hi));
        }
        int pushes = pick(0, static_cast<int>(max_stack));
        for (int i = 0; i < pushes; ++i) {
            int lvl = pick(lo, hi);
            if (pick(0, 3) == 0) {
                // Generated supports only use small indices, so a high-index
                // seed satisfies the theta freshness condition by construction.
                Atom seed{lvl, 10 + index()};
                p = amgis(p, set_at(lvl, 3, lo, hi), seed, true);
            } else {
                p = amgis(p, set_at(lvl, 3, lo, hi), Atom{lvl, index()}, false);
            }
        }
        return p;
    }

private:
    std::mt19937_64 rng_;
};

class LawRun {
public:
    explicit LawRun(std::string name) { result_.name = std::move(name); }

    void run(unsigned n, const std::function<bool(std::string&)>& instance) {
        for (unsigned i = 0; i < n; ++i) {
            std::string show;
            bool ok = false;
            try {
                ok = instance(show);
            } catch (const std::exception& e) {
                show += std::string(show.empty() ? "" : " | ") + "exception: " + e.what();
            }
            ++result_.checked;
            if (!ok) {
                ++result_.failed;
                if (result_.first_failure.empty()) result_.first_failure = show;
            }
        }
    }

    LawResult result() const { return result_; }

private:
    LawResult result_;
};

constexpr int kLo = -2;
constexpr int kHi = 3;

Atom fresh_at(int level, const AtomSet& avoid) { return fresh(level, avoid); }

// ---- sigma: the eight nominal algebra laws ----

SuiteResult suite_sigma(unsigned n, std::uint64_t seed) {
    SuiteResult out{"sigma", seed, n, {}, };
    Gen g(seed);

    auto gen_budget = [&] { return static_cast<unsigned>(g.pick(1, 8)); };

    {
        LawRun law("sigma.alpha");
        law.run(n, [&](std::string& show) {
            PredPtr Z = g.pred(gen_budget(), kLo, kHi);
            Atom b = g.atom(kLo, kHi);
            SetTermPtr y = g.set_at(b.level, 3, kLo, kHi);
            Atom b2 = fresh_at(b.level, set_union(Z->support(), AtomSet{b}));
            PredPtr lhs = subst_pred(Z, b, y);
            PredPtr rhs = subst_pred(permute(Permutation::swap(b2, b), Z), b2, y);
            show = "Z = " + to_text(Z) + " | b = " + to_string(b) + " | b' = " + to_string(b2) +
                   " | y = " + to_text(y);
            return alpha_eq(lhs, rhs);
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sigma.fresh");
        law.run(n, [&](std::string& show) {
            PredPtr Z = g.pred(gen_budget(), kLo, kHi);
            int lvl = g.pick(kLo, kHi);
            Atom b = fresh_at(lvl, Z->support());
            SetTermPtr y = g.set_at(lvl, 3, kLo, kHi);
            show = "Z = " + to_text(Z) + " | b = " + to_string(b) + " | y = " + to_text(y);
            return alpha_eq(subst_pred(Z, b, y), Z);
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sigma.sigma");
        law.run(n, [&](std::string& show) {
            PredPtr Z = g.pred(gen_budget(), kLo, kHi);
            Atom b = g.atom(kLo, kHi);
            SetTermPtr y = g.set_at(b.level, 3, kLo, kHi);
            int la = g.pick(kLo, kHi);
            Atom a = fresh_at(la, set_union(y->support(), AtomSet{b}));
            SetTermPtr x = g.set_at(la, 3, kLo, kHi);
            PredPtr lhs = subst_pred(subst_pred(Z, a, x), b, y);
            PredPtr rhs = subst_pred(subst_pred(Z, b, y), a, subst_set(x, b, y));
            show = "Z = " + to_text(Z) + " | a = " + to_string(a) + " | x = " + to_text(x) +
                   " | b = " + to_string(b) + " | y = " + to_text(y);
            return alpha_eq(lhs, rhs);
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sigma.swap");
        law.run(n, [&](std::string& show) {
            PredPtr Z = g.pred(gen_budget(), kLo, kHi);
            int la = g.pick(kLo, kHi);
            int lb = g.pick(kLo, kHi);
            SetTermPtr x = g.set_at(la, 3, kLo, kHi);
            SetTermPtr y = g.set_at(lb, 3, kLo, kHi);
            Atom a = fresh_at(la, y->support());
            Atom b = fresh_at(lb, set_union(x->support(), AtomSet{a}));
            PredPtr lhs = subst_pred(subst_pred(Z, a, x), b, y);
            PredPtr rhs = subst_pred(subst_pred(Z, b, y), a, x);
            show = "Z = " + to_text(Z) + " | a = " + to_string(a) + " | x = " + to_text(x) +
                   " | b = " + to_string(b) + " | y = " + to_text(y);
            return alpha_eq(lhs, rhs);
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sigma.assoc");
        law.run(n, [&](std::string& show) {
            PredPtr Z = g.pred(gen_budget(), kLo, kHi);
            int la = g.pick(kLo, kHi);
            int lb = g.pick(kLo, kHi);
            SetTermPtr x = g.set_at(la, 3, kLo, kHi);
            SetTermPtr y = g.set_at(lb, 3, kLo, kHi);
            Atom a = fresh_at(la, y->support());
            Atom b = fresh_at(lb, set_union(Z->support(), AtomSet{a}));
            PredPtr lhs = subst_pred(Z, a, subst_set(x, b, y));
            PredPtr rhs = subst_pred(subst_pred(Z, a, x), b, y);
            show = "Z = " + to_text(Z) + " | a = " + to_string(a) + " | x = " + to_text(x) +
                   " | b = " + to_string(b) + " | y = " + to_text(y);
            return alpha_eq(lhs, rhs);
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sigma.id");
        law.run(n, [&](std::string& show) {
            PredPtr Z = g.pred(gen_budget(), kLo, kHi);
            Atom a = g.atom(kLo, kHi);
            show = "Z = " + to_text(Z) + " | a = " + to_string(a);
            return alpha_eq(subst_pred(Z, a, set_atm(a)), Z);
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sigma.rename");
        law.run(n, [&](std::string& show) {
            PredPtr Z = g.pred(gen_budget(), kLo, kHi);
            Atom a = g.atom(kLo, kHi);
            Atom a2 = fresh_at(a.level, set_union(Z->support(), AtomSet{a}));
            PredPtr lhs = subst_pred(Z, a, set_atm(a2));
            PredPtr rhs = permute(Permutation::swap(a2, a), Z);
            show = "Z = " + to_text(Z) + " | a = " + to_string(a) + " | a' = " + to_string(a2);
            return alpha_eq(lhs, rhs);
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sigma.concretion");
        law.run(n, [&](std::string& show) {
            int lb = g.pick(kLo, kHi - 1);
            SetTermPtr z = set_comp(Atom{lb, g.index()}, g.pred(gen_budget(), kLo, kHi));
            Atom a = g.atom(kLo, kHi);
            SetTermPtr x = g.set_at(a.level, 3, kLo, kHi);
            AtomSet avoid = set_union(set_union(z->support(), x->support()), AtomSet{a});
            Atom c = fresh_at(lb, avoid);
            PredPtr lhs = subst_pred(concrete(z, c), a, x);
            PredPtr rhs = concrete(subst_set(z, a, x), c);
            show = "z = " + to_text(z) + " | c = " + to_string(c) + " | a = " + to_string(a) +
                   " | x = " + to_text(x);
            return alpha_eq(lhs, rhs);
        });
        out.laws.push_back(law.result());
    }
    return out;
}

// ---- welldef: support/minlev bounds and fresh-binder independence ----

SuiteResult suite_welldef(unsigned n, std::uint64_t seed) {
    SuiteResult out{"welldef", seed, n, {}};
    Gen g(seed);

    {
        LawRun law("welldef.support");
        law.run(n, [&](std::string& show) {
            PredPtr Z = g.pred(g.pick(1, 8), kLo, kHi);
            Atom a = g.atom(kLo, kHi);
            SetTermPtr x = g.set_at(a.level, 3, kLo, kHi);
            AtomSet bound = set_union(set_minus(Z->support(), a), x->support());
            AtomSet got = subst_pred(Z, a, x)->support();
            show = "Z = " + to_text(Z) + " | a = " + to_string(a) + " | x = " + to_text(x);
            return std::includes(bound.begin(), bound.end(), got.begin(), got.end());
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("welldef.minlev");
        law.run(n, [&](std::string& show) {
            PredPtr Z = g.pred(g.pick(1, 8), kLo, kHi);
            Atom a = g.atom(kLo, kHi);
            SetTermPtr x = g.set_at(a.level, 3, kLo, kHi);
            int bound = std::min({Z->measures().minlev, a.level, x->measures().minlev});
            show = "Z = " + to_text(Z) + " | a = " + to_string(a) + " | x = " + to_text(x);
            return subst_pred(Z, a, x)->measures().minlev >= bound;
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("welldef.elt_binder_independent");
        law.run(n, [&](std::string& show) {
            // The sigma rule for membership in a comprehension, run through two
            // distinct fresh concretion binders.
            Atom a = g.atom(kLo + 1, kHi);
            SetTermPtr image = set_comp(Atom{a.level - 1, g.index()}, g.pred(5, kLo, kHi));
            SetTermPtr y = g.set_at(a.level - 1, 3, kLo, kHi);
            PredPtr viaLib = subst_pred(pred_elt(y, a), a, image);

            SetTermPtr y2 = subst_set(y, a, image);
            AtomSet avoid = set_union(image->support(), y2->support());
            Atom c1 = fresh_at(a.level - 1, avoid);
            Atom c2 = fresh_at(a.level - 1, set_union(avoid, AtomSet{c1}));
            PredPtr via1 = subst_pred(concrete(image, c1), c1, y2);
            PredPtr via2 = subst_pred(concrete(image, c2), c2, y2);
            show = "y = " + to_text(y) + " | a = " + to_string(a) +
                   " | image = " + to_text(image) + " | c1 = " + to_string(c1) +
                   " | c2 = " + to_string(c2);
            return alpha_eq(via1, via2) && alpha_eq(via1, viaLib);
        });
        out.laws.push_back(law.result());
    }
    return out;
}

// ---- duality: sigma against amgis ----

SuiteResult suite_duality(unsigned n, std::uint64_t seed) {
    SuiteResult out{"duality", seed, n, {}};
    Gen g(seed);

    {
        LawRun law("duality.single");
        law.run(n, [&](std::string& show) {
            Prepoint p = g.prepoint(5, 2, kLo, kHi);
            PredPtr X = g.pred_aged(5, 5, kLo, kHi);
            Atom a = g.atom(kLo, kHi);
            SetTermPtr x = g.set_at(a.level, 3, kLo, kHi);
            bool lhs = sat(p, subst_pred(X, a, x));
            bool rhs = sat(amgis(p, x, a), X);
            show = "X = " + to_text(X) + " | a = " + to_string(a) + " | x = " + to_text(x) +
                   " | base " + std::to_string(p.base().size()) + " stack " +
                   std::to_string(p.stack().size());
            return lhs == rhs;
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("duality.multi");
        law.run(n, [&](std::string& show) {
            Prepoint p = g.prepoint(4, 1, kLo, kHi);
            PredPtr X = g.pred_aged(5, 5, kLo, kHi);
            // High-index domain atoms: generated images only use small
            // indices, so the whole map is dom # img as required.
            std::map<Atom, SetTermPtr> entries;
            int k = g.pick(1, 3);
            for (int i = 0; i < k; ++i) {
                int lvl = g.pick(kLo, kHi);
                entries[Atom{lvl, 20 + static_cast<std::uint64_t>(i)}] =
                    g.set_at(lvl, 2, kLo, kHi);
            }
            SmallSubst sub = SmallSubst::make(entries);
            bool lhs = sat(p, sub.apply(X));
            bool rhs = sat(p.with_subst(sub), X);
            show = "X = " + to_text(X) + " | entries " + std::to_string(entries.size());
            return lhs == rhs;
        });
        out.laws.push_back(law.result());
    }
    return out;
}

// ---- constants ----

SuiteResult suite_constants(unsigned n, std::uint64_t seed) {
    SuiteResult out{"constants", seed, n, {}};
    Gen g(seed);

    {
        LawRun law("constants.top_bot");
        law.run(n, [&](std::string& show) {
            Prepoint p = g.prepoint(5, 2, kLo, kHi);
            show = "base " + std::to_string(p.base().size()) + " stack " +
                   std::to_string(p.stack().size());
            return sat(p, top()) && !sat(p, bot());
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("constants.empty_full");
        law.run(n, [&](std::string& show) {
            Prepoint p = g.prepoint(5, 2, kLo, kHi);
            int i = g.pick(kLo + 1, kHi);
            SetTermPtr y = g.set_at(i - 1, 3, kLo, kHi);
            show = "i = " + std::to_string(i) + " | y = " + to_text(y);
            return !sat(p, tin(y, empty_set(i))) && sat(p, tin(y, full_set(i)));
        });
        out.laws.push_back(law.result());
    }
    return out;
}

// ---- surface generators ----

// Stratified by construction. Free variables use one reserved name per level
// ("u1" at level 0, "u2" at level 1, ...), so identification by name stays
// injective and erase/infer round trips are meaningful. Binder names come
// from a counter.
class SurfaceGen {
public:
    SurfaceGen(Gen& g, bool closed) : g_(g), closed_(closed) {}

    SFormPtr form(unsigned depth) {
        int kind = g_.pick(0, 5);
        if (depth == 0 && kind >= 2) kind = g_.pick(0, 1) == 0 ? 0 : 4;
        switch (kind) {
            case 0: return sform_bot();
            case 1: {
                if (depth == 0) return sform_bot();
                return sform_imp(form(depth - 1), form(depth - 1));
            }
            case 2: case 3: {
                SVar binder{next_name(), g_.pick(0, 4)};
                scope_.push_back({binder.name, *binder.level});
                SFormPtr body = form(depth - 1);
                scope_.pop_back();
                return sform_all(binder, body);
            }
            case 4: {
                int lvl = g_.pick(0, 4);
                STermPtr a = term(lvl, depth == 0 ? 0 : depth - 1);
                STermPtr b = term(lvl, depth == 0 ? 0 : depth - 1);
                if (!a || !b) return sform_bot();
                return sform_eq(a, b);
            }
            default: {
                int lvl = g_.pick(0, 3);
                STermPtr e = term(lvl, depth == 0 ? 0 : depth - 1);
                STermPtr s = term(lvl + 1, depth == 0 ? 0 : depth - 1);
                if (!e || !s) return sform_bot();
                return sform_in(e, s);
            }
        }
    }

    // A term of the given level, or null if the closed generator has no way
    // to build one here.
    STermPtr term(int level, unsigned depth) {
        std::vector<std::string> in_scope;
        for (const auto& [name, lvl] : scope_) {
            if (lvl == level) in_scope.push_back(name);
        }
        bool can_comp = depth > 0 && level >= 1;
        if (!closed_) {
            int kind = g_.pick(0, 2);
            if (kind == 0 && !in_scope.empty()) {
                return sterm_var(SVar{in_scope[g_.index(in_scope.size() - 1)], level});
            }
            if (kind == 1 && can_comp) return comp(level, depth);
            return sterm_var(SVar{"u" + std::to_string(level + 1), level});
        }
        if (!in_scope.empty() && (!can_comp || g_.coin())) {
            return sterm_var(SVar{in_scope[g_.index(in_scope.size() - 1)], level});
        }
        if (can_comp) return comp(level, depth);
        return nullptr;
    }

    std::string next_name() { return "b" + std::to_string(++counter_); }

private:
    STermPtr comp(int level, unsigned depth) {
        SVar binder{next_name(), level - 1};
        scope_.push_back({binder.name, *binder.level});
        SFormPtr body = form(depth - 1);
        scope_.pop_back();
        return sterm_comp(binder, body);
    }

    Gen& g_;
    bool closed_;
    std::vector<std::pair<std::string, int>> scope_;
    unsigned counter_ = 0;
};

void collect_vars(const SFormPtr& f, std::vector<std::pair<std::string, int>>& out);

void collect_vars(const STermPtr& t, std::vector<std::pair<std::string, int>>& out) {
    if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
        out.emplace_back(n->var.name, *n->var.level);
        return;
    }
    const auto& n = std::get<SurfaceTerm::Comp>(t->node);
    out.emplace_back(n.binder.name, *n.binder.level);
    collect_vars(n.body, out);
}

void collect_vars(const SFormPtr& f, std::vector<std::pair<std::string, int>>& out) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return;
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        collect_vars(n->lhs, out);
        collect_vars(n->rhs, out);
        return;
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        out.emplace_back(n->binder.name, *n->binder.level);
        collect_vars(n->body, out);
        return;
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        collect_vars(n->lhs, out);
        collect_vars(n->rhs, out);
        return;
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    collect_vars(n.elem, out);
    collect_vars(n.set, out);
}

// ---- interp: interpretation lemmas ----

SuiteResult suite_interp(unsigned n, std::uint64_t seed) {
    SuiteResult out{"interp", seed, n, {}};
    Gen g(seed);

    {
        LawRun law("interp.subst");
        law.run(n, [&](std::string& show) {
            SurfaceGen sg(g, false);
            SFormPtr f = sg.form(3);
            std::vector<std::pair<std::string, int>> vars;
            collect_vars(f, vars);
            std::string bn;
            int lvl;
            if (!vars.empty() && g.coin()) {
                auto [name, vl] = vars[g.index(vars.size() - 1)];
                bn = name;
                lvl = vl;
            } else {
                lvl = g.pick(0, 4);
                bn = "u" + std::to_string(lvl + 1);
            }
            SurfaceGen tg(g, false);
            STermPtr t = tg.term(lvl, 2);
            PredPtr lhs = subst_pred(interp(f), Atom{lvl, name_index(bn)}, interp_term(t));
            PredPtr rhs = interp(surface_subst(f, bn, lvl, t));
            show = "f = " + to_string(f) + " | var = " + bn + "@" + std::to_string(lvl) +
                   " | t = " + to_string(t);
            return alpha_eq(lhs, rhs);
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("interp.comprehension");
        law.run(n, [&](std::string& show) {
            int lvl = g.pick(0, 3);
            SurfaceGen sg(g, false);
            STermPtr s = sg.term(lvl, 2);
            std::string bn = sg.next_name();
            STermPtr comp;
            SFormPtr body;
            {
                SurfaceGen bg(g, false);
                body = bg.form(2);
            }
            // Give the body a chance to actually use the binder.
            if (g.coin()) {
                body = sform_in(sterm_var(SVar{bn, lvl}),
                                sterm_var(SVar{"u" + std::to_string(lvl + 2), lvl + 1}));
            }
            comp = sterm_comp(SVar{bn, lvl}, body);
            PredPtr lhs = interp(sform_in(s, comp));
            PredPtr rhs = interp(surface_subst(body, bn, lvl, s));
            show = "s = " + to_string(s) + " | comp = " + to_string(comp);
            return alpha_eq(lhs, rhs);
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("interp.levels");
        law.run(n, [&](std::string& show) {
            int lvl = g.pick(0, 4);
            SurfaceGen sg(g, false);
            STermPtr t = sg.term(lvl, 3);
            show = "t = " + to_string(t);
            return interp_term(t)->level() == lvl;
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("interp.infer_roundtrip");
        law.run(n, [&](std::string& show) {
            SurfaceGen sg(g, false);
            SFormPtr f = sg.form(3);
            show = "f = " + to_string(f);
            check_stratified(f);
            Inference inf = infer_stratification(erase_levels(f), 1);
            check_stratified(inf.resolved);
            return true;
        });
        out.laws.push_back(law.result());
    }
    return out;
}

// ---- ta: the typical ambiguity identity ----

SuiteResult suite_ta(unsigned n, std::uint64_t seed) {
    SuiteResult out{"ta", seed, n, {}};
    Gen g(seed);

    {
        LawRun law("ta.shift");
        law.run(n, [&](std::string& show) {
            SurfaceGen sg(g, true);
            SFormPtr f = sg.form(4);
            show = "f = " + to_string(f);
            SFormPtr fp = plus(f);
            PredPtr lhs = permute(Permutation::theta(1), interp(f));
            PredPtr rhs = interp(fp);
            show += " | f+ = " + to_string(fp);
            return alpha_eq(lhs, rhs);
        });
        out.laws.push_back(law.result());
    }
    return out;
}

// ---- sequent ----

PredPtr prop_letter_pred(std::uint64_t slot) {
    std::uint64_t index = slot + 26 * 100;
    return pred_elt(set_atm(Atom{0, index}), Atom{1, index});
}

SuiteResult suite_sequent(unsigned n, std::uint64_t seed) {
    SuiteResult out{"sequent", seed, n, {}};
    Gen g(seed);

    auto small_ctx = [&](int max) {
        std::vector<PredPtr> ctx;
        int k = g.pick(0, max);
        for (int i = 0; i < k; ++i) ctx.push_back(g.pred_aged(3, 4, kLo, kHi));
        return ctx;
    };

    {
        LawRun law("sequent.ax");
        law.run(n, [&](std::string& show) {
            PredPtr X = g.pred_aged(4, 4, kLo, kHi);
            std::vector<PredPtr> left = small_ctx(2);
            std::vector<PredPtr> right = small_ctx(2);
            left.push_back(X);
            right.push_back(X);
            DerivPtr d = deriv(Rule::Ax, make_sequent(left, right), X, Atom{0, 0}, {});
            std::string diag;
            bool ok = check_derivation(d, &diag);
            show = "X = " + to_text(X) + (diag.empty() ? "" : " | " + diag);
            return ok;
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sequent.forall_elim");
        law.run(n, [&](std::string& show) {
            PredPtr X = g.pred_aged(4, 4, kLo, kHi);
            Atom a = g.atom(kLo, kHi);
            PredPtr allp = pred_all(a, X);
            Atom w{a.level, g.index()};
            const auto& node = std::get<Pred::All>(allp->node());
            PredPtr inst = subst_pred(node.body, node.binder, set_atm(w));
            std::vector<PredPtr> left = small_ctx(1);
            std::vector<PredPtr> right = small_ctx(1);
            left.push_back(allp);
            right.push_back(inst);
            Sequent goal = make_sequent(left, right);
            std::vector<PredPtr> pleft = left;
            pleft.push_back(inst);
            DerivPtr ax = deriv(Rule::Ax, make_sequent(pleft, right), inst, Atom{0, 0}, {});
            DerivPtr d = deriv(Rule::AllL, goal, allp, w, {ax});
            std::string diag;
            bool ok = check_derivation(d, &diag);
            show = "all = " + to_text(allp) + " | witness = " + to_string(w) +
                   (diag.empty() ? "" : " | " + diag);
            return ok;
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sequent.tall_fresh");
        law.run(n, [&](std::string& show) {
            PredPtr X = g.pred_aged(3, 3, kLo, kHi);
            int lvl = g.pick(kLo, kHi);
            Atom a = fresh_at(lvl, X->support());
            PredPtr allp = pred_all(a, X);
            Sequent fwd = make_sequent({X}, {allp});
            Sequent bwd = make_sequent({allp}, {X});
            show = "X = " + to_text(X) + " | a = " + to_string(a);
            for (const Sequent& s : {fwd, bwd}) {
                std::optional<DerivPtr> d = prove_bounded(s, 4);
                if (!d) {
                    show += " | unproved: " + to_text(s);
                    return false;
                }
                if (!check_derivation(*d) || !cut_free(*d)) {
                    show += " | bad derivation for " + to_text(s);
                    return false;
                }
            }
            return true;
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sequent.weakening");
        law.run(n, [&](std::string& show) {
            PredPtr X = g.pred_aged(3, 3, kLo, kHi);
            int lvl = g.pick(kLo, kHi);
            Atom a = fresh_at(lvl, X->support());
            Sequent s = make_sequent({pred_all(a, X)}, {X});
            std::optional<DerivPtr> d = prove_bounded(s, 4);
            show = "X = " + to_text(X) + " | a = " + to_string(a);
            if (!d) {
                show += " | unproved";
                return false;
            }
            std::vector<PredPtr> addl = small_ctx(2);
            std::vector<PredPtr> addr = small_ctx(2);
            DerivPtr w = weaken(*d, addl, addr);
            std::string diag;
            bool ok = check_derivation(w, &diag);
            if (!diag.empty()) show += " | " + diag;
            return ok;
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sequent.k_s");
        LawRun* lr = &law;
        auto prove_and_check = [&](const PredPtr& goal, const char* name) {
            lr->run(1, [&](std::string& show) {
                show = name;
                std::optional<DerivPtr> d = prove_bounded(make_sequent({}, {goal}), 4);
                if (!d) {
                    show += ": not found at depth 4";
                    return false;
                }
                return check_derivation(*d) && cut_free(*d);
            });
        };
        PredPtr P = prop_letter_pred(0);
        PredPtr Q = prop_letter_pred(1);
        PredPtr R = prop_letter_pred(2);
        prove_and_check(pred_imp(P, P), "I");
        prove_and_check(pred_imp(P, pred_imp(Q, P)), "K");
        prove_and_check(pred_imp(pred_imp(P, pred_imp(Q, R)),
                                 pred_imp(pred_imp(P, Q), pred_imp(P, R))),
                        "S");
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sequent.cut_elim");
        // Exhaustive over a tiny signature: two atoms per level, two
        // generator memberships, one-formula contexts.
        PredPtr G1 = pred_elt(set_atm(Atom{0, 0}), Atom{1, 0});
        PredPtr G2 = pred_elt(set_atm(Atom{0, 1}), Atom{1, 1});
        std::vector<PredPtr> pool{
            G1,
            G2,
            pred_neg(G1),
            pred_neg(G2),
            pred_and({G1, G2}),
            pred_or({G1, G2}),
            pred_imp(G1, G2),
            pred_all(Atom{1, 0}, G1),
            pred_all(Atom{0, 0}, G1),
        };
        std::vector<std::vector<PredPtr>> ctxs{{}};
        for (const PredPtr& f : pool) ctxs.push_back({f});
        unsigned pairs = 0;
        for (const PredPtr& X : pool) {
            for (const auto& L : ctxs) {
                for (const auto& R : ctxs) {
                    std::vector<PredPtr> rx = R;
                    rx.push_back(X);
                    std::vector<PredPtr> lx = L;
                    lx.push_back(X);
                    std::optional<DerivPtr> dl = prove_bounded(make_sequent(L, rx), 4);
                    if (!dl) continue;
                    std::optional<DerivPtr> dr = prove_bounded(make_sequent(lx, R), 4);
                    if (!dr) continue;
                    ++pairs;
                    Sequent goal = make_sequent(L, R);
                    DerivPtr cut = deriv(Rule::Cut, goal, X, Atom{0, 0}, {*dl, *dr});
                    law.run(1, [&](std::string& show) {
                        show = "cut on " + to_text(X) + " | goal " + to_text(goal);
                        std::string diag;
                        if (!check_derivation(cut, &diag)) {
                            show += " | cut does not check: " + diag;
                            return false;
                        }
                        DerivPtr e = eliminate_cut(cut);
                        if (!cut_free(e)) {
                            show += " | result keeps a cut";
                            return false;
                        }
                        if (!check_derivation(e, &diag)) {
                            show += " | result fails: " + diag;
                            return false;
                        }
                        if (!seq_eq(e->conclusion, goal)) {
                            show += " | endsequent changed: " + to_text(e->conclusion);
                            return false;
                        }
                        return true;
                    });
                }
            }
        }
        (void)pairs;
        out.laws.push_back(law.result());
    }
    {
        LawRun law("sequent.bot_unprovable");
        law.run(1, [&](std::string& show) {
            show = "|- bot at depth 6";
            return !prove_bounded(make_sequent({}, {bot()}), 6).has_value();
        });
        out.laws.push_back(law.result());
    }
    return out;
}

// ---- theories ----

SuiteResult suite_theories(unsigned n, std::uint64_t seed) {
    SuiteResult out{"theories", seed, n, {}};
    Gen g(seed);

    {
        LawRun law("theories.cong");
        law.run(n, [&](std::string& show) {
            int lvl = g.pick(kLo, kHi - 1);
            SetTermPtr u = g.set_at(lvl, 3, kLo, kHi);
            SetTermPtr u2 = g.set_at(lvl, 3, kLo, kHi);
            Theory T = make_theory({{u, u2}}, false);
            Atom hole{lvl, 7};
            PredPtr uses = pred_elt(set_atm(hole), Atom{lvl + 1, g.index()});
            PredPtr body = pred_and({g.pred_aged(3, 3, kLo, kHi), uses});
            SetTermPtr z = set_comp(Atom{g.pick(kLo, kHi - 1), g.index()}, body);
            SetTermPtr lhs = subst_set(z, hole, u);
            SetTermPtr rhs = subst_set(z, hole, u2);
            show = "u = " + to_text(u) + " | u' = " + to_text(u2) + " | z = " + to_text(z);
            std::optional<EqDerivPtr> d = eqcent_bounded(T, lhs, rhs, 1);
            if (!d) {
                show += " | not derivable at depth 1";
                return false;
            }
            std::string diag;
            if (!check_eq_derivation(T, *d, &diag)) {
                show += " | certificate fails: " + diag;
                return false;
            }
            auto conc = eq_conclusion(T, *d);
            if (!conc || !alpha_eq(conc->first, lhs) || !alpha_eq(conc->second, rhs)) {
                show += " | certificate concludes the wrong pair";
                return false;
            }
            return true;
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("theories.empty_consistent");
        law.run(1, [&](std::string& show) {
            Theory empty_theory = make_theory({}, false);
            for (unsigned d = 0; d <= 5; ++d) {
                if (eqcent_bounded(empty_theory, empty_set(0), full_set(0), d)) {
                    show = "derived empty@0 == full@0 at depth " + std::to_string(d);
                    return false;
                }
            }
            show = "empty@0 == full@0 up to depth 5";
            return true;
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("theories.fresh_barrier");
        law.run(n, [&](std::string& show) {
            std::vector<std::pair<SetTermPtr, SetTermPtr>> axioms;
            int k = g.pick(0, 2);
            for (int i = 0; i < k; ++i) {
                int lvl = g.pick(kLo, kHi);
                axioms.emplace_back(g.set_at(lvl, 2, kLo, kHi), g.set_at(lvl, 2, kLo, kHi));
            }
            Theory T = make_theory(std::move(axioms), false);
            int lvl = g.pick(kLo, kHi);
            // Index 15 is outside every generated support, so a # T and a # x.
            Atom a{lvl, 15};
            SetTermPtr x = g.set_at(lvl, 2, kLo, kHi);
            show = "a = " + to_string(a) + " | x = " + to_text(x);
            return !eqcent_bounded(T, set_atm(a), x, 3).has_value();
        });
        out.laws.push_back(law.result());
    }
    {
        LawRun law("theories.theta_query");
        law.run(n, [&](std::string& show) {
            int lvl = g.pick(kLo, kHi - 1);
            SetTermPtr u = g.set_at(lvl, 2, kLo, kHi);
            SetTermPtr u2 = g.set_at(lvl, 2, kLo, kHi);
            Theory T = make_theory({{u, u2}}, true);
            Atom hole{lvl, 7};
            PredPtr uses = pred_elt(set_atm(hole), Atom{lvl + 1, g.index()});
            SetTermPtr z = set_comp(Atom{g.pick(kLo, kHi - 1), g.index()}, uses);
            SetTermPtr x = subst_set(z, hole, u);
            SetTermPtr x2 = subst_set(z, hole, u2);
            Permutation theta = Permutation::theta(1);
            bool plain = eqcent_bounded(T, x, x2, 2).has_value();
            bool shifted = eqcent_bounded(T, permute(theta, x), permute(theta, x2), 2).has_value();
            show = "x = " + to_text(x) + " | x' = " + to_text(x2);
            return plain == shifted;
        });
        out.laws.push_back(law.result());
    }
    return out;
}

// ---- numerals ----

SuiteResult suite_numerals(unsigned n, std::uint64_t seed) {
    SuiteResult out{"numerals", seed, n, {}};
    constexpr int kLevel = 6;

    std::vector<std::pair<unsigned, unsigned>> dpairs;
    for (unsigned a = 0; a <= 3; ++a) {
        for (unsigned b = a + 1; b <= 3; ++b) dpairs.emplace_back(a, b);
    }

    {
        LawRun law("numerals.distinguish");
        for (auto [a, b] : dpairs) {
            law.run(1, [&](std::string& show) {
                show = "n = " + std::to_string(a) + ", m = " + std::to_string(b);
                auto [p, c] = numeral_witness(a, b, kLevel);
                bool ma = sat(p, tin(set_atm(c), numeral(a, kLevel)));
                bool mb = sat(p, tin(set_atm(c), numeral(b, kLevel)));
                show += " | sat(n) = " + std::to_string(ma) + ", sat(m) = " + std::to_string(mb);
                return ma != mb;
            });
        }
        out.laws.push_back(law.result());
    }
    {
        LawRun law("numerals.coextensional");
        for (auto [a, b] : dpairs) {
            law.run(1, [&](std::string& show) {
                auto [p, c] = numeral_witness(a, b, kLevel);
                std::vector<SetTermPtr> universe{set_atm(c)};
                show = "witness (" + std::to_string(a) + ", " + std::to_string(b) + ")";
                // Probing a numeral against itself finds no difference; the
                // witness pair itself must be separated.
                for (unsigned k = 0; k <= 3; ++k) {
                    if (!exteq_bounded(p, numeral(k, kLevel), numeral(k, kLevel), universe)) {
                        show += " | self-probe differs at " + std::to_string(k);
                        return false;
                    }
                }
                if (exteq_bounded(p, numeral(a, kLevel), numeral(b, kLevel), universe)) {
                    show += " | probe misses the separation";
                    return false;
                }
                return true;
            });
        }
        out.laws.push_back(law.result());
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "sigma", "welldef", "duality", "constants", "interp",
        "ta",    "sequent", "theories", "numerals",
    };
    return names;
}

SuiteResult run_suite(const std::string& suite, unsigned n, std::uint64_t seed) {
    if (suite == "sigma") return suite_sigma(n, seed);
    if (suite == "welldef") return suite_welldef(n, seed);
    if (suite == "duality") return suite_duality(n, seed);
    if (suite == "constants") return suite_constants(n, seed);
    if (suite == "interp") return suite_interp(n, seed);
    if (suite == "ta") return suite_ta(n, seed);
    if (suite == "sequent") return suite_sequent(n, seed);
    if (suite == "theories") return suite_theories(n, seed);
    if (suite == "numerals") return suite_numerals(n, seed);
    throw Error("unknown suite '" + suite + "'");
}

std::string format_suite(const SuiteResult& r) {
    std::ostringstream out;
    out << "suite " << r.suite << " | seed " << r.seed << " | n " << r.n << "\n";
    for (const LawResult& l : r.laws) {
        if (l.failed == 0) {
            out << "law " << l.name << ": OK (" << l.checked << " instances)\n";
        } else {
            out << "law " << l.name << ": FAIL (" << l.failed << "/" << l.checked
                << " failed) first: " << l.first_failure << "\n";
        }
    }
    return out.str();
}

}  // namespace stratos
