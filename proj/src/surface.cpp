#include "stratos/surface.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "stratos/errors.hpp"

namespace stratos {

STermPtr sterm_var(SVar v) {
    auto t = std::make_shared<SurfaceTerm>();
    t->node = SurfaceTerm::Var{std::move(v)};
    return t;
}

STermPtr sterm_comp(SVar binder, SFormPtr body) {
    auto t = std::make_shared<SurfaceTerm>();
    t->node = SurfaceTerm::Comp{std::move(binder), std::move(body)};
    return t;
}

SFormPtr sform_bot() {
    auto f = std::make_shared<SurfaceFormula>();
    f->node = SurfaceFormula::Bot{};
    return f;
}

SFormPtr sform_imp(SFormPtr lhs, SFormPtr rhs) {
    auto f = std::make_shared<SurfaceFormula>();
    f->node = SurfaceFormula::Imp{std::move(lhs), std::move(rhs)};
    return f;
}

SFormPtr sform_all(SVar binder, SFormPtr body) {
    auto f = std::make_shared<SurfaceFormula>();
    f->node = SurfaceFormula::All{std::move(binder), std::move(body)};
    return f;
}

SFormPtr sform_eq(STermPtr lhs, STermPtr rhs) {
    auto f = std::make_shared<SurfaceFormula>();
    f->node = SurfaceFormula::Eq{std::move(lhs), std::move(rhs)};
    return f;
}

SFormPtr sform_in(STermPtr elem, STermPtr set) {
    auto f = std::make_shared<SurfaceFormula>();
    f->node = SurfaceFormula::In{std::move(elem), std::move(set)};
    return f;
}

namespace {

bool parse_name(const std::string& name, std::uint64_t& index) {
    bool ok = !name.empty() && name[0] >= 'a' && name[0] <= 'z';
    std::uint64_t suffix = 0;
    if (ok && name.size() > 1) {
        ok = name[1] != '0';
        for (std::size_t i = 1; ok && i < name.size(); ++i) {
            ok = std::isdigit(static_cast<unsigned char>(name[i])) != 0;
            suffix = suffix * 10 + static_cast<std::uint64_t>(name[i] - '0');
        }
    }
    if (ok) index = static_cast<std::uint64_t>(name[0] - 'a') + 26 * suffix;
    return ok;
}

}  // namespace

std::uint64_t name_index(const std::string& name) {
    std::uint64_t index = 0;
    if (!parse_name(name, index)) {
        throw ParseError("invalid variable name '" + name +
                         "' (a lowercase letter with an optional positive suffix)");
    }
    return index;
}

namespace {

std::string to_string(const SVar& v) {
    if (v.level) return v.name + "@" + std::to_string(*v.level);
    return v.name;
}

std::string form_str(const SFormPtr& f);

std::string term_str(const STermPtr& t) {
    if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
        return to_string(n->var);
    }
    const auto& n = std::get<SurfaceTerm::Comp>(t->node);
    return "{ " + to_string(n.binder) + " | " + form_str(n.body) + " }";
}

std::string form_str(const SFormPtr& f) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return "bot";
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        bool wrap = std::holds_alternative<SurfaceFormula::Imp>(n->lhs->node) ||
                    std::holds_alternative<SurfaceFormula::All>(n->lhs->node);
        std::string lhs = form_str(n->lhs);
        if (wrap) lhs = "(" + lhs + ")";
        return lhs + " -> " + form_str(n->rhs);
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        return "forall " + to_string(n->binder) + ". " + form_str(n->body);
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        return term_str(n->lhs) + " = " + term_str(n->rhs);
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    return term_str(n.elem) + " in " + term_str(n.set);
}

// --- parsing ---

struct Token {
    enum Kind { Ident, Int, Arrow, Equal, Dot, At, LParen, RParen, LBrace, RBrace, Bar, End };
    Kind kind;
    std::string text;
    long long value = 0;
    std::size_t col = 0;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        std::size_t col = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() &&
                   std::isalnum(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({Token::Ident, src.substr(i, j - i), 0, col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            std::size_t j = i + (c == '-' ? 1 : 0);
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            Token t{Token::Int, src.substr(i, j - i), 0, col};
            t.value = std::stoll(t.text);
            out.push_back(t);
            i = j;
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Token::Arrow, "->", 0, col});
            i += 2;
            continue;
        }
        switch (c) {
            case '=': out.push_back({Token::Equal, "=", 0, col}); break;
            case '.': out.push_back({Token::Dot, ".", 0, col}); break;
            case '@': out.push_back({Token::At, "@", 0, col}); break;
            case '(': out.push_back({Token::LParen, "(", 0, col}); break;
            case ')': out.push_back({Token::RParen, ")", 0, col}); break;
            case '{': out.push_back({Token::LBrace, "{", 0, col}); break;
            case '}': out.push_back({Token::RBrace, "}", 0, col}); break;
            case '|': out.push_back({Token::Bar, "|", 0, col}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", 1, col);
        }
        ++i;
    }
    out.push_back({Token::End, "", 0, src.size() + 1});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    SFormPtr formula_all() {
        SFormPtr f = formula();
        expect(Token::End, "end of input");
        return f;
    }

    STermPtr term_all() {
        STermPtr t = term();
        expect(Token::End, "end of input");
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void err(const std::string& msg) const {
        throw ParseError(msg, 1, peek().col);
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) err("expected " + what);
        return take();
    }

    bool at_keyword(const std::string& kw) const {
        return peek().kind == Token::Ident && peek().text == kw;
    }

    SVar variable() {
        if (peek().kind != Token::Ident || peek().text == "bot" || peek().text == "forall" ||
            peek().text == "in") {
            err("expected a variable name");
        }
        Token name = take();
        std::uint64_t ignored = 0;
        if (!parse_name(name.text, ignored)) {
            throw ParseError("invalid variable name '" + name.text +
                                 "' (a lowercase letter with an optional positive suffix)",
                             1, name.col);
        }
        SVar v{name.text, std::nullopt};
        if (peek().kind == Token::At) {
            take();
            Token lvl = expect(Token::Int, "a level after '@'");
            v.level = static_cast<int>(lvl.value);
        }
        return v;
    }

    STermPtr term() {
        if (peek().kind == Token::LBrace) {
            take();
            SVar binder = variable();
            expect(Token::Bar, "'|' after the comprehension binder");
            SFormPtr body = formula();
            expect(Token::RBrace, "'}' closing the comprehension");
            return sterm_comp(std::move(binder), std::move(body));
        }
        return sterm_var(variable());
    }

    SFormPtr formula() {
        SFormPtr lhs = formula_atom();
        if (peek().kind == Token::Arrow) {
            take();
            return sform_imp(std::move(lhs), formula());
        }
        return lhs;
    }

    SFormPtr formula_atom() {
        if (at_keyword("bot")) {
            take();
            return sform_bot();
        }
        if (at_keyword("forall")) {
            take();
            SVar binder = variable();
            expect(Token::Dot, "'.' after the quantified variable");
            return sform_all(std::move(binder), formula());
        }
        if (peek().kind == Token::LParen) {
            take();
            SFormPtr f = formula();
            expect(Token::RParen, "')'");
            return f;
        }
        STermPtr lhs = term();
        if (peek().kind == Token::Equal) {
            take();
            return sform_eq(std::move(lhs), term());
        }
        if (at_keyword("in")) {
            take();
            return sform_in(std::move(lhs), term());
        }
        err("expected '=' or 'in' after a term");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

SFormPtr parse_formula(const std::string& text) { return Parser(text).formula_all(); }
STermPtr parse_term(const std::string& text) { return Parser(text).term_all(); }

namespace {

int checked_level(const SVar& v, bool tst) {
    if (!v.level) {
        throw NotStratified("variable '" + v.name + "' has no level; run inference first");
    }
    if (tst && *v.level < 1) {
        throw NotStratified("variable '" + to_string(v) + "' sits below level 1");
    }
    return *v.level;
}

void check_form(const SFormPtr& f, bool tst);

int check_term(const STermPtr& t, bool tst) {
    if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
        return checked_level(n->var, tst);
    }
    const auto& n = std::get<SurfaceTerm::Comp>(t->node);
    int binder = checked_level(n.binder, tst);
    check_form(n.body, tst);
    return binder + 1;
}

void check_form(const SFormPtr& f, bool tst) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return;
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        check_form(n->lhs, tst);
        check_form(n->rhs, tst);
        return;
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        checked_level(n->binder, tst);
        check_form(n->body, tst);
        return;
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        int l = check_term(n->lhs, tst);
        int r = check_term(n->rhs, tst);
        if (l != r) {
            throw NotStratified("'" + form_str(f) + "' equates levels " + std::to_string(l) +
                                " and " + std::to_string(r));
        }
        return;
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    int e = check_term(n.elem, tst);
    int s = check_term(n.set, tst);
    if (s != e + 1) {
        throw NotStratified("'" + form_str(f) + "' needs the container one level up, got " +
                            std::to_string(e) + " in " + std::to_string(s));
    }
}

}  // namespace

void check_stratified(const SFormPtr& f, bool tst) { check_form(f, tst); }

namespace {

// Union-find over level variables, tracking offsets to the root.
class OffsetUF {
public:
    int node() {
        parent_.push_back(static_cast<int>(parent_.size()));
        off_.push_back(0);
        return static_cast<int>(parent_.size()) - 1;
    }

    std::pair<int, long long> find(int i) {
        if (parent_[i] == i) return {i, 0};
        auto [root, above] = find(parent_[i]);
        parent_[i] = root;
        off_[i] += above;
        return {root, off_[i]};
    }

    // Impose level(i) = level(j) + d.
    void unite(int i, int j, long long d, const std::string& site) {
        auto [ri, oi] = find(i);
        auto [rj, oj] = find(j);
        if (ri == rj) {
            if (oi != oj + d) {
                throw NotStratifiable("level cycle in '" + site + "': the constraint needs offset " +
                                      std::to_string(d) + " where " + std::to_string(oi - oj) +
                                      " is already forced");
            }
            return;
        }
        parent_[rj] = ri;
        off_[rj] = oi - d - oj;
    }

private:
    std::vector<int> parent_;
    std::vector<long long> off_;
};

struct InferState {
    OffsetUF uf;
    int ground = -1;
    std::map<const void*, int> site;              // binder/var AST node -> uf node
    std::map<std::string, int> free_vars;         // free identifiers, by name
    std::vector<std::pair<std::string, int>> order;  // variables in first occurrence order
};

using Scope = std::map<std::string, int>;

void infer_form(const SFormPtr& f, Scope env, InferState& st);

int infer_term(const STermPtr& t, Scope env, InferState& st) {
    if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
        int node;
        auto it = env.find(n->var.name);
        if (it != env.end()) {
            node = it->second;
        } else {
            auto ins = st.free_vars.emplace(n->var.name, -1);
            if (ins.second) {
                ins.first->second = st.uf.node();
                st.order.emplace_back(n->var.name, ins.first->second);
            }
            node = ins.first->second;
        }
        st.site[t.get()] = node;
        if (n->var.level) st.uf.unite(node, st.ground, *n->var.level, to_string(n->var));
        return node;
    }
    const auto& n = std::get<SurfaceTerm::Comp>(t->node);
    int binder = st.uf.node();
    st.order.emplace_back(n.binder.name, binder);
    st.site[t.get()] = binder;
    if (n.binder.level) st.uf.unite(binder, st.ground, *n.binder.level, to_string(n.binder));
    env[n.binder.name] = binder;
    infer_form(n.body, env, st);
    int whole = st.uf.node();
    st.uf.unite(whole, binder, 1, term_str(t));
    return whole;
}

void infer_form(const SFormPtr& f, Scope env, InferState& st) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return;
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        infer_form(n->lhs, env, st);
        infer_form(n->rhs, env, st);
        return;
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        int binder = st.uf.node();
        st.order.emplace_back(n->binder.name, binder);
        st.site[f.get()] = binder;
        if (n->binder.level) st.uf.unite(binder, st.ground, *n->binder.level, to_string(n->binder));
        env[n->binder.name] = binder;
        infer_form(n->body, env, st);
        return;
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        int l = infer_term(n->lhs, env, st);
        int r = infer_term(n->rhs, env, st);
        st.uf.unite(l, r, 0, form_str(f));
        return;
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    int e = infer_term(n.elem, env, st);
    int s = infer_term(n.set, env, st);
    st.uf.unite(s, e, 1, form_str(f));
}

struct Leveler {
    InferState& st;
    int anchor;
    std::map<int, long long> component_min;  // root -> lowest variable offset
    int ground_root;
    long long ground_off;

    int level_of(int node) {
        auto [root, off] = st.uf.find(node);
        if (root == ground_root) return static_cast<int>(off - ground_off);
        return static_cast<int>(anchor + off - component_min.at(root));
    }

    SVar resolve(const SVar& v, const void* key) {
        return SVar{v.name, level_of(st.site.at(key))};
    }

    SFormPtr form(const SFormPtr& f);

    STermPtr term(const STermPtr& t) {
        if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
            return sterm_var(resolve(n->var, t.get()));
        }
        const auto& n = std::get<SurfaceTerm::Comp>(t->node);
        return sterm_comp(resolve(n.binder, t.get()), form(n.body));
    }
};

SFormPtr Leveler::form(const SFormPtr& f) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return f;
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        return sform_imp(form(n->lhs), form(n->rhs));
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        return sform_all(resolve(n->binder, f.get()), form(n->body));
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        return sform_eq(term(n->lhs), term(n->rhs));
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    return sform_in(term(n.elem), term(n.set));
}

}  // namespace

Inference infer_stratification(const SFormPtr& f, int anchor) {
    InferState st;
    st.ground = st.uf.node();
    infer_form(f, Scope{}, st);

    Leveler lv{st, anchor, {}, 0, 0};
    auto [groot, goff] = st.uf.find(st.ground);
    lv.ground_root = groot;
    lv.ground_off = goff;
    for (const auto& [name, node] : st.order) {
        (void)name;
        auto [root, off] = st.uf.find(node);
        if (root == groot) continue;
        auto it = lv.component_min.find(root);
        if (it == lv.component_min.end() || off < it->second) lv.component_min[root] = off;
    }

    Inference out;
    out.resolved = lv.form(f);
    for (const auto& [name, node] : st.order) {
        out.assignment.emplace_back(name, lv.level_of(node));
    }
    return out;
}

namespace {

Atom svar_atom(const SVar& v) { return Atom{*v.level, name_index(v.name)}; }

PredPtr interp_form(const SFormPtr& f);

SetTermPtr interp_tm(const STermPtr& t) {
    if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
        return set_atm(svar_atom(n->var));
    }
    const auto& n = std::get<SurfaceTerm::Comp>(t->node);
    return set_comp(svar_atom(n.binder), interp_form(n.body));
}

PredPtr interp_form(const SFormPtr& f) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return bot();
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        return pred_imp(interp_form(n->lhs), interp_form(n->rhs));
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        return pred_all(svar_atom(n->binder), interp_form(n->body));
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        return teq(interp_tm(n->lhs), interp_tm(n->rhs));
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    return tin(interp_tm(n.elem), interp_tm(n.set));
}

}  // namespace

PredPtr interp(const SFormPtr& f) {
    check_stratified(f);
    return interp_form(f);
}

SetTermPtr interp_term(const STermPtr& t) {
    check_term(t, false);
    return interp_tm(t);
}

namespace {

using BoundSet = std::set<std::pair<std::string, int>>;

SFormPtr bump_form(const SFormPtr& f, BoundSet bound);

STermPtr bump_term(const STermPtr& t, const BoundSet& bound) {
    if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
        if (n->var.level && bound.count({n->var.name, *n->var.level})) {
            return sterm_var(SVar{n->var.name, *n->var.level + 1});
        }
        return t;
    }
    const auto& n = std::get<SurfaceTerm::Comp>(t->node);
    BoundSet inner = bound;
    inner.insert({n.binder.name, *n.binder.level});
    return sterm_comp(SVar{n.binder.name, *n.binder.level + 1}, bump_form(n.body, inner));
}

SFormPtr bump_form(const SFormPtr& f, BoundSet bound) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return f;
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        return sform_imp(bump_form(n->lhs, bound), bump_form(n->rhs, bound));
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        BoundSet inner = bound;
        inner.insert({n->binder.name, *n->binder.level});
        return sform_all(SVar{n->binder.name, *n->binder.level + 1}, bump_form(n->body, inner));
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        return sform_eq(bump_term(n->lhs, bound), bump_term(n->rhs, bound));
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    return sform_in(bump_term(n.elem, bound), bump_term(n.set, bound));
}

}  // namespace

SFormPtr plus(const SFormPtr& f) {
    check_stratified(f);
    PredPtr denot = interp_form(f);
    if (!denot->support().empty()) {
        std::string names;
        for (const Atom& a : denot->support()) {
            if (!names.empty()) names += ", ";
            names += to_string(a);
        }
        throw NotClosed("formula has free variables: " + names);
    }
    SFormPtr bumped = bump_form(f, {});
    check_stratified(bumped);
    return bumped;
}

unsigned size(const STermPtr& t) {
    if (std::holds_alternative<SurfaceTerm::Var>(t->node)) return 1;
    return 1 + size(std::get<SurfaceTerm::Comp>(t->node).body);
}

unsigned size(const SFormPtr& f) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return 1;
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        return 1 + size(n->lhs) + size(n->rhs);
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        return 1 + size(n->body);
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        return 1 + size(n->lhs) + size(n->rhs);
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    return 1 + size(n.elem) + size(n.set);
}

namespace {

void free_vars_form(const SFormPtr& f, BoundSet bound, BoundSet& out);

void free_vars_term(const STermPtr& t, BoundSet bound, BoundSet& out) {
    if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
        if (!n->var.level) {
            throw NotStratified("substitution requires explicit levels ('" + n->var.name + "')");
        }
        if (!bound.count({n->var.name, *n->var.level})) out.insert({n->var.name, *n->var.level});
        return;
    }
    const auto& n = std::get<SurfaceTerm::Comp>(t->node);
    if (!n.binder.level) {
        throw NotStratified("substitution requires explicit levels ('" + n.binder.name + "')");
    }
    bound.insert({n.binder.name, *n.binder.level});
    free_vars_form(n.body, std::move(bound), out);
}

void free_vars_form(const SFormPtr& f, BoundSet bound, BoundSet& out) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return;
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        free_vars_form(n->lhs, bound, out);
        free_vars_form(n->rhs, std::move(bound), out);
        return;
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        if (!n->binder.level) {
            throw NotStratified("substitution requires explicit levels ('" + n->binder.name + "')");
        }
        bound.insert({n->binder.name, *n->binder.level});
        free_vars_form(n->body, std::move(bound), out);
        return;
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        free_vars_term(n->lhs, bound, out);
        free_vars_term(n->rhs, std::move(bound), out);
        return;
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    free_vars_term(n.elem, bound, out);
    free_vars_term(n.set, std::move(bound), out);
}

struct Subst {
    std::string name;
    int level;
    STermPtr image;
    BoundSet image_free;

    bool hits(const SVar& binder) const {
        return binder.name == name && binder.level && *binder.level == level;
    }

    // A same-level name not free in the image, the body, or the target.
    SVar fresh_binder(const SVar& old, const SFormPtr& body) const {
        BoundSet used = image_free;
        free_vars_form(body, {}, used);
        used.insert({name, level});
        std::uint64_t idx = name_index(old.name);
        for (;;) {
            idx += 26;
            std::string cand = atom_name(idx);
            if (!used.count({cand, *old.level})) return SVar{cand, *old.level};
        }
    }

    SFormPtr form(const SFormPtr& f) const;

    STermPtr term(const STermPtr& t) const {
        if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
            if (n->var.name == name && n->var.level && *n->var.level == level) return image;
            return t;
        }
        const auto& n = std::get<SurfaceTerm::Comp>(t->node);
        if (hits(n.binder)) return t;
        if (n.binder.level && image_free.count({n.binder.name, *n.binder.level})) {
            SVar nb = fresh_binder(n.binder, n.body);
            SFormPtr renamed = surface_subst(n.body, n.binder.name, *n.binder.level,
                                             sterm_var(nb));
            return sterm_comp(nb, form(renamed));
        }
        return sterm_comp(n.binder, form(n.body));
    }
};

SFormPtr Subst::form(const SFormPtr& f) const {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return f;
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        return sform_imp(form(n->lhs), form(n->rhs));
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        if (hits(n->binder)) return f;
        if (n->binder.level && image_free.count({n->binder.name, *n->binder.level})) {
            SVar nb = fresh_binder(n->binder, n->body);
            SFormPtr renamed = surface_subst(n->body, n->binder.name, *n->binder.level,
                                             sterm_var(nb));
            return sform_all(nb, form(renamed));
        }
        return sform_all(n->binder, form(n->body));
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        return sform_eq(term(n->lhs), term(n->rhs));
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    return sform_in(term(n.elem), term(n.set));
}

}  // namespace

SFormPtr surface_subst(const SFormPtr& f, const std::string& name, int level, const STermPtr& s) {
    Subst subst{name, level, s, {}};
    free_vars_term(s, {}, subst.image_free);
    return subst.form(f);
}

SFormPtr erase_levels(const SFormPtr& f) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return f;
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        return sform_imp(erase_levels(n->lhs), erase_levels(n->rhs));
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        return sform_all(SVar{n->binder.name, std::nullopt}, erase_levels(n->body));
    }
    struct EraseTerm {
        STermPtr operator()(const STermPtr& t) const {
            if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
                return sterm_var(SVar{n->var.name, std::nullopt});
            }
            const auto& n = std::get<SurfaceTerm::Comp>(t->node);
            return sterm_comp(SVar{n.binder.name, std::nullopt}, erase_levels(n.body));
        }
    } erase_term;
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        return sform_eq(erase_term(n->lhs), erase_term(n->rhs));
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    return sform_in(erase_term(n.elem), erase_term(n.set));
}

std::string to_string(const SFormPtr& f) { return form_str(f); }
std::string to_string(const STermPtr& t) { return term_str(t); }

}  // namespace stratos
