#include "stratos/format.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "stratos/errors.hpp"

namespace stratos {

namespace {

struct Token {
    enum Kind {
        Ident,
        UIdent,
        Int,
        At,
        LParen,
        RParen,
        LBrace,
        RBrace,
        LBracket,
        RBracket,
        Semi,
        Comma,
        Assign,
        EqEq,
        LeftArrow,
        ImpArrow,
        Turnstile,
        End,
    };
    Kind kind;
    std::string text;
    long long value = 0;
    std::size_t col = 0;
};

std::vector<Token> lex(const std::string& src, std::size_t line) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto two = [&](char a, char b) {
        return i + 1 < src.size() && src[i] == a && src[i + 1] == b;
    };
    while (i < src.size()) {
        char c = src[i];
        std::size_t col = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            Token::Kind kind = std::isupper(static_cast<unsigned char>(c)) ? Token::UIdent
                                                                           : Token::Ident;
            out.push_back({kind, src.substr(i, j - i), 0, col});
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
        if (two('-', '>')) {
            out.push_back({Token::ImpArrow, "->", 0, col});
            i += 2;
            continue;
        }
        if (two('<', '-')) {
            out.push_back({Token::LeftArrow, "<-", 0, col});
            i += 2;
            continue;
        }
        if (two(':', '=')) {
            out.push_back({Token::Assign, ":=", 0, col});
            i += 2;
            continue;
        }
        if (two('=', '=')) {
            out.push_back({Token::EqEq, "==", 0, col});
            i += 2;
            continue;
        }
        if (two('|', '-')) {
            out.push_back({Token::Turnstile, "|-", 0, col});
            i += 2;
            continue;
        }
        switch (c) {
            case '@': out.push_back({Token::At, "@", 0, col}); break;
            case '(': out.push_back({Token::LParen, "(", 0, col}); break;
            case ')': out.push_back({Token::RParen, ")", 0, col}); break;
            case '{': out.push_back({Token::LBrace, "{", 0, col}); break;
            case '}': out.push_back({Token::RBrace, "}", 0, col}); break;
            case '[': out.push_back({Token::LBracket, "[", 0, col}); break;
            case ']': out.push_back({Token::RBracket, "]", 0, col}); break;
            case ';': out.push_back({Token::Semi, ";", 0, col}); break;
            case ',': out.push_back({Token::Comma, ",", 0, col}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        ++i;
    }
    out.push_back({Token::End, "", 0, src.size() + 1});
    return out;
}

// Sugar expansion for a schematic propositional letter: a closed membership
// on a reserved index range, distinct for each (letter, suffix).
PredPtr prop_letter(const std::string& text, std::size_t line, std::size_t col) {
    std::uint64_t suffix = 0;
    if (text.size() > 1) {
        if (text[1] == '0') {
            throw ParseError("invalid propositional letter '" + text + "'", line, col);
        }
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw ParseError("invalid propositional letter '" + text + "'", line, col);
            }
            suffix = suffix * 10 + static_cast<std::uint64_t>(text[i] - '0');
        }
    }
    std::uint64_t index =
        static_cast<std::uint64_t>(std::tolower(static_cast<unsigned char>(text[0])) - 'a') +
        26 * (suffix + 100);
    return pred_elt(set_atm(Atom{0, index}), Atom{1, index});
}

class IParser {
public:
    IParser(const std::string& src, std::size_t line = 1) : toks_(lex(src, line)), line_(line) {}

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void err(const std::string& msg) const {
        throw ParseError(msg, line_, peek().col);
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) err("expected " + what);
        return take();
    }

    void expect_end() { expect(Token::End, "end of input"); }

    bool at_keyword(const std::string& kw) const {
        return peek().kind == Token::Ident && peek().text == kw;
    }

    Atom atom() {
        Token name = expect(Token::Ident, "an atom name");
        std::uint64_t index = 0;
        try {
            index = name_index(name.text);
        } catch (const ParseError&) {
            throw ParseError("invalid atom name '" + name.text + "'", line_, name.col);
        }
        expect(Token::At, "'@level' after the atom name");
        Token lvl = expect(Token::Int, "a level after '@'");
        return Atom{static_cast<int>(lvl.value), index};
    }

    SetTermPtr setterm() {
        if (peek().kind == Token::LBracket) {
            take();
            Atom binder = atom();
            expect(Token::RBracket, "']' after the comprehension binder");
            return set_comp(binder, pred());
        }
        if (at_keyword("atm")) {
            take();
            expect(Token::LParen, "'('");
            Atom a = atom();
            expect(Token::RParen, "')'");
            return set_atm(a);
        }
        if (at_keyword("empty") || at_keyword("full")) {
            bool is_empty = take().text == "empty";
            expect(Token::At, "'@level'");
            Token lvl = expect(Token::Int, "a level after '@'");
            return is_empty ? empty_set(static_cast<int>(lvl.value))
                            : full_set(static_cast<int>(lvl.value));
        }
        if (at_keyword("num")) {
            take();
            expect(Token::LParen, "'('");
            Token n = expect(Token::Int, "a natural number");
            if (n.value < 0) err("numerals are non-negative");
            expect(Token::RParen, "')'");
            expect(Token::At, "'@level'");
            Token lvl = expect(Token::Int, "a level after '@'");
            return numeral(static_cast<unsigned>(n.value), static_cast<int>(lvl.value));
        }
        if (peek().kind == Token::Ident) return set_atm(atom());
        err("expected a set term");
    }

    PredPtr pred() {
        PredPtr lhs = pred_unit();
        if (peek().kind == Token::ImpArrow) {
            take();
            return pred_imp(std::move(lhs), pred());
        }
        return lhs;
    }

    PredPtr pred_unit() {
        if (peek().kind == Token::UIdent) {
            Token t = take();
            return prop_letter(t.text, line_, t.col);
        }
        if (peek().kind == Token::LParen) {
            take();
            PredPtr p = pred();
            expect(Token::RParen, "')'");
            return p;
        }
        if (at_keyword("top")) {
            take();
            return top();
        }
        if (at_keyword("bot")) {
            take();
            return bot();
        }
        if (at_keyword("neg")) {
            take();
            return pred_neg(pred_unit());
        }
        if (at_keyword("and") || at_keyword("or")) {
            bool conj = take().text == "and";
            std::vector<PredPtr> parts = braced_list();
            return conj ? pred_and(std::move(parts)) : pred_or(std::move(parts));
        }
        if (at_keyword("all")) {
            take();
            expect(Token::LBracket, "'[' before the bound atom");
            Atom binder = atom();
            expect(Token::RBracket, "']' after the bound atom");
            return pred_all(binder, pred());
        }
        if (at_keyword("imp") || at_keyword("iff")) {
            bool is_imp = take().text == "imp";
            expect(Token::LParen, "'('");
            PredPtr a = pred();
            expect(Token::Comma, "','");
            PredPtr b = pred();
            expect(Token::RParen, "')'");
            return is_imp ? pred_imp(std::move(a), std::move(b))
                          : pred_iff(std::move(a), std::move(b));
        }
        if (at_keyword("elt")) {
            take();
            expect(Token::LParen, "'('");
            SetTermPtr elem = setterm();
            expect(Token::Comma, "','");
            Atom target = atom();
            expect(Token::RParen, "')'");
            return pred_elt(std::move(elem), target);
        }
        if (at_keyword("tin") || at_keyword("teq")) {
            bool is_tin = take().text == "tin";
            expect(Token::LParen, "'('");
            SetTermPtr a = setterm();
            expect(Token::Comma, "','");
            SetTermPtr b = setterm();
            expect(Token::RParen, "')'");
            return is_tin ? tin(a, b) : teq(a, b);
        }
        err("expected a predicate");
    }

    std::vector<PredPtr> braced_list() {
        expect(Token::LBrace, "'{'");
        std::vector<PredPtr> parts;
        if (peek().kind != Token::RBrace) {
            parts.push_back(pred());
            while (peek().kind == Token::Semi) {
                take();
                parts.push_back(pred());
            }
        }
        expect(Token::RBrace, "'}'");
        return parts;
    }

    Sequent sequent() {
        std::vector<PredPtr> left;
        if (peek().kind != Token::Turnstile) {
            left.push_back(pred());
            while (peek().kind == Token::Comma) {
                take();
                left.push_back(pred());
            }
        }
        expect(Token::Turnstile, "'|-'");
        std::vector<PredPtr> right;
        if (peek().kind != Token::End) {
            right.push_back(pred());
            while (peek().kind == Token::Comma) {
                take();
                right.push_back(pred());
            }
        }
        return make_sequent(std::move(left), std::move(right));
    }

    SmallSubst subst_spec() {
        expect(Token::LBracket, "'['");
        if (peek().kind == Token::RBracket) {
            take();
            return SmallSubst::make({});
        }
        Atom first = atom();
        expect(Token::Assign, "':='");
        if (at_keyword("theta")) {
            take();
            SetTermPtr image = setterm();
            if (peek().kind == Token::Comma) {
                err("a theta substitution takes a single seed entry");
            }
            expect(Token::RBracket, "']'");
            return SmallSubst::theta(first, std::move(image));
        }
        std::map<Atom, SetTermPtr> entries;
        entries.emplace(first, setterm());
        while (peek().kind == Token::Comma) {
            take();
            Atom a = atom();
            expect(Token::Assign, "':='");
            SetTermPtr image = setterm();
            if (!entries.emplace(a, std::move(image)).second) {
                err("duplicate domain atom " + to_string(a));
            }
        }
        expect(Token::RBracket, "']'");
        return SmallSubst::make(std::move(entries));
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

std::vector<std::pair<std::size_t, std::string>> body_lines(const std::string& text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#') continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        out.emplace_back(no, line.substr(0, b + 1));
    }
    return out;
}

}  // namespace

Atom parse_atom(const std::string& text) {
    IParser p(text);
    Atom a = p.atom();
    p.expect_end();
    return a;
}

PredPtr parse_pred(const std::string& text) {
    IParser p(text);
    PredPtr x = p.pred();
    p.expect_end();
    return x;
}

SetTermPtr parse_setterm(const std::string& text) {
    IParser p(text);
    SetTermPtr x = p.setterm();
    p.expect_end();
    return x;
}

Sequent parse_sequent(const std::string& text) {
    IParser p(text);
    return p.sequent();
}

SmallSubst parse_subst_spec(const std::string& text) {
    IParser p(text);
    SmallSubst s = p.subst_spec();
    p.expect_end();
    return s;
}

Prepoint parse_model(const std::string& text) {
    auto lines = body_lines(text);
    if (lines.empty() || lines.front().second != "prepoint") {
        throw ParseError("model files start with a 'prepoint' line",
                         lines.empty() ? 1 : lines.front().first, 1);
    }
    Prepoint p;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        bool theta = line.rfind("amgis-theta ", 0) == 0;
        bool plain = !theta && line.rfind("amgis ", 0) == 0;
        if (theta || plain) {
            IParser ip(line.substr(theta ? 12 : 6), no);
            Atom a = ip.atom();
            ip.expect(Token::Assign, "':='");
            SetTermPtr x = ip.setterm();
            ip.expect_end();
            p = amgis(p, x, a, theta);
        } else {
            IParser ip(line, no);
            Atom a = ip.atom();
            ip.expect(Token::LeftArrow, "'<-'");
            SetTermPtr body = ip.setterm();
            ip.expect_end();
            p = p.with_fact(a, body);
        }
    }
    return p;
}

Theory parse_theory(const std::string& text) {
    std::vector<std::pair<SetTermPtr, SetTermPtr>> axioms;
    bool theta_closed = false;
    for (const auto& [no, line] : body_lines(text)) {
        if (line == "theta-closed") {
            theta_closed = true;
            continue;
        }
        if (line.rfind("eq:", 0) != 0) {
            throw ParseError("expected 'eq: <setterm> == <setterm>'", no, 1);
        }
        IParser ip(line.substr(3), no);
        SetTermPtr lhs = ip.setterm();
        ip.expect(Token::EqEq, "'=='");
        SetTermPtr rhs = ip.setterm();
        ip.expect_end();
        axioms.emplace_back(std::move(lhs), std::move(rhs));
    }
    return make_theory(std::move(axioms), theta_closed);
}

namespace {

const std::map<std::string, Rule>& rule_names() {
    static const std::map<std::string, Rule> names{
        {"ax", Rule::Ax},     {"andl", Rule::AndL}, {"andr", Rule::AndR},
        {"negl", Rule::NegL}, {"negr", Rule::NegR}, {"alll", Rule::AllL},
        {"allr", Rule::AllR}, {"cut", Rule::Cut},
    };
    return names;
}

std::string rule_name(Rule r) {
    for (const auto& [name, rule] : rule_names()) {
        if (rule == r) return name;
    }
    return "?";
}

struct DerivLine {
    std::size_t no;
    unsigned depth;
    Rule rule;
    PredPtr principal;
    std::optional<Atom> atom;
    std::optional<Sequent> seq;
};

DerivLine parse_deriv_line(std::size_t no, const std::string& raw) {
    std::size_t indent = 0;
    while (indent < raw.size() && raw[indent] == ' ') ++indent;
    if (indent % 2 != 0) throw ParseError("odd indentation", no, indent + 1);
    DerivLine out{no, static_cast<unsigned>(indent / 2), Rule::Ax, nullptr, std::nullopt,
                  std::nullopt};

    std::vector<std::string> fields;
    std::size_t start = indent;
    for (;;) {
        std::size_t sep = raw.find(" | ", start);
        if (sep == std::string::npos) {
            fields.push_back(raw.substr(start));
            break;
        }
        fields.push_back(raw.substr(start, sep - start));
        start = sep + 3;
    }

    auto it = rule_names().find(fields[0]);
    if (it == rule_names().end()) {
        throw ParseError("unknown rule '" + fields[0] + "'", no, indent + 1);
    }
    out.rule = it->second;

    for (std::size_t i = 1; i < fields.size(); ++i) {
        const std::string& f = fields[i];
        auto parse_after = [&](std::size_t n) { return f.substr(n); };
        if (f.rfind("principal:", 0) == 0) {
            IParser ip(parse_after(10), no);
            out.principal = ip.pred();
            ip.expect_end();
        } else if (f.rfind("atom:", 0) == 0) {
            IParser ip(parse_after(5), no);
            out.atom = ip.atom();
            ip.expect_end();
        } else if (f.rfind("seq:", 0) == 0) {
            IParser ip(parse_after(4), no);
            out.seq = ip.sequent();
        } else {
            throw ParseError("unknown field '" + f + "'", no, 1);
        }
    }
    if (!out.seq) throw ParseError("derivation line lacks a 'seq:' field", no, 1);
    if (!out.principal) throw ParseError("derivation line lacks a 'principal:' field", no, 1);
    bool needs_atom = out.rule == Rule::AllL || out.rule == Rule::AllR;
    if (needs_atom != out.atom.has_value()) {
        throw ParseError(needs_atom ? "rule needs an 'atom:' field" : "unexpected 'atom:' field",
                         no, 1);
    }
    return out;
}

DerivPtr build_deriv(const std::vector<DerivLine>& lines, std::size_t& idx, unsigned depth) {
    const DerivLine& ln = lines[idx++];
    std::vector<DerivPtr> premises;
    while (idx < lines.size() && lines[idx].depth > depth) {
        if (lines[idx].depth != depth + 1) {
            throw ParseError("indentation jumps more than one level", lines[idx].no, 1);
        }
        premises.push_back(build_deriv(lines, idx, depth + 1));
    }
    return deriv(ln.rule, *ln.seq, ln.principal, ln.atom.value_or(Atom{0, 0}),
                 std::move(premises));
}

}  // namespace

DerivPtr parse_derivation(const std::string& text) {
    std::vector<DerivLine> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.find_first_not_of(" \t") == std::string::npos) continue;
        if (raw[raw.find_first_not_of(' ')] == '#') continue;
        lines.push_back(parse_deriv_line(no, raw));
    }
    if (lines.empty()) throw ParseError("empty derivation", 1, 1);
    if (lines.front().depth != 0) throw ParseError("root must not be indented", lines.front().no, 1);
    std::size_t idx = 0;
    DerivPtr d = build_deriv(lines, idx, 0);
    if (idx != lines.size()) {
        throw ParseError("a second root follows the derivation", lines[idx].no, 1);
    }
    return d;
}

namespace {

std::string pred_text(const PredPtr& x);

std::string set_text(const SetTermPtr& x) {
    if (const auto* n = std::get_if<SetTerm::Atm>(&x->node())) {
        return "atm(" + to_string(n->atom) + ")";
    }
    const auto& n = std::get<SetTerm::Comp>(x->node());
    if (alpha_eq(x, empty_set(x->level()))) return "empty@" + std::to_string(x->level());
    if (alpha_eq(x, full_set(x->level()))) return "full@" + std::to_string(x->level());
    return "[" + to_string(n.binder) + "] " + pred_text(n.body);
}

std::string pred_text(const PredPtr& x) {
    if (const auto* n = std::get_if<Pred::And>(&x->node())) {
        if (n->conjuncts.empty()) return "top";
        std::string out = "and{";
        bool first = true;
        for (const PredPtr& c : n->conjuncts) {
            if (!first) out += "; ";
            first = false;
            out += pred_text(c);
        }
        return out + "}";
    }
    if (const auto* n = std::get_if<Pred::Neg>(&x->node())) {
        if (const auto* b = std::get_if<Pred::And>(&n->body->node())) {
            if (b->conjuncts.empty()) return "bot";
        }
        return "neg " + pred_text(n->body);
    }
    if (const auto* n = std::get_if<Pred::All>(&x->node())) {
        return "all [" + to_string(n->binder) + "] " + pred_text(n->body);
    }
    const auto& n = std::get<Pred::Elt>(x->node());
    return "elt(" + set_text(n.elem) + ", " + to_string(n.target) + ")";
}

std::string seq_text(const Sequent& s) {
    std::string out;
    bool first = true;
    for (const PredPtr& x : s.left) {
        if (!first) out += ", ";
        first = false;
        out += pred_text(x);
    }
    if (!s.left.empty()) out += " ";
    out += "|-";
    first = true;
    for (const PredPtr& x : s.right) {
        out += first ? " " : ", ";
        first = false;
        out += pred_text(x);
    }
    return out;
}

void deriv_text_rec(const DerivPtr& d, unsigned depth, std::string& out) {
    out.append(2 * depth, ' ');
    out += rule_name(d->rule);
    out += " | principal: " + pred_text(d->principal);
    if (d->rule == Rule::AllL || d->rule == Rule::AllR) {
        out += " | atom: " + to_string(d->atom);
    }
    out += " | seq: " + seq_text(d->conclusion) + "\n";
    for (const DerivPtr& p : d->premises) deriv_text_rec(p, depth + 1, out);
}

void eq_text_rec(const EqDerivPtr& d, unsigned depth, std::string& out) {
    out.append(2 * depth, ' ');
    switch (d->kind) {
        case EqDeriv::Kind::Axiom:
            out += "axiom | index: " + std::to_string(d->axiom_index);
            if (d->shift != 0) out += " | shift: " + std::to_string(d->shift);
            break;
        case EqDeriv::Kind::Refl:
            out += "refl | term: " + set_text(d->term);
            break;
        case EqDeriv::Kind::Sym:
            out += "sym";
            break;
        case EqDeriv::Kind::Trans:
            out += "trans";
            break;
        case EqDeriv::Kind::Cong:
            out += "cong | context: " + set_text(d->term) + " | hole: " + to_string(d->hole);
            break;
    }
    out += "\n";
    for (const EqDerivPtr& c : d->children) eq_text_rec(c, depth + 1, out);
}

}  // namespace

std::string to_text(const PredPtr& x) { return pred_text(x); }
std::string to_text(const SetTermPtr& x) { return set_text(x); }
std::string to_text(const Sequent& s) { return seq_text(s); }

std::string to_text(const DerivPtr& d) {
    std::string out;
    deriv_text_rec(d, 0, out);
    return out;
}

std::string to_text(const EqDerivPtr& d) {
    std::string out;
    eq_text_rec(d, 0, out);
    return out;
}

namespace {

using json = nlohmann::json;

json pred_tree(const PredPtr& x);

json set_tree(const SetTermPtr& x) {
    if (const auto* n = std::get_if<SetTerm::Atm>(&x->node())) {
        return json::array({"atm", to_string(n->atom)});
    }
    const auto& n = std::get<SetTerm::Comp>(x->node());
    return json::array({"comp", to_string(n.binder), pred_tree(n.body)});
}

json pred_tree(const PredPtr& x) {
    if (const auto* n = std::get_if<Pred::And>(&x->node())) {
        json members = json::array();
        for (const PredPtr& c : n->conjuncts) members.push_back(pred_tree(c));
        return json::array({"and", members});
    }
    if (const auto* n = std::get_if<Pred::Neg>(&x->node())) {
        return json::array({"neg", pred_tree(n->body)});
    }
    if (const auto* n = std::get_if<Pred::All>(&x->node())) {
        return json::array({"all", to_string(n->binder), pred_tree(n->body)});
    }
    const auto& n = std::get<Pred::Elt>(x->node());
    return json::array({"elt", set_tree(n.elem), to_string(n.target)});
}

json seq_tree(const Sequent& s) {
    json left = json::array();
    for (const PredPtr& x : s.left) left.push_back(pred_tree(x));
    json right = json::array();
    for (const PredPtr& x : s.right) right.push_back(pred_tree(x));
    return json::array({"seq", left, right});
}

json deriv_tree(const DerivPtr& d) {
    json prems = json::array();
    for (const DerivPtr& p : d->premises) prems.push_back(deriv_tree(p));
    json atom = nullptr;
    if (d->rule == Rule::AllL || d->rule == Rule::AllR) atom = to_string(d->atom);
    return json::array(
        {rule_name(d->rule), seq_tree(d->conclusion), pred_tree(d->principal), atom, prems});
}

json sform_tree(const SFormPtr& f);

std::string svar_text(const SVar& v) {
    if (v.level) return v.name + "@" + std::to_string(*v.level);
    return v.name;
}

json sterm_tree(const STermPtr& t) {
    if (const auto* n = std::get_if<SurfaceTerm::Var>(&t->node)) {
        return json::array({"var", svar_text(n->var)});
    }
    const auto& n = std::get<SurfaceTerm::Comp>(t->node);
    return json::array({"compr", svar_text(n.binder), sform_tree(n.body)});
}

json sform_tree(const SFormPtr& f) {
    if (std::holds_alternative<SurfaceFormula::Bot>(f->node)) return json::array({"bot"});
    if (const auto* n = std::get_if<SurfaceFormula::Imp>(&f->node)) {
        return json::array({"imp", sform_tree(n->lhs), sform_tree(n->rhs)});
    }
    if (const auto* n = std::get_if<SurfaceFormula::All>(&f->node)) {
        return json::array({"forall", svar_text(n->binder), sform_tree(n->body)});
    }
    if (const auto* n = std::get_if<SurfaceFormula::Eq>(&f->node)) {
        return json::array({"eq", sterm_tree(n->lhs), sterm_tree(n->rhs)});
    }
    const auto& n = std::get<SurfaceFormula::In>(f->node);
    return json::array({"in", sterm_tree(n.elem), sterm_tree(n.set)});
}

json eq_tree(const EqDerivPtr& d) {
    switch (d->kind) {
        case EqDeriv::Kind::Axiom:
            return json::array({"axiom", d->axiom_index, d->shift});
        case EqDeriv::Kind::Refl:
            return json::array({"refl", set_tree(d->term)});
        case EqDeriv::Kind::Sym:
            return json::array({"sym", eq_tree(d->children[0])});
        case EqDeriv::Kind::Trans:
            return json::array({"trans", eq_tree(d->children[0]), eq_tree(d->children[1])});
        case EqDeriv::Kind::Cong:
        default:
            return json::array(
                {"cong", set_tree(d->term), to_string(d->hole), eq_tree(d->children[0])});
    }
}

}  // namespace

std::string tree_json(const PredPtr& x) { return pred_tree(x).dump(); }
std::string tree_json(const SetTermPtr& x) { return set_tree(x).dump(); }
std::string tree_json(const Sequent& s) { return seq_tree(s).dump(); }
std::string tree_json(const DerivPtr& d) { return deriv_tree(d).dump(); }
std::string tree_json(const SFormPtr& f) { return sform_tree(f).dump(); }
std::string tree_json(const STermPtr& t) { return sterm_tree(t).dump(); }
std::string tree_json(const EqDerivPtr& d) { return eq_tree(d).dump(); }

}  // namespace stratos
