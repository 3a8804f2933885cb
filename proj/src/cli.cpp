#include "stratos/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stratos/errors.hpp"
#include "stratos/format.hpp"
#include "stratos/models.hpp"
#include "stratos/sequent.hpp"
#include "stratos/suites.hpp"
#include "stratos/surface.hpp"
#include "stratos/theories.hpp"

namespace stratos {
namespace {

struct Options {
    std::string expr;
    std::string file;
    unsigned depth = 4;
    unsigned n = 100;
    std::uint64_t seed = 0;
    bool tst = false;
    int anchor = 1;
    std::string format = "text";
    std::string suite = "all";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// One inline expression, or the nonblank lines of --file.
std::vector<std::string> input_lines(const Options& o) {
    if (!o.expr.empty()) return {o.expr};
    if (o.file.empty()) throw Error("no input: pass --expr or --file");
    std::vector<std::string> lines;
    std::istringstream in(read_file(o.file));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!blank_or_comment(line)) lines.push_back(line);
    }
    if (lines.empty()) throw Error("no formulas in '" + o.file + "'");
    return lines;
}

// Whole-text input for multi-line formats (derivations).
std::string input_text(const Options& o) {
    if (!o.expr.empty()) return o.expr;
    if (o.file.empty()) throw Error("no input: pass --expr or --file");
    return read_file(o.file);
}

int cmd_check(const Options& o, std::ostream& out) {
    for (const std::string& line : input_lines(o)) {
        SFormPtr f = parse_formula(line);
        check_stratified(f, o.tst);
        if (o.format == "tree") {
            out << tree_json(f) << "\n";
        } else {
            out << "stratified\n";
        }
    }
    return 0;
}

int cmd_infer(const Options& o, std::ostream& out) {
    for (const std::string& line : input_lines(o)) {
        SFormPtr f = parse_formula(line);
        Inference inf = infer_stratification(f, o.anchor);
        if (o.format == "tree") {
            out << tree_json(inf.resolved) << "\n";
            continue;
        }
        for (const auto& [name, level] : inf.assignment) {
            out << "var " << name << " @ " << level << "\n";
        }
        out << "formula: " << to_string(inf.resolved) << "\n";
    }
    return 0;
}

int cmd_interp(const Options& o, std::ostream& out) {
    for (const std::string& line : input_lines(o)) {
        SFormPtr f = parse_formula(line);
        check_stratified(f, o.tst);
        PredPtr x = interp(f);
        if (o.format == "tree") {
            out << tree_json(x) << "\n";
        } else {
            out << to_text(x) << "\n";
        }
    }
    return 0;
}

// The trailing bracket-balanced group of the expression is the substitution
// spec; the prefix is the internal subject (predicate, else set term).
int cmd_subst(const Options& o, std::ostream& out) {
    for (const std::string& line : input_lines(o)) {
        std::size_t end = line.find_last_not_of(" \t");
        if (end == std::string::npos || line[end] != ']') {
            throw ParseError("expected a trailing substitution spec '[a@1 := x]'");
        }
        int depth = 0;
        std::size_t open = std::string::npos;
        for (std::size_t i = end + 1; i-- > 0;) {
            if (line[i] == ']') ++depth;
            if (line[i] == '[') {
                if (--depth == 0) {
                    open = i;
                    break;
                }
            }
        }
        if (open == std::string::npos) throw ParseError("unbalanced substitution spec");
        std::string subject = line.substr(0, open);
        SmallSubst sub = parse_subst_spec(line.substr(open, end + 1 - open));
        try {
            PredPtr x = sub.apply(parse_pred(subject));
            out << (o.format == "tree" ? tree_json(x) : to_text(x)) << "\n";
        } catch (const ParseError&) {
            SetTermPtr x = sub.apply(parse_setterm(subject));
            out << (o.format == "tree" ? tree_json(x) : to_text(x)) << "\n";
        }
    }
    return 0;
}

int cmd_sat(const Options& o, std::ostream& out) {
    if (o.expr.empty()) throw Error("no formula: pass --expr");
    Prepoint p;
    if (!o.file.empty()) p = parse_model(read_file(o.file));
    PredPtr x = parse_pred(o.expr);
    bool v = sat(p, x);
    out << (v ? "true" : "false") << "\n";
    return v ? 0 : 1;
}

int cmd_prove(const Options& o, std::ostream& out) {
    for (const std::string& line : input_lines(o)) {
        Sequent s = parse_sequent(line);
        std::optional<DerivPtr> d = prove_bounded(s, o.depth);
        if (!d) {
            out << "no derivation within depth " << o.depth << "\n";
            return 1;
        }
        std::string diag;
        if (!check_derivation(*d, &diag)) {
            throw Error("internal: found derivation fails to re-check: " + diag);
        }
        out << (o.format == "tree" ? tree_json(*d) + "\n" : to_text(*d));
    }
    return 0;
}

int cmd_checkproof(const Options& o, std::ostream& out) {
    DerivPtr d = parse_derivation(input_text(o));
    std::string diag;
    if (check_derivation(d, &diag)) {
        out << "valid derivation\n";
        return 0;
    }
    out << "invalid derivation: " << diag << "\n";
    return 1;
}

int cmd_cutfree(const Options& o, std::ostream& out) {
    DerivPtr d = parse_derivation(input_text(o));
    std::string diag;
    if (!check_derivation(d, &diag)) {
        out << "invalid derivation: " << diag << "\n";
        return 1;
    }
    DerivPtr e = eliminate_cut(d);
    if (!cut_free(e) || !check_derivation(e, &diag) || !seq_eq(e->conclusion, d->conclusion)) {
        throw Error("internal: cut elimination produced a bad derivation: " + diag);
    }
    out << (o.format == "tree" ? tree_json(e) + "\n" : to_text(e));
    return 0;
}

int cmd_theory(const Options& o, std::ostream& out) {
    Theory T = o.file.empty() ? make_theory({}, false) : parse_theory(read_file(o.file));
    if (o.expr.empty()) {
        out << "theory: " << T.axioms.size() << (T.axioms.size() == 1 ? " axiom" : " axioms")
            << (T.theta_closed ? ", theta-closed" : "") << "\n";
        return 0;
    }
    Theory query = parse_theory("eq: " + o.expr);
    const auto& [u, v] = query.axioms.at(0);
    std::optional<EqDerivPtr> d = eqcent_bounded(T, u, v, o.depth);
    if (!d) {
        out << "not derivable within depth " << o.depth << "\n";
        return 1;
    }
    std::string diag;
    auto conc = eq_conclusion(T, *d, &diag);
    if (!check_eq_derivation(T, *d) || !conc || !alpha_eq(conc->first, u) ||
        !alpha_eq(conc->second, v)) {
        throw Error("internal: certificate fails to re-check: " + diag);
    }
    out << (o.format == "tree" ? tree_json(*d) + "\n" : to_text(*d));
    return 0;
}

int cmd_laws(const Options& o, std::ostream& out) {
    std::vector<std::string> suites;
    if (o.suite == "all") {
        suites = suite_names();
    } else {
        suites.push_back(o.suite);
    }
    bool ok = true;
    for (const std::string& s : suites) {
        SuiteResult r = run_suite(s, o.n, o.seed);
        out << format_suite(r);
        if (!r.ok()) {
            ok = false;
            out << "replay: stratos laws --suite " << s << " --n " << o.n << " --seed " << o.seed
                << "\n";
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stratified set theory workbench"};
    app.require_subcommand(1);

    Options o;
    auto add_expr = [&](CLI::App* sub) { sub->add_option("--expr", o.expr, "inline expression"); };
    auto add_file = [&](CLI::App* sub) { sub->add_option("--file", o.file, "input file"); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "tree"}));
    };
    auto add_depth = [&](CLI::App* sub) {
        sub->add_option("--depth", o.depth, "search depth bound");
    };

    CLI::App* c_check = app.add_subcommand("check", "check stratification of surface formulas");
    add_expr(c_check);
    add_file(c_check);
    add_format(c_check);
    c_check->add_flag("--tst", o.tst, "require levels >= 1");

    CLI::App* c_infer = app.add_subcommand("infer", "infer a stratification level assignment");
    add_expr(c_infer);
    add_file(c_infer);
    add_format(c_infer);
    c_infer->add_option("--anchor", o.anchor, "level for ungrounded components");

    CLI::App* c_interp = app.add_subcommand("interp", "interpret surface formulas internally");
    add_expr(c_interp);
    add_file(c_interp);
    add_format(c_interp);
    c_interp->add_flag("--tst", o.tst, "require levels >= 1");

    CLI::App* c_subst = app.add_subcommand("subst", "apply a substitution to an internal term");
    add_expr(c_subst);
    add_file(c_subst);
    add_format(c_subst);

    CLI::App* c_sat = app.add_subcommand("sat", "evaluate a predicate over a prepoint model");
    add_expr(c_sat);
    c_sat->add_option("--file", o.file, "model file");
    add_format(c_sat);

    CLI::App* c_prove = app.add_subcommand("prove", "bounded proof search for a sequent");
    add_expr(c_prove);
    add_file(c_prove);
    add_format(c_prove);
    add_depth(c_prove);

    CLI::App* c_checkproof = app.add_subcommand("checkproof", "check a derivation file");
    add_expr(c_checkproof);
    add_file(c_checkproof);

    CLI::App* c_cutfree = app.add_subcommand("cutfree", "eliminate cuts from a derivation");
    add_expr(c_cutfree);
    add_file(c_cutfree);
    add_format(c_cutfree);

    CLI::App* c_theory = app.add_subcommand("theory", "bounded equality over a finite theory");
    c_theory->add_option("--expr", o.expr, "query '<setterm> == <setterm>'");
    c_theory->add_option("--file", o.file, "theory file");
    add_format(c_theory);
    add_depth(c_theory);

    CLI::App* c_laws = app.add_subcommand("laws", "run the randomized law suites");
    c_laws->add_option("--suite", o.suite, "suite name, or 'all'");
    c_laws->add_option("--n", o.n, "instances per randomized law");
    c_laws->add_option("--seed", o.seed, "generator seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (const char* fuel = std::getenv("STRATOS_FUEL")) {
        char* tail = nullptr;
        unsigned long long v = std::strtoull(fuel, &tail, 10);
        if (tail == fuel || *tail != '\0' || v == 0) {
            err << "error: STRATOS_FUEL must be a positive integer\n";
            return 2;
        }
        set_sigma_fuel(v);
        set_cut_fuel(v);
    }

    try {
        if (app.got_subcommand(c_check)) return cmd_check(o, out);
        if (app.got_subcommand(c_infer)) return cmd_infer(o, out);
        if (app.got_subcommand(c_interp)) return cmd_interp(o, out);
        if (app.got_subcommand(c_subst)) return cmd_subst(o, out);
        if (app.got_subcommand(c_sat)) return cmd_sat(o, out);
        if (app.got_subcommand(c_prove)) return cmd_prove(o, out);
        if (app.got_subcommand(c_checkproof)) return cmd_checkproof(o, out);
        if (app.got_subcommand(c_cutfree)) return cmd_cutfree(o, out);
        if (app.got_subcommand(c_theory)) return cmd_theory(o, out);
        if (app.got_subcommand(c_laws)) return cmd_laws(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace stratos
