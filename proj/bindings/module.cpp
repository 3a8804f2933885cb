// String-level bindings over the kernel: every function takes and returns
// the same concrete syntax the CLI speaks, so Python callers never hold raw
// term pointers across the boundary.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stratos/errors.hpp"
#include "stratos/format.hpp"
#include "stratos/models.hpp"
#include "stratos/sequent.hpp"
#include "stratos/sigma.hpp"
#include "stratos/suites.hpp"
#include "stratos/surface.hpp"
#include "stratos/terms.hpp"
#include "stratos/theories.hpp"

namespace py = pybind11;
using namespace stratos;

namespace {

bool py_check(const std::string& text, bool tst) {
    SFormPtr f = parse_formula(text);
    try {
        check_stratified(f, tst);
    } catch (const NotStratified&) {
        return false;
    }
    return true;
}

std::pair<std::vector<std::pair<std::string, int>>, std::string>
py_infer(const std::string& text, int anchor) {
    Inference inf = infer_stratification(parse_formula(text), anchor);
    return {inf.assignment, to_string(inf.resolved)};
}

std::string py_interp(const std::string& text, bool tst) {
    SFormPtr f = parse_formula(text);
    check_stratified(f, tst);
    return to_text(interp(f));
}

std::string py_plus(const std::string& text) {
    return to_string(plus(parse_formula(text)));
}

std::string py_subst(const std::string& subject, const std::string& spec) {
    SmallSubst s = parse_subst_spec(spec);
    try {
        PredPtr p = parse_pred(subject);
        return to_text(s.apply(p));
    } catch (const ParseError&) {
        return to_text(s.apply(parse_setterm(subject)));
    }
}

bool py_sat(const std::string& pred_text, const std::string& model_text) {
    PredPtr p = parse_pred(pred_text);
    Prepoint m = model_text.empty() ? Prepoint() : parse_model(model_text);
    return sat(m, p);
}

std::optional<std::string> py_prove(const std::string& sequent_text, unsigned depth) {
    std::optional<DerivPtr> d = prove_bounded(parse_sequent(sequent_text), depth);
    if (!d) return std::nullopt;
    return to_text(*d);
}

std::pair<bool, std::string> py_check_proof(const std::string& deriv_text) {
    DerivPtr d = parse_derivation(deriv_text);
    std::string diag;
    bool ok = check_derivation(d, &diag);
    return {ok, diag};
}

std::string py_cut_eliminate(const std::string& deriv_text) {
    DerivPtr d = parse_derivation(deriv_text);
    std::string diag;
    if (!check_derivation(d, &diag)) throw Error("derivation does not check: " + diag);
    return to_text(eliminate_cut(d));
}

std::optional<std::string> py_theory_derives(const std::string& theory_text,
                                             const std::string& query,
                                             unsigned depth) {
    Theory T = parse_theory(theory_text);
    Theory q = parse_theory("eq: " + query + "\n");
    const auto& [lhs, rhs] = q.axioms.at(0);
    std::optional<EqDerivPtr> d = eqcent_bounded(T, lhs, rhs, depth);
    if (!d) return std::nullopt;
    return to_text(*d);
}

std::pair<bool, std::string> py_laws(const std::string& suite, unsigned n,
                                     std::uint64_t seed) {
    SuiteResult r = run_suite(suite, n, seed);
    return {r.ok(), format_suite(r)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "stratified set theory workbench kernel";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("check", &py_check, py::arg("text"), py::arg("tst") = false,
          "Parse a surface formula and report whether it is stratified.");
    m.def("infer", &py_infer, py::arg("text"), py::arg("anchor") = 1,
          "Infer levels for a surface formula; returns (assignment, resolved).");
    m.def("interp", &py_interp, py::arg("text"), py::arg("tst") = false,
          "Interpret a stratified surface formula as an internal predicate.");
    m.def("plus", &py_plus, py::arg("text"),
          "Shift every level in a closed stratified formula up by one.");
    m.def("subst", &py_subst, py::arg("subject"), py::arg("spec"),
          "Apply a substitution spec to an internal predicate or set term.");
    m.def("sat", &py_sat, py::arg("pred"), py::arg("model") = std::string(),
          "Evaluate an internal predicate over a prepoint (empty by default).");
    m.def("prove", &py_prove, py::arg("sequent"), py::arg("depth") = 4u,
          "Bounded proof search; returns the derivation text or None.");
    m.def("check_proof", &py_check_proof, py::arg("derivation"),
          "Check a derivation; returns (ok, diagnostic).");
    m.def("cut_eliminate", &py_cut_eliminate, py::arg("derivation"),
          "Eliminate Cut from a checked derivation and return the result.");
    m.def("theory_derives", &py_theory_derives, py::arg("theory"),
          py::arg("query"), py::arg("depth") = 4u,
          "Bounded equality closure; returns a certificate or None.");
    m.def("laws", &py_laws, py::arg("suite"), py::arg("n") = 100u,
          py::arg("seed") = std::uint64_t{0},
          "Run a law suite; returns (ok, report).");
    m.def("suites", [] { return suite_names(); },
          "Names of the available law suites.");
}
