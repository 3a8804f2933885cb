#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "stratos/terms.hpp"

namespace stratos {

// A surface variable: a name plus its level, or no level yet (to be
// inferred). A leveled name is an atom: (level, index of the name).
struct SVar {
    std::string name;
    std::optional<int> level;
};

struct SurfaceTerm;
struct SurfaceFormula;
using STermPtr = std::shared_ptr<const SurfaceTerm>;
using SFormPtr = std::shared_ptr<const SurfaceFormula>;

struct SurfaceTerm {
    struct Var {
        SVar var;
    };
    struct Comp {
        SVar binder;
        SFormPtr body;
    };
    std::variant<Var, Comp> node;
};

struct SurfaceFormula {
    struct Bot {};
    struct Imp {
        SFormPtr lhs;
        SFormPtr rhs;
    };
    struct All {
        SVar binder;
        SFormPtr body;
    };
    struct Eq {
        STermPtr lhs;
        STermPtr rhs;
    };
    struct In {
        STermPtr elem;
        STermPtr set;
    };
    std::variant<Bot, Imp, All, Eq, In> node;
};

STermPtr sterm_var(SVar v);
STermPtr sterm_comp(SVar binder, SFormPtr body);
SFormPtr sform_bot();
SFormPtr sform_imp(SFormPtr lhs, SFormPtr rhs);
SFormPtr sform_all(SVar binder, SFormPtr body);
SFormPtr sform_eq(STermPtr lhs, STermPtr rhs);
SFormPtr sform_in(STermPtr elem, STermPtr set);

// Variable names are a fixed bijection with indices: a letter plus an
// optional positive suffix, index = (letter - 'a') + 26 * suffix.
std::uint64_t name_index(const std::string& name);

// Grammar: bot | P -> Q (right assoc) | forall a@i. P | s = t | t in s,
// terms: name, name@i, { a@i | P }. Throws ParseError with location.
SFormPtr parse_formula(const std::string& text);
STermPtr parse_term(const std::string& text);

// Levels must all be explicit. In needs level(set) = level(elem) + 1, Eq
// equal levels, a comprehension sits one above its binder; tst additionally
// demands every level be at least 1. Throws NotStratified.
void check_stratified(const SFormPtr& f, bool tst = false);

struct Inference {
    SFormPtr resolved;
    std::vector<std::pair<std::string, int>> assignment;  // first-occurrence order
};

// Solves the offset constraint system by union-find. Free variables are
// identified by name (one level per identifier); bound scopes are separate.
// Components without an absolute level are anchored so their lowest variable
// sits at `anchor`. Throws NotStratifiable on a contradictory cycle.
Inference infer_stratification(const SFormPtr& f, int anchor = 1);

// Interpretation into internal syntax; membership in a comprehension
// normalizes to the substituted body. Checks stratification first.
PredPtr interp(const SFormPtr& f);
SetTermPtr interp_term(const STermPtr& t);

// Typical ambiguity: every bound level incremented. Requires the formula to
// be stratified and closed (its interpretation has empty support).
SFormPtr plus(const SFormPtr& f);

unsigned size(const SFormPtr& f);
unsigned size(const STermPtr& t);

// Capture-avoiding substitution of a term for the free variable name@level.
SFormPtr surface_subst(const SFormPtr& f, const std::string& name, int level, const STermPtr& s);

SFormPtr erase_levels(const SFormPtr& f);

std::string to_string(const SFormPtr& f);
std::string to_string(const STermPtr& t);

}  // namespace stratos
