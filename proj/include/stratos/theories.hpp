#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stratos/sigma.hpp"

namespace stratos {

// A finite equality theory over internal set terms. Each axiom equates two
// terms of one level. A theta-closed theory is read as containing every
// shift instance of its axioms.
struct Theory {
    std::vector<std::pair<SetTermPtr, SetTermPtr>> axioms;
    bool theta_closed = false;
};

Theory make_theory(std::vector<std::pair<SetTermPtr, SetTermPtr>> axioms, bool theta_closed);

class EqDeriv;
using EqDerivPtr = std::shared_ptr<const EqDeriv>;

// A closed certificate of derivable equality. Congruence is substitution of
// equals into one context hole; there is no rule acting on both sides of an
// equation with a substitution.
class EqDeriv {
public:
    enum class Kind { Axiom, Refl, Sym, Trans, Cong };

    Kind kind;
    std::size_t axiom_index = 0;  // Axiom
    int shift = 0;                // Axiom; nonzero only over theta-closed theories
    SetTermPtr term;              // Refl subject / Cong context
    Atom hole{0, 0};              // Cong
    std::vector<EqDerivPtr> children;
};

EqDerivPtr eq_axiom(std::size_t index, int shift = 0);
EqDerivPtr eq_refl(SetTermPtr term);
EqDerivPtr eq_sym(EqDerivPtr child);
EqDerivPtr eq_trans(EqDerivPtr left, EqDerivPtr right);
EqDerivPtr eq_cong(SetTermPtr context, Atom hole, EqDerivPtr child);

// Refl and Axiom have height 0, Sym is free, Cong and Trans add one.
unsigned eq_height(const EqDerivPtr& d);

// The equation a certificate derives, or nothing if it is ill-formed for the
// theory (diag explains the first failure).
std::optional<std::pair<SetTermPtr, SetTermPtr>> eq_conclusion(const Theory& T, const EqDerivPtr& d,
                                                               std::string* diag = nullptr);
bool check_eq_derivation(const Theory& T, const EqDerivPtr& d, std::string* diag = nullptr);

// Bounded proof search for derivable equality: returns a certificate of
// height at most depth, or nothing discoverable within the bound. Sound but
// deliberately incomplete; absence of a certificate is not refutation.
std::optional<EqDerivPtr> eqcent_bounded(const Theory& T, const SetTermPtr& u, const SetTermPtr& v,
                                         unsigned depth);

// Membership in the term model: a2 holds x iff atm(shifted-down a2) == x is
// derivable. Requires a theta-closed theory.
std::optional<EqDerivPtr> herbrand_member(const Theory& T, Atom a2, const SetTermPtr& x,
                                          unsigned depth);

enum class Tri { False, True, Unknown };

// Conservative bounded satisfaction in the term model: True and False are
// trustworthy, Unknown means the bound was not enough to decide.
Tri herbrand_sat(const Theory& T, const PredPtr& X, unsigned depth);

}  // namespace stratos
