#pragma once

#include <string>

#include "stratos/models.hpp"
#include "stratos/sequent.hpp"
#include "stratos/surface.hpp"
#include "stratos/theories.hpp"

namespace stratos {

// Textual syntax for the internal language.
//
//   atom     a@1, b3@-2
//   pred     top | bot | and{P; Q} | or{P; Q} | neg P | all [a@1] P
//            | elt(S, a@1) | tin(S, T) | teq(S, T) | imp(P, Q) | iff(P, Q)
//            | P -> Q | (P) | a propositional letter X, Y2, ...
//   setterm  a@1 | atm(a@1) | [a@0] P | empty@1 | full@1 | num(3)@6
//   sequent  P, Q |- R   (either side may be empty)
//   subst    [a@1 := full@1] | [a@1 := x, b@1 := y] | [a@1 :=theta atm(b@1)]
//
// A propositional letter is sugar for a closed membership at levels 0/1 on a
// reserved index range, so schematic sequents can be written directly.
//
// All parsers throw ParseError with a 1-based position.
Atom parse_atom(const std::string& text);
PredPtr parse_pred(const std::string& text);
SetTermPtr parse_setterm(const std::string& text);
Sequent parse_sequent(const std::string& text);
SmallSubst parse_subst_spec(const std::string& text);

// Model files: a `prepoint` header, then one entry per line in stack order:
//   a@1 <- atm(b@0)          base fact
//   amgis a@1 := full@1      pushed substitution
//   amgis-theta a@1 := x     pushed theta-closed substitution
// Blank lines and lines starting with '#' are skipped.
Prepoint parse_model(const std::string& text);

// Theory files: optional `theta-closed` line, then `eq: <setterm> == <setterm>`
// per axiom. Blank lines and '#' comments are skipped.
Theory parse_theory(const std::string& text);

// Derivations: one rule per line, two-space indentation per premise depth,
// ` | `-separated fields:
//   alll | principal: all [a@1] P | atom: b@1 | seq: Q |- R
// Rule names: ax andl andr negl negr alll allr cut. Every line carries its
// conclusion sequent; alll takes the witness atom, allr the eigenatom.
DerivPtr parse_derivation(const std::string& text);

// Printers. Output reparses to an alpha-identical value.
std::string to_text(const PredPtr& x);
std::string to_text(const SetTermPtr& x);
std::string to_text(const Sequent& s);
std::string to_text(const DerivPtr& d);
std::string to_text(const EqDerivPtr& d);

// Structured serialization: nested JSON arrays of tagged nodes.
std::string tree_json(const PredPtr& x);
std::string tree_json(const SetTermPtr& x);
std::string tree_json(const Sequent& s);
std::string tree_json(const DerivPtr& d);
std::string tree_json(const SFormPtr& f);
std::string tree_json(const STermPtr& t);
std::string tree_json(const EqDerivPtr& d);

}  // namespace stratos
