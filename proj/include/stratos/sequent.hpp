#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stratos/sigma.hpp"

namespace stratos {

// A two-sided sequent. Contexts are sets: strictly sorted, deduplicated.
struct Sequent {
    std::vector<PredPtr> left;
    std::vector<PredPtr> right;
};

Sequent make_sequent(std::vector<PredPtr> left, std::vector<PredPtr> right);
bool seq_eq(const Sequent& a, const Sequent& b);
AtomSet seq_support(const Sequent& s);
void collect_atoms(const Sequent& s, AtomSet& out);

enum class Rule { Ax, AndL, AndR, NegL, NegR, AllL, AllR, Cut };

struct Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

// One derivation node. principal is the formula the rule acts on (for Cut,
// the cut formula); atom is the AllL witness or the AllR eigenatom. Premise
// order: AndR premises follow the conjunct order; Cut premises are the right-
// extended sequent first, then the left-extended one.
struct Derivation {
    Rule rule;
    Sequent conclusion;
    PredPtr principal;
    Atom atom{0, 0};
    std::vector<DerivPtr> premises;
};

DerivPtr deriv(Rule rule, Sequent conclusion, PredPtr principal, Atom atom,
               std::vector<DerivPtr> premises);

// Schema check. Premises may either retain the principal formula or drop it;
// both forms instantiate the rules over set contexts.
bool check_derivation(const DerivPtr& d, std::string* diag = nullptr);

unsigned height(const DerivPtr& d);
bool cut_free(const DerivPtr& d);

// Bounded cut-free search. Invertible steps are free; depth budgets only the
// AllL instantiations along any branch. Witnesses are drawn from the atoms of
// the root and current sequents plus depth fresh atoms per level, and the
// universal formula is retained for contraction.
std::optional<DerivPtr> prove_bounded(const Sequent& s, unsigned depth);

// The same tree over a widened endsequent; clashing eigenatoms are refreshed.
DerivPtr weaken(const DerivPtr& d, const std::vector<PredPtr>& add_left,
                const std::vector<PredPtr>& add_right);

DerivPtr permute(const Permutation& pi, const DerivPtr& d);

// Simultaneous atom-for-atom renaming. Must be level-preserving with domain
// and image disjoint; eigenatoms meeting the renaming are swapped out first.
DerivPtr rename_derivation(const DerivPtr& d, const std::map<Atom, Atom>& renaming);

// Structural cut elimination: same endsequent, no Cut nodes. Throws
// InvalidDerivation if the input fails the checker and FuelExhausted if the
// rewrite exceeds the cut fuel.
DerivPtr eliminate_cut(const DerivPtr& d);

}  // namespace stratos
