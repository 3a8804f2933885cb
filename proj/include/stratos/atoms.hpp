#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "stratos/errors.hpp"

namespace stratos {

// A name carrying an integer level. Equality is componentwise; the supply of
// indices at every level is unbounded.
struct Atom {
    int level = 0;
    std::uint64_t index = 0;

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

// Finite atom set; std::set gives the deterministic (level, index) iteration
// order the file formats and fresh-atom policy rely on.
using AtomSet = std::set<Atom>;

AtomSet set_union(const AtomSet& a, const AtomSet& b);
AtomSet set_minus(const AtomSet& a, const Atom& b);

// Smallest-index atom at `level` outside `avoid`; also outside `banned_indices`
// (used where theta-closed data forbids an index at every level).
Atom fresh(int level, const AtomSet& avoid);
Atom fresh(int level, const AtomSet& avoid, const std::set<std::uint64_t>& banned_indices);

// A finite level-preserving permutation composed with a power of the canonical
// shift theta : (level, index) -> (level + 1, index). The correction map stores
// only non-fixed atoms and maps each level to itself.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity() { return {}; }
    static Permutation theta(int power = 1);
    // Swapping (a b); both atoms must share a level.
    static Permutation swap(Atom a, Atom b);

    Atom apply(Atom a) const;
    // (p.compose(q)).apply(a) == p.apply(q.apply(a)).
    Permutation compose(const Permutation& q) const;
    Permutation inverse() const;
    Permutation power(int j) const;

    int shift() const { return shift_; }
    bool is_identity() const { return shift_ == 0 && correction_.empty(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    int shift_ = 0;
    std::map<Atom, Atom> correction_;  // level-preserving bijection, fixpoints omitted

    void set(Atom from, Atom to);
};

// Atom text syntax `name@level`; the name encodes the index as a letter plus an
// optional decimal suffix: index = (letter - 'a') + 26 * suffix, so a = 0,
// b3 = 79. Shared by every file format and the CLI.
std::string atom_name(std::uint64_t index);
std::string to_string(const Atom& a);

}  // namespace stratos
