#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratos {

// Base class for all kernel errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A level constraint was violated (e.g. elt(x, a) with level(x) != level(a) - 1).
struct LevelMismatch : Error {
    using Error::Error;
};

// An atom required to be fresh occurs in the support of a value.
struct FreshnessViolation : Error {
    using Error::Error;
};

// Concretion or a set operation was applied to an internal atom.
struct NotAComprehension : Error {
    using Error::Error;
};

// numeral_witness requires two distinct numerals.
struct NotDistinct : Error {
    using Error::Error;
};

// A Herbrand-prepoint query needs a theta-closed theory.
struct TheoryNotThetaClosed : Error {
    using Error::Error;
};

// Cut elimination was handed a certificate that does not check.
struct InvalidDerivation : Error {
    using Error::Error;
};

// Surface or internal text could not be parsed; carries a 1-based position.
struct ParseError : Error {
    std::size_t line = 0;
    std::size_t col = 0;
    ParseError(const std::string& msg, std::size_t line_ = 1, std::size_t col_ = 1)
        : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
          line(line_), col(col_) {}
};

// A fully-leveled surface formula violates the stratification constraints.
struct NotStratified : Error {
    using Error::Error;
};

// phi-plus requires a closed formula.
struct NotClosed : Error {
    using Error::Error;
};

// Level inference found a contradictory constraint cycle.
struct NotStratifiable : Error {
    using Error::Error;
};

// A configurable guard tripped; on well-formed input this indicates a kernel bug.
struct FuelExhausted : Error {
    using Error::Error;
};

// Recursion-depth guard for the substitution engine (default 10^6) and step
// guard for cut elimination (default 10^7). STRATOS_FUEL overrides both; the
// CLI applies the override at startup.
std::uint64_t sigma_fuel();
void set_sigma_fuel(std::uint64_t limit);
std::uint64_t cut_fuel();
void set_cut_fuel(std::uint64_t limit);

}  // namespace stratos
