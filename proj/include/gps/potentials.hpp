#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace gps {

/// Exponential cosine screened Coulomb: -(A/r) exp(-delta1 r) cos(g delta2 r).
struct Ecsc
{
    double A = 1.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    double g = 1.0;

    bool operator==(Ecsc const&) const = default;
};

/// General exponential screened Coulomb: -(a/r) [1 + (1 + b r) exp(-2 b r)].
struct Gesc
{
    double a = 1.0;
    double b = 0.0;

    bool operator==(Gesc const&) const = default;
};

struct Coulomb
{
    double Z = 1.0;

    bool operator==(Coulomb const&) const = default;
};

/// -(A/r) exp(-delta r).
struct Yukawa
{
    double A = 1.0;
    double delta = 0.0;

    bool operator==(Yukawa const&) const = default;
};

using PotentialSpec = std::variant<Ecsc, Gesc, Coulomb, Yukawa>;

/// ECSC with delta1 = delta2 = delta, the form used for all tabulated data.
inline Ecsc ecsc(double delta, double A = 1.0, double g = 1.0) { return {A, delta, delta, g}; }
inline Gesc gesc(double b, double a = 1.0) { return {a, b}; }

/// v(r). Throws DomainError for r <= 0.
double evaluate(PotentialSpec const& spec, double r);

/// l(l+1)/(2 r^2) + v(r).
double effective_potential(PotentialSpec const& spec, int l, double r);

/// Throws ParseError on non-finite or out-of-range parameters.
void validate(PotentialSpec const& spec);

/// Family keyword: "ecsc", "gesc", "coulomb" or "yukawa".
std::string_view family_name(PotentialSpec const& spec);

/// Parse `<family>:<key>=<value>{,<key>=<value>}`. Omitted keys take their
/// defaults (A = a = Z = 1, g = 1, screening 0). Unknown or repeated keys are
/// rejected with ParseError.
PotentialSpec parse_potential(std::string_view text);

/// Canonical string form; parse_potential(to_string(s)) == s.
std::string to_string(PotentialSpec const& spec);

/// Canonical parameter list without the family prefix, e.g. "A=1,delta=0.06,g=1".
std::string parameter_string(PotentialSpec const& spec);

/// Screening parameter that scans and critical searches vary (delta or b).
/// Throws UnsupportedError for Coulomb and for ECSC with delta1 != delta2.
double screening(PotentialSpec const& spec);
PotentialSpec with_screening(PotentialSpec const& spec, double value);

} // namespace gps
