#include "gps/potentials.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <string>

#include "gps/errors.hpp"

namespace gps {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_number(double value)
{
    char buf[64];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
    return std::string(buf, end);
}

double parse_number(std::string_view key, std::string_view text)
{
    double value = 0.0;
    auto const* first = text.data();
    auto const* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    auto const [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ParseError("potential parameter '" + std::string(key) + "' has malformed value '" +
                         std::string(text) + "'");
    }
    return value;
}

void require(bool ok, std::string const& message)
{
    if (!ok) {
        throw ParseError(message);
    }
}

} // namespace

double evaluate(PotentialSpec const& spec, double r)
{
    if (!(r > 0.0)) {
        throw DomainError("potential evaluated at r=" + std::to_string(r) + " <= 0");
    }
    return std::visit(overloaded{
                        [r](Ecsc const& p) { return -p.A / r * std::exp(-p.delta1 * r) * std::cos(p.g * p.delta2 * r); },
                        [r](Gesc const& p) {
                            return -p.a / r * (1.0 + (1.0 + p.b * r) * std::exp(-2.0 * p.b * r));
                        },
                        [r](Coulomb const& p) { return -p.Z / r; },
                        [r](Yukawa const& p) { return -p.A / r * std::exp(-p.delta * r); },
                      },
                      spec);
}

double effective_potential(PotentialSpec const& spec, int l, double r)
{
    double const v = evaluate(spec, r);
    if (l == 0) {
        return v;
    }
    return l * (l + 1.0) / (2.0 * r * r) + v;
}

void validate(PotentialSpec const& spec)
{
    auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
    auto finite_pos = [](double v) { return std::isfinite(v) && v > 0.0; };
    std::visit(overloaded{
                 [&](Ecsc const& p) {
                     require(finite_pos(p.A), "ecsc: A must be > 0");
                     require(finite_nonneg(p.delta1) && finite_nonneg(p.delta2), "ecsc: delta must be >= 0");
                     require(finite_nonneg(p.g), "ecsc: g must be >= 0");
                 },
                 [&](Gesc const& p) {
                     require(finite_pos(p.a), "gesc: a must be > 0");
                     require(finite_nonneg(p.b), "gesc: b must be >= 0");
                 },
                 [&](Coulomb const& p) { require(finite_pos(p.Z), "coulomb: Z must be > 0"); },
                 [&](Yukawa const& p) {
                     require(finite_pos(p.A), "yukawa: A must be > 0");
                     require(finite_nonneg(p.delta), "yukawa: delta must be >= 0");
                 },
               },
               spec);
}

std::string_view family_name(PotentialSpec const& spec)
{
    return std::visit(overloaded{
                        [](Ecsc const&) { return std::string_view("ecsc"); },
                        [](Gesc const&) { return std::string_view("gesc"); },
                        [](Coulomb const&) { return std::string_view("coulomb"); },
                        [](Yukawa const&) { return std::string_view("yukawa"); },
                      },
                      spec);
}

PotentialSpec parse_potential(std::string_view text)
{
    auto const colon = text.find(':');
    std::string const family(text.substr(0, colon));
    std::map<std::string, double> values;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        require(!rest.empty(), "potential '" + std::string(text) + "' has an empty parameter list");
        while (true) {
            auto const comma = rest.find(',');
            auto const item = rest.substr(0, comma);
            auto const eq = item.find('=');
            require(eq != std::string_view::npos && eq > 0,
                    "potential parameter '" + std::string(item) + "' is not of the form key=value");
            std::string const key(item.substr(0, eq));
            require(!values.contains(key), "potential parameter '" + key + "' given twice");
            values[key] = parse_number(key, item.substr(eq + 1));
            if (comma == std::string_view::npos) {
                break;
            }
            rest = rest.substr(comma + 1);
        }
    }

    auto take = [&values](std::string const& key, double fallback) {
        auto it = values.find(key);
        if (it == values.end()) {
            return fallback;
        }
        double const v = it->second;
        values.erase(it);
        return v;
    };

    PotentialSpec spec;
    if (family == "ecsc") {
        Ecsc p;
        p.A = take("A", 1.0);
        p.g = take("g", 1.0);
        if (values.contains("delta")) {
            require(!values.contains("delta1") && !values.contains("delta2"),
                    "ecsc: 'delta' cannot be combined with 'delta1'/'delta2'");
            p.delta1 = p.delta2 = take("delta", 0.0);
        } else {
            p.delta1 = take("delta1", 0.0);
            p.delta2 = take("delta2", p.delta1);
        }
        spec = p;
    } else if (family == "gesc") {
        Gesc p;
        p.a = take("a", 1.0);
        p.b = take("b", 0.0);
        spec = p;
    } else if (family == "coulomb") {
        spec = Coulomb{take("Z", 1.0)};
    } else if (family == "yukawa") {
        Yukawa p;
        p.A = take("A", 1.0);
        p.delta = take("delta", 0.0);
        spec = p;
    } else {
        throw ParseError("unknown potential family '" + family + "' (expected ecsc, gesc, coulomb or yukawa)");
    }
    if (!values.empty()) {
        throw ParseError("unknown parameter '" + values.begin()->first + "' for potential family '" + family +
                         "'");
    }
    validate(spec);
    return spec;
}

std::string parameter_string(PotentialSpec const& spec)
{
    using std::string;
    return std::visit(overloaded{
                        [](Ecsc const& p) {
                            string out = "A=" + format_number(p.A);
                            if (p.delta1 == p.delta2) {
                                out += ",delta=" + format_number(p.delta1);
                            } else {
                                out += ",delta1=" + format_number(p.delta1) + ",delta2=" + format_number(p.delta2);
                            }
                            return out + ",g=" + format_number(p.g);
                        },
                        [](Gesc const& p) { return "a=" + format_number(p.a) + ",b=" + format_number(p.b); },
                        [](Coulomb const& p) { return "Z=" + format_number(p.Z); },
                        [](Yukawa const& p) { return "A=" + format_number(p.A) + ",delta=" + format_number(p.delta); },
                      },
                      spec);
}

std::string to_string(PotentialSpec const& spec)
{
    return std::string(family_name(spec)) + ":" + parameter_string(spec);
}

double screening(PotentialSpec const& spec)
{
    return std::visit(overloaded{
                        [](Ecsc const& p) {
                            if (p.delta1 != p.delta2) {
                                throw UnsupportedError("ecsc with delta1 != delta2 has no single screening parameter");
                            }
                            return p.delta1;
                        },
                        [](Gesc const& p) { return p.b; },
                        [](Coulomb const&) -> double {
                            throw UnsupportedError("coulomb potential has no screening parameter");
                        },
                        [](Yukawa const& p) { return p.delta; },
                      },
                      spec);
}

PotentialSpec with_screening(PotentialSpec const& spec, double value)
{
    (void)screening(spec);
    return std::visit(overloaded{
                        [value](Ecsc p) -> PotentialSpec {
                            p.delta1 = p.delta2 = value;
                            return p;
                        },
                        [value](Gesc p) -> PotentialSpec {
                            p.b = value;
                            return p;
                        },
                        [](Coulomb p) -> PotentialSpec { return p; },
                        [value](Yukawa p) -> PotentialSpec {
                            p.delta = value;
                            return p;
                        },
                      },
                      spec);
}

} // namespace gps
