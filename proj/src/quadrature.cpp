#include "gps/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gps/errors.hpp"

namespace gps {

namespace {

constexpr int max_newton_steps = 100;
constexpr double newton_tolerance = 1e-15;

// P''_N from the Legendre ODE (1 - x^2) P'' - 2x P' + N(N+1) P = 0.
double legendre_second_derivative(int N, double x, LegendrePair const& p)
{
    return (2.0 * x * p.derivative - N * (N + 1.0) * p.value) / (1.0 - x * x);
}

// Root of P'_N near `guess`, confined to (lo, hi).
double polish_interior_root(int N, double guess, double lo, double hi)
{
    double x = guess;
    for (int step = 0; step < max_newton_steps; ++step) {
        auto const p = legendre_pair(N, x);
        double next = x - p.derivative / legendre_second_derivative(N, x, p);
        if (!(next > lo && next < hi)) {
            // Newton overshot the admissible window: bisect towards the sign change instead.
            bool const same_side_as_lo =
              std::signbit(legendre_pair(N, lo).derivative) == std::signbit(p.derivative);
            (same_side_as_lo ? lo : hi) = x;
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - x) < newton_tolerance) {
            return next;
        }
        x = next;
    }
    throw ConvergenceError("Lobatto node search for N=" + std::to_string(N) + " exceeded " +
                           std::to_string(max_newton_steps) + " Newton steps");
}

} // namespace

LegendrePair legendre_pair(int N, double x)
{
    if (N < 1) {
        throw DomainError("legendre_pair: order must be >= 1, got " + std::to_string(N));
    }
    if (!(std::abs(x) <= 1.0 + 1e-12)) {
        throw DomainError("legendre_pair: |x| > 1 for x=" + std::to_string(x));
    }
    double p_prev = 1.0; // P_0
    double p = x;        // P_1
    double dp = 1.0;
    for (int k = 2; k <= N; ++k) {
        double const p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
        double const dp_next = k * p + x * dp;
        p_prev = p;
        p = p_next;
        dp = dp_next;
    }
    return {p, dp};
}

LobattoSet::LobattoSet(int N)
  : order_(N)
  , nodes_(static_cast<std::size_t>(N) + 1)
  , legendre_(static_cast<std::size_t>(N) + 1)
{
    if (N < 2) {
        throw DomainError("LobattoSet: order must be >= 2, got " + std::to_string(N));
    }
    auto const n = static_cast<std::size_t>(N);
    nodes_[0] = -1.0;
    nodes_[n] = 1.0;

    // Chebyshev-Gauss-Lobatto guesses -cos(pi j / N) interlace with the true nodes.
    auto guess = [N](int j) { return -std::cos(std::numbers::pi * j / N); };
    for (int j = 1; 2 * j < N; ++j) {
        double const lo = 0.5 * (guess(j - 1) + guess(j));
        double const hi = 0.5 * (guess(j) + guess(j + 1));
        double const x = polish_interior_root(N, guess(j), lo, hi);
        nodes_[static_cast<std::size_t>(j)] = x;
        nodes_[n - static_cast<std::size_t>(j)] = -x;
    }
    if (N % 2 == 0) {
        nodes_[n / 2] = 0.0;
    }

    for (std::size_t j = 0; j <= n / 2; ++j) {
        double const value = legendre_pair(N, nodes_[j]).value;
        legendre_[j] = value;
        legendre_[n - j] = (N % 2 == 0) ? value : -value;
    }
}

double LobattoSet::weight(std::size_t j) const
{
    double const p = legendre_[j];
    return 2.0 / (order_ * (order_ + 1.0) * p * p);
}

double LobattoSet::cardinal(std::size_t j, double x) const
{
    double const xj = nodes_[j];
    if (x == xj) {
        return 1.0;
    }
    double const dp = legendre_pair(order_, x).derivative;
    return -(1.0 - x * x) * dp / (order_ * (order_ + 1.0) * legendre_[j] * (x - xj));
}

double LobattoSet::interpolate(std::vector<double> const& samples, double x) const
{
    double const dp = legendre_pair(order_, x).derivative;
    double const scale = -(1.0 - x * x) * dp / (order_ * (order_ + 1.0));
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        if (x == nodes_[j]) {
            return samples[j];
        }
        sum += samples[j] * scale / (legendre_[j] * (x - nodes_[j]));
    }
    return sum;
}

} // namespace gps
