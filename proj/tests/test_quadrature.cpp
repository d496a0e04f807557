#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "gps/errors.hpp"
#include "gps/quadrature.hpp"

using namespace gps;

TEST(LegendrePair, QuadraticAtHalf)
{
    auto const p = legendre_pair(2, 0.5);
    EXPECT_DOUBLE_EQ(p.value, -0.125);
    EXPECT_DOUBLE_EQ(p.derivative, 1.5);
}

TEST(LegendrePair, EndpointIdentities)
{
    for (int N : {1, 2, 5, 17, 64, 200}) {
        auto const p = legendre_pair(N, 1.0);
        EXPECT_DOUBLE_EQ(p.value, 1.0) << N;
        EXPECT_DOUBLE_EQ(p.derivative, N * (N + 1) / 2.0) << N;

        auto const m = legendre_pair(N, -1.0);
        EXPECT_DOUBLE_EQ(m.value, N % 2 == 0 ? 1.0 : -1.0) << N;
    }
}

TEST(LegendrePair, CubicAtDerivativeRoot)
{
    // P_3 = x (5x^2 - 3) / 2 = -x at x^2 = 1/5.
    double const x = std::sqrt(0.2);
    auto const p = legendre_pair(3, x);
    EXPECT_NEAR(p.value, -0.447213595499958, 1e-15);
    EXPECT_NEAR(p.derivative, 0.0, 1e-13);
}

TEST(LegendrePair, MatchesClosedFormsOnRandomPoints)
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        double const x = unit(rng);
        auto const p4 = legendre_pair(4, x);
        EXPECT_NEAR(p4.value, (35 * std::pow(x, 4) - 30 * x * x + 3) / 8, 1e-14);
        EXPECT_NEAR(p4.derivative, (140 * std::pow(x, 3) - 60 * x) / 8, 1e-13);
    }
}

TEST(LegendrePair, RejectsOutOfDomain)
{
    EXPECT_THROW(legendre_pair(3, 1.01), DomainError);
    EXPECT_THROW(legendre_pair(3, -1.0 - 1e-9), DomainError);
    EXPECT_THROW(legendre_pair(0, 0.0), DomainError);
    EXPECT_NO_THROW(legendre_pair(3, 1.0 + 1e-13));
}

TEST(LobattoSet, SmallOrders)
{
    LobattoSet two(2);
    ASSERT_EQ(two.size(), 3u);
    EXPECT_EQ(two.node(0), -1.0);
    EXPECT_EQ(two.node(1), 0.0);
    EXPECT_EQ(two.node(2), 1.0);

    LobattoSet three(3);
    ASSERT_EQ(three.size(), 4u);
    EXPECT_NEAR(three.node(1), -0.447213595499958, 1e-15);
    EXPECT_NEAR(three.node(2), 0.447213595499958, 1e-15);
    EXPECT_THROW(LobattoSet(1), DomainError);
}

void check_invariants(LobattoSet const& set)
{
    int const N = set.order();
    auto const& x = set.nodes();
    ASSERT_EQ(x.size(), static_cast<std::size_t>(N) + 1);
    EXPECT_EQ(x.front(), -1.0);
    EXPECT_EQ(x.back(), 1.0);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j > 0) {
            EXPECT_LT(x[j - 1], x[j]) << "N=" << N << " j=" << j;
        }
        EXPECT_NEAR(x[j], -x[x.size() - 1 - j], 1e-14);
        EXPECT_EQ(set.legendre_at(j), legendre_pair(N, x[j]).value);
    }
    for (std::size_t j = 1; j + 1 < x.size(); ++j) {
        auto const p = legendre_pair(N, x[j]);
        double const second = N * (N + 1.0) * p.value / (1.0 - x[j] * x[j]);
        // Distance to the exact root of P'_N implied by the residual.
        EXPECT_LT(std::abs(p.derivative / second), 1e-13) << "N=" << N << " j=" << j;
        if (N <= 10) {
            EXPECT_LT(std::abs(p.derivative), 1e-13) << "N=" << N << " j=" << j;
        }
    }
}

TEST(LobattoSet, InvariantsAcrossOrders)
{
    for (int N : {2, 3, 4, 5, 10, 11, 32, 64, 99, 200, 240, 600}) {
        check_invariants(LobattoSet(N));
    }
}

TEST(LobattoSet, WeightsIntegrateLowDegreePolynomials)
{
    // Lobatto quadrature is exact to degree 2N - 1.
    for (int N : {4, 9, 20}) {
        LobattoSet set(N);
        for (int degree = 0; degree <= 2 * N - 1; ++degree) {
            double sum = 0.0;
            for (std::size_t j = 0; j < set.size(); ++j) {
                sum += set.weight(j) * std::pow(set.node(j), degree);
            }
            double const exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
            EXPECT_NEAR(sum, exact, 1e-13) << "N=" << N << " degree=" << degree;
        }
    }
}

TEST(LobattoSet, CardinalFunctionsAreKroneckerDeltas)
{
    for (int N : {2, 7, 30, 64}) {
        LobattoSet set(N);
        for (std::size_t j = 0; j < set.size(); ++j) {
            for (std::size_t k = 0; k < set.size(); ++k) {
                EXPECT_NEAR(set.cardinal(j, set.node(k)), j == k ? 1.0 : 0.0, 1e-12)
                  << "N=" << N << " j=" << j << " k=" << k;
            }
        }
    }
}

TEST(LobattoSet, CardinalExpansionIsExactForPolynomials)
{
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int N = 2; N <= 64; ++N) {
        LobattoSet set(N);
        std::uniform_int_distribution<int> degree_dist(0, N);
        int const degree = degree_dist(rng);
        std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1);
        for (auto& c : coeffs) {
            c = unit(rng);
        }
        auto poly = [&coeffs](double x) {
            double acc = 0.0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
                acc = acc * x + *it;
            }
            return acc;
        };
        std::vector<double> samples;
        for (double x : set.nodes()) {
            samples.push_back(poly(x));
        }
        double scale = 0.0;
        for (double c : coeffs) {
            scale += std::abs(c);
        }
        for (int trial = 0; trial < 50; ++trial) {
            double const x = unit(rng);
            double const exact = poly(x);
            double const approx = set.interpolate(samples, x);
            EXPECT_LE(std::abs(approx - exact), 1e-10 * std::max(std::abs(exact), 1e-3 * scale))
              << "N=" << N << " degree=" << degree << " x=" << x;
        }
    }
}
