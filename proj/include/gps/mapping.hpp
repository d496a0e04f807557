#pragma once

#include <vector>

#include "gps/quadrature.hpp"

namespace gps {

/// Algebraic map r(x) = L (1 + x) / (1 - x + alpha) from [-1, 1] onto [0, r_max].
///
/// The user-facing knobs are alpha and r_max; L = alpha * r_max / 2 is derived.
class MapParams
{
  public:
    MapParams(double alpha, double r_max);

    double alpha() const { return alpha_; }
    double r_max() const { return r_max_; }
    double scale() const { return scale_; }

  private:
    double alpha_;
    double r_max_;
    double scale_;
};

double map_to_r(double x, MapParams const& p);

/// dr/dx = L (2 + alpha) / (1 - x + alpha)^2.
double map_jacobian(double x, MapParams const& p);

/// Mapped collocation grid. Endpoints r = 0 and r = r_max are kept for
/// wavefunction output; the Hamiltonian only uses interior points 1..N-1.
class RadialGrid
{
  public:
    RadialGrid(int N, double alpha, double r_max);

    int order() const { return lobatto_.order(); }
    std::size_t size() const { return r_.size(); }

    LobattoSet const& lobatto() const { return lobatto_; }
    MapParams const& map() const { return map_; }

    std::vector<double> const& r() const { return r_; }
    std::vector<double> const& r_prime() const { return r_prime_; }

    double x(std::size_t j) const { return lobatto_.node(j); }
    double r(std::size_t j) const { return r_[j]; }
    double r_prime(std::size_t j) const { return r_prime_[j]; }

  private:
    LobattoSet lobatto_;
    MapParams map_;
    std::vector<double> r_;
    std::vector<double> r_prime_;
};

/// Grid with N >= 10; defaults reproduce the standard working set.
RadialGrid build_grid(int N = 200, double alpha = 25.0, double r_max = 300.0);

} // namespace gps
