#include "gps/mapping.hpp"

#include <string>

#include "gps/errors.hpp"

namespace gps {

MapParams::MapParams(double alpha, double r_max)
  : alpha_(alpha)
  , r_max_(r_max)
  , scale_(alpha * r_max / 2.0)
{
    if (!(alpha > 0.0) || !(r_max > 0.0)) {
        throw DomainError("MapParams: alpha and r_max must be positive");
    }
}

double map_to_r(double x, MapParams const& p)
{
    return p.scale() * (1.0 + x) / (1.0 - x + p.alpha());
}

double map_jacobian(double x, MapParams const& p)
{
    double const denom = 1.0 - x + p.alpha();
    return p.scale() * (2.0 + p.alpha()) / (denom * denom);
}

RadialGrid::RadialGrid(int N, double alpha, double r_max)
  : lobatto_(N)
  , map_(alpha, r_max)
{
    r_.reserve(lobatto_.size());
    r_prime_.reserve(lobatto_.size());
    for (double x : lobatto_.nodes()) {
        r_.push_back(map_to_r(x, map_));
        r_prime_.push_back(map_jacobian(x, map_));
    }
}

RadialGrid build_grid(int N, double alpha, double r_max)
{
    if (N < 10) {
        throw DomainError("build_grid: N must be >= 10, got " + std::to_string(N));
    }
    return RadialGrid(N, alpha, r_max);
}

} // namespace gps
