#pragma once

#include <utility>
#include <vector>

namespace gps {

/// Value and first derivative of the Legendre polynomial P_N at one point.
struct LegendrePair
{
    double value;
    double derivative;
};

/// P_N(x) and P'_N(x) by the Bonnet three-term recurrence.
///
/// Throws DomainError when N < 1 or |x| > 1 + 1e-12.
LegendrePair legendre_pair(int N, double x);

/// Gauss-Lobatto-Legendre collocation set of order N.
///
/// nodes = {-1, roots of P'_N ascending, +1}; legendre_at_nodes[j] = P_N(nodes[j]).
/// The set is antisymmetric by construction: only the negative half is solved
/// for and the positive half is mirrored.
class LobattoSet
{
  public:
    explicit LobattoSet(int N);

    int order() const { return order_; }
    std::size_t size() const { return nodes_.size(); }

    std::vector<double> const& nodes() const { return nodes_; }
    std::vector<double> const& legendre_at_nodes() const { return legendre_; }

    double node(std::size_t j) const { return nodes_[j]; }
    double legendre_at(std::size_t j) const { return legendre_[j]; }

    /// Gauss-Lobatto weight 2 / [N(N+1) P_N(x_j)^2].
    double weight(std::size_t j) const;

    /// Cardinal function g_j(x) with g_j(x_k) = delta_jk.
    double cardinal(std::size_t j, double x) const;

    /// Evaluate the degree-N interpolant through (x_j, samples[j]) at x.
    double interpolate(std::vector<double> const& samples, double x) const;

  private:
    int order_;
    std::vector<double> nodes_;
    std::vector<double> legendre_;
};

/// Convenience wrapper matching the functional form used elsewhere.
inline LobattoSet lobatto_nodes(int N) { return LobattoSet(N); }

} // namespace gps
