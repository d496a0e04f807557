#include "gps/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gps/errors.hpp"

namespace gps {

double Matrix::frobenius_norm() const
{
    double sum = 0.0;
    for (double v : data_) {
        sum += v * v;
    }
    return std::sqrt(sum);
}

double Matrix::trace() const
{
    double sum = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

namespace {

constexpr int max_ql_sweeps = 50;

void check_symmetric(Matrix const& M)
{
    std::size_t const n = M.dim();
    double largest = 0.0;
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            largest = std::max(largest, std::abs(M(i, j)));
            asym = std::max(asym, std::abs(M(i, j) - M(j, i)));
        }
    }
    if (asym > 1e-14 * largest) {
        throw DomainError("eig_symmetric: matrix is not symmetric (max |M_ij - M_ji| = " + std::to_string(asym) +
                          ")");
    }
}

// Householder reduction of the symmetric matrix held in z to tridiagonal form.
// On return d holds the diagonal, e the subdiagonal in e[1..n-1] (e[0] = 0)
// and, when with_vectors is set, z holds the accumulated orthogonal transform.
void tridiagonalize(Matrix& z, std::vector<double>& d, std::vector<double>& e, bool with_vectors)
{
    std::size_t const n = z.dim();
    for (std::size_t i = n - 1; i > 0; --i) {
        std::size_t const l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (std::size_t k = 0; k < i; ++k) {
                scale += std::abs(z(i, k));
            }
            if (scale == 0.0) {
                e[i] = z(i, l);
            } else {
                for (std::size_t k = 0; k < i; ++k) {
                    z(i, k) /= scale;
                    h += z(i, k) * z(i, k);
                }
                double f = z(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                z(i, l) = f - g;
                f = 0.0;
                for (std::size_t j = 0; j < i; ++j) {
                    if (with_vectors) {
                        z(j, i) = z(i, j) / h;
                    }
                    g = 0.0;
                    for (std::size_t k = 0; k <= j; ++k) {
                        g += z(j, k) * z(i, k);
                    }
                    for (std::size_t k = j + 1; k < i; ++k) {
                        g += z(k, j) * z(i, k);
                    }
                    e[j] = g / h;
                    f += e[j] * z(i, j);
                }
                double const hh = f / (h + h);
                for (std::size_t j = 0; j < i; ++j) {
                    f = z(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (std::size_t k = 0; k <= j; ++k) {
                        z(j, k) -= f * e[k] + g * z(i, k);
                    }
                }
            }
        } else {
            e[i] = z(i, l);
        }
        d[i] = h;
    }

    d[0] = 0.0;
    e[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (with_vectors) {
            if (d[i] != 0.0) {
                for (std::size_t j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (std::size_t k = 0; k < i; ++k) {
                        g += z(i, k) * z(k, j);
                    }
                    for (std::size_t k = 0; k < i; ++k) {
                        z(k, j) -= g * z(k, i);
                    }
                }
            }
            d[i] = z(i, i);
            z(i, i) = 1.0;
            for (std::size_t j = 0; j < i; ++j) {
                z(j, i) = 0.0;
                z(i, j) = 0.0;
            }
        } else {
            d[i] = z(i, i);
        }
    }
}

// Implicit-shift QL on the tridiagonal (d, e). Rotations are applied to the
// rows of `basis` (row k is the k-th basis vector) when it is non-null.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Matrix* basis)
{
    std::size_t const n = d.size();
    if (n == 0) {
        return;
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t i = 1; i < n; ++i) {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for (std::size_t l = 0; l < n; ++l) {
        int sweeps = 0;
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                double const dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (sweeps++ == max_ql_sweeps) {
                throw ConvergenceError("eig_symmetric: QL iteration exceeded " + std::to_string(max_ql_sweeps) +
                                       " sweeps for eigenvalue " + std::to_string(l));
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool deflated = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                double const b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (basis != nullptr) {
                    auto lower = basis->row(i);
                    auto upper = basis->row(i + 1);
                    for (std::size_t k = 0; k < n; ++k) {
                        f = upper[k];
                        upper[k] = s * lower[k] + c * f;
                        lower[k] = c * lower[k] - s * f;
                    }
                }
            }
            if (deflated) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

Matrix transpose(Matrix const& a)
{
    Matrix t(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            t(j, i) = a(i, j);
        }
    }
    return t;
}

} // namespace

std::vector<double> eigenvalues_symmetric(Matrix const& M)
{
    check_symmetric(M);
    std::size_t const n = M.dim();
    if (n == 0) {
        return {};
    }
    Matrix z = M;
    std::vector<double> d(n), e(n);
    tridiagonalize(z, d, e, false);
    ql_implicit(d, e, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

EigenSolution eig_symmetric(Matrix const& M)
{
    check_symmetric(M);
    std::size_t const n = M.dim();
    EigenSolution out;
    if (n == 0) {
        return out;
    }
    Matrix z = M;
    std::vector<double> d(n), e(n);
    tridiagonalize(z, d, e, true);
    // Work on the transpose so each Givens rotation touches two contiguous rows.
    Matrix basis = transpose(z);
    ql_implicit(d, e, &basis);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    out.values.resize(n);
    out.vectors = Matrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        auto const v = basis.row(order[k]);
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v[i];
        }
    }

    double worst = 0.0;
    std::vector<double> mv(n);
    for (std::size_t k = 0; k < n; ++k) {
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            auto const row = M.row(i);
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                acc += row[j] * out.vectors(j, k);
            }
            double const diff = acc - out.values[k] * out.vectors(i, k);
            norm2 += diff * diff;
        }
        worst = std::max(worst, std::sqrt(norm2));
    }
    out.residual_bound = worst;
    return out;
}

} // namespace gps
