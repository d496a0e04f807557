#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gps {

/// Dense row-major square matrix.
class Matrix
{
  public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0)
      : n_(n)
      , data_(n * n, fill)
    {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t dim() const { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
    std::span<double const> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

    std::vector<double> column(std::size_t j) const
    {
        std::vector<double> out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            out[i] = (*this)(i, j);
        }
        return out;
    }

    double frobenius_norm() const;
    double trace() const;

    bool operator==(Matrix const&) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

} // namespace gps
