#pragma once

#include <functional>
#include <string>
#include <vector>

#include "yangian/scalar.hpp"

namespace yangian {

/// Dense square matrix over the rational-function field.
class MatrixRF {
public:
    explicit MatrixRF(int dim = 0) : dim_(dim), data_(std::size_t(dim) * std::size_t(dim)) {}
    static MatrixRF identity(int dim);
    /// Matrix unit E_ij (0-based).
    static MatrixRF unit(int dim, int i, int j);
    static MatrixRF diagonal(const std::vector<Scalar>& d);

    int dim() const { return dim_; }
    const Scalar& operator()(int i, int j) const { return data_[idx(i, j)]; }
    Scalar& operator()(int i, int j) { return data_[idx(i, j)]; }
    bool is_zero() const;

    MatrixRF operator-() const;
    MatrixRF& operator+=(const MatrixRF& o);
    MatrixRF& operator-=(const MatrixRF& o);
    friend MatrixRF operator+(MatrixRF a, const MatrixRF& b) { return a += b; }
    friend MatrixRF operator-(MatrixRF a, const MatrixRF& b) { return a -= b; }
    friend MatrixRF operator*(const MatrixRF& a, const MatrixRF& b);
    friend MatrixRF operator*(const Scalar& c, const MatrixRF& a);
    friend bool operator==(const MatrixRF&, const MatrixRF&) = default;

    /// Gauss-Jordan elimination; AlgebraError when singular.
    MatrixRF inverse() const;
    MatrixRF map_entries(const std::function<Scalar(const Scalar&)>& fn) const;

    /// Row-major entry strings.
    std::vector<std::vector<std::string>> rows() const;
    /// Nonzero entries only, "(i,j)=value" joined by "; ".
    std::string sparse_string() const;

private:
    std::size_t idx(int i, int j) const { return std::size_t(i) * std::size_t(dim_) + std::size_t(j); }
    int dim_;
    std::vector<Scalar> data_;
};

MatrixRF commutator(const MatrixRF& a, const MatrixRF& b);
MatrixRF anticommutator(const MatrixRF& a, const MatrixRF& b);
MatrixRF kron(const MatrixRF& a, const MatrixRF& b);

} // namespace yangian
