#pragma once

// Dense exact linear algebra over Q.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace niho {

using BigInt = mpz_class;
using BigRational = mpq_class;
using ExactVector = std::vector<BigRational>;

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    BigRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ExactVector operator*(std::span<const BigRational> v) const;
    ExactMatrix operator*(const ExactMatrix& other) const;
    /// Entrywise; provenance is not compared.
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Short human-readable provenance, e.g. "F1 q=16 e=1 t=2".
    std::string provenance;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigRational> data_;
};

/// Solves A x = b by fraction-free (Bareiss) elimination. A must have
/// integer entries; throws SingularMatrix when A is singular.
ExactVector solve_bareiss(const ExactMatrix& a, std::span<const BigRational> b);

/// Inverse by Gauss-Jordan elimination over Q.
ExactMatrix inverse(const ExactMatrix& a);

/// Inverse of V with V(i, j) = nodes[j]^i, from the coefficients of the
/// Lagrange basis polynomials: row j of V^{-1} holds the coefficients of L_j.
ExactMatrix vandermonde_inverse(std::span<const BigRational> nodes);

/// Solves sum_j nodes[j]^i x_j = b_i through the Lagrange basis.
ExactVector solve_vandermonde(std::span<const BigRational> nodes, std::span<const BigRational> b);

}  // namespace niho
