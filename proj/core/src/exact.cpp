#include "niho/exact.hpp"

#include <utility>

namespace niho {

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactVector ExactMatrix::operator*(std::span<const BigRational> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    ExactVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        BigRational acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix-matrix size mismatch");
    ExactMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if ((*this)(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
        }
    return out;
}

ExactVector solve_bareiss(const ExactMatrix& a, std::span<const BigRational> b) {
    const std::size_t n = a.rows();
    if (!a.square() || b.size() != n) throw std::invalid_argument("solve_bareiss needs a square system");

    // Augmented integer matrix [A | b]; b may be rational, so scale its column.
    BigInt b_scale = 1;
    for (const auto& v : b) mpz_lcm(b_scale.get_mpz_t(), b_scale.get_mpz_t(), v.get_den_mpz_t());
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j).get_den() != 1) throw std::invalid_argument("solve_bareiss needs integer entries");
            m[i][j] = a(i, j).get_num();
        }
        BigRational scaled = b[i] * BigRational(b_scale);
        m[i][n] = scaled.get_num();
    }

    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    ExactVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        BigRational acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= BigRational(m[i][j]) * x[j];
        x[i] = acc / BigRational(m[i][i]);
        x[i].canonicalize();
    }
    for (auto& v : x) {
        v /= BigRational(b_scale);
        v.canonicalize();
    }
    return x;
}

ExactMatrix inverse(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (!a.square()) throw std::invalid_argument("inverse needs a square matrix");
    ExactMatrix work = a;
    ExactMatrix inv = ExactMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && work(pivot, k) == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(k, j));
                std::swap(inv(pivot, j), inv(k, j));
            }
        const BigRational scale = 1 / work(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            work(k, j) *= scale;
            inv(k, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || work(i, k) == 0) continue;
            const BigRational f = work(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= f * work(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    inv.provenance = a.provenance;
    return inv;
}

ExactMatrix vandermonde_inverse(std::span<const BigRational> nodes) {
    const std::size_t n = nodes.size();
    ExactMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        // L_j(z) = prod_{k != j} (z - x_k) / (x_j - x_k), built by repeated multiplication.
        std::vector<BigRational> poly{BigRational(1)};
        BigRational denom = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            std::vector<BigRational> next(poly.size() + 1);
            for (std::size_t c = 0; c < poly.size(); ++c) {
                next[c + 1] += poly[c];
                next[c] -= poly[c] * nodes[k];
            }
            poly = std::move(next);
            denom *= nodes[j] - nodes[k];
        }
        if (denom == 0) throw SingularMatrix("repeated Vandermonde node");
        for (std::size_t c = 0; c < n; ++c) inv(j, c) = poly[c] / denom;
    }
    return inv;
}

ExactVector solve_vandermonde(std::span<const BigRational> nodes, std::span<const BigRational> b) {
    if (nodes.size() != b.size()) throw std::invalid_argument("node/right-hand-side size mismatch");
    return vandermonde_inverse(nodes) * b;
}

}  // namespace niho
