#pragma once

#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace jetgroup {

template <ScalarRing S>
class Matrix {
public:
    Matrix(int n, const S& domain)
        : n_(n), e_(static_cast<std::size_t>(n) * n, domain.zero_like()) {
        if (n < 1) throw PreconditionFailed("matrix dimension must be positive");
    }

    static Matrix identity(int n, const S& domain) {
        Matrix m(n, domain);
        for (int i = 0; i < n; ++i) m.at(i, i) = domain.one_like();
        return m;
    }

    static Matrix diagonal(const std::vector<S>& d) {
        Matrix m(static_cast<int>(d.size()), d.at(0));
        for (std::size_t i = 0; i < d.size(); ++i)
            m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    int dim() const { return n_; }
    S& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const S& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                const S& v = at(i, j);
                if (i == j ? !v.is_one() : !v.is_zero()) return false;
            }
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("matrix product dimensions differ");
        Matrix r(a.n_, a.domain());
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const S& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
                }
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    S domain() const { return e_[0].zero_like(); }

    // Gauss-Jordan with the first nonzero pivot in each column; exact
    Matrix inverse() const {
        Matrix a(*this);
        Matrix inv = identity(n_, domain());
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int row = col; row < n_; ++row)
                if (!a.at(row, col).is_zero()) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) throw SingularMatrix("matrix is not invertible");
            if (pivot != col) {
                for (int j = 0; j < n_; ++j) {
                    std::swap(a.at(pivot, j), a.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            }
            const S scale = a.at(col, col).inverse();
            for (int j = 0; j < n_; ++j) {
                a.at(col, j) = a.at(col, j) * scale;
                inv.at(col, j) = inv.at(col, j) * scale;
            }
            for (int row = 0; row < n_; ++row) {
                if (row == col || a.at(row, col).is_zero()) continue;
                const S f = a.at(row, col);
                for (int j = 0; j < n_; ++j) {
                    a.at(row, j) = a.at(row, j) - f * a.at(col, j);
                    inv.at(row, j) = inv.at(row, j) - f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

private:
    int n_;
    std::vector<S> e_;
};

template <ScalarRing S>
Matrix<S> matrix_invert(const Matrix<S>& a) {
    return a.inverse();
}

}  // namespace jetgroup
