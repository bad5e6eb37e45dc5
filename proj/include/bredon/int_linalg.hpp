#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bredon/error.hpp"

namespace bredon {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw usage_error("matrix-shape", "matrix entry count " + std::to_string(entries_.size()) +
                                                  " does not match " + std::to_string(rows_) + "x" +
                                                  std::to_string(cols_));
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw usage_error("matrix-shape", "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Integer>& entries() const noexcept { return entries_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    /// row[target] += factor * row[source]
    void add_row(std::size_t target, std::size_t source, const Integer& factor) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(target, j) += factor * (*this)(source, j);
    }

    /// col[target] += factor * col[source]
    void add_col(std::size_t target, std::size_t source, const Integer& factor) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, target) += factor * (*this)(i, source);
    }

    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(r, j) = -(*this)(r, j);
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw usage_error("matrix-shape", "incompatible matrix product");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Free rank plus invariant factors d1 | d2 | ..., every factor >= 2.
struct AbelianGroupInvariants {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }

    static AbelianGroupInvariants free(std::size_t rank) { return {rank, {}}; }

    /// ASCII rendering, e.g. "Z^3 + Z/2 + Z/4"; the trivial group is "0".
    std::string to_string() const {
        std::string out;
        if (rank == 1)
            out = "Z";
        else if (rank > 1)
            out = "Z^" + std::to_string(rank);
        for (const Integer& d : torsion) {
            if (!out.empty())
                out += " + ";
            out += "Z/" + d.get_str();
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

/// U * M * V = D with U, V unimodular and D diagonal, non-negative, d1 | d2 | ...
/// Pivot: smallest non-zero absolute value in the active block, ties to the
/// lowest (row, col).
inline SmithForm smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    IntMatrix D = M;
    IntMatrix U = IntMatrix::identity(m);
    IntMatrix V = IntMatrix::identity(n);

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (D(i, j) == 0)
                        continue;
                    if (pr == m || mpz_cmpabs(D(i, j).get_mpz_t(), D(pr, pc).get_mpz_t()) < 0) {
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == m)
                break;

            D.swap_rows(t, pr);
            U.swap_rows(t, pr);
            D.swap_cols(t, pc);
            V.swap_cols(t, pc);

            const Integer pivot = D(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), pivot.get_mpz_t());
                D.add_row(i, t, -q);
                U.add_row(i, t, -q);
                clean = clean && D(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), pivot.get_mpz_t());
                D.add_col(j, t, -q);
                V.add_col(j, t, -q);
                clean = clean && D(t, j) == 0;
            }
            if (!clean)
                continue;

            // Row and column t are clear; enforce divisibility on the rest.
            std::size_t bad_row = m;
            for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), pivot.get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == m)
                break;
            D.add_row(t, bad_row, 1);
            U.add_row(t, bad_row, 1);
        }
        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return {std::move(U), std::move(D), std::move(V)};
}

inline std::vector<Integer> smith_diagonal(const IntMatrix& M) {
    const SmithForm snf = smith_normal_form(M);
    std::vector<Integer> diag;
    for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i)
        diag.push_back(snf.D(i, i));
    return diag;
}

inline std::size_t rank(const IntMatrix& M) {
    std::size_t r = 0;
    for (const Integer& d : smith_diagonal(M))
        if (d != 0)
            ++r;
    return r;
}

/// Z^cols modulo the row space of M (rows are relations, columns generators).
inline AbelianGroupInvariants cokernel_invariants(const IntMatrix& M) {
    AbelianGroupInvariants out;
    std::size_t r = 0;
    for (const Integer& d : smith_diagonal(M)) {
        if (d == 0)
            continue;
        ++r;
        if (d != 1)
            out.torsion.push_back(d);
    }
    out.rank = M.cols() - r;
    return out;
}

/// Rank of the kernel of the map Z^rows -> Z^cols, v |-> v M.
inline std::size_t kernel_rank(const IntMatrix& M) { return M.rows() - rank(M); }

/// Direct sum, renormalized to invariant-factor form through the Smith form
/// of the stacked diagonal.
inline AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& a,
                                         const AbelianGroupInvariants& b) {
    std::vector<Integer> factors = a.torsion;
    factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
    IntMatrix diag(factors.size(), factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        diag(i, i) = factors[i];
    AbelianGroupInvariants out = cokernel_invariants(diag);
    out.rank += a.rank + b.rank;
    return out;
}

/// Normalizes an arbitrary list of cyclic orders (0 meaning Z) into
/// invariant-factor form.
inline AbelianGroupInvariants from_cyclic_orders(const std::vector<Integer>& orders) {
    IntMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        diag(i, i) = orders[i];
    return cokernel_invariants(diag);
}

} // namespace bredon
