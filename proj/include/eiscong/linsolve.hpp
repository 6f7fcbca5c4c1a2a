#pragma once

// Linear systems over Z/p^m. The ring is local with principal ideals p^v,
// so elimination works if every pivot is an entry of least valuation in the
// remaining block: then every other entry of the block is a multiple of the
// pivot and no row needs dividing by a zero divisor.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "eiscong/residue.hpp"

namespace eiscong {

/// Dense row-major matrix of canonical residues.
class ResidueMatrix {
public:
    ResidueMatrix(ResidueRing ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const ResidueRing& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Word& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Word operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Word> apply(const std::vector<Word>& x) const {
        if (x.size() != cols_) raise(ErrorCode::InvalidArgument, "vector length does not match columns");
        std::vector<Word> y(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] = ring_.add(y[i], ring_.mul((*this)(i, j), x[j]));
        return y;
    }

    /// y^T A.
    std::vector<Word> apply_left(const std::vector<Word>& y) const {
        if (y.size() != rows_) raise(ErrorCode::InvalidArgument, "vector length does not match rows");
        std::vector<Word> out(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[j] = ring_.add(out[j], ring_.mul(y[i], (*this)(i, j)));
        return out;
    }

private:
    ResidueRing ring_;
    std::size_t rows_, cols_;
    std::vector<Word> data_;
};

struct LinearSystem {
    ResidueMatrix matrix;
    std::vector<Word> rhs;
};

/// Either a solution x of A x = b, or a left multiplier y with y A = 0 and
/// y b != 0 proving there is none.
class SolveResult {
public:
    static SolveResult solved(std::vector<Word> x) { return SolveResult(std::move(x), {}); }
    static SolveResult inconsistent(std::vector<Word> y) { return SolveResult({}, std::move(y)); }

    bool solvable() const noexcept { return solution_.has_value(); }
    const std::vector<Word>& solution() const { return solution_.value(); }
    const std::vector<Word>& certificate() const { return certificate_.value(); }

private:
    SolveResult(std::optional<std::vector<Word>> x, std::optional<std::vector<Word>> y)
        : solution_(std::move(x)), certificate_(std::move(y)) {
        if (solution_) certificate_.reset();
    }
    std::optional<std::vector<Word>> solution_;
    std::optional<std::vector<Word>> certificate_;
};

inline SolveResult solve_mod_pm(const LinearSystem& system) {
    const ResidueMatrix& a0 = system.matrix;
    const ResidueRing& ring = a0.ring();
    const std::size_t rows = a0.rows(), cols = a0.cols();
    if (system.rhs.size() != rows) raise(ErrorCode::InvalidArgument, "rhs length does not match rows");
    for (Word b : system.rhs)
        if (b >= ring.modulus()) raise(ErrorCode::RingMismatch, "rhs entry not a residue of the matrix ring");

    ResidueMatrix a = a0;
    std::vector<Word> b = system.rhs;
    // row transform T with a = T a0, b = T b0
    ResidueMatrix t(ring, rows, rows);
    for (std::size_t i = 0; i < rows; ++i) t(i, i) = ring.one();
    std::vector<std::size_t> col_of(cols);
    std::iota(col_of.begin(), col_of.end(), 0);

    auto swap_rows = [&](std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a(i, j), a(k, j));
        for (std::size_t j = 0; j < rows; ++j) std::swap(t(i, j), t(k, j));
        std::swap(b[i], b[k]);
    };
    auto swap_cols = [&](std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, j), a(i, k));
        std::swap(col_of[j], col_of[k]);
    };

    std::vector<unsigned> pivot_val;
    std::size_t rank = 0;
    while (rank < rows && rank < cols) {
        unsigned best = ring.m();
        std::size_t bi = rank, bj = rank;
        for (std::size_t i = rank; i < rows && best > 0; ++i)
            for (std::size_t j = rank; j < cols; ++j) {
                unsigned v = ring.valuation(a(i, j));
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        if (best == ring.m()) break;  // remaining block is zero
        swap_rows(rank, bi);
        swap_cols(rank, bj);
        const Word pv = ring.p_power(best);
        const Word unit_inv = ring.inverse(a(rank, rank) / pv);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            Word x = a(i, rank);
            if (x == 0) continue;
            // x = p^best * (x / p^best) exactly, by minimality of best
            Word factor = ring.mul(x / pv, unit_inv);
            for (std::size_t j = rank; j < cols; ++j) a(i, j) = ring.sub(a(i, j), ring.mul(factor, a(rank, j)));
            for (std::size_t j = 0; j < rows; ++j) t(i, j) = ring.sub(t(i, j), ring.mul(factor, t(rank, j)));
            b[i] = ring.sub(b[i], ring.mul(factor, b[rank]));
        }
        pivot_val.push_back(best);
        ++rank;
    }

    auto certificate_from_row = [&](std::size_t i, unsigned v) {
        // p^{m-v} kills row i of a (all entries have valuation >= v) but not b[i]
        Word scale = ring.p_power(ring.m() - v);
        std::vector<Word> y(rows);
        for (std::size_t j = 0; j < rows; ++j) y[j] = ring.mul(scale, t(i, j));
        return SolveResult::inconsistent(std::move(y));
    };

    for (std::size_t i = rank; i < rows; ++i)
        if (b[i] != 0) return certificate_from_row(i, ring.m());

    // back substitution; free unknowns are zero
    std::vector<Word> z(cols, 0);
    for (std::size_t i = rank; i-- > 0;) {
        Word acc = b[i];
        for (std::size_t j = i + 1; j < cols; ++j) acc = ring.sub(acc, ring.mul(a(i, j), z[j]));
        const unsigned v = pivot_val[i];
        if (ring.valuation(acc) < v) return certificate_from_row(i, v);
        const Word pv = ring.p_power(v);
        // solve p^v u z = acc: z = (acc / p^v) u^{-1}, determined mod p^{m-v}
        z[i] = ring.mul(acc / pv, ring.inverse(a(i, i) / pv));
        if (v > 0) z[i] %= ring.modulus() / pv;
    }
    std::vector<Word> x(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) x[col_of[j]] = z[j];
    return SolveResult::solved(std::move(x));
}

}  // namespace eiscong
