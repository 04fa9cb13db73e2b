#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

namespace wdc {

using Int = mpz_class;

// Dense matrix of arbitrary-precision integers.  Rank and null-space
// computations on it are exact; no floating point is involved anywhere.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::vector<Int> row(int r) const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// A row space maintained by incremental fraction-free (Bareiss) elimination
// over exact integers: every inserted row is eliminated against the pivot
// steps recorded so far, with the exact division by the previous pivot that
// keeps all intermediate entries minors of the stacked matrix.  Factor a
// set of rows once, then test as many candidate rows as needed; a factored
// space is immutable apart from insert() and safe to share across threads
// for concurrent membership tests.
class RowSpace {
public:
    explicit RowSpace(int cols);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Inserts a row; returns true if it was independent of the span so far.
    bool insert(std::vector<Int> row);
    // Is the row contained in the current span?
    bool contains(std::vector<Int> row) const;
    // Residual of the row against the basis, content-normalized with a
    // positive leading entry; all zeros exactly when the row lies in the
    // span.  Rows that agree modulo the span give identical residuals.
    std::vector<Int> reduced(std::vector<Int> row) const;

    // Staircase rows in elimination order, and their pivot columns.
    const std::vector<std::vector<Int>>& rows() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return pivots_; }

private:
    void reduce(std::vector<Int>& row) const;
    static bool normalize(std::vector<Int>& row); // false if the row is zero

    int cols_;
    std::vector<std::vector<Int>> rows_;
    std::vector<int> pivots_;
};

int exact_rank(const ExactMatrix& m);

// Primitive integer basis of {x : m x = 0}, one vector per free column of
// the reduced form, ordered by free column.  Every returned vector is
// verified against the matrix.
std::vector<std::vector<Int>> null_space(const ExactMatrix& m);

} // namespace wdc
