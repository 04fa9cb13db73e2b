#include "wdc/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdc {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("ExactMatrix: negative dimension");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Int(0));
}

std::vector<Int> ExactMatrix::row(int r) const
{
    std::vector<Int> out(static_cast<std::size_t>(cols_));
    for (int c = 0; c < cols_; ++c)
        out[static_cast<std::size_t>(c)] = at(r, c);
    return out;
}

RowSpace::RowSpace(int cols) : cols_(cols)
{
    if (cols < 0)
        throw std::invalid_argument("RowSpace: negative column count");
}

// One fraction-free elimination pass of `row` through the recorded pivot
// steps.  Each step divides by the previous pivot; by the Sylvester
// identity the quotients are exact and every intermediate entry is a minor
// of the stacked matrix, so sizes stay polynomial.
void RowSpace::reduce(std::vector<Int>& row) const
{
    Int prev_pivot = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::vector<Int>& basis = rows_[k];
        const int c = pivots_[k];
        const Int& pivot = basis[static_cast<std::size_t>(c)];
        const Int factor = row[static_cast<std::size_t>(c)];
        if (factor == 0) {
            for (Int& v : row) {
                v *= pivot;
                v /= prev_pivot;
            }
        } else {
            for (std::size_t j = 0; j < row.size(); ++j) {
                row[j] = row[j] * pivot - factor * basis[j];
                row[j] /= prev_pivot;
            }
        }
        prev_pivot = pivot;
    }
}

bool RowSpace::normalize(std::vector<Int>& row)
{
    Int content = 0;
    for (const Int& v : row) {
        if (v != 0)
            content = content == 0 ? Int(abs(v)) : Int(gcd(content, v));
        if (content == 1)
            break;
    }
    if (content == 0)
        return false;
    bool flip = false;
    for (const Int& v : row) {
        if (v != 0) {
            flip = v < 0;
            break;
        }
    }
    if (content != 1 || flip) {
        for (Int& v : row) {
            v /= content;
            if (flip)
                v = -v;
        }
    }
    return true;
}

bool RowSpace::insert(std::vector<Int> row)
{
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("RowSpace: row length mismatch");
    reduce(row);
    int pivot = -1;
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] != 0) {
            pivot = static_cast<int>(c);
            break;
        }
    }
    if (pivot < 0)
        return false;
    pivots_.push_back(pivot);
    rows_.push_back(std::move(row));
    return true;
}

bool RowSpace::contains(std::vector<Int> row) const
{
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("RowSpace: row length mismatch");
    reduce(row);
    return std::all_of(row.begin(), row.end(), [](const Int& v) { return v == 0; });
}

std::vector<Int> RowSpace::reduced(std::vector<Int> row) const
{
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("RowSpace: row length mismatch");
    reduce(row);
    normalize(row);
    return row;
}

int exact_rank(const ExactMatrix& m)
{
    RowSpace space(m.cols());
    for (int r = 0; r < m.rows(); ++r)
        space.insert(m.row(r));
    return space.rank();
}

std::vector<std::vector<Int>> null_space(const ExactMatrix& m)
{
    RowSpace space(m.cols());
    for (int r = 0; r < m.rows(); ++r)
        space.insert(m.row(r));

    const std::vector<int>& pivots = space.pivot_cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<Int>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        // Solve the staircase system for x with x_f = 1 and the other free
        // coordinates zero, walking the pivot steps backwards.
        std::vector<mpq_class> x(static_cast<std::size_t>(m.cols()), mpq_class(0));
        x[static_cast<std::size_t>(f)] = 1;
        for (std::size_t k = space.rows().size(); k-- > 0;) {
            const std::vector<Int>& row = space.rows()[k];
            const int c = pivots[k];
            mpq_class sum = 0;
            for (int j = 0; j < m.cols(); ++j) {
                if (j == c)
                    continue;
                if (x[static_cast<std::size_t>(j)] != 0 && row[static_cast<std::size_t>(j)] != 0)
                    sum += mpq_class(row[static_cast<std::size_t>(j)]) *
                           x[static_cast<std::size_t>(j)];
            }
            x[static_cast<std::size_t>(c)] = -sum / mpq_class(row[static_cast<std::size_t>(c)]);
        }

        Int den_lcm = 1;
        for (const mpq_class& q : x)
            den_lcm = lcm(den_lcm, q.get_den());
        std::vector<Int> v(static_cast<std::size_t>(m.cols()));
        Int content = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            v[j] = x[j].get_num() * (den_lcm / x[j].get_den());
            if (v[j] != 0)
                content = content == 0 ? Int(abs(v[j])) : Int(gcd(content, v[j]));
        }
        for (Int& value : v)
            value /= content;

        // The null space is the semantic core here: verify before returning.
        for (int r = 0; r < m.rows(); ++r) {
            Int dot = 0;
            for (int c = 0; c < m.cols(); ++c)
                dot += m.at(r, c) * v[static_cast<std::size_t>(c)];
            if (dot != 0)
                throw std::logic_error("null_space: verification failed");
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace wdc
