#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pwforms/rational.hpp"

namespace pwf {

using Index = std::int64_t;

// Sparse rational matrix. Entries are kept in a row-major ordered map and a
// zero is never stored; equality and iteration order are therefore canonical.
class SparseMatrix {
public:
    using EntryMap = std::map<std::pair<Index, Index>, Rational>;

    SparseMatrix() = default;
    SparseMatrix(Index rows, Index cols);

    static SparseMatrix identity(Index n);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    // set(0) erases; add accumulates and erases on cancellation.
    void set(Index r, Index c, Rational v);
    void add(Index r, Index c, const Rational& v);
    Rational get(Index r, Index c) const;

    const EntryMap& entries() const { return entries_; }
    std::size_t nonzero_count() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator-() const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    std::vector<Rational> column(Index c) const;
    void set_column(Index c, const std::vector<Rational>& v);

    bool operator==(const SparseMatrix& rhs) const = default;

private:
    void check_index(Index r, Index c) const;

    Index rows_ = 0;
    Index cols_ = 0;
    EntryMap entries_;
};

// [a ; b] and [a , b].
SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b);

// Rows [begin, end) as their own matrix.
SparseMatrix take_rows(const SparseMatrix& m, Index begin, Index end);

SparseMatrix from_columns(Index rows, const std::vector<std::vector<Rational>>& cols);

} // namespace pwf
