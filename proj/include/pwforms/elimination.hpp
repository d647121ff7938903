#pragma once

#include <optional>
#include <vector>

#include "pwforms/sparse_matrix.hpp"

namespace pwf {

// Row-update loops of the Gauss-Jordan sweep are data parallel; Serial is the
// reference path kept for testing and benchmarking against Parallel. Both
// produce the same reduced row echelon form bit for bit (the RREF is unique
// and the per-row arithmetic is identical).
enum class ExecutionPolicy { Serial, Parallel };

constexpr ExecutionPolicy kDefaultPolicy = ExecutionPolicy::Parallel;

// Reduced row echelon form. Rows are sorted by pivot column; columns at or
// beyond pivot_limit are carried along but never chosen as pivots (used for
// augmented right-hand sides).
struct RowEchelon {
    Index rows = 0;
    Index cols = 0;
    Index pivot_limit = 0;
    std::vector<std::vector<std::pair<Index, Rational>>> reduced; // pivot rows, sorted by column
    std::vector<Index> pivot_cols;                                // one per reduced row, increasing

    Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

RowEchelon reduced_row_echelon(const SparseMatrix& m, ExecutionPolicy policy = kDefaultPolicy);
RowEchelon reduced_row_echelon(const SparseMatrix& m, Index pivot_limit, ExecutionPolicy policy);

Index rank(const SparseMatrix& m, ExecutionPolicy policy = kDefaultPolicy);

// Vectors v with m.v = 0; count = cols - rank, canonical (free variable f gets
// coefficient 1, pivot variables filled from the RREF, f ascending).
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m,
                                                ExecutionPolicy policy = kDefaultPolicy);

// Some x with m.x = b, free variables set to zero; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b,
                                           ExecutionPolicy policy = kDefaultPolicy);

// Columnwise solve of m.X = B in one elimination sweep; nullopt when any
// column is inconsistent.
std::optional<SparseMatrix> solve_many(const SparseMatrix& m, const SparseMatrix& b,
                                       ExecutionPolicy policy = kDefaultPolicy);

} // namespace pwf
