#include "pwforms/elimination.hpp"

#include <algorithm>
#include <cstddef>

#include "pwforms/errors.hpp"

namespace pwf {

namespace {

using Row = std::vector<std::pair<Index, Rational>>;

// dst -= factor * pivot_row, merging the sorted column lists.
Row axpy(const Row& dst, const Rational& factor, const Row& pivot_row) {
    Row out;
    out.reserve(dst.size() + pivot_row.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() && j < pivot_row.size()) {
        if (dst[i].first < pivot_row[j].first) {
            out.push_back(dst[i++]);
        } else if (dst[i].first > pivot_row[j].first) {
            out.emplace_back(pivot_row[j].first, -factor * pivot_row[j].second);
            ++j;
        } else {
            Rational v = dst[i].second - factor * pivot_row[j].second;
            if (!is_zero(v)) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < dst.size(); ++i) out.push_back(dst[i]);
    for (; j < pivot_row.size(); ++j) out.emplace_back(pivot_row[j].first, -factor * pivot_row[j].second);
    return out;
}

const Rational* entry_at(const Row& row, Index col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const std::pair<Index, Rational>& e, Index c) { return e.first < c; });
    if (it == row.end() || it->first != col) return nullptr;
    return &it->second;
}

// Pivot preference: fewest nonzeros in the pivotable span, then smallest
// |value|, then lowest original position. Pure size control; the RREF is the
// same whatever is picked.
bool better_pivot(const Row& a, const Rational& va, std::size_t ia, const Row& b, const Rational& vb,
                  std::size_t ib) {
    if (a.size() != b.size()) return a.size() < b.size();
    int c = cmp(abs(va), abs(vb));
    if (c != 0) return c < 0;
    return ia < ib;
}

} // namespace

RowEchelon reduced_row_echelon(const SparseMatrix& m, ExecutionPolicy policy) {
    return reduced_row_echelon(m, m.cols(), policy);
}

RowEchelon reduced_row_echelon(const SparseMatrix& m, Index pivot_limit, ExecutionPolicy policy) {
    RowEchelon result;
    result.rows = m.rows();
    result.cols = m.cols();
    result.pivot_limit = pivot_limit;

    std::vector<Row> work(static_cast<std::size_t>(m.rows()));
    for (const auto& [rc, v] : m.entries()) work[static_cast<std::size_t>(rc.first)].emplace_back(rc.second, v);

    std::vector<Row> pivots;        // rows already holding a pivot, in pivot-column order
    std::vector<Index> pivot_cols;
    // Drop empty rows up front.
    std::vector<Row> pending;
    pending.reserve(work.size());
    for (auto& r : work)
        if (!r.empty()) pending.push_back(std::move(r));

    for (Index col = 0; col < pivot_limit && !pending.empty(); ++col) {
        // Candidates: pending rows whose leading pivotable column is col.
        std::size_t best = pending.size();
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (pending[i].front().first != col) continue;
            if (best == pending.size() ||
                better_pivot(pending[i], pending[i].front().second, i, pending[best],
                             pending[best].front().second, best)) {
                best = i;
            }
        }
        if (best == pending.size()) continue;

        Row pivot_row = std::move(pending[best]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

        // Normalize so the pivot entry is 1.
        Rational inv = 1 / pivot_row.front().second;
        if (inv != 1)
            for (auto& e : pivot_row) e.second *= inv;

        // Eliminate col from every other row; each update touches one row only.
        auto eliminate = [&](Row& row) {
            const Rational* v = entry_at(row, col);
            if (v) row = axpy(row, *v, pivot_row);
        };
        const auto n_pending = static_cast<std::ptrdiff_t>(pending.size());
        const auto n_pivots = static_cast<std::ptrdiff_t>(pivots.size());
        if (policy == ExecutionPolicy::Parallel && n_pending + n_pivots >= 32) {
#pragma omp parallel for schedule(dynamic, 8)
            for (std::ptrdiff_t i = 0; i < n_pending + n_pivots; ++i) {
                if (i < n_pending)
                    eliminate(pending[static_cast<std::size_t>(i)]);
                else
                    eliminate(pivots[static_cast<std::size_t>(i - n_pending)]);
            }
        } else {
            for (auto& row : pending) eliminate(row);
            for (auto& row : pivots) eliminate(row);
        }
        pending.erase(std::remove_if(pending.begin(), pending.end(), [](const Row& r) { return r.empty(); }),
                      pending.end());

        pivots.push_back(std::move(pivot_row));
        pivot_cols.push_back(col);
    }

    // Rows with no pivotable entry left: keep their augmented tails (all
    // remaining columns are >= pivot_limit). They witness inconsistency.
    for (auto& r : pending)
        if (!r.empty()) {
            pivots.push_back(std::move(r));
            // no pivot column recorded
        }

    result.reduced = std::move(pivots);
    result.pivot_cols = std::move(pivot_cols);
    return result;
}

Index rank(const SparseMatrix& m, ExecutionPolicy policy) {
    return reduced_row_echelon(m, policy).rank();
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m, ExecutionPolicy policy) {
    RowEchelon ech = reduced_row_echelon(m, policy);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (Index p : ech.pivot_cols) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Index> free_cols;
    for (Index c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    std::vector<std::vector<Rational>> basis(free_cols.size());
    const auto n_free = static_cast<std::ptrdiff_t>(free_cols.size());
#pragma omp parallel for schedule(dynamic, 8) if (policy == ExecutionPolicy::Parallel && n_free >= 32)
    for (std::ptrdiff_t k = 0; k < n_free; ++k) {
        Index f = free_cols[static_cast<std::size_t>(k)];
        std::vector<Rational> v(static_cast<std::size_t>(m.cols()), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
            const Rational* e = entry_at(ech.reduced[r], f);
            if (e) v[static_cast<std::size_t>(ech.pivot_cols[r])] = -*e;
        }
        basis[static_cast<std::size_t>(k)] = std::move(v);
    }
    return basis;
}

std::optional<SparseMatrix> solve_many(const SparseMatrix& m, const SparseMatrix& b, ExecutionPolicy policy) {
    if (b.rows() != m.rows()) throw input_error("solve: rhs length mismatch");
    RowEchelon ech = reduced_row_echelon(hstack(m, b), m.cols(), policy);

    // A row with no pivot has support only in the augmented block; any
    // nonzero entry there marks its column's system inconsistent.
    for (std::size_t r = ech.pivot_cols.size(); r < ech.reduced.size(); ++r)
        if (!ech.reduced[r].empty()) return std::nullopt;

    SparseMatrix x(m.cols(), b.cols());
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
        for (const auto& [c, v] : ech.reduced[r])
            if (c >= m.cols()) x.set(ech.pivot_cols[r], c - m.cols(), v);
    }
    return x;
}

std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b,
                                           ExecutionPolicy policy) {
    SparseMatrix rhs(m.rows(), 1);
    rhs.set_column(0, b);
    auto x = solve_many(m, rhs, policy);
    if (!x) return std::nullopt;
    return x->column(0);
}

} // namespace pwf
