#include "pwforms/sparse_matrix.hpp"

#include "pwforms/errors.hpp"

namespace pwf {

SparseMatrix::SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(Index n) {
    SparseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.entries_[{i, i}] = 1;
    return m;
}

void SparseMatrix::check_index(Index r, Index c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw input_error("matrix index out of range");
}

void SparseMatrix::set(Index r, Index c, Rational v) {
    check_index(r, c);
    if (pwf::is_zero(v))
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void SparseMatrix::add(Index r, Index c, const Rational& v) {
    check_index(r, c);
    if (pwf::is_zero(v)) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(r, c), v);
    } else {
        it->second += v;
        if (pwf::is_zero(it->second)) entries_.erase(it);
    }
}

Rational SparseMatrix::get(Index r, Index c) const {
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw input_error("matrix product shape mismatch");
    SparseMatrix out(rows_, rhs.cols_);
    // entries_ is row-major ordered, so rhs rows are contiguous ranges.
    for (const auto& [rc, v] : entries_) {
        const auto [r, k] = rc;
        auto it = rhs.entries_.lower_bound({k, 0});
        auto end = rhs.entries_.lower_bound({k + 1, 0});
        for (; it != end; ++it) out.add(r, it->first.second, v * it->second);
    }
    return out;
}

SparseMatrix SparseMatrix::operator-() const {
    SparseMatrix out(rows_, cols_);
    for (const auto& [rc, v] : entries_) out.entries_[rc] = -v;
    return out;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<Index>(x.size()) != cols_) throw input_error("matrix-vector shape mismatch");
    std::vector<Rational> y(static_cast<std::size_t>(rows_), Rational(0));
    for (const auto& [rc, v] : entries_) y[static_cast<std::size_t>(rc.first)] += v * x[static_cast<std::size_t>(rc.second)];
    return y;
}

std::vector<Rational> SparseMatrix::column(Index c) const {
    if (c < 0 || c >= cols_) throw input_error("matrix index out of range");
    std::vector<Rational> v(static_cast<std::size_t>(rows_), Rational(0));
    for (Index r = 0; r < rows_; ++r) {
        auto it = entries_.find({r, c});
        if (it != entries_.end()) v[static_cast<std::size_t>(r)] = it->second;
    }
    return v;
}

void SparseMatrix::set_column(Index c, const std::vector<Rational>& v) {
    if (static_cast<Index>(v.size()) != rows_) throw input_error("column length mismatch");
    for (Index r = 0; r < rows_; ++r) set(r, c, v[static_cast<std::size_t>(r)]);
}

SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.cols()) throw input_error("vstack column mismatch");
    SparseMatrix out(a.rows() + b.rows(), a.cols());
    for (const auto& [rc, v] : a.entries()) out.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : b.entries()) out.set(a.rows() + rc.first, rc.second, v);
    return out;
}

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows()) throw input_error("hstack row mismatch");
    SparseMatrix out(a.rows(), a.cols() + b.cols());
    for (const auto& [rc, v] : a.entries()) out.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : b.entries()) out.set(rc.first, a.cols() + rc.second, v);
    return out;
}

SparseMatrix block_diag(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (const auto& [rc, v] : a.entries()) out.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : b.entries()) out.set(a.rows() + rc.first, a.cols() + rc.second, v);
    return out;
}

SparseMatrix take_rows(const SparseMatrix& m, Index begin, Index end) {
    if (begin < 0 || end < begin || end > m.rows()) throw input_error("take_rows range out of bounds");
    SparseMatrix out(end - begin, m.cols());
    for (const auto& [rc, v] : m.entries())
        if (rc.first >= begin && rc.first < end) out.set(rc.first - begin, rc.second, v);
    return out;
}

SparseMatrix from_columns(Index rows, const std::vector<std::vector<Rational>>& cols) {
    SparseMatrix out(rows, static_cast<Index>(cols.size()));
    for (Index c = 0; c < static_cast<Index>(cols.size()); ++c) {
        const auto& col = cols[static_cast<std::size_t>(c)];
        if (static_cast<Index>(col.size()) != rows) throw input_error("column length mismatch");
        for (Index r = 0; r < rows; ++r) out.set(r, c, col[static_cast<std::size_t>(r)]);
    }
    return out;
}

} // namespace pwf
