#include "pwforms/algebroid.hpp"

#include <algorithm>

#include "pwforms/errors.hpp"

namespace pwf {

namespace {

void check_zero_forms(const std::vector<PolyForm>& v, int n, const char* what) {
    for (const auto& f : v)
        if (f.simplex_dim() != n || f.degree() != 0) throw input_error(std::string(what) + ": bad component shape");
}

PolyForm poly_det(int n, const std::vector<std::vector<PolyForm>>& m) {
    const std::size_t sz = m.size();
    if (sz == 0) return PolyForm::constant(n, Rational(1));
    if (sz == 1) return m[0][0];
    PolyForm acc(n, 0);
    for (std::size_t j = 0; j < sz; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<PolyForm>> minor;
        for (std::size_t r = 1; r < sz; ++r) {
            std::vector<PolyForm> row;
            for (std::size_t c = 0; c < sz; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        PolyForm cof = wedge(m[0][j], poly_det(n, minor));
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

int split_sign(const std::vector<int>& first, const std::vector<int>& second) {
    int inv = 0;
    for (int a : first)
        for (int b : second)
            if (b < a) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

TrivialAlgebroid::TrivialAlgebroid(SimplicialComplex base_, LieAlgebra fiber_)
    : base(std::move(base_)), fiber(std::move(fiber_)) {
    if (auto v = fiber.validate())
        throw validation_error("fiber violates the Jacobi identity at " + v->to_string());
}

Section::Section(int simplex_dim_, std::vector<PolyForm> vec_, std::vector<PolyForm> fib_)
    : simplex_dim(simplex_dim_), vec(std::move(vec_)), fib(std::move(fib_)) {
    if (static_cast<int>(vec.size()) != simplex_dim) throw input_error("section: vector component count");
    check_zero_forms(vec, simplex_dim, "section");
    check_zero_forms(fib, simplex_dim, "section");
}

PolyForm directional_derivative(const std::vector<PolyForm>& field, const PolyForm& g) {
    if (static_cast<int>(field.size()) != g.simplex_dim())
        throw input_error("directional_derivative: field component count");
    PolyForm out(g.simplex_dim(), g.degree());
    for (std::size_t k = 0; k < field.size(); ++k)
        out = out + wedge(field[k], partial_derivative(g, static_cast<int>(k)));
    return out;
}

Section section_bracket(const LieAlgebra& g, const Section& a, const Section& b) {
    if (a.simplex_dim != b.simplex_dim || a.fib.size() != b.fib.size() ||
        static_cast<int>(a.fib.size()) != g.dim())
        throw input_error("section_bracket: shape mismatch");
    const int n = a.simplex_dim;
    const int m = g.dim();

    std::vector<PolyForm> vec;
    for (int i = 0; i < n; ++i)
        vec.push_back(directional_derivative(a.vec, b.vec[static_cast<std::size_t>(i)]) -
                      directional_derivative(b.vec, a.vec[static_cast<std::size_t>(i)]));

    std::vector<PolyForm> fib;
    for (int k = 0; k < m; ++k) {
        PolyForm c = directional_derivative(a.vec, b.fib[static_cast<std::size_t>(k)]) -
                     directional_derivative(b.vec, a.fib[static_cast<std::size_t>(k)]);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Rational s = g.structure_constant(i, j, k);
                if (is_zero(s)) continue;
                c = c + (wedge(a.fib[static_cast<std::size_t>(i)], b.fib[static_cast<std::size_t>(j)]) -
                         wedge(a.fib[static_cast<std::size_t>(j)], b.fib[static_cast<std::size_t>(i)])) *
                            s;
            }
        fib.push_back(std::move(c));
    }
    return Section(n, std::move(vec), std::move(fib));
}

std::vector<PolyForm> anchor(const Section& s) { return s.vec; }

Section inject_field(std::vector<PolyForm> field, int fiber_dim) {
    const int n = static_cast<int>(field.size());
    std::vector<PolyForm> fib(static_cast<std::size_t>(fiber_dim), PolyForm(n, 0));
    return Section(n, std::move(field), std::move(fib));
}

Section scalar_multiply(const PolyForm& f, const Section& s) {
    if (f.simplex_dim() != s.simplex_dim || f.degree() != 0) throw input_error("scalar_multiply: bad scalar");
    std::vector<PolyForm> vec, fib;
    for (const auto& c : s.vec) vec.push_back(wedge(f, c));
    for (const auto& c : s.fib) fib.push_back(wedge(f, c));
    return Section(s.simplex_dim, std::move(vec), std::move(fib));
}

Section section_add(const Section& a, const Section& b) {
    if (a.simplex_dim != b.simplex_dim || a.fib.size() != b.fib.size())
        throw input_error("section_add: shape mismatch");
    std::vector<PolyForm> vec, fib;
    for (std::size_t i = 0; i < a.vec.size(); ++i) vec.push_back(a.vec[i] + b.vec[i]);
    for (std::size_t i = 0; i < a.fib.size(); ++i) fib.push_back(a.fib[i] + b.fib[i]);
    return Section(a.simplex_dim, std::move(vec), std::move(fib));
}

TensorModel::TensorModel(SimplicialComplex base, LieAlgebra fiber, int D, int rmax)
    : base_(std::move(base)), fiber_(std::move(fiber)), D_(D) {
    if (D < 0) throw input_error("negative truncation");
    if (auto v = fiber_.validate())
        throw validation_error("fiber violates the Jacobi identity at " + v->to_string());
    rmax_ = rmax >= 0 ? rmax : std::max(base_.dim(), 0) + fiber_.dim();

    const int pmax = std::min(std::max(base_.dim(), 0), rmax_);
    for (int p = 0; p <= pmax; ++p) ps_.push_back(ps_basis(base_, p, coefficient_cap(D_, p)));
    for (int p = 0; p + 1 <= pmax; ++p) ps_diff_.push_back(ps_differential_matrix(ps_[p], ps_[p + 1]));
    for (int q = 0; q < fiber_.dim(); ++q) ce_diff_.push_back(ce_differential(fiber_, q));
}

const PsBasis& TensorModel::ps(int p) const {
    if (p < 0 || p >= static_cast<int>(ps_.size())) throw input_error("ps degree out of range");
    return ps_[static_cast<std::size_t>(p)];
}

const SparseMatrix& TensorModel::ce_diff(int q) const {
    if (q < 0 || q >= static_cast<int>(ce_diff_.size())) throw input_error("ce degree out of range");
    return ce_diff_[static_cast<std::size_t>(q)];
}

std::vector<TensorModel::Block> TensorModel::blocks(int r) const {
    std::vector<Block> out;
    const int m = fiber_.dim();
    Index offset = 0;
    for (int p = std::max(0, r - m); p <= std::min(r, static_cast<int>(ps_.size()) - 1); ++p) {
        const int q = r - p;
        const Index ps_dim = ps_[static_cast<std::size_t>(p)].dimension();
        const Index ce_dim = static_cast<Index>(ce_subsets(m, q).size());
        if (ps_dim == 0 || ce_dim == 0) continue;
        out.push_back({p, q, ps_dim, ce_dim, offset});
        offset += ps_dim * ce_dim;
    }
    return out;
}

Index TensorModel::dimension(int r) const {
    Index total = 0;
    for (const auto& b : blocks(r)) total += b.ps_dim * b.ce_dim;
    return total;
}

SparseMatrix TensorModel::differential(int r) const {
    auto src = blocks(r);
    auto dst = blocks(r + 1);
    auto find_dst = [&](int p, int q) -> const Block* {
        for (const auto& b : dst)
            if (b.p == p && b.q == q) return &b;
        return nullptr;
    };

    SparseMatrix d(dimension(r + 1), dimension(r));
    for (const auto& blk : src) {
        // d_ps (x) id
        if (blk.p + 1 < static_cast<int>(ps_.size())) {
            if (const Block* to = find_dst(blk.p + 1, blk.q)) {
                const SparseMatrix& dp = ps_diff_[static_cast<std::size_t>(blk.p)];
                for (const auto& [rc, v] : dp.entries())
                    for (Index t = 0; t < blk.ce_dim; ++t)
                        d.add(to->offset + rc.first * to->ce_dim + t, blk.offset + rc.second * blk.ce_dim + t,
                              v);
            }
        }
        // (-1)^p id (x) d_g
        if (blk.q < fiber_.dim()) {
            if (const Block* to = find_dst(blk.p, blk.q + 1)) {
                const SparseMatrix& dq = ce_diff_[static_cast<std::size_t>(blk.q)];
                const Rational sign = blk.p % 2 == 0 ? 1 : -1;
                for (const auto& [rc, v] : dq.entries())
                    for (Index i = 0; i < blk.ps_dim; ++i)
                        d.add(to->offset + i * to->ce_dim + rc.first, blk.offset + i * blk.ce_dim + rc.second,
                              sign * v);
            }
        }
    }
    return d;
}

FiniteComplex TensorModel::complex() const {
    FiniteComplex c;
    for (int r = 0; r <= rmax_; ++r) c.dims.push_back(dimension(r));
    for (int r = 0; r < rmax_; ++r) c.diff.push_back(differential(r));
    return c;
}

SparseMatrix tensor_restriction(const TensorModel& from, const TensorModel& to, int r) {
    if (!(from.fiber() == to.fiber()) || from.truncation() != to.truncation())
        throw input_error("tensor_restriction: fiber or truncation mismatch");
    auto src = from.blocks(r);
    auto dst = to.blocks(r);
    SparseMatrix out(to.dimension(r), from.dimension(r));
    for (const auto& sb : src) {
        const TensorModel::Block* tb = nullptr;
        for (const auto& b : dst)
            if (b.p == sb.p && b.q == sb.q) tb = &b;
        if (!tb) continue;
        SparseMatrix rp = restriction_matrix(from.ps(sb.p), to.ps(sb.p));
        for (const auto& [rc, v] : rp.entries())
            for (Index t = 0; t < sb.ce_dim; ++t)
                out.add(tb->offset + rc.first * tb->ce_dim + t, sb.offset + rc.second * sb.ce_dim + t, v);
    }
    return out;
}

BettiTable algebroid_betti(const TensorModel& model, ExecutionPolicy policy) {
    return betti(model.complex(), policy);
}

BettiTable algebroid_betti(const TrivialAlgebroid& a, int D, int rmax, ExecutionPolicy policy) {
    return algebroid_betti(TensorModel(a.base, a.fiber, D, rmax), policy);
}

BettiTable betti_convolution(const BettiTable& a, const BettiTable& b, int rmax) {
    BettiTable out(static_cast<std::size_t>(rmax) + 1, 0);
    for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t q = 0; q < b.size(); ++q)
            if (p + q <= static_cast<std::size_t>(rmax)) out[p + q] += a[p] * b[q];
    return out;
}

AlgebroidForm algebroid_form_from_coordinates(const TensorModel& model, int r,
                                              const std::vector<Rational>& coords) {
    if (static_cast<Index>(coords.size()) != model.dimension(r))
        throw input_error("algebroid form coordinate length mismatch");
    AlgebroidForm w;
    w.total_degree = r;
    for (const auto& blk : model.blocks(r)) {
        std::vector<Rational> slice(coords.begin() + blk.offset,
                                    coords.begin() + blk.offset + blk.ps_dim * blk.ce_dim);
        w.blocks[{blk.p, blk.q}] = std::move(slice);
    }
    return w;
}

std::vector<Rational> algebroid_form_coordinates(const TensorModel& model, const AlgebroidForm& w) {
    std::vector<Rational> coords(static_cast<std::size_t>(model.dimension(w.total_degree)), Rational(0));
    for (const auto& blk : model.blocks(w.total_degree)) {
        auto it = w.blocks.find({blk.p, blk.q});
        if (it == w.blocks.end()) continue;
        if (static_cast<Index>(it->second.size()) != blk.ps_dim * blk.ce_dim)
            throw input_error("algebroid form block length mismatch");
        for (Index i = 0; i < blk.ps_dim * blk.ce_dim; ++i)
            coords[static_cast<std::size_t>(blk.offset + i)] = it->second[static_cast<std::size_t>(i)];
    }
    return coords;
}

PolyForm evaluate_algebroid_form(const TensorModel& model, const AlgebroidForm& w, const Simplex& top,
                                 const std::vector<Section>& sections) {
    const int r = w.total_degree;
    const int n = top.dim();
    const int m = model.fiber().dim();
    if (static_cast<int>(sections.size()) != r) throw input_error("evaluate: section count != degree");
    for (const auto& s : sections)
        if (s.simplex_dim != n || static_cast<int>(s.fib.size()) != m)
            throw input_error("evaluate: section shape mismatch");

    // index sets {0..r-1} split into the base part A and fiber part B
    std::vector<int> everyone(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) everyone[static_cast<std::size_t>(i)] = i;

    PolyForm out(n, 0);
    for (const auto& blk : model.blocks(r)) {
        auto it = w.blocks.find({blk.p, blk.q});
        if (it == w.blocks.end()) continue;
        const auto& coords = it->second;
        auto subsets = ce_subsets(m, blk.q);

        std::vector<std::vector<int>> splits; // choices of A
        std::vector<int> pick;
        auto rec = [&](auto&& self, int start) -> void {
            if (static_cast<int>(pick.size()) == blk.p) {
                splits.push_back(pick);
                return;
            }
            for (int i = start; i < r; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);

        for (Index pi = 0; pi < blk.ps_dim; ++pi) {
            const PolyForm& comp =
                model.ps(blk.p).elements[static_cast<std::size_t>(pi)].component(top);
            for (Index t = 0; t < blk.ce_dim; ++t) {
                const Rational& c = coords[static_cast<std::size_t>(pi * blk.ce_dim + t)];
                if (is_zero(c)) continue;
                const auto& subset = subsets[static_cast<std::size_t>(t)];
                for (const auto& A : splits) {
                    std::vector<int> B;
                    std::set_difference(everyone.begin(), everyone.end(), A.begin(), A.end(),
                                        std::back_inserter(B));
                    std::vector<std::vector<PolyForm>> fields;
                    for (int a : A) fields.push_back(sections[static_cast<std::size_t>(a)].vec);
                    PolyForm base_val = evaluate_on_fields(comp, fields);
                    if (base_val.is_zero()) continue;
                    // fiber factor: det of the subset components
                    std::vector<std::vector<PolyForm>> mat;
                    for (int s : subset) {
                        std::vector<PolyForm> row;
                        for (int b : B)
                            row.push_back(sections[static_cast<std::size_t>(b)].fib[static_cast<std::size_t>(s)]);
                        mat.push_back(std::move(row));
                    }
                    PolyForm fib_val = poly_det(n, mat);
                    if (fib_val.is_zero()) continue;
                    out = out + wedge(base_val, fib_val) * (c * split_sign(A, B));
                }
            }
        }
    }
    return out;
}

KoszulCheckResult koszul_check(const TensorModel& model, const AlgebroidForm& w, const Simplex& top,
                               const std::vector<Section>& sections) {
    const int r = w.total_degree;
    if (r > 2) throw input_error("koszul_check supports total degree <= 2");
    if (static_cast<int>(sections.size()) != r + 1)
        throw input_error("koszul_check: needs degree + 1 sections");
    const int n = top.dim();

    PolyForm koszul(n, 0);
    for (int i = 0; i <= r; ++i) {
        std::vector<Section> rest;
        for (int t = 0; t <= r; ++t)
            if (t != i) rest.push_back(sections[static_cast<std::size_t>(t)]);
        PolyForm inner = evaluate_algebroid_form(model, w, top, rest);
        PolyForm term = directional_derivative(sections[static_cast<std::size_t>(i)].vec, inner);
        koszul = (i % 2 == 0) ? koszul + term : koszul - term;
    }
    for (int i = 0; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            std::vector<Section> args;
            args.push_back(section_bracket(model.fiber(), sections[static_cast<std::size_t>(i)],
                                           sections[static_cast<std::size_t>(j)]));
            for (int t = 0; t <= r; ++t)
                if (t != i && t != j) args.push_back(sections[static_cast<std::size_t>(t)]);
            PolyForm term = evaluate_algebroid_form(model, w, top, args);
            koszul = ((i + j) % 2 == 0) ? koszul + term : koszul - term;
        }
    }

    auto coords = algebroid_form_coordinates(model, w);
    auto d = model.differential(r);
    auto dw_coords = d.apply(coords);
    AlgebroidForm dw = algebroid_form_from_coordinates(model, r + 1, dw_coords);
    PolyForm tensor_val = evaluate_algebroid_form(model, dw, top, sections);

    return {koszul, tensor_val, koszul == tensor_val};
}

} // namespace pwf
