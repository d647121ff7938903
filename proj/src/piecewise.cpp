#include "pwforms/piecewise.hpp"

#include <algorithm>

#include "pwforms/errors.hpp"

namespace pwf {

namespace {

// Vertex-set intersection; nullopt when disjoint. Face closure makes any
// nonempty intersection of simplices a simplex of the complex.
std::optional<Simplex> shared_face(const Simplex& a, const Simplex& b) {
    std::vector<int> common;
    std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                          std::back_inserter(common));
    if (common.empty()) return std::nullopt;
    return Simplex(common);
}

} // namespace

PiecewiseForm::PiecewiseForm(SimplicialComplex complex, int degree)
    : complex_(std::move(complex)), p_(degree) {
    if (degree < 0) throw input_error("negative form degree");
    for (int d = 0; d <= complex_.dim(); ++d)
        for (const Simplex& s : complex_.simplices(d)) components_.emplace(s, PolyForm(d, p_));
}

const PolyForm& PiecewiseForm::component(const Simplex& s) const {
    auto it = components_.find(s);
    if (it == components_.end()) throw input_error("component: simplex not in complex");
    return it->second;
}

void PiecewiseForm::set_component(const Simplex& s, PolyForm f) {
    auto it = components_.find(s);
    if (it == components_.end()) throw input_error("set_component: simplex not in complex");
    if (f.simplex_dim() != s.dim() || f.degree() != p_)
        throw input_error("set_component: form shape mismatch");
    it->second = std::move(f);
}

bool PiecewiseForm::is_facet_compatible() const {
    for (int d = 1; d <= complex_.dim(); ++d) {
        for (const Simplex& s : complex_.simplices(d)) {
            const PolyForm& top = component(s);
            for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
                std::vector<int> fv = s.vertices;
                fv.erase(fv.begin() + static_cast<std::ptrdiff_t>(drop));
                Simplex face(fv);
                if (!(pullback(FaceInclusion(face, s), top) == component(face))) return false;
            }
        }
    }
    return true;
}

PiecewiseForm PiecewiseForm::differential() const {
    PiecewiseForm out(complex_, p_ + 1);
    for (const auto& [s, f] : components_) out.set_component(s, pwf::differential(f));
    return out;
}

PiecewiseForm PiecewiseForm::operator+(const PiecewiseForm& rhs) const {
    if (!(complex_ == rhs.complex_) || p_ != rhs.p_) throw input_error("piecewise sum shape mismatch");
    PiecewiseForm out(complex_, p_);
    for (const auto& [s, f] : components_) out.set_component(s, f + rhs.component(s));
    return out;
}

PiecewiseForm PiecewiseForm::operator*(const Rational& c) const {
    PiecewiseForm out(complex_, p_);
    for (const auto& [s, f] : components_) out.set_component(s, f * c);
    return out;
}

std::string PiecewiseForm::to_string() const {
    std::string out;
    for (const auto& [s, f] : components_) {
        if (s.dim() < p_) continue;
        if (!out.empty()) out += "\n";
        out += s.to_string() + ": " + f.to_string();
    }
    return out.empty() ? "0" : out;
}

TopLayout TopLayout::of(const SimplicialComplex& k, int degree, int coeff_cap) {
    TopLayout layout;
    layout.tops = k.maximal_simplices();
    for (const Simplex& s : layout.tops) {
        layout.offsets.push_back(layout.total);
        layout.total += static_cast<Index>(monomial_keys(s.dim(), degree, coeff_cap).size());
    }
    return layout;
}

PsBasis ps_basis(const SimplicialComplex& k, int p, int D) {
    PsBasis basis;
    basis.complex = k;
    basis.degree = p;
    basis.coeff_cap = D;
    basis.layout = TopLayout::of(k, p, D);
    const auto& tops = basis.layout.tops;

    // One constraint block per unordered pair of maximal simplices with a
    // shared face: both pullbacks to it must agree.
    struct PairBlock {
        std::size_t a, b;
        Simplex face;
        Index row_offset;
        Index row_count;
    };
    std::vector<PairBlock> blocks;
    Index total_rows = 0;
    for (std::size_t a = 0; a < tops.size(); ++a) {
        for (std::size_t b = a + 1; b < tops.size(); ++b) {
            auto common = shared_face(tops[a], tops[b]);
            if (!common) continue;
            Index rows = static_cast<Index>(monomial_keys(common->dim(), p, D).size());
            if (rows == 0) continue;
            blocks.push_back({a, b, *common, total_rows, rows});
            total_rows += rows;
        }
    }

    SparseMatrix constraints(total_rows, basis.layout.total);
    using Entry = std::tuple<Index, Index, Rational>;
    std::vector<std::vector<Entry>> block_entries(blocks.size());
    const auto n_blocks = static_cast<std::ptrdiff_t>(blocks.size());
#pragma omp parallel for schedule(dynamic) if (n_blocks >= 8)
    for (std::ptrdiff_t bi = 0; bi < n_blocks; ++bi) {
        const PairBlock& blk = blocks[static_cast<std::size_t>(bi)];
        auto& entries = block_entries[static_cast<std::size_t>(bi)];
        for (int side = 0; side < 2; ++side) {
            const std::size_t t = side == 0 ? blk.a : blk.b;
            const Rational sign = side == 0 ? 1 : -1;
            const Simplex& top = tops[t];
            FaceInclusion inc(blk.face, top);
            auto keys = monomial_keys(top.dim(), p, D);
            for (std::size_t c = 0; c < keys.size(); ++c) {
                PolyForm mono = PolyForm::monomial(top.dim(), keys[c].exponents, keys[c].dt, Rational(1));
                auto coords = polyform_coordinates(pullback(inc, mono), D);
                for (std::size_t r = 0; r < coords.size(); ++r) {
                    if (is_zero(coords[r])) continue;
                    entries.emplace_back(blk.row_offset + static_cast<Index>(r),
                                         basis.layout.offsets[t] + static_cast<Index>(c),
                                         sign * coords[r]);
                }
            }
        }
    }
    for (const auto& entries : block_entries)
        for (const auto& [r, c, v] : entries) constraints.add(r, c, v);

    auto kernel = kernel_basis(constraints);
    basis.embedding = from_columns(basis.layout.total, kernel);

    for (const auto& vec : kernel) {
        PiecewiseForm elem(k, p);
        // top components straight from the coordinates
        for (std::size_t t = 0; t < tops.size(); ++t) {
            auto keys = monomial_keys(tops[t].dim(), p, D);
            std::vector<Rational> local(keys.size());
            for (std::size_t i = 0; i < keys.size(); ++i)
                local[i] = vec[static_cast<std::size_t>(basis.layout.offsets[t]) + i];
            elem.set_component(tops[t], polyform_from_coordinates(tops[t].dim(), p, D, local));
        }
        // everything else by pullback from the first maximal simplex containing it
        for (int d = 0; d <= k.dim(); ++d) {
            for (const Simplex& s : k.simplices(d)) {
                auto is_max =
                    std::find(tops.begin(), tops.end(), s) != tops.end();
                if (is_max) continue;
                for (const Simplex& top : tops) {
                    if (!top.contains(s)) continue;
                    elem.set_component(s, pullback(FaceInclusion(s, top), elem.component(top)));
                    break;
                }
            }
        }
        basis.elements.push_back(std::move(elem));
    }
    return basis;
}

std::vector<Rational> stacked_coordinates(const PsBasis& basis,
                                          const std::map<Simplex, PolyForm>& top_components) {
    std::vector<Rational> out(static_cast<std::size_t>(basis.layout.total), Rational(0));
    for (std::size_t t = 0; t < basis.layout.tops.size(); ++t) {
        const Simplex& top = basis.layout.tops[t];
        auto it = top_components.find(top);
        if (it == top_components.end()) throw input_error("missing component on maximal simplex");
        auto coords = polyform_coordinates(it->second, basis.coeff_cap);
        for (std::size_t i = 0; i < coords.size(); ++i)
            out[static_cast<std::size_t>(basis.layout.offsets[t]) + i] = coords[i];
    }
    return out;
}

namespace {

// Express stacked coordinate columns in a basis; the columns must lie in its
// span (anything facet-compatible does).
SparseMatrix express_in_basis(const PsBasis& basis, const SparseMatrix& stacked, const char* what) {
    auto sol = solve_many(basis.embedding, stacked);
    if (!sol) throw internal_error(std::string(what) + ": image not expressible in the target basis");
    return *sol;
}

} // namespace

SparseMatrix ps_differential_matrix(const PsBasis& src, const PsBasis& dst) {
    if (dst.degree != src.degree + 1) throw input_error("ps_differential: degree mismatch");
    if (!(dst.complex == src.complex)) throw input_error("ps_differential: complex mismatch");
    SparseMatrix stacked(dst.layout.total, src.dimension());
    for (Index e = 0; e < src.dimension(); ++e) {
        std::map<Simplex, PolyForm> dtops;
        for (const Simplex& top : src.layout.tops)
            dtops.emplace(top, differential(src.elements[static_cast<std::size_t>(e)].component(top)));
        stacked.set_column(e, stacked_coordinates(dst, dtops));
    }
    return express_in_basis(dst, stacked, "ps_differential");
}

SparseMatrix ps_differential(const SimplicialComplex& k, int p, int D) {
    return ps_differential_matrix(ps_basis(k, p, D), ps_basis(k, p + 1, D));
}

int coefficient_cap(int D, int p) { return D + 1 - p; }

std::vector<PsBasis> ps_bases_of(const SimplicialComplex& k, int D, int pmax) {
    if (D < 0) throw input_error("negative coefficient cap");
    if (pmax < 0) pmax = std::max(k.dim(), 0);
    std::vector<PsBasis> bases;
    for (int p = 0; p <= pmax; ++p) bases.push_back(ps_basis(k, p, coefficient_cap(D, p)));
    return bases;
}

FiniteComplex ps_complex_of(const SimplicialComplex& k, int D, int pmax) {
    auto bases = ps_bases_of(k, D, pmax);
    FiniteComplex c;
    for (const auto& b : bases) c.dims.push_back(b.dimension());
    for (std::size_t p = 0; p + 1 < bases.size(); ++p)
        c.diff.push_back(ps_differential_matrix(bases[p], bases[p + 1]));
    return c;
}

BettiTable ps_betti(const SimplicialComplex& k, int D, int pmax, ExecutionPolicy policy) {
    return betti(ps_complex_of(k, D, pmax), policy);
}

BettiTable ps_betti(const SimplicialComplex& k, int D, ExecutionPolicy policy) {
    return ps_betti(k, D, -1, policy);
}

SparseMatrix integration_matrix(const PsBasis& basis) {
    const auto& cells = basis.complex.simplices(basis.degree);
    SparseMatrix m(static_cast<Index>(cells.size()), basis.dimension());
    for (Index r = 0; r < static_cast<Index>(cells.size()); ++r)
        for (Index e = 0; e < basis.dimension(); ++e)
            m.set(r, e,
                  integrate(basis.elements[static_cast<std::size_t>(e)].component(
                      cells[static_cast<std::size_t>(r)])));
    return m;
}

SparseMatrix integration_map(const SimplicialComplex& k, int p, int D) {
    return integration_matrix(ps_basis(k, p, D));
}

SparseMatrix whitney_matrix(const PsBasis& basis) {
    if (basis.coeff_cap < 1) throw input_error("whitney_matrix needs coefficient cap >= 1");
    const auto& cells = basis.complex.simplices(basis.degree);
    SparseMatrix stacked(basis.layout.total, static_cast<Index>(cells.size()));
    for (Index c = 0; c < static_cast<Index>(cells.size()); ++c) {
        const Simplex& rho = cells[static_cast<std::size_t>(c)];
        std::map<Simplex, PolyForm> tops;
        for (const Simplex& top : basis.layout.tops) {
            if (top.contains(rho)) {
                FaceInclusion inc(rho, top);
                tops.emplace(top, whitney(top.dim(), inc.positions));
            } else {
                tops.emplace(top, PolyForm(top.dim(), basis.degree));
            }
        }
        stacked.set_column(c, stacked_coordinates(basis, tops));
    }
    return express_in_basis(basis, stacked, "whitney_map");
}

SparseMatrix whitney_map(const SimplicialComplex& k, int p) { return whitney_matrix(ps_basis(k, p, 1)); }

SparseMatrix restriction_matrix(const PsBasis& from, const PsBasis& to) {
    if (from.degree != to.degree) throw input_error("restriction: degree mismatch");
    if (!to.complex.is_subcomplex_of(from.complex)) throw input_error("restriction: not a subcomplex");
    SparseMatrix stacked(to.layout.total, from.dimension());
    for (Index e = 0; e < from.dimension(); ++e) {
        std::map<Simplex, PolyForm> tops;
        for (const Simplex& top : to.layout.tops)
            tops.emplace(top, from.elements[static_cast<std::size_t>(e)].component(top));
        stacked.set_column(e, stacked_coordinates(to, tops));
    }
    return express_in_basis(to, stacked, "restriction");
}

SparseMatrix restriction_map(const SimplicialComplex& k, const SimplicialComplex& l, int p, int D) {
    return restriction_matrix(ps_basis(k, p, D), ps_basis(l, p, D));
}

} // namespace pwf
