#include "pwforms/mayer_vietoris.hpp"

#include <algorithm>

#include "pwforms/errors.hpp"

namespace pwf {

MVSetup make_mv_setup(const SimplicialComplex& k, const SimplicialComplex& k1,
                      const SimplicialComplex& k2, const LieAlgebra& fiber, int D, int pmax) {
    if (!k1.is_subcomplex_of(k) || !k2.is_subcomplex_of(k)) throw input_error("cover piece not a subcomplex");
    if (!(complex_union(k1, k2) == k)) throw input_error("cover pieces do not cover the complex");
    MVSetup s;
    s.K = k;
    s.K1 = k1;
    s.K2 = k2;
    s.W = complex_intersection(k1, k2);
    s.fiber = fiber;
    s.D = D;
    s.pmax = pmax >= 0 ? pmax : std::max(k.dim(), 0) + fiber.dim();
    return s;
}

MVSpaces build_mv_spaces(const MVSetup& setup) {
    // one spare degree beyond the connecting target keeps the top cohomology
    // genuine (the outgoing differential is present)
    const int rmax = setup.pmax + 2;
    TensorModel mK(setup.K, setup.fiber, setup.D, rmax);
    TensorModel m1(setup.K1, setup.fiber, setup.D, rmax);
    TensorModel m2(setup.K2, setup.fiber, setup.D, rmax);
    TensorModel mW(setup.W, setup.fiber, setup.D, rmax);

    MVSpaces spaces;
    spaces.setup = setup;
    spaces.cK = mK.complex();
    spaces.cW = mW.complex();

    FiniteComplex c1 = m1.complex(), c2 = m2.complex();
    spaces.cMid.dims.resize(c1.dims.size());
    for (std::size_t r = 0; r < c1.dims.size(); ++r) spaces.cMid.dims[r] = c1.dims[r] + c2.dims[r];
    for (std::size_t r = 0; r + 1 < c1.dims.size(); ++r)
        spaces.cMid.diff.push_back(block_diag(c1.diff[r], c2.diff[r]));

    for (int r = 0; r <= rmax; ++r) {
        SparseMatrix r1 = tensor_restriction(mK, m1, r);
        SparseMatrix r2 = tensor_restriction(mK, m2, r);
        spaces.map_i.push_back(vstack(r1, r2));
        SparseMatrix r1w = tensor_restriction(m1, mW, r);
        SparseMatrix r2w = tensor_restriction(m2, mW, r);
        spaces.map_j.push_back(hstack(r1w, -r2w));
    }
    return spaces;
}

std::pair<SparseMatrix, SparseMatrix> mv_short_sequence(const MVSpaces& spaces, int p) {
    if (p < 0 || p >= static_cast<int>(spaces.map_i.size())) throw input_error("degree out of range");
    return {spaces.map_i[static_cast<std::size_t>(p)], spaces.map_j[static_cast<std::size_t>(p)]};
}

MVDegreeReport mv_degree_report(const MVSpaces& spaces, int p) {
    auto [i, j] = mv_short_sequence(spaces, p);
    MVDegreeReport rep;
    rep.p = p;
    rep.dim_K = i.cols();
    rep.dim_mid = i.rows();
    rep.dim_W = j.rows();
    rep.ji_zero = (j * i).is_zero();
    rep.rank_i = rank(i);
    rep.rank_j = rank(j);
    rep.i_injective = rep.rank_i == rep.dim_K;
    // with j.i = 0: ker j = im i iff dim ker j = rank i
    rep.middle_exact = rep.ji_zero && (rep.dim_mid - rep.rank_j == rep.rank_i);
    rep.j_surjective = rep.rank_j == rep.dim_W;
    return rep;
}

CohomologyBasis cohomology_basis(const FiniteComplex& c, int p) {
    if (p < 0 || p > c.pmax()) throw input_error("cohomology degree out of range");
    const Index dim = c.dims[static_cast<std::size_t>(p)];

    CohomologyBasis basis;
    basis.space_dim = dim;

    // cocycles: kernel of the outgoing differential (everything at the top)
    std::vector<std::vector<Rational>> z;
    if (p < static_cast<int>(c.diff.size())) {
        z = kernel_basis(c.diff[static_cast<std::size_t>(p)]);
    } else {
        for (Index f = 0; f < dim; ++f) {
            std::vector<Rational> v(static_cast<std::size_t>(dim), Rational(0));
            v[static_cast<std::size_t>(f)] = 1;
            z.push_back(std::move(v));
        }
    }

    // independent coboundaries: pivot columns of the incoming differential
    if (p > 0) {
        const SparseMatrix& din = c.diff[static_cast<std::size_t>(p - 1)];
        auto ech = reduced_row_echelon(din);
        std::vector<std::vector<Rational>> cols;
        for (Index pc : ech.pivot_cols) cols.push_back(din.column(pc));
        basis.boundaries = from_columns(dim, cols);
    } else {
        basis.boundaries = SparseMatrix(dim, 0);
    }

    // greedy completion of the boundaries to a basis of the cocycles
    SparseMatrix accumulated = basis.boundaries;
    Index current_rank = rank(accumulated);
    std::vector<std::vector<Rational>> reps;
    for (const auto& v : z) {
        SparseMatrix candidate(dim, 1);
        candidate.set_column(0, v);
        SparseMatrix next = hstack(accumulated, candidate);
        Index next_rank = rank(next);
        if (next_rank > current_rank) {
            reps.push_back(v);
            accumulated = std::move(next);
            current_rank = next_rank;
        }
    }
    basis.reps = from_columns(dim, reps);
    return basis;
}

SparseMatrix express_classes(const CohomologyBasis& basis, const SparseMatrix& cocycles) {
    auto sol = solve_many(hstack(basis.reps, basis.boundaries), cocycles);
    if (!sol) throw internal_error("express_classes: column is not a cocycle of the target");
    return take_rows(*sol, 0, basis.reps.cols());
}

SparseMatrix induced_map(const CohomologyBasis& src, const CohomologyBasis& dst,
                         const SparseMatrix& chain_map) {
    return express_classes(dst, chain_map * src.reps);
}

namespace {

const SparseMatrix& diff_of(const FiniteComplex& c, int p, SparseMatrix& zero_storage) {
    if (p < static_cast<int>(c.diff.size())) return c.diff[static_cast<std::size_t>(p)];
    zero_storage = SparseMatrix(0, c.dims[static_cast<std::size_t>(p)]);
    return zero_storage;
}

} // namespace

ConnectingResult connecting_homomorphism(const MVSpaces& spaces, int p) {
    for (int deg : {p, p + 1}) {
        MVDegreeReport rep = mv_degree_report(spaces, deg);
        if (!rep.ji_zero || !rep.i_injective || !rep.middle_exact)
            throw input_error("connecting_homomorphism: short sequence not exact at degree " +
                              std::to_string(deg));
    }

    CohomologyBasis hw = cohomology_basis(spaces.cW, p);
    CohomologyBasis hk = cohomology_basis(spaces.cK, p + 1);
    const SparseMatrix& j = spaces.map_j[static_cast<std::size_t>(p)];
    const SparseMatrix& i_next = spaces.map_i[static_cast<std::size_t>(p + 1)];
    SparseMatrix zero_a, zero_b;
    const SparseMatrix& d_mid = diff_of(spaces.cMid, p, zero_a);

    ConnectingResult result;
    SparseMatrix out(hk.dim(), hw.dim());
    for (Index col = 0; col < hw.dim(); ++col) {
        auto lift = solve(j, hw.reps.column(col));
        if (!lift) {
            result.obstruction =
                "truncation obstruction at D=" + std::to_string(spaces.setup.D) + ", degree " +
                std::to_string(p);
            return result;
        }
        auto dy = d_mid.apply(*lift);
        SparseMatrix rhs(i_next.rows(), 1);
        rhs.set_column(0, dy);
        auto x = solve_many(i_next, rhs);
        if (!x) throw internal_error("connecting: d(lift) not in the image of i despite exactness");
        out.set_column(col, express_classes(hk, *x).column(0));
    }

    // independence of the lift: the kernel of j must connect to zero classes
    bool well_defined = true;
    for (const auto& u : kernel_basis(j)) {
        auto du = d_mid.apply(u);
        SparseMatrix rhs(i_next.rows(), 1);
        rhs.set_column(0, du);
        auto x = solve_many(i_next, rhs);
        if (!x) throw internal_error("connecting: kernel image not liftable");
        SparseMatrix cls = express_classes(hk, *x);
        if (!cls.is_zero()) well_defined = false;
    }

    result.matrix = std::move(out);
    result.well_defined = well_defined;
    return result;
}

std::vector<LesNodeReport> les_exactness_check(const MVSpaces& spaces, int pmax) {
    std::vector<CohomologyBasis> hK, hMid, hW;
    for (int p = 0; p <= pmax + 1; ++p) {
        hK.push_back(cohomology_basis(spaces.cK, p));
        hMid.push_back(cohomology_basis(spaces.cMid, p));
        hW.push_back(cohomology_basis(spaces.cW, p));
    }

    std::vector<SparseMatrix> alpha, beta, delta;
    for (int p = 0; p <= pmax + 1; ++p) {
        alpha.push_back(induced_map(hK[static_cast<std::size_t>(p)], hMid[static_cast<std::size_t>(p)],
                                    spaces.map_i[static_cast<std::size_t>(p)]));
        beta.push_back(induced_map(hMid[static_cast<std::size_t>(p)], hW[static_cast<std::size_t>(p)],
                                   spaces.map_j[static_cast<std::size_t>(p)]));
    }
    for (int p = 0; p <= pmax; ++p) {
        auto con = connecting_homomorphism(spaces, p);
        if (!con.matrix)
            throw internal_error("les_exactness_check: " + con.obstruction);
        delta.push_back(*con.matrix);
    }

    std::vector<LesNodeReport> nodes;
    auto push = [&](int p, const std::string& name, Index dim, Index rank_in, Index rank_out) {
        nodes.push_back({p, name, dim, rank_in, rank_out, rank_in + rank_out == dim});
    };
    for (int p = 0; p <= pmax; ++p) {
        const auto sp = static_cast<std::size_t>(p);
        Index in_K = p > 0 ? rank(delta[sp - 1]) : 0;
        push(p, "H^" + std::to_string(p) + "(K)", hK[sp].dim(), in_K, rank(alpha[sp]));
        push(p, "H^" + std::to_string(p) + "(K1+K2)", hMid[sp].dim(), rank(alpha[sp]), rank(beta[sp]));
        push(p, "H^" + std::to_string(p) + "(W)", hW[sp].dim(), rank(beta[sp]), rank(delta[sp]));
    }
    return nodes;
}

bool MVReport::all_short_exact(int up_to) const {
    for (const auto& d : degrees)
        if (d.p <= up_to && !d.exact()) return false;
    return true;
}

bool MVReport::all_les_exact() const {
    return !les.empty() && std::all_of(les.begin(), les.end(), [](const LesNodeReport& n) { return n.exact; });
}

MVReport mv_exactness_report(const MVSetup& setup) {
    MVSpaces spaces = build_mv_spaces(setup);
    MVReport report;
    report.D = setup.D;
    report.pmax = setup.pmax;
    report.fiber_dim = setup.fiber.dim();

    for (int p = 0; p <= setup.pmax + 1; ++p) report.degrees.push_back(mv_degree_report(spaces, p));

    bool short_exact_through = true;
    for (const auto& d : report.degrees)
        if (!d.exact()) short_exact_through = false;
    if (!short_exact_through) {
        report.truncation_obstruction = true;
        return report;
    }

    for (int p = 0; p <= setup.pmax; ++p) {
        auto con = connecting_homomorphism(spaces, p);
        ConnectingReportEntry entry;
        entry.p = p;
        entry.dim_source = cohomology_basis(spaces.cW, p).dim();
        entry.dim_target = cohomology_basis(spaces.cK, p + 1).dim();
        if (con.matrix) {
            entry.rank = rank(*con.matrix);
            entry.well_defined = con.well_defined;
        } else {
            entry.obstruction = con.obstruction;
            report.truncation_obstruction = true;
        }
        report.connecting.push_back(std::move(entry));
    }
    if (report.truncation_obstruction) return report;

    report.les = les_exactness_check(spaces, setup.pmax);
    return report;
}

std::vector<MVReport> mv_report_with_retry(const MVSetup& setup) {
    std::vector<MVReport> reports;
    reports.push_back(mv_exactness_report(setup));
    if (reports.back().truncation_obstruction) {
        MVSetup retry = setup;
        retry.D = setup.D + 1;
        reports.push_back(mv_exactness_report(retry));
    }
    return reports;
}

} // namespace pwf
