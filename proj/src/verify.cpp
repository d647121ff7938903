#include "pwforms/verify.hpp"

#include <sstream>

#include "pwforms/algebroid.hpp"
#include "pwforms/errors.hpp"
#include "pwforms/json_io.hpp"
#include "pwforms/lie_algebra.hpp"
#include "pwforms/mayer_vietoris.hpp"
#include "pwforms/piecewise.hpp"
#include "pwforms/sampling.hpp"
#include "pwforms/simplicial.hpp"

namespace pwf {

namespace {

struct NamedComplex {
    std::string name;
    SimplicialComplex k;
};

struct NamedAlgebra {
    std::string name;
    LieAlgebra g;
};

std::vector<NamedComplex> shipped_complexes() {
    return {
        {"delta1", SimplicialComplex::from_top_simplices({{0, 1}})},
        {"delta2", SimplicialComplex::from_top_simplices({{0, 1, 2}})},
        {"delta3", SimplicialComplex::from_top_simplices({{0, 1, 2, 3}})},
        {"boundary_delta2", SimplicialComplex::from_top_simplices({{0, 1}, {0, 2}, {1, 2}})},
        {"boundary_delta3",
         SimplicialComplex::from_top_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})},
        {"path", SimplicialComplex::from_top_simplices({{0, 1}, {1, 2}})},
    };
}

std::vector<NamedAlgebra> shipped_algebras() {
    return {
        {"abelian2", LieAlgebra::abelian(2)},
        {"h3", LieAlgebra::heisenberg3()},
        {"sl2", LieAlgebra::sl2()},
    };
}

std::string table(const BettiTable& b) { return betti_to_string(b); }

// ---- criterion 1: d.d = 0 everywhere -----------------------------------

CriterionResult criterion_dd_zero(ExecutionPolicy) {
    CriterionResult res{1, "differential soundness (d.d = 0)", true, ""};
    int checked = 0;

    // per-simplex polynomial complexes
    for (int n = 0; n <= 3; ++n) {
        for (int D = 0; D <= 2; ++D) {
            std::vector<SparseMatrix> mats;
            for (int p = 0; p <= n; ++p) {
                auto src = monomial_basis(n, p, D);
                auto dst = monomial_keys(n, p + 1, D);
                SparseMatrix m(static_cast<Index>(dst.size()), static_cast<Index>(src.size()));
                for (Index c = 0; c < static_cast<Index>(src.size()); ++c) {
                    auto coords = polyform_coordinates(differential(src[static_cast<std::size_t>(c)]), D);
                    for (std::size_t r = 0; r < coords.size(); ++r)
                        m.set(static_cast<Index>(r), c, coords[r]);
                }
                mats.push_back(std::move(m));
            }
            for (std::size_t p = 0; p + 1 < mats.size(); ++p) {
                ++checked;
                if (!(mats[p + 1] * mats[p]).is_zero()) {
                    res.pass = false;
                    res.detail = "per-simplex d.d != 0 at n=" + std::to_string(n);
                    return res;
                }
            }
        }
    }

    auto complexes = shipped_complexes();
    auto algebras = shipped_algebras();

    for (const auto& nc : complexes) {
        for (int D = 0; D <= 2; ++D) {
            ++checked;
            if (!ps_complex_of(nc.k, D, std::max(nc.k.dim(), 0)).is_complex()) {
                res.pass = false;
                res.detail = "piecewise d.d != 0 on " + nc.name + " at D=" + std::to_string(D);
                return res;
            }
        }
    }

    for (const auto& na : algebras) {
        ++checked;
        if (!ce_complex_of(na.g).is_complex()) {
            res.pass = false;
            res.detail = "CE d.d != 0 for " + na.name;
            return res;
        }
    }

    for (const auto& nc : complexes) {
        for (const auto& na : algebras) {
            for (int D = 0; D <= 2; ++D) {
                ++checked;
                TensorModel model(nc.k, na.g, D);
                if (!model.complex().is_complex()) {
                    res.pass = false;
                    res.detail = "tensor d.d != 0 on " + nc.name + " x " + na.name + " at D=" +
                                 std::to_string(D);
                    return res;
                }
            }
        }
    }

    res.detail = std::to_string(checked) + " complexes checked at D in {0,1,2}";
    return res;
}

// ---- criterion 2: piecewise cohomology matches the simplicial oracle ----

CriterionResult criterion_sullivan(ExecutionPolicy policy) {
    CriterionResult res{2, "piecewise vs simplicial cohomology + integration certificate", true, ""};
    const std::map<std::string, BettiTable> frozen = {
        {"delta1", {1, 0}},          {"delta2", {1, 0, 0}},          {"delta3", {1, 0, 0, 0}},
        {"boundary_delta2", {1, 1}}, {"boundary_delta3", {1, 0, 1}}, {"path", {1, 0}},
    };

    for (const auto& nc : shipped_complexes()) {
        BettiTable simp = simplicial_betti(nc.k, policy);
        if (simp != frozen.at(nc.name)) {
            res.pass = false;
            res.detail = nc.name + ": simplicial betti " + table(simp) + " != frozen " +
                         table(frozen.at(nc.name));
            return res;
        }
        for (int D = 1; D <= 2; ++D) {
            BettiTable ps = ps_betti(nc.k, D, -1, policy);
            if (ps != simp) {
                res.pass = false;
                res.detail = nc.name + " at D=" + std::to_string(D) + ": ps betti " + table(ps) +
                             " != simplicial " + table(simp);
                return res;
            }
            // Stokes: coboundary . I = I . d as matrices, and I.W = id
            for (int p = 0; p <= nc.k.dim(); ++p) {
                PsBasis basis = ps_basis(nc.k, p, D);
                SparseMatrix I_p = integration_matrix(basis);
                if (p < nc.k.dim()) {
                    PsBasis next = ps_basis(nc.k, p + 1, D);
                    SparseMatrix lhs = coboundary_matrix(nc.k, p) * I_p;
                    SparseMatrix rhs = integration_matrix(next) * ps_differential_matrix(basis, next);
                    if (!(lhs == rhs)) {
                        res.pass = false;
                        res.detail = nc.name + ": Stokes identity fails at p=" + std::to_string(p) +
                                     ", D=" + std::to_string(D);
                        return res;
                    }
                }
                SparseMatrix W = whitney_matrix(basis);
                if (!(I_p * W == SparseMatrix::identity(static_cast<Index>(nc.k.simplices(p).size())))) {
                    res.pass = false;
                    res.detail = nc.name + ": I.W != id at p=" + std::to_string(p) + ", D=" +
                                 std::to_string(D);
                    return res;
                }
            }
        }
    }
    res.detail = "6 complexes at D in {1,2}: betti match, Stokes identity, I.W = id";
    return res;
}

// ---- criterion 3: Kunneth -----------------------------------------------

CriterionResult criterion_kunneth(ExecutionPolicy policy) {
    CriterionResult res{3, "tensor cohomology equals the Betti convolution", true, ""};
    const int D = 2;
    const std::map<std::string, BettiTable> frozen = {
        {"boundary_delta2 x sl2", {1, 1, 0, 1, 1}},
        {"delta2 x h3", {1, 2, 2, 1, 0, 0}},
    };

    for (const auto& nc : shipped_complexes()) {
        BettiTable base = ps_betti(nc.k, D, -1, policy);
        for (const auto& na : shipped_algebras()) {
            TensorModel model(nc.k, na.g, D);
            BettiTable got = algebroid_betti(model, policy);
            BettiTable expect = betti_convolution(base, ce_betti(na.g, policy), model.rmax());
            if (got != expect) {
                res.pass = false;
                res.detail = nc.name + " x " + na.name + ": tensor betti " + table(got) +
                             " != convolution " + table(expect);
                return res;
            }
            auto it = frozen.find(nc.name + " x " + na.name);
            if (it != frozen.end() && got != it->second) {
                res.pass = false;
                res.detail = nc.name + " x " + na.name + ": " + table(got) + " != frozen " +
                             table(it->second);
                return res;
            }
        }
    }
    res.detail = "18 pairs at D=2, ranks vs convolution";
    return res;
}

// ---- criterion 4: algebroid axioms on random sections -------------------

CriterionResult criterion_axioms(std::uint64_t seed, ExecutionPolicy) {
    CriterionResult res{4, "bracket axioms on random sections", true, ""};
    const int n = 2; // sections over the top simplex of delta2
    int algebra_index = 0;
    for (const auto& na : shipped_algebras()) {
        Sampler sampler(seed * 1000 + static_cast<std::uint64_t>(algebra_index++));
        std::vector<Section> sections;
        for (int i = 0; i < 200; ++i) sections.push_back(sampler.section(n, na.g.dim(), 2));

        for (std::size_t i = 0; i + 1 < sections.size(); i += 2) {
            const Section& a = sections[i];
            const Section& b = sections[i + 1];
            Section ab = section_bracket(na.g, a, b);
            Section ba = section_bracket(na.g, b, a);
            if (!(section_add(ab, ba) == Section(n, std::vector<PolyForm>(2, PolyForm(n, 0)),
                                                  std::vector<PolyForm>(
                                                      static_cast<std::size_t>(na.g.dim()), PolyForm(n, 0))))) {
                res.pass = false;
                res.detail = na.name + ": antisymmetry fails at pair " + std::to_string(i);
                return res;
            }
        }
        for (std::size_t i = 0; i + 2 < sections.size(); i += 3) {
            const Section &a = sections[i], &b = sections[i + 1], &c = sections[i + 2];
            Section s = section_add(
                section_bracket(na.g, section_bracket(na.g, a, b), c),
                section_add(section_bracket(na.g, section_bracket(na.g, b, c), a),
                            section_bracket(na.g, section_bracket(na.g, c, a), b)));
            for (const auto& comp : s.vec)
                if (!comp.is_zero()) {
                    res.pass = false;
                    res.detail = na.name + ": Jacobi fails at triple " + std::to_string(i);
                    return res;
                }
            for (const auto& comp : s.fib)
                if (!comp.is_zero()) {
                    res.pass = false;
                    res.detail = na.name + ": Jacobi fails at triple " + std::to_string(i);
                    return res;
                }
        }
        for (std::size_t i = 0; i + 1 < sections.size(); i += 2) {
            const Section& xi = sections[i];
            const Section& eta = sections[i + 1];
            PolyForm f = sampler.polynomial(n, 2);
            // [xi, f.eta] = (X.f).eta + f.[xi, eta]
            Section lhs = section_bracket(na.g, xi, scalar_multiply(f, eta));
            Section rhs = section_add(scalar_multiply(directional_derivative(xi.vec, f), eta),
                                      scalar_multiply(f, section_bracket(na.g, xi, eta)));
            if (!(lhs == rhs)) {
                res.pass = false;
                res.detail = na.name + ": Leibniz axiom fails at pair " + std::to_string(i);
                return res;
            }
        }
        // anchor . inject = id on the vector parts
        for (std::size_t i = 0; i < 20; ++i) {
            auto field = sections[i].vec;
            if (!(anchor(inject_field(field, na.g.dim())) == field)) {
                res.pass = false;
                res.detail = na.name + ": anchor section fails";
                return res;
            }
        }
    }
    res.detail = "600 sections: antisymmetry, Jacobi, Leibniz, anchor section";
    return res;
}

// ---- criterion 5: Koszul formula vs tensor differential -----------------

CriterionResult criterion_koszul(std::uint64_t seed, ExecutionPolicy) {
    CriterionResult res{5, "Koszul formula agrees with the tensor differential", true, ""};
    SimplicialComplex delta2 = SimplicialComplex::from_top_simplices({{0, 1, 2}});
    Simplex top({0, 1, 2});

    int algebra_index = 0;
    for (const auto& na : {NamedAlgebra{"h3", LieAlgebra::heisenberg3()},
                           NamedAlgebra{"sl2", LieAlgebra::sl2()}}) {
        TensorModel model(delta2, na.g, 2);
        Sampler sampler(seed * 2000 + static_cast<std::uint64_t>(algebra_index++));
        for (int trial = 0; trial < 50; ++trial) {
            const int r = static_cast<int>(sampler.uniform(0, 2));
            std::vector<Rational> coords;
            for (Index i = 0; i < model.dimension(r); ++i) coords.push_back(sampler.rational(4, 3));
            AlgebroidForm w = algebroid_form_from_coordinates(model, r, coords);
            std::vector<Section> sections;
            for (int i = 0; i <= r; ++i) sections.push_back(sampler.section(2, na.g.dim(), 2));
            KoszulCheckResult check = koszul_check(model, w, top, sections);
            if (!check.equal) {
                res.pass = false;
                res.detail = na.name + ": disagreement at trial " + std::to_string(trial) + ", degree " +
                             std::to_string(r);
                return res;
            }
        }
    }
    res.detail = "100 random forms of degree <= 2 on delta2 with h3 and sl2";
    return res;
}

// ---- criterion 6: Mayer-Vietoris ----------------------------------------

CriterionResult criterion_mv(ExecutionPolicy) {
    CriterionResult res{6, "Mayer-Vietoris short and long exactness", true, ""};

    SimplicialComplex circle = SimplicialComplex::from_top_simplices({{0, 1}, {0, 2}, {1, 2}});
    SimplicialComplex arc1 = SimplicialComplex::from_top_simplices({{0, 1}, {1, 2}});
    SimplicialComplex arc2 = SimplicialComplex::from_top_simplices({{0, 2}});
    SimplicialComplex path = SimplicialComplex::from_top_simplices({{0, 1}, {1, 2}});
    SimplicialComplex edge1 = SimplicialComplex::from_top_simplices({{0, 1}});
    SimplicialComplex edge2 = SimplicialComplex::from_top_simplices({{1, 2}});

    struct Case {
        std::string name;
        SimplicialComplex K, K1, K2;
        bool expect_connecting_rank1;
    };
    std::vector<Case> cases = {
        {"circle-arcs", circle, arc1, arc2, true},
        {"path-split", path, edge1, edge2, false},
    };
    std::vector<NamedAlgebra> coefficients = {{"trivial", LieAlgebra::abelian(0)},
                                              {"sl2", LieAlgebra::sl2()}};

    for (const auto& c : cases) {
        for (const auto& coeff : coefficients) {
            for (int D = 1; D <= 2; ++D) {
                const int pmax = std::max(c.K.dim(), 0) + coeff.g.dim();
                MVSetup setup = make_mv_setup(c.K, c.K1, c.K2, coeff.g, D, pmax);
                MVReport report = mv_exactness_report(setup);
                std::string where = c.name + " / " + coeff.name + " / D=" + std::to_string(D);
                if (!report.all_short_exact(pmax + 1)) {
                    res.pass = false;
                    res.detail = where + ": short exactness fails";
                    return res;
                }
                if (report.truncation_obstruction) {
                    res.pass = false;
                    res.detail = where + ": truncation obstruction";
                    return res;
                }
                if (!report.all_les_exact()) {
                    res.pass = false;
                    res.detail = where + ": long exact sequence fails";
                    return res;
                }
                for (const auto& con : report.connecting)
                    if (!con.well_defined) {
                        res.pass = false;
                        res.detail = where + ": connecting map not well-defined at p=" +
                                     std::to_string(con.p);
                        return res;
                    }
                if (c.expect_connecting_rank1) {
                    if (report.connecting.empty() || report.connecting[0].rank != 1) {
                        res.pass = false;
                        res.detail = where + ": connecting H^0(W) -> H^1(K) rank != 1";
                        return res;
                    }
                }
            }
        }
    }
    res.detail = "2 splits x {trivial, sl2} x D in {1,2}: short + long exact, connecting rank 1";
    return res;
}

// ---- criterion 7: CE oracle ----------------------------------------------

CriterionResult criterion_ce(ExecutionPolicy policy) {
    CriterionResult res{7, "Chevalley-Eilenberg cohomology oracle", true, ""};

    for (int m = 1; m <= 3; ++m) {
        BettiTable got = ce_betti(LieAlgebra::abelian(m), policy);
        BettiTable expect;
        for (int q = 0; q <= m; ++q) expect.push_back(static_cast<Index>(ce_subsets(m, q).size()));
        if (got != expect) {
            res.pass = false;
            res.detail = "abelian(" + std::to_string(m) + "): " + table(got) + " != binomial row";
            return res;
        }
    }
    if (ce_betti(LieAlgebra::sl2(), policy) != BettiTable{1, 0, 0, 1}) {
        res.pass = false;
        res.detail = "sl2 betti != (1,0,0,1)";
        return res;
    }
    if (ce_betti(LieAlgebra::heisenberg3(), policy) != BettiTable{1, 2, 2, 1}) {
        res.pass = false;
        res.detail = "h3 betti != (1,2,2,1)";
        return res;
    }

    // [x0,x1] = x2, [x0,x2] = x1, [x1,x2] = x1 breaks Jacobi at (0,1,2)
    LieAlgebra bad(3);
    bad.set_bracket(0, 1, 2, 1);
    bad.set_bracket(0, 2, 1, 1);
    bad.set_bracket(1, 2, 1, 1);
    auto violation = bad.validate();
    if (!violation || violation->i != 0 || violation->j != 1 || violation->k != 2) {
        res.pass = false;
        res.detail = "Jacobi violation not reported at (0,1,2)";
        return res;
    }
    bool rejected = false;
    try {
        ce_differential(bad, 1);
    } catch (const validation_error&) {
        rejected = true;
    }
    if (!rejected) {
        res.pass = false;
        res.detail = "Jacobi-violating algebra was not rejected";
        return res;
    }
    if (ce_complex_of(bad, /*force=*/true).is_complex()) {
        res.pass = false;
        res.detail = "forced CE complex of a Jacobi violator still satisfies d.d = 0";
        return res;
    }

    res.detail = "abelian binomial rows, sl2 (1,0,0,1), h3 (1,2,2,1), violator rejected and d.d != 0";
    return res;
}

std::string digest(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) out << r.id << ":" << r.pass << ":" << r.name << ":" << r.detail << "\n";
    return out.str();
}

std::vector<CriterionResult> run_once(std::uint64_t seed, ExecutionPolicy policy) {
    std::vector<CriterionResult> results;
    results.push_back(criterion_dd_zero(policy));
    results.push_back(criterion_sullivan(policy));
    results.push_back(criterion_kunneth(policy));
    results.push_back(criterion_axioms(seed, policy));
    results.push_back(criterion_koszul(seed, policy));
    results.push_back(criterion_mv(policy));
    results.push_back(criterion_ce(policy));
    return results;
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, ExecutionPolicy policy) {
    std::vector<CriterionResult> results = run_once(seed, policy);
    std::vector<CriterionResult> rerun = run_once(seed, policy);
    CriterionResult det{8, "determinism of the seeded suite", digest(results) == digest(rerun), ""};
    det.detail = det.pass ? "two runs with the same seed produced identical results"
                          : "reruns with the same seed disagree";
    results.push_back(det);
    return results;
}

} // namespace pwf
