#include <doctest.h>

#include "pwforms/errors.hpp"
#include "pwforms/json_io.hpp"
#include "pwforms/mayer_vietoris.hpp"
#include "pwforms/piecewise.hpp"

using namespace pwf;

namespace {

SimplicialComplex circle() { return SimplicialComplex::from_top_simplices({{0, 1}, {0, 2}, {1, 2}}); }

MVSetup circle_split(const LieAlgebra& g, int D, int pmax) {
    auto k = circle();
    return make_mv_setup(k, subcomplex(k, {{0, 1}, {1, 2}}), subcomplex(k, {{0, 2}}), g, D, pmax);
}

} // namespace

TEST_SUITE("mayer_vietoris") {

TEST_CASE("setup validation") {
    auto k = circle();
    CHECK_THROWS_AS(make_mv_setup(k, subcomplex(k, {{0, 1}}), subcomplex(k, {{0, 2}}),
                                  LieAlgebra::abelian(0), 1),
                    input_error);
    MVSetup s = circle_split(LieAlgebra::abelian(0), 1, 1);
    CHECK(s.W.simplices(0).size() == 2);
    CHECK(s.W.dim() == 0);
}

TEST_CASE("degenerate cover K1 = K2 = K") {
    auto k = circle();
    MVSetup s = make_mv_setup(k, k, k, LieAlgebra::abelian(0), 1, 1);
    MVSpaces spaces = build_mv_spaces(s);
    for (int p = 0; p <= 2; ++p) {
        auto [i, j] = mv_short_sequence(spaces, p);
        CHECK((j * i).is_zero());
        MVDegreeReport rep = mv_degree_report(spaces, p);
        CHECK(rep.exact());
    }
    MVReport report = mv_exactness_report(s);
    CHECK(report.all_short_exact(2));
    CHECK(report.all_les_exact());
}

TEST_CASE("circle split into two arcs, trivial coefficients") {
    MVSetup s = circle_split(LieAlgebra::abelian(0), 1, 1);
    MVSpaces spaces = build_mv_spaces(s);

    MVDegreeReport r0 = mv_degree_report(spaces, 0);
    CHECK(r0.exact());
    CHECK(r0.dim_W == 2);
    CHECK(r0.rank_j == 2);
    MVDegreeReport r1 = mv_degree_report(spaces, 1);
    CHECK(r1.exact());

    ConnectingResult con = connecting_homomorphism(spaces, 0);
    REQUIRE(con.matrix.has_value());
    CHECK(con.well_defined);
    CHECK(rank(*con.matrix) == 1);
    CHECK(con.matrix->rows() == 1); // dim H^1(circle) = 1
    CHECK(con.matrix->cols() == 2); // dim H^0(two points) = 2

    MVReport report = mv_exactness_report(s);
    CHECK(report.all_short_exact(s.pmax + 1));
    CHECK(report.all_les_exact());
    CHECK(!report.truncation_obstruction);
}

TEST_CASE("path split at the middle vertex: H^1 terms vanish") {
    auto path = SimplicialComplex::from_top_simplices({{0, 1}, {1, 2}});
    MVSetup s = make_mv_setup(path, subcomplex(path, {{0, 1}}), subcomplex(path, {{1, 2}}),
                              LieAlgebra::abelian(0), 1, 1);
    MVSpaces spaces = build_mv_spaces(s);
    CHECK(cohomology_basis(spaces.cK, 1).dim() == 0);
    CHECK(cohomology_basis(spaces.cMid, 1).dim() == 0);
    MVReport report = mv_exactness_report(s);
    CHECK(report.all_short_exact(s.pmax + 1));
    CHECK(report.all_les_exact());
}

TEST_CASE("empty intersection") {
    auto k = SimplicialComplex::from_top_simplices({{0, 1}, {2, 3}});
    MVSetup s = make_mv_setup(k, subcomplex(k, {{0, 1}}), subcomplex(k, {{2, 3}}),
                              LieAlgebra::abelian(0), 1, 1);
    CHECK(s.W.empty());
    MVSpaces spaces = build_mv_spaces(s);
    MVDegreeReport rep = mv_degree_report(spaces, 0);
    CHECK(rep.dim_W == 0);
    CHECK(rep.exact());
    MVReport report = mv_exactness_report(s);
    CHECK(report.all_les_exact());
}

TEST_CASE("circle split with sl2 coefficients") {
    MVSetup s = circle_split(LieAlgebra::sl2(), 1, 4);
    MVReport report = mv_exactness_report(s);
    CHECK(report.all_short_exact(s.pmax + 1));
    CHECK(report.all_les_exact());
    REQUIRE(!report.connecting.empty());
    CHECK(report.connecting[0].rank == 1);
}

TEST_CASE("connecting map is natural in the truncation, via the integration map") {
    // compare the connecting maps at D and D+1 through the simplicial model
    auto to_simplicial = [](const MVSetup& s, const MVSpaces& spaces) {
        // H^0(W) and H^1(K) mapped by integration into simplicial cohomology
        PsBasis w0 = ps_basis(s.W, 0, coefficient_cap(s.D, 0));
        PsBasis k1 = ps_basis(s.K, 1, coefficient_cap(s.D, 1));
        SparseMatrix iw = integration_matrix(w0);
        SparseMatrix ik = integration_matrix(k1);

        CohomologyBasis hw = cohomology_basis(spaces.cW, 0);
        CohomologyBasis hk = cohomology_basis(spaces.cK, 1);
        CohomologyBasis hw_s = cohomology_basis(simplicial_complex_of(s.W), 0);
        CohomologyBasis hk_s = cohomology_basis(simplicial_complex_of(s.K), 1);

        SparseMatrix sw = express_classes(hw_s, iw * hw.reps);
        SparseMatrix sk = express_classes(hk_s, ik * hk.reps);
        auto con = connecting_homomorphism(spaces, 0);
        REQUIRE(con.matrix.has_value());
        // S_K . connecting . S_W^{-1}
        auto sw_inv = solve_many(sw, SparseMatrix::identity(sw.cols()));
        REQUIRE(sw_inv.has_value());
        return sk * *con.matrix * *sw_inv;
    };

    MVSetup s1 = circle_split(LieAlgebra::abelian(0), 1, 1);
    MVSetup s2 = circle_split(LieAlgebra::abelian(0), 2, 1);
    SparseMatrix m1 = to_simplicial(s1, build_mv_spaces(s1));
    SparseMatrix m2 = to_simplicial(s2, build_mv_spaces(s2));
    CHECK(m1 == m2);
}

TEST_CASE("report serialization carries the cover model note") {
    MVSetup s = circle_split(LieAlgebra::abelian(0), 1, 1);
    MVReport report = mv_exactness_report(s);
    Json j = mv_report_to_json(report);
    CHECK(j["cover_model"] == "closed-subcomplex");
    CHECK(j["short_sequences"].size() == report.degrees.size());
    std::string table = mv_report_to_table(report);
    CHECK(table.find("closed-subcomplex") != std::string::npos);
}

} // TEST_SUITE
