#include <doctest.h>

#include "pwforms/errors.hpp"
#include "pwforms/json_io.hpp"
#include "pwforms/lie_algebra.hpp"

using namespace pwf;

TEST_SUITE("lie_algebra") {

TEST_CASE("jacobi validation") {
    CHECK(!LieAlgebra::abelian(4).validate().has_value());
    CHECK(!LieAlgebra::sl2().validate().has_value());
    CHECK(!LieAlgebra::heisenberg3().validate().has_value());

    LieAlgebra bad(3);
    bad.set_bracket(0, 1, 2, 1);
    bad.set_bracket(0, 2, 1, 1);
    bad.set_bracket(1, 2, 1, 1);
    auto v = bad.validate();
    REQUIRE(v.has_value());
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK(v->k == 2);
}

TEST_CASE("ce differential matrices") {
    CHECK(ce_differential(LieAlgebra::abelian(3), 1).is_zero());
    CHECK(rank(ce_differential(LieAlgebra::sl2(), 1)) == 3);
    CHECK(rank(ce_differential(LieAlgebra::heisenberg3(), 1)) == 1);
}

TEST_CASE("ce betti oracles") {
    CHECK(ce_betti(LieAlgebra::abelian(2)) == BettiTable{1, 2, 1});
    CHECK(ce_betti(LieAlgebra::abelian(3)) == BettiTable{1, 3, 3, 1});
    CHECK(ce_betti(LieAlgebra::sl2()) == BettiTable{1, 0, 0, 1});
    CHECK(ce_betti(LieAlgebra::heisenberg3()) == BettiTable{1, 2, 2, 1});
}

TEST_CASE("poincare symmetry and top degree for the shipped unimodular examples") {
    for (const auto& g : {LieAlgebra::abelian(2), LieAlgebra::heisenberg3(), LieAlgebra::sl2()}) {
        BettiTable b = ce_betti(g);
        const std::size_t m = b.size() - 1;
        for (std::size_t q = 0; q <= m; ++q) CHECK(b[q] == b[m - q]);
        CHECK(b[m] == 1);
    }
}

TEST_CASE("jacobi violation breaks d.d = 0 when forced") {
    LieAlgebra bad(3);
    bad.set_bracket(0, 1, 2, 1);
    bad.set_bracket(0, 2, 1, 1);
    bad.set_bracket(1, 2, 1, 1);

    CHECK_THROWS_AS(ce_differential(bad, 1), validation_error);
    CHECK_THROWS_AS(ce_betti(bad), validation_error);

    FiniteComplex forced = ce_complex_of(bad, /*force=*/true);
    CHECK(!forced.is_complex());
}

TEST_CASE("json round trip") {
    Json j = {{"dim", 3},
              {"brackets",
               {{{"i", 0}, {"j", 1}, {"coeffs", {{"1", "2"}}}},
                {{"i", 0}, {"j", 2}, {"coeffs", {{"2", "-2"}}}},
                {{"i", 1}, {"j", 2}, {"coeffs", {{"0", "1"}}}}}}};
    CHECK(lie_algebra_from_json(j) == LieAlgebra::sl2());

    CHECK_THROWS_AS(lie_algebra_from_json(Json{{"dim", 2}, {"brackets", {{{"i", 1}, {"j", 0}, {"coeffs", Json::object()}}}}}),
                    input_error);
    CHECK_THROWS_AS(lie_algebra_from_json(Json{{"dim", "x"}}), input_error);
    Json bad_scalar = {{"dim", 2}, {"brackets", {{{"i", 0}, {"j", 1}, {"coeffs", {{"0", "1/0"}}}}}}};
    CHECK_THROWS_AS(lie_algebra_from_json(bad_scalar), input_error);
}

} // TEST_SUITE
