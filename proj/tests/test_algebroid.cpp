#include <doctest.h>

#include "pwforms/algebroid.hpp"
#include "pwforms/errors.hpp"
#include "pwforms/sampling.hpp"

using namespace pwf;

namespace {

SimplicialComplex point() { return SimplicialComplex::from_top_simplices({{0}}); }
SimplicialComplex edge() { return SimplicialComplex::from_top_simplices({{0, 1}}); }
SimplicialComplex triangle() { return SimplicialComplex::from_top_simplices({{0, 1, 2}}); }
SimplicialComplex circle() { return SimplicialComplex::from_top_simplices({{0, 1}, {0, 2}, {1, 2}}); }

Section zero_section(int n, int m) {
    return Section(n, std::vector<PolyForm>(static_cast<std::size_t>(n), PolyForm(n, 0)),
                   std::vector<PolyForm>(static_cast<std::size_t>(m), PolyForm(n, 0)));
}

} // namespace

TEST_SUITE("algebroid") {

TEST_CASE("bracket of constant sections in an abelian fiber vanishes") {
    LieAlgebra g = LieAlgebra::abelian(2);
    Section a(2, {PolyForm::constant(2, 1), PolyForm::constant(2, 2)},
              {PolyForm::constant(2, 3), PolyForm::constant(2, 5)});
    Section b(2, {PolyForm::constant(2, -1), PolyForm::constant(2, 4)},
              {PolyForm::constant(2, 2), PolyForm::constant(2, 7)});
    CHECK(section_bracket(g, a, b) == zero_section(2, 2));
}

TEST_CASE("coordinate fields commute") {
    LieAlgebra g = LieAlgebra::heisenberg3();
    Section dx = inject_field({PolyForm::constant(2, 1), PolyForm(2, 0)}, 3);
    Section dy = inject_field({PolyForm(2, 0), PolyForm::constant(2, 1)}, 3);
    CHECK(section_bracket(g, dx, dy) == zero_section(2, 3));
}

TEST_CASE("the Leibniz rule, worked example") {
    LieAlgebra g = LieAlgebra::heisenberg3();
    Section xi = inject_field({PolyForm::constant(2, 1), PolyForm(2, 0)}, 3); // d/dt1
    Section eta(2, {PolyForm(2, 0), PolyForm(2, 0)},
                {PolyForm::constant(2, 1), PolyForm(2, 0), PolyForm(2, 0)}); // x0
    PolyForm f = PolyForm::coordinate(2, 0);                                 // t1

    Section lhs = section_bracket(g, xi, scalar_multiply(f, eta));
    Section rhs = section_add(scalar_multiply(directional_derivative(xi.vec, f), eta),
                              scalar_multiply(f, section_bracket(g, xi, eta)));
    CHECK(lhs == rhs);
    CHECK(lhs == eta); // both sides reduce to (0, x0)
}

TEST_CASE("anchor has the injection as a right inverse") {
    Sampler sampler(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<PolyForm> field = {sampler.polynomial(2, 2), sampler.polynomial(2, 2)};
        CHECK(anchor(inject_field(field, 3)) == field);
    }
}

TEST_CASE("tensor model over a point is the CE complex") {
    TensorModel model(point(), LieAlgebra::sl2(), 2);
    CHECK(algebroid_betti(model) == BettiTable{1, 0, 0, 1});
    FiniteComplex c = model.complex();
    FiniteComplex ce = ce_complex_of(LieAlgebra::sl2());
    CHECK(c.dims == ce.dims);
}

TEST_CASE("abelian fiber reduces to piecewise slices") {
    TensorModel model(circle(), LieAlgebra::abelian(2), 1);
    // convolution of (1,1) with (1,2,1)
    CHECK(algebroid_betti(model) == BettiTable{1, 3, 3, 1});
}

TEST_CASE("tensor differential squares to zero") {
    for (const auto& g : {LieAlgebra::abelian(2), LieAlgebra::heisenberg3(), LieAlgebra::sl2()}) {
        TensorModel model(edge(), g, 1);
        CHECK(model.complex().is_complex());
    }
    TensorModel big(circle(), LieAlgebra::sl2(), 2);
    CHECK(big.complex().is_complex());
}

TEST_CASE("Kunneth values") {
    CHECK(algebroid_betti(TensorModel(circle(), LieAlgebra::sl2(), 2)) == BettiTable{1, 1, 0, 1, 1});
    CHECK(algebroid_betti(TensorModel(triangle(), LieAlgebra::heisenberg3(), 2)) ==
          BettiTable{1, 2, 2, 1, 0, 0});
    for (const auto& k : {edge(), circle()}) {
        for (const auto& g : {LieAlgebra::heisenberg3(), LieAlgebra::sl2()}) {
            TensorModel model(k, g, 2);
            CHECK(algebroid_betti(model) ==
                  betti_convolution(ps_betti(k, 2), ce_betti(g), model.rmax()));
        }
    }
}

TEST_CASE("koszul check on functions: both sides are the directional derivative") {
    TensorModel model(triangle(), LieAlgebra::heisenberg3(), 2, 3);
    Sampler sampler(32);
    Simplex top({0, 1, 2});

    std::vector<Rational> coords;
    for (Index i = 0; i < model.dimension(0); ++i) coords.push_back(sampler.rational());
    AlgebroidForm F = algebroid_form_from_coordinates(model, 0, coords);
    Section xi = sampler.section(2, 3, 2);

    KoszulCheckResult res = koszul_check(model, F, top, {xi});
    CHECK(res.equal);
    PolyForm f = evaluate_algebroid_form(model, F, top, {});
    CHECK(res.koszul_value == directional_derivative(xi.vec, f));
}

TEST_CASE("koszul check on a pure fiber covector gives the CE value") {
    // over a point: w = 1 (x) x2*, constant sections x0, x1; both routes
    // evaluate to -x2*([x0, x1]) = -1 for the Heisenberg bracket
    TensorModel model(point(), LieAlgebra::heisenberg3(), 2, 3);
    Simplex top({0});

    AlgebroidForm w;
    w.total_degree = 1;
    w.blocks[{0, 1}] = {Rational(0), Rational(0), Rational(1)}; // x2* slot

    auto basis_section = [&](int idx) {
        std::vector<PolyForm> fib(3, PolyForm(0, 0));
        fib[static_cast<std::size_t>(idx)] = PolyForm::constant(0, 1);
        return Section(0, {}, fib);
    };
    KoszulCheckResult res = koszul_check(model, w, top, {basis_section(0), basis_section(1)});
    CHECK(res.equal);
    CHECK(res.koszul_value == PolyForm::constant(0, -1));
}

TEST_CASE("koszul check agrees on random forms") {
    TensorModel model(triangle(), LieAlgebra::sl2(), 2, 3);
    Simplex top({0, 1, 2});
    Sampler sampler(33);
    for (int trial = 0; trial < 10; ++trial) {
        const int r = static_cast<int>(sampler.uniform(0, 2));
        std::vector<Rational> coords;
        for (Index i = 0; i < model.dimension(r); ++i) coords.push_back(sampler.rational(4, 3));
        AlgebroidForm w = algebroid_form_from_coordinates(model, r, coords);
        std::vector<Section> sections;
        for (int i = 0; i <= r; ++i) sections.push_back(sampler.section(2, 3, 2));
        CHECK(koszul_check(model, w, top, sections).equal);
    }
    CHECK_THROWS_AS(koszul_check(model, algebroid_form_from_coordinates(model, 3, std::vector<Rational>(
                                          static_cast<std::size_t>(model.dimension(3)), Rational(0))),
                                 top, std::vector<Section>(4, zero_section(2, 3))),
                    input_error);
}

} // TEST_SUITE
