#include <doctest.h>

#include "oracle_polynomial.hpp"
#include "pwforms/errors.hpp"
#include "pwforms/polyform.hpp"
#include "pwforms/sampling.hpp"

using namespace pwf;

namespace {

PolyForm t(int n, int i) { return PolyForm::coordinate(n, i); }
PolyForm dt(int n, int i) { return PolyForm::coordinate_diff(n, i); }

// enumerate exponent vectors with total degree <= cap
std::vector<std::vector<int>> exponents_up_to(int n, int cap) {
    std::vector<std::vector<int>> out;
    for (const auto& key : monomial_keys(n, 0, cap)) out.push_back(key.exponents);
    return out;
}

} // namespace

TEST_SUITE("polyform") {

TEST_CASE("wedge basics") {
    CHECK(wedge(dt(2, 0), dt(2, 0)).is_zero());
    CHECK(wedge(dt(2, 0), dt(2, 1)) == -wedge(dt(2, 1), dt(2, 0)));
    CHECK(wedge(wedge(t(2, 0), dt(2, 0)), dt(2, 1)) ==
          PolyForm::monomial(2, {1, 0}, {0, 1}, Rational(1)));
    CHECK_THROWS_AS(wedge(dt(2, 0), dt(3, 0)), input_error);
}

TEST_CASE("differential basics") {
    CHECK(differential(t(1, 0)) == dt(1, 0));
    CHECK(differential(wedge(t(2, 0), t(2, 1))) ==
          wedge(t(2, 1), dt(2, 0)) + wedge(t(2, 0), dt(2, 1)));
    auto f = PolyForm::monomial(2, {2, 0}, {1}, Rational(1)); // t1^2 dt2
    CHECK(differential(differential(f)).is_zero());
}

TEST_CASE("d.d = 0 and the graded derivation rule on random forms") {
    Sampler sampler(21);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(sampler.uniform(1, 3));
        const int p = static_cast<int>(sampler.uniform(0, n));
        const int q = static_cast<int>(sampler.uniform(0, n - p));
        PolyForm a = sampler.form(n, p, 2);
        PolyForm b = sampler.form(n, q, 2);
        CHECK(differential(differential(a)).is_zero());
        PolyForm lhs = differential(wedge(a, b));
        PolyForm rhs = wedge(differential(a), b) +
                       (p % 2 == 0 ? wedge(a, differential(b)) : -wedge(a, differential(b)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("pullback on faces of the triangle") {
    Simplex tri({0, 1, 2});
    // dropping vertex 2 kills t2 and dt2
    FaceInclusion front(Simplex({0, 1}), tri);
    CHECK(pullback(front, wedge(t(2, 0), dt(2, 1))).is_zero());

    // dropping vertex 0: t1 -> 1 - s, t2 -> s
    FaceInclusion back(Simplex({1, 2}), tri);
    CHECK(pullback(back, t(2, 0)) == PolyForm::constant(1, 1) - t(1, 0));
    CHECK(pullback(back, t(2, 1)) == t(1, 0));

    CHECK_THROWS_AS(pullback(front, t(3, 0)), input_error);
    CHECK_THROWS_AS(FaceInclusion(Simplex({0, 3}), tri), input_error);
}

TEST_CASE("pullback is an algebra map commuting with d") {
    Sampler sampler(22);
    Simplex tet({0, 1, 2, 3});
    std::vector<Simplex> faces = {Simplex({0, 1, 2}), Simplex({1, 3}), Simplex({0, 2, 3})};
    for (const auto& face : faces) {
        FaceInclusion inc(face, tet);
        for (int trial = 0; trial < 6; ++trial) {
            const int p = static_cast<int>(sampler.uniform(0, 2));
            const int q = static_cast<int>(sampler.uniform(0, 1));
            PolyForm a = sampler.form(3, p, 2);
            PolyForm b = sampler.form(3, q, 2);
            CHECK(pullback(inc, wedge(a, b)) == wedge(pullback(inc, a), pullback(inc, b)));
            CHECK(pullback(inc, differential(a)) == differential(pullback(inc, a)));
            CHECK(pullback(inc, a).coefficient_degree() <= a.coefficient_degree());
        }
    }
}

TEST_CASE("pullback functoriality along chains") {
    Simplex tet({0, 1, 2, 3});
    Simplex tri({0, 1, 3});
    Simplex edge({1, 3});
    FaceInclusion tri_in_tet(tri, tet);
    FaceInclusion edge_in_tri(edge, tri);
    FaceInclusion edge_in_tet(edge, tet);
    for (const auto& mono : monomial_basis(3, 1, 2)) {
        CHECK(pullback(edge_in_tri, pullback(tri_in_tet, mono)) == pullback(edge_in_tet, mono));
    }
}

TEST_CASE("integration basics") {
    CHECK(integrate(dt(1, 0)) == Rational(1));
    CHECK(integrate(wedge(t(1, 0), dt(1, 0))) == Rational(1, 2));
    CHECK(integrate(wedge(dt(2, 0), dt(2, 1))) == Rational(1, 2));
    CHECK_THROWS_AS(integrate(t(2, 0)), input_error);
}

TEST_CASE("closed-form integral equals the iterated oracle") {
    for (int n = 1; n <= 3; ++n) {
        PolyForm volume = dt(n, 0);
        for (int i = 1; i < n; ++i) volume = wedge(volume, dt(n, i));
        for (const auto& exps : exponents_up_to(n, 4)) {
            PolyForm mono(n, 0);
            mono.add_term({exps, {}}, Rational(1));
            CHECK(integrate(wedge(mono, volume)) == oracle::integrate_monomial(exps));
        }
    }
}

TEST_CASE("whitney forms") {
    CHECK(whitney(1, {0}) == PolyForm::constant(1, 1) - t(1, 0));
    CHECK(whitney(1, {0, 1}) == dt(1, 0));
    CHECK(integrate(whitney(1, {0, 1})) == Rational(1));
    // full-simplex whitney form integrates to 1 in any dimension
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> all;
        for (int v = 0; v <= n; ++v) all.push_back(v);
        CHECK(integrate(whitney(n, all)) == Rational(1));
        CHECK(whitney(n, all).coefficient_degree() <= 1);
    }
}

TEST_CASE("monomial bases") {
    auto b1 = monomial_basis(1, 0, 2);
    REQUIRE(b1.size() == 3); // 1, t1, t1^2
    CHECK(b1[0] == PolyForm::constant(1, 1));
    CHECK(b1[1] == t(1, 0));

    CHECK(monomial_basis(2, 1, 1).size() == 6);
    CHECK(monomial_basis(2, 3, 5).empty());

    // count = C(n+D, D) * C(n, p)
    CHECK(monomial_basis(3, 2, 2).size() == 10 * 3);
}

TEST_CASE("the differential lowers the coefficient degree") {
    Sampler sampler(23);
    for (int trial = 0; trial < 10; ++trial) {
        PolyForm a = sampler.form(3, static_cast<int>(sampler.uniform(0, 2)), 3);
        if (a.is_zero()) continue;
        CHECK(differential(a).coefficient_degree() <= a.coefficient_degree() - 1);
    }
}

TEST_CASE("rendering") {
    CHECK(PolyForm::monomial(2, {2, 0}, {1}, Rational(3, 2)).to_string() == "3/2·t1^2·dt2");
    CHECK(whitney(1, {0}).to_string() == "1 - t1");
    CHECK(PolyForm(2, 1).to_string() == "0");
    CHECK(wedge(dt(2, 0), dt(2, 1)).to_string() == "dt1∧dt2");
}

} // TEST_SUITE
