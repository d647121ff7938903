#include <doctest.h>

#include "pwforms/cochain_complex.hpp"
#include "pwforms/elimination.hpp"
#include "pwforms/errors.hpp"
#include "pwforms/sampling.hpp"
#include "pwforms/simplicial.hpp"

using namespace pwf;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
    SparseMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

bool is_kernel_vector(const SparseMatrix& m, const std::vector<Rational>& v) {
    for (const auto& y : m.apply(v))
        if (!is_zero(y)) return false;
    return true;
}

} // namespace

TEST_SUITE("elimination") {

TEST_CASE("rank basics") {
    CHECK(rank(SparseMatrix::identity(3)) == 3);
    CHECK(rank(SparseMatrix(2, 2)) == 0);
    CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basics") {
    auto k1 = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0][0] == -k1[0][1]);
    CHECK(!is_zero(k1[0][0]));

    CHECK(kernel_basis(SparseMatrix::identity(2)).empty());

    auto m = from_rows({{1, 2}, {2, 4}});
    auto k2 = kernel_basis(m);
    REQUIRE(k2.size() == 1);
    CHECK(is_kernel_vector(m, k2[0]));
    // proportional to (2, -1)
    CHECK(k2[0][0] * Rational(-1) == k2[0][1] * Rational(2));
}

TEST_CASE("solve basics") {
    auto id = SparseMatrix::identity(2);
    auto x = solve(id, {Rational(3), Rational(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 5);

    auto m = from_rows({{1, 1}});
    auto y = solve(m, {Rational(2)});
    REQUIRE(y.has_value());
    CHECK(m.apply(*y)[0] == 2);

    auto inconsistent = solve(from_rows({{1}, {2}}), {Rational(1), Rational(1)});
    CHECK(!inconsistent.has_value());
}

TEST_CASE("rank-nullity on random matrices, serial == parallel") {
    Sampler sampler(11);
    for (int trial = 0; trial < 6; ++trial) {
        SparseMatrix m = sampler.matrix(50, 64, 18);
        Index r_serial = rank(m, ExecutionPolicy::Serial);
        Index r_parallel = rank(m, ExecutionPolicy::Parallel);
        CHECK(r_serial == r_parallel);

        auto kernel_s = kernel_basis(m, ExecutionPolicy::Serial);
        auto kernel_p = kernel_basis(m, ExecutionPolicy::Parallel);
        CHECK(kernel_s == kernel_p);
        CHECK(static_cast<Index>(kernel_s.size()) + r_serial == m.cols());
        for (const auto& v : kernel_s) CHECK(is_kernel_vector(m, v));
    }
}

TEST_CASE("solve_many on random systems, serial == parallel") {
    Sampler sampler(12);
    SparseMatrix m = sampler.matrix(40, 36, 25);
    SparseMatrix x_true = sampler.matrix(36, 3, 40);
    SparseMatrix b = m * x_true;
    auto x_s = solve_many(m, b, ExecutionPolicy::Serial);
    auto x_p = solve_many(m, b, ExecutionPolicy::Parallel);
    REQUIRE(x_s.has_value());
    REQUIRE(x_p.has_value());
    CHECK(*x_s == *x_p);
    CHECK(m * *x_s == b);
}

TEST_CASE("betti of tiny complexes") {
    FiniteComplex single;
    single.dims = {1};
    CHECK(betti(single) == BettiTable{1});

    FiniteComplex acyclic;
    acyclic.dims = {1, 1};
    acyclic.diff = {SparseMatrix::identity(1)};
    CHECK(betti(acyclic) == BettiTable{0, 0});

    auto circle = SimplicialComplex::from_top_simplices({{0, 1}, {0, 2}, {1, 2}});
    FiniteComplex c;
    c.dims = {3, 3};
    c.diff = {coboundary_matrix(circle, 0)};
    CHECK(betti(c) == BettiTable{1, 1});
}

TEST_CASE("betti refuses d.d != 0") {
    FiniteComplex broken;
    broken.dims = {1, 1, 1};
    broken.diff = {SparseMatrix::identity(1), SparseMatrix::identity(1)};
    CHECK(!broken.is_complex());
    CHECK_THROWS_AS(betti(broken), internal_error);
}

TEST_CASE("betti invariant under basis change") {
    auto sphere = SimplicialComplex::from_top_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    FiniteComplex c = simplicial_complex_of(sphere);
    BettiTable before = betti(c);

    Sampler sampler(5);
    std::vector<SparseMatrix> s, s_inv;
    for (Index d : c.dims) {
        SparseMatrix m = sampler.invertible_matrix(d);
        auto inv = solve_many(m, SparseMatrix::identity(d));
        REQUIRE(inv.has_value());
        s.push_back(m);
        s_inv.push_back(*inv);
    }
    FiniteComplex conjugated;
    conjugated.dims = c.dims;
    for (std::size_t p = 0; p < c.diff.size(); ++p)
        conjugated.diff.push_back(s[p + 1] * c.diff[p] * s_inv[p]);
    CHECK(betti(conjugated) == before);
}

} // TEST_SUITE
