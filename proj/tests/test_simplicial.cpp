#include <doctest.h>

#include "pwforms/errors.hpp"
#include "pwforms/simplicial.hpp"

using namespace pwf;

namespace {

SimplicialComplex triangle() { return SimplicialComplex::from_top_simplices({{0, 1, 2}}); }
SimplicialComplex circle() { return SimplicialComplex::from_top_simplices({{0, 1}, {0, 2}, {1, 2}}); }
SimplicialComplex sphere() {
    return SimplicialComplex::from_top_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

} // namespace

TEST_SUITE("simplicial") {

TEST_CASE("face closure of top simplices") {
    auto k = triangle();
    CHECK(k.dim() == 2);
    CHECK(k.simplices(0).size() == 3);
    CHECK(k.simplices(1).size() == 3);
    CHECK(k.simplices(2).size() == 1);

    auto b = circle();
    CHECK(b.dim() == 1);
    CHECK(b.simplices(0).size() == 3);
    CHECK(b.simplices(1).size() == 3);

    CHECK(SimplicialComplex::from_top_simplices({{0, 1, 2}, {0, 1, 2}}) == triangle());
    CHECK(SimplicialComplex::from_top_simplices({{2, 0, 1}}) == triangle());

    CHECK_THROWS_AS(SimplicialComplex::from_top_simplices({{0, 0, 1}}), input_error);
}

TEST_CASE("every subset of a simplex is present") {
    auto k = sphere();
    for (int d = 0; d <= k.dim(); ++d)
        for (const Simplex& s : k.simplices(d))
            for (unsigned mask = 1; mask < (1u << s.vertices.size()); ++mask) {
                std::vector<int> sub;
                for (std::size_t i = 0; i < s.vertices.size(); ++i)
                    if (mask & (1u << i)) sub.push_back(s.vertices[i]);
                CHECK(k.has_simplex(Simplex(sub)));
            }
}

TEST_CASE("maximal simplices") {
    auto k = SimplicialComplex::from_top_simplices({{0, 1, 2}, {0, 1}, {2, 3}});
    auto tops = k.maximal_simplices();
    REQUIRE(tops.size() == 2);
    CHECK(tops[0] == Simplex({0, 1, 2}));
    CHECK(tops[1] == Simplex({2, 3}));
}

TEST_CASE("coboundary matrices") {
    auto edge = SimplicialComplex::from_top_simplices({{0, 1}});
    auto d0 = coboundary_matrix(edge, 0);
    CHECK(d0.rows() == 1);
    CHECK(d0.cols() == 2);
    CHECK(d0.get(0, 0) == -1);
    CHECK(d0.get(0, 1) == 1);

    auto b = circle();
    auto m = coboundary_matrix(b, 0);
    for (Index r = 0; r < m.rows(); ++r) {
        Rational sum(0);
        int nonzero = 0;
        for (Index c = 0; c < m.cols(); ++c) {
            Rational v = m.get(r, c);
            sum += v;
            if (!is_zero(v)) ++nonzero;
        }
        CHECK(sum == 0);
        CHECK(nonzero == 2);
    }

    auto s = sphere();
    CHECK((coboundary_matrix(s, 1) * coboundary_matrix(s, 0)).is_zero());
}

TEST_CASE("simplicial betti oracles") {
    CHECK(simplicial_betti(triangle()) == BettiTable{1, 0, 0});
    CHECK(simplicial_betti(circle()) == BettiTable{1, 1});
    CHECK(simplicial_betti(sphere()) == BettiTable{1, 0, 1});
    CHECK(simplicial_betti(SimplicialComplex::from_top_simplices({{0, 1, 2, 3}})) ==
          BettiTable{1, 0, 0, 0});
}

TEST_CASE("subcomplex, union, intersection") {
    auto k = circle();
    auto k1 = subcomplex(k, {{0, 1}, {1, 2}});
    auto k2 = subcomplex(k, {{0, 2}});
    CHECK(complex_union(k1, k2) == k);

    auto w = complex_intersection(k1, k2);
    CHECK(w.dim() == 0);
    CHECK(w.simplices(0).size() == 2);
    CHECK(w.has_simplex(Simplex({0})));
    CHECK(w.has_simplex(Simplex({2})));

    CHECK(complex_union(k, k) == k);
    CHECK(complex_intersection(k, k) == k);

    auto disjoint = complex_intersection(SimplicialComplex::from_top_simplices({{0, 1}}),
                                         SimplicialComplex::from_top_simplices({{2, 3}}));
    CHECK(disjoint.empty());

    CHECK_THROWS_AS(subcomplex(k, {{0, 1, 2}}), input_error);
}

TEST_CASE("empty complex has zero-dimensional everything") {
    SimplicialComplex empty;
    CHECK(empty.dim() == -1);
    CHECK(empty.vertex_count() == 0);
    CHECK(coboundary_matrix(empty, 0).rows() == 0);
    CHECK(simplicial_betti(empty) == BettiTable{0});
}

} // TEST_SUITE
