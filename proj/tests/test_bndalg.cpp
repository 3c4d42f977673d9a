#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bndalg.hpp"

#include <random>

using namespace fukalg;

namespace {

// F2[x]/x^k with deg x = 1 and D = sum_{s+t=w} x^s (x) x^t, n = w - 1.
BoundaryAlgebra truncated_poly(int k, int w) {
    std::vector<Generator> gens;
    for (int i = 0; i < k; ++i)
        gens.push_back({i == 0 ? "1" : "x" + std::to_string(i), 1, 1, i});
    RSpace S(1, gens);
    BoundaryAlgebra A;
    A.space = S;
    A.product = MultiMap({S, S}, S);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a + b < k)
                A.product.add_entry(
                    {static_cast<std::size_t>(a), static_cast<std::size_t>(b)},
                    S.unit_vec(static_cast<std::size_t>(a + b)));
    A.unit = S.unit_vec(0);
    A.n = w - 1;
    A.D = F2Matrix(S.dim(), S.dim());
    for (int s = 0; s < k; ++s)
        for (int t = 0; t < k; ++t)
            if (s + t == w)
                A.D.set(static_cast<std::size_t>(s),
                        static_cast<std::size_t>(t), true);
    return A;
}

// A = K with D = 0: the cohomology of the interval.
BoundaryAlgebra interval() {
    BoundaryAlgebra A = truncated_poly(1, 0);
    A.n = 0;
    A.D = F2Matrix(1, 1);
    return A;
}

}  // namespace

TEST_CASE("interval: boundary homology is two points in degree zero") {
    BoundaryAlgebra A = interval();
    CHECK_FALSE(check_boundary_axioms(A).has_value());
    FrobeniusDGA B = boundary_dga(A);
    GradedHomology H = dga_homology(B);
    CHECK(H.homology.dim() == 2);
    REQUIRE(H.dims.count(0));
    CHECK(H.dims.at(0) == 2);
    // the class of the dual generator is a nonzero square-zero element,
    // so the induced product is not the one of K x K
    F2Vec dual_cls = H.homology.project(B.space.unit_vec(1));
    CHECK_FALSE(dual_cls.is_zero());
    CHECK(H.product.apply_linear({dual_cls, dual_cls}).is_zero());
    // the unit class still acts as a unit
    F2Vec unit_cls = H.homology.project(B.space.unit_vec(0));
    CHECK(H.product.apply_linear({unit_cls, dual_cls}) == dual_cls);
}

TEST_CASE("D = 0 gives zero differential and the full space as homology") {
    BoundaryAlgebra A = truncated_poly(3, 0);
    A.n = 2;
    A.D = F2Matrix(3, 3);
    CHECK_FALSE(check_boundary_axioms(A).has_value());
    FrobeniusDGA B = boundary_dga(A);
    CHECK(B.d.is_zero());
    GradedHomology H = dga_homology(B);
    CHECK(H.homology.dim() == 6);
    CHECK(H.dims == std::map<int, std::size_t>{{0, 2}, {1, 2}, {2, 2}});
}

TEST_CASE("a point bounds the empty set") {
    BoundaryAlgebra A = truncated_poly(1, 0);  // D = 1 (x) 1, n = -1
    CHECK_FALSE(check_boundary_axioms(A).has_value());
    CHECK(dga_homology(boundary_dga(A)).homology.dim() == 0);
}

TEST_CASE("asymmetric and mis-graded D are rejected") {
    BoundaryAlgebra A = truncated_poly(3, 1);
    A.D = F2Matrix(3, 3);
    A.D.set(1, 0, true);  // x (x) 1 only
    auto v = check_boundary_axioms(A);
    REQUIRE(v.has_value());
    CHECK(v->find("symmetric") != std::string::npos);

    BoundaryAlgebra G = truncated_poly(3, 1);
    G.D = F2Matrix(3, 3);
    G.D.set(1, 1, true);  // x (x) x has degree 2 != n+1 = 1
    auto g = check_boundary_axioms(G);
    REQUIRE(g.has_value());
    CHECK(g->find("degree") != std::string::npos);
}

TEST_CASE("low diagonal weights break centrality") {
    auto v = check_boundary_axioms(truncated_poly(3, 1));
    REQUIRE(v.has_value());
    CHECK(v->find("fails") != std::string::npos);
}

TEST_CASE("the truncated polynomial family satisfies all dga identities") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int k = 2; k <= 4; ++k) {
        for (int w = k - 1; w <= 2 * k - 2; ++w) {
            BoundaryAlgebra A = truncated_poly(k, w);
            CHECK_FALSE(check_boundary_axioms(A).has_value());
            FrobeniusDGA B = boundary_dga(A);  // asserts the identities
            // independent spot checks on random vectors
            std::size_t n = B.space.dim();
            for (int t = 0; t < 5; ++t) {
                F2Vec x(n), y(n);
                for (std::size_t i = 0; i < n; ++i) {
                    x.set(i, bit(rng));
                    y.set(i, bit(rng));
                }
                F2Vec dx = B.d.apply_linear({x});
                F2Vec dy = B.d.apply_linear({y});
                CHECK(B.d.apply_linear({dx}).is_zero());
                CHECK(B.d.apply_linear({B.product.apply_linear({x, y})}) ==
                      (B.product.apply_linear({dx, y}) ^
                       B.product.apply_linear({x, dy})));
                CHECK(B.pair(dx, y) == B.pair(x, dy));
                bool int_dx = false;
                for (std::size_t g : dx.support())
                    if (B.integral.get(g)) int_dx = !int_dx;
                CHECK_FALSE(int_dx);
            }
            // homology carries a unital product
            GradedHomology H = dga_homology(B);
            F2Vec e = H.homology.project(
                H.homology.ambient().unit_vec(A.unit.first_set()));
            for (std::size_t i = 0; i < H.homology.dim(); ++i) {
                F2Vec v = H.homology.H().unit_vec(i);
                CHECK(H.product.apply_linear({e, v}) == v);
                CHECK(H.product.apply_linear({v, e}) == v);
            }
        }
    }
}

TEST_CASE("input validation refuses malformed algebras") {
    BoundaryAlgebra A = truncated_poly(4, 3);
    A.product.add_entry({1, 2}, A.space.unit_vec(3));  // erase x x2 = x3
    CHECK_THROWS_AS(validate_boundary_input(A), InputError);

    BoundaryAlgebra U = truncated_poly(3, 2);
    U.product.add_entry({0, 1}, U.space.unit_vec(1));  // erase 1 x = x
    CHECK_THROWS_AS(validate_boundary_input(U), InputError);

    BoundaryAlgebra G = truncated_poly(3, 2);
    G.product.add_entry({1, 1}, G.space.unit_vec(1));  // x x += x, ungraded
    CHECK_THROWS_AS(validate_boundary_input(G), InputError);
}
