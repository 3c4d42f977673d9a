#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "f2linalg.hpp"

#include <random>

using namespace fukalg;

namespace {

F2Matrix from_rows(std::vector<std::vector<int>> rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    F2Matrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < nc; ++c)
            m.set(r, c, rows[r][c] != 0);
    return m;
}

F2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    F2Matrix m(rows, cols);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, bit(rng));
    return m;
}

}  // namespace

TEST_CASE("vector basics") {
    F2Vec v(70);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(69, true);
    CHECK(v.get(69));
    CHECK(v.popcount() == 2);
    CHECK(v.first_set() == 0);
    v.flip(0);
    CHECK(v.first_set() == 69);
    CHECK(v.support() == std::vector<std::size_t>{69});

    F2Vec w(70);
    w.set(69, true);
    CHECK((v ^ w).is_zero());
    CHECK_THROWS_AS(v ^= F2Vec(3), DimensionError);
}

TEST_CASE("rank of small matrices") {
    CHECK(rank(F2Matrix(5, 7)) == 0);
    CHECK(rank(F2Matrix::identity(6)) == 6);
    CHECK(rank(from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(rank(from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}})) == 2);
}

TEST_CASE("kernel and image") {
    F2Matrix m = from_rows({{1, 1, 0}, {0, 0, 1}});
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(m.apply(ker[0]).is_zero());
    CHECK(ker[0].get(0));
    CHECK(ker[0].get(1));

    auto img = image_basis(m);
    CHECK(img.size() == 2);
    // image basis consists of actual columns
    F2Vec col0(2);
    col0.set(0, true);
    CHECK(img[0] == col0);
}

TEST_CASE("solve") {
    F2Matrix m = from_rows({{1, 1}, {1, 1}});
    F2Vec b(2);
    b.set(0, true);
    b.set(1, true);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);

    F2Vec bad(2);
    bad.set(0, true);
    CHECK_FALSE(solve(m, bad).has_value());
}

TEST_CASE("matrix product and transpose") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        F2Matrix a = random_matrix(rng, 5, 8);
        F2Matrix b = random_matrix(rng, 8, 6);
        F2Matrix ab = a.multiply(b);
        CHECK(ab.transpose() == b.transpose().multiply(a.transpose()));
        F2Vec x = random_matrix(rng, 1, 6).row(0);
        CHECK(ab.apply(x) == a.apply(b.apply(x)));
    }
}

TEST_CASE("rank-nullity over random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 24);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = dim(rng), c = dim(rng);
        F2Matrix m = random_matrix(rng, r, c);
        std::size_t rk = rank(m);
        auto ker = kernel_basis(m);
        CHECK(rk + ker.size() == c);
        CHECK(image_basis(m).size() == rk);
        for (const auto& v : ker) CHECK(m.apply(v).is_zero());
        // kernel basis is independent
        CHECK(rank(F2Matrix::from_columns(ker, c)) == ker.size());
    }
}

TEST_CASE("solve consistency over random systems") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> dim(1, 20);
    std::bernoulli_distribution bit(0.5);
    for (int t = 0; t < 200; ++t) {
        std::size_t r = dim(rng), c = dim(rng);
        F2Matrix m = random_matrix(rng, r, c);
        F2Vec x(c);
        for (std::size_t i = 0; i < c; ++i) x.set(i, bit(rng));
        F2Vec b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("quotient and span helpers") {
    // V = F2^3 with basis e0,e1,e2; U = span{e0+e1}
    std::vector<F2Vec> sub, space;
    F2Vec u(3);
    u.set(0, true);
    u.set(1, true);
    sub.push_back(u);
    for (std::size_t i = 0; i < 3; ++i) {
        F2Vec e(3);
        e.set(i, true);
        space.push_back(e);
    }
    auto q = quotient_basis(sub, space, 3);
    CHECK(q.size() == 2);

    auto red = reduced_span(space, 3);
    CHECK(red.size() == 3);

    auto coeff = express_in_span(sub, u);
    REQUIRE(coeff.has_value());
    CHECK(coeff->get(0));
    F2Vec e2(3);
    e2.set(2, true);
    CHECK_FALSE(express_in_span(sub, e2).has_value());
}
