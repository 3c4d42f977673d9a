#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ainfty.hpp"

using namespace fukalg;

namespace {

// Kronecker quiver: two vertices, arrows x, y from 1 to 2, no products.
AInftyAlgebra kronecker() {
    RSpace v(2, {{"x", 1, 2, 0}, {"y", 1, 2, 0}});
    return AInftyAlgebra(v, true, 2);
}

// Path algebra of 1 -> 2 -> 3 -> 4 with a nonzero mu^3.
// mu^2(b,a) = u, mu^2(c,b) = v, mu^2(v,a) = w = mu^2(c,u) (the two arity-3
// compositions cancel over F2), mu^3(c,b,a) = w.
AInftyAlgebra chain4() {
    RSpace s(4, {{"a", 1, 2, 0},
                 {"b", 2, 3, 0},
                 {"c", 3, 4, 0},
                 {"u", 1, 3, 0},
                 {"v", 2, 4, 0},
                 {"w", 1, 4, 0}});
    AInftyAlgebra A(s, true, 3);
    A.mu(2).add_entry_names({"b", "a"}, {"u"});
    A.mu(2).add_entry_names({"c", "b"}, {"v"});
    A.mu(2).add_entry_names({"v", "a"}, {"w"});
    A.mu(2).add_entry_names({"c", "u"}, {"w"});
    A.mu(3).add_entry_names({"c", "b", "a"}, {"w"});
    return A;
}

}  // namespace

TEST_CASE("zero structure satisfies the relations") {
    RSpace v(3, {{"p", 1, 2, 0}, {"q", 2, 3, 0}});
    AInftyAlgebra A(v, true, 2);
    CHECK_FALSE(check_relations(A).has_value());
}

TEST_CASE("kronecker has no composable pairs, relations hold") {
    CHECK_FALSE(check_relations(kronecker()).has_value());
}

TEST_CASE("non-square-zero differential is reported at arity 1") {
    RSpace v(2, {{"x", 1, 2, 0}, {"y", 1, 2, 0}});
    AInftyAlgebra A(v, true, 1);
    A.mu(1).add_entry_names({"x"}, {"y"});
    A.mu(1).add_entry_names({"y"}, {"x"});
    auto viol = check_relations(A);
    REQUIRE(viol.has_value());
    CHECK(viol->arity == 1);
    CHECK(viol->tuple == std::vector<std::size_t>{0});
    CHECK(viol->residual == v.unit_vec(0));  // mu1(mu1(x)) = x
}

TEST_CASE("chain4 fixture with nonzero mu^3 passes") {
    AInftyAlgebra A = chain4();
    CHECK_FALSE(check_relations(A).has_value());
    // breaking one arity-2 entry breaks the arity-3 relation
    A.mu(2).add_entry_names({"c", "u"}, {"w"});  // xor removes it
    auto viol = check_relations(A);
    REQUIRE(viol.has_value());
    CHECK(viol->arity == 3);
}

TEST_CASE("directedness is validated") {
    RSpace v(2, {{"x", 2, 1, 0}});
    CHECK_THROWS_AS(AInftyAlgebra(v, true, 1), InputError);
    CHECK_NOTHROW(AInftyAlgebra(v, false, 1));
}

TEST_CASE("adjoining units to the zero algebra") {
    RSpace v(2, std::vector<Generator>{});
    UnitalAInftyAlgebra A = adjoin_units(AInftyAlgebra(v, true, 1));
    CHECK(A.extended().dim() == 2);
    std::size_t e1 = A.unit_index(1), e2 = A.unit_index(2);
    CHECK(A.mu_ext({e1, e1}) == A.extended().unit_vec(e1));
    CHECK(A.mu_ext({e1, e2}).is_zero());  // non-composable
    CHECK(A.mu_ext({e1}).is_zero());
}

TEST_CASE("unit conventions on the kronecker algebra") {
    UnitalAInftyAlgebra A = adjoin_units(kronecker());
    const RSpace& E = A.extended();
    std::size_t x = E.index_of("x"), e1 = A.unit_index(1), e2 = A.unit_index(2);
    CHECK(A.mu_ext({e2, x}) == E.unit_vec(x));   // e_2 x = x
    CHECK(A.mu_ext({x, e1}) == E.unit_vec(x));   // x e_1 = x
    CHECK(A.mu_ext({x, e2}).is_zero());          // non-composable
    CHECK(A.mu_ext({e1, x, e1}).is_zero());      // units kill arity >= 3
    CHECK(A.mu_ext({x, x}).is_zero());
}

TEST_CASE("adjoin_units refuses broken input") {
    RSpace v(2, {{"x", 1, 2, 0}, {"y", 1, 2, 0}});
    AInftyAlgebra A(v, true, 1);
    A.mu(1).add_entry_names({"x"}, {"y"});
    A.mu(1).add_entry_names({"y"}, {"x"});
    CHECK_THROWS_AS(adjoin_units(A), InputError);
}

TEST_CASE("homology of kronecker is the path algebra") {
    HomologyAlgebra H = homology_algebra(adjoin_units(kronecker()));
    CHECK(H.H.dim() == 4);
    auto dims = H.homology.slot_dims();
    CHECK(dims[{1, 1}] == 1);
    CHECK(dims[{2, 2}] == 1);
    CHECK(dims[{1, 2}] == 2);
    CHECK(dims.count({2, 1}) == 0);
    // units are idempotent and act as identities
    for (int i = 1; i <= 2; ++i) CHECK(H.unit_classes[i - 1].popcount() == 1);
}

TEST_CASE("acyclic slot dies in homology") {
    RSpace v(2, {{"x", 1, 2, 0}, {"y", 1, 2, 0}});
    AInftyAlgebra A(v, true, 1);
    A.mu(1).add_entry_names({"x"}, {"y"});
    HomologyAlgebra H = homology_algebra(adjoin_units(A));
    CHECK(H.H.dim() == 2);  // only the units survive
    auto dims = H.homology.slot_dims();
    CHECK(dims.count({1, 2}) == 0);
}

TEST_CASE("homology product is associative on chain4") {
    HomologyAlgebra H = homology_algebra(adjoin_units(chain4()));
    const RSpace& HS = H.H;
    for (const auto& t : composable_tuples({HS, HS, HS})) {
        // (h2 h1) h0 vs h2 (h1 h0), all in H coordinates
        F2Vec left = H.product.apply_linear(
            {H.product.apply({t[0], t[1]}), HS.unit_vec(t[2])});
        F2Vec right = H.product.apply_linear(
            {HS.unit_vec(t[0]), H.product.apply({t[1], t[2]})});
        CHECK(left == right);
    }
}

TEST_CASE("slot homology matches independent ranks") {
    // one slot of dim 3 with d(x)=y: ker dim 2, im dim 1, H dim 1
    RSpace v(2, {{"x", 1, 2, 0}, {"y", 1, 2, 0}, {"z", 1, 2, 0}});
    MultiMap d({v}, v);
    d.add_entry_names({"x"}, {"y"});
    SlotHomology sh(v, d, "h");
    CHECK(sh.dim() == 1);
    CHECK(sh.is_cycle(v.unit_vec(2)));
    CHECK_FALSE(sh.is_cycle(v.unit_vec(0)));
    // y is a boundary: class 0; z is not
    CHECK(sh.project(v.unit_vec(1)).is_zero());
    CHECK_FALSE(sh.project(v.unit_vec(2)).is_zero());
    CHECK(sh.lift(sh.project(v.unit_vec(2))) == v.unit_vec(2));
}

TEST_CASE("slot homology rejects a non-differential") {
    RSpace v(2, {{"x", 1, 2, 0}, {"y", 1, 2, 0}});
    MultiMap d({v}, v);
    d.add_entry_names({"x"}, {"y"});
    d.add_entry_names({"y"}, {"x"});
    CHECK_THROWS_AS(SlotHomology(v, d, "h"), InputError);
}
