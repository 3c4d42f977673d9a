#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcomplex.hpp"
#include "randgen.hpp"

using namespace fukalg;

namespace {

AInftyAlgebra kronecker() {
    RSpace v(2, {{"x", 1, 2, 0}, {"y", 1, 2, 0}});
    return AInftyAlgebra(v, true, 2);
}

UnitalAInftyAlgebra kronecker_unital() { return adjoin_units(kronecker()); }

// An acyclic bimodule over the kronecker algebra: d(s) = t in slot (1,1).
AInftyBimodule acyclic_module() {
    RSpace S(2, {{"s", 1, 1, 0}, {"t", 1, 1, 0}});
    AInftyBimodule P(kronecker(), S);
    P.op(0, 0).add_entry_names({"s"}, {"t"});
    return P;
}

// A closed homomorphism A^dual -> A with vanishing linear part whose class
// in the hom complex is nonzero; used to build a non-split extension.
BimoduleHom twisting_hom() {
    UnitalAInftyAlgebra A = kronecker_unital();
    AInftyBimodule D = diagonal(A), Dv = dual_diagonal(A);
    HomComplex C(Dv, D);
    auto ker = kernel_basis(C.delta());
    auto im = image_basis(C.delta());
    auto reps = quotient_basis(im, ker, C.dim());
    REQUIRE(!reps.empty());
    REQUIRE(reps.size() < 16);
    for (std::size_t mask = 1; mask < (std::size_t{1} << reps.size()); ++mask) {
        F2Vec v(C.dim());
        for (std::size_t i = 0; i < reps.size(); ++i)
            if ((mask >> i) & 1) v ^= reps[i];
        BimoduleHom phi = C.from_vec(v);
        const MultiMap* lin = phi.comp_if(0, 0);
        if (lin && !lin->is_zero()) continue;
        return phi;
    }
    FAIL("no class with vanishing linear part");
    return identity_hom(diagonal(kronecker_unital()));
}

}  // namespace

TEST_CASE("identity and strict homs are closed") {
    UnitalAInftyAlgebra A = kronecker_unital();
    AInftyBimodule D = diagonal(A);
    CHECK(hom_delta(identity_hom(D)).is_zero());
    CHECK(hom_delta(identity_hom(dual_diagonal(A))).is_zero());
}

TEST_CASE("hom complex differential squares to zero") {
    for (unsigned seed = 0; seed < 12; ++seed) {
        std::mt19937 rng(seed);
        AInftyAlgebra A = random_directed_algebra(rng);
        AInftyBimodule P = random_bimodule(rng, A);
        AInftyBimodule Q = random_bimodule(rng, A);
        HomComplex C(P, Q);
        CHECK(C.delta().multiply(C.delta()).is_zero());
    }
}

TEST_CASE("composition satisfies the Leibniz rule") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        AInftyAlgebra A = random_directed_algebra(rng);
        AInftyBimodule P = random_bimodule(rng, A);
        AInftyBimodule Q = random_bimodule(rng, A);
        AInftyBimodule R = random_bimodule(rng, A);
        HomComplex CPQ(P, Q), CQR(Q, R), CPR(P, R);
        std::uniform_int_distribution<int> bit(0, 1);
        auto rand_vec = [&](std::size_t n) {
            F2Vec v(n);
            for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
            return v;
        };
        BimoduleHom phi = CPQ.from_vec(rand_vec(CPQ.dim()));
        BimoduleHom psi = CQR.from_vec(rand_vec(CQR.dim()));
        F2Vec lhs = CPR.to_vec(hom_delta(compose(psi, phi)));
        F2Vec rhs = CPR.to_vec(compose(hom_delta(psi), phi)) ^
                    CPR.to_vec(compose(psi, hom_delta(phi)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("composition is associative") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        AInftyAlgebra A = random_directed_algebra(rng);
        AInftyBimodule P = random_bimodule(rng, A);
        AInftyBimodule Q = random_bimodule(rng, A);
        HomComplex CPQ(P, Q), CQP(Q, P), CPP(P, P);
        std::uniform_int_distribution<int> bit(0, 1);
        auto rand_vec = [&](std::size_t n) {
            F2Vec v(n);
            for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
            return v;
        };
        BimoduleHom f = CPQ.from_vec(rand_vec(CPQ.dim()));
        BimoduleHom g = CQP.from_vec(rand_vec(CQP.dim()));
        BimoduleHom h = CPQ.from_vec(rand_vec(CPQ.dim()));
        F2Vec lhs = CPQ.to_vec(compose(compose(h, g), f));
        F2Vec rhs = CPQ.to_vec(compose(h, compose(g, f)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("identity on the diagonal is not nullhomotopic") {
    AInftyBimodule D = diagonal(kronecker_unital());
    BimoduleHom zero(D, D);
    CHECK_FALSE(decide_homotopic(identity_hom(D), zero).has_value());
}

TEST_CASE("identity on an acyclic module is nullhomotopic") {
    AInftyBimodule P = acyclic_module();
    REQUIRE_FALSE(check_bimodule(P).has_value());
    BimoduleHom zero(P, P);
    auto h = decide_homotopic(identity_hom(P), zero);
    REQUIRE(h.has_value());
    HomComplex C(P, P);
    CHECK(C.delta().apply(C.to_vec(*h)) == C.to_vec(identity_hom(P)));
}

TEST_CASE("homotopy decision agrees with exhaustive search") {
    std::mt19937 rng(23);
    int done = 0;
    while (done < 4) {
        AInftyAlgebra A = random_directed_algebra(rng, 2, 2);
        AInftyBimodule P = random_bimodule(rng, A, 1);
        HomComplex C(P, P);
        if (C.dim() == 0 || C.dim() > 14) continue;
        ++done;
        std::uniform_int_distribution<int> bit(0, 1);
        F2Vec target(C.dim());
        for (std::size_t i = 0; i < C.dim(); ++i) target.set(i, bit(rng));
        bool found = false;
        for (std::size_t h = 0; h < (std::size_t{1} << C.dim()); ++h) {
            F2Vec hv(C.dim());
            for (std::size_t i = 0; i < C.dim(); ++i)
                hv.set(i, (h >> i) & 1);
            if (C.delta().apply(hv) == target) {
                found = true;
                break;
            }
        }
        auto h = decide_homotopic(C.from_vec(target),
                                  BimoduleHom(P, P));
        CHECK(h.has_value() == found);
        if (h) CHECK(C.delta().apply(C.to_vec(*h)) == target);
    }
}

TEST_CASE("cone of the identity is acyclic, cone of zero is the sum") {
    AInftyBimodule D = diagonal(kronecker_unital());
    ConeResult c_id = cone(identity_hom(D));
    REQUIRE_FALSE(check_bimodule(c_id.cone).has_value());
    CHECK(module_homology(c_id.cone).dim() == 0);
    ConeResult c_zero = cone(BimoduleHom(D, D));
    CHECK(module_homology(c_zero.cone).dim() == 8);
    // triangle maps are closed and compose to zero
    CHECK(hom_delta(c_id.incl).is_zero());
    CHECK(hom_delta(c_id.proj).is_zero());
    CHECK(compose(c_id.proj, c_id.incl).is_zero());
}

TEST_CASE("cone refuses a non-closed map") {
    AInftyBimodule P = acyclic_module();
    HomComplex C(P, P);
    REQUIRE(C.dim() > 0);
    bool threw = false;
    for (std::size_t i = 0; i < C.dim(); ++i) {
        F2Vec e(C.dim());
        e.set(i, true);
        if (!C.delta().apply(e).is_zero()) {
            CHECK_THROWS_AS(cone(C.from_vec(e)), InputError);
            threw = true;
            break;
        }
    }
    CHECK(threw);
}

TEST_CASE("quasi-isomorphisms and quasi-inverses") {
    UnitalAInftyAlgebra A = kronecker_unital();
    AInftyBimodule D = diagonal(A);
    CHECK(quasi_iso(identity_hom(D)));
    CHECK_FALSE(quasi_iso(BimoduleHom(D, D)));
    // projection off an acyclic summand is a quasi-iso
    AInftyBimodule N = acyclic_module();
    AInftyBimodule B = direct_sum(D, N);
    F2Matrix proj(D.space().dim(), B.space().dim());
    for (std::size_t i = 0; i < D.space().dim(); ++i) proj.set(i, i, true);
    BimoduleHom phi = strict_hom(B, D, proj);
    REQUIRE(hom_delta(phi).is_zero());
    CHECK(quasi_iso(phi));
    QuasiInverse qi = quasi_inverse(phi);
    CHECK(hom_delta(qi.inverse).is_zero());
    HomComplex CBB(B, B), CDD(D, D);
    CHECK(CBB.delta().apply(CBB.to_vec(qi.h_source)) ==
          (CBB.to_vec(compose(qi.inverse, phi)) ^
           CBB.to_vec(identity_hom(B))));
    CHECK(CDD.delta().apply(CDD.to_vec(qi.h_target)) ==
          (CDD.to_vec(compose(phi, qi.inverse)) ^
           CDD.to_vec(identity_hom(D))));
    CHECK_THROWS_AS(quasi_inverse(BimoduleHom(D, D)), InputError);
}

TEST_CASE("connecting map of the split extension vanishes") {
    UnitalAInftyAlgebra A = kronecker_unital();
    AInftyBimodule B = direct_sum(diagonal(A), dual_diagonal(A));
    const RSpace& S = B.space();
    std::vector<F2Vec> u = {S.unit_vec(S.index_of("e1+l")),
                            S.unit_vec(S.index_of("e2+l"))};
    BimoduleHom delta = connecting_map(b_plus_minus(B, u));
    CHECK(delta.is_zero());
}

TEST_CASE("connecting map of a twisted extension is nonzero") {
    BimoduleHom phi = twisting_hom();
    CHECK(hom_delta(phi).is_zero());
    AInftyBimodule B = cone(phi).cone;
    REQUIRE_FALSE(check_bimodule(B).has_value());
    const RSpace& S = B.space();
    std::vector<F2Vec> u = {S.unit_vec(S.index_of("e1~t")),
                            S.unit_vec(S.index_of("e2~t"))};
    BimoduleSES ses = b_plus_minus(B, u);
    CHECK(ses.sub.space().dim() == 4);
    CHECK(ses.quot.space().dim() == 4);
    BimoduleHom delta = connecting_map(ses);
    CHECK_FALSE(delta.is_zero());
    CHECK(hom_delta(delta).is_zero());
    CHECK(delta.comp_if(0, 0) == nullptr);
}

TEST_CASE("b^c family interpolates between the two ends") {
    UnitalAInftyAlgebra A = kronecker_unital();
    AInftyBimodule B = direct_sum(diagonal(A), dual_diagonal(A));
    const RSpace& S = B.space();
    std::vector<F2Vec> u = {S.unit_vec(S.index_of("e1+l")),
                            S.unit_vec(S.index_of("e2+l"))};
    std::vector<double> o = {1.0, 0.0};
    std::vector<double> cs = {-2.0, -0.5, 0.5, 2.0};
    std::vector<std::size_t> expected = {4, 6, 6, 4};
    for (std::size_t i = 0; i < cs.size(); ++i) {
        BcResult r = bc_family(B, u, o, cs[i]);
        REQUIRE_FALSE(check_bimodule(r.bc).has_value());
        CHECK(module_homology(r.bc).dim() == expected[i]);
    }
    // the extremes recover B^+ (all of B quotiented away) and the cone
    // over the full quotient map
    CHECK(bc_family(B, u, o, 2.0).f_dim == 8);
    CHECK(bc_family(B, u, o, -2.0).f_dim == 0);
}

TEST_CASE("tensor with the diagonal preserves homology") {
    UnitalAInftyAlgebra A = kronecker_unital();
    AInftyBimodule D = diagonal(A);
    AInftyBimodule T = tensor_over(D, D);
    REQUIRE_FALSE(check_bimodule(T).has_value());
    SlotHomology HT = module_homology(T);
    SlotHomology HD = module_homology(D);
    CHECK(HT.dim() == HD.dim());
    CHECK(HT.slot_dims() == HD.slot_dims());
    // dual side as well
    AInftyBimodule Tv = tensor_over(dual_diagonal(A), D);
    REQUIRE_FALSE(check_bimodule(Tv).has_value());
    CHECK(module_homology(Tv).slot_dims() ==
          module_homology(dual_diagonal(A)).slot_dims());
}

TEST_CASE("tensor of random bimodules passes the checker") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        AInftyAlgebra A = random_directed_algebra(rng);
        AInftyBimodule P = random_bimodule(rng, A, 1);
        AInftyBimodule Q = random_bimodule(rng, A, 1);
        AInftyBimodule T = tensor_over(P, Q);
        CHECK_FALSE(check_bimodule(T).has_value());
    }
}
