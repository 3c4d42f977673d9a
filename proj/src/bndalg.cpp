#include "bndalg.hpp"

namespace fukalg {

namespace {

F2Matrix mult_matrix(const BoundaryAlgebra& A, std::size_t a, bool left) {
    std::size_t n = A.space.dim();
    F2Matrix M(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        F2Vec w = left ? A.product.apply({a, c}) : A.product.apply({c, a});
        for (std::size_t r : w.support()) M.set(r, c, true);
    }
    return M;
}

F2Matrix map_matrix(const MultiMap& f, std::size_t dim) {
    F2Matrix M(dim, dim);
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t r : f.apply({c}).support()) M.set(r, c, true);
    return M;
}

}  // namespace

void validate_boundary_input(const BoundaryAlgebra& A) {
    const RSpace& S = A.space;
    if (S.idempotents() != 1)
        throw InputError("BoundaryAlgebra: a single idempotent is required");
    if (A.product.arity() != 2 || !(A.product.codomain() == S))
        throw InputError("BoundaryAlgebra: product shape mismatch");
    if (A.unit.size() != S.dim() || A.unit.is_zero())
        throw InputError("BoundaryAlgebra: missing unit");
    if (A.D.rows() != S.dim() || A.D.cols() != S.dim())
        throw InputError("BoundaryAlgebra: D shape mismatch");
    for (std::size_t g : A.unit.support())
        if (S.gen(g).deg != 0)
            throw InputError("BoundaryAlgebra: unit is not in degree 0");
    for (const auto& [t, val] : A.product.entries())
        for (std::size_t w : val.support())
            if (S.gen(w).deg != S.gen(t[0]).deg + S.gen(t[1]).deg)
                throw InputError("BoundaryAlgebra: product is not graded");
    for (std::size_t g = 0; g < S.dim(); ++g) {
        F2Vec v = S.unit_vec(g);
        if (A.product.apply_linear({A.unit, v}) != v ||
            A.product.apply_linear({v, A.unit}) != v)
            throw InputError("BoundaryAlgebra: unit does not act as identity");
    }
    for (std::size_t a = 0; a < S.dim(); ++a)
        for (std::size_t b = 0; b < S.dim(); ++b)
            for (std::size_t c = 0; c < S.dim(); ++c)
                if (A.product.apply_linear(
                        {A.product.apply({a, b}), S.unit_vec(c)}) !=
                    A.product.apply_linear(
                        {S.unit_vec(a), A.product.apply({b, c})}))
                    throw InputError(
                        "BoundaryAlgebra: product is not associative");
}

std::optional<std::string> check_boundary_axioms(const BoundaryAlgebra& A) {
    validate_boundary_input(A);
    const RSpace& S = A.space;
    for (std::size_t s = 0; s < S.dim(); ++s)
        for (std::size_t t = 0; t < S.dim(); ++t)
            if (A.D.get(s, t) && S.gen(s).deg + S.gen(t).deg != A.n + 1)
                return "D is not homogeneous of degree n+1 at (" +
                       S.gen(s).name + ", " + S.gen(t).name + ")";
    if (!(A.D == A.D.transpose())) return "D is not symmetric";
    for (std::size_t a = 0; a < S.dim(); ++a) {
        F2Matrix La = mult_matrix(A, a, true);
        F2Matrix Ra = mult_matrix(A, a, false);
        if (!(La.multiply(A.D) == A.D.multiply(Ra.transpose())))
            return "a D != D a fails for '" + S.gen(a).name + "'";
        if (!(Ra.multiply(A.D) == A.D.multiply(La.transpose())))
            return "D a != a D fails for '" + S.gen(a).name + "'";
    }
    return std::nullopt;
}

bool FrobeniusDGA::pair(const F2Vec& x, const F2Vec& y) const {
    F2Vec xy = product.apply_linear({x, y});
    bool out = false;
    for (std::size_t g : xy.support())
        if (integral.get(g)) out = !out;
    return out;
}

FrobeniusDGA boundary_dga(const BoundaryAlgebra& A) {
    if (auto bad = check_boundary_axioms(A))
        throw InputError("boundary_dga: " + *bad);
    const RSpace& S = A.space;
    std::size_t na = S.dim();
    std::vector<Generator> gens(S.gens());
    for (const Generator& g : S.gens()) {
        std::string name = g.name + "^";
        while (S.has(name)) name += "^";
        gens.push_back({name, 1, 1, A.n - g.deg});
    }
    RSpace E(1, gens);

    FrobeniusDGA B;
    B.space = E;
    B.a_dim = na;
    B.product = MultiMap({E, E}, E);
    B.d = MultiMap({E}, E);
    B.integral = E.zero();

    auto embed = [&](const F2Vec& v, bool dual_part) {
        F2Vec out = E.zero();
        for (std::size_t g : v.support()) out.set(g + (dual_part ? na : 0), true);
        return out;
    };
    for (std::size_t u = 0; u < na; ++u) {
        for (std::size_t v = 0; v < na; ++v) {
            F2Vec w = A.product.apply({u, v});
            if (!w.is_zero()) B.product.add_entry({u, v}, embed(w, false));
            // a . eta with (a . eta)(c) = eta(c a)
            F2Vec l = E.zero();
            for (std::size_t c = 0; c < na; ++c)
                if (A.product.apply({c, u}).get(v)) l.flip(c + na);
            if (!l.is_zero()) B.product.add_entry({u, v + na}, l);
            // xi . b with (xi . b)(c) = xi(b c)
            F2Vec r = E.zero();
            for (std::size_t c = 0; c < na; ++c)
                if (A.product.apply({v, c}).get(u)) r.flip(c + na);
            if (!r.is_zero()) B.product.add_entry({u + na, v}, r);
        }
        F2Vec dv = E.zero();
        for (std::size_t t = 0; t < na; ++t)
            if (A.D.get(u, t)) dv.flip(t);
        if (!dv.is_zero()) B.d.add_entry({u + na}, dv);
        if (A.unit.get(u)) B.integral.set(u + na, true);
    }

    // the dga identities are theorems given the axioms; assert them
    F2Matrix dm = map_matrix(B.d, E.dim());
    if (!dm.multiply(dm).is_zero())
        throw InputError("boundary_dga: d^2 != 0");
    for (std::size_t x = 0; x < E.dim(); ++x) {
        F2Vec ex = E.unit_vec(x);
        for (std::size_t g : B.d.apply({x}).support())
            if (B.integral.get(g))
                throw InputError("boundary_dga: integral does not kill d");
        for (std::size_t y = 0; y < E.dim(); ++y) {
            F2Vec ey = E.unit_vec(y);
            F2Vec lhs = B.d.apply_linear({B.product.apply({x, y})});
            F2Vec rhs = B.product.apply_linear({B.d.apply({x}), ey}) ^
                        B.product.apply_linear({ex, B.d.apply({y})});
            if (lhs != rhs)
                throw InputError("boundary_dga: d is not a derivation");
            if (B.pair(B.d.apply({x}), ey) != B.pair(ex, B.d.apply({y})))
                throw InputError("boundary_dga: pairing incompatible with d");
        }
    }
    return B;
}

GradedHomology dga_homology(const FrobeniusDGA& B) {
    GradedHomology out;
    out.homology = SlotHomology(B.space, B.d, "h");
    const RSpace& H = out.homology.H();
    for (std::size_t i = 0; i < H.dim(); ++i) {
        const F2Vec& rep = out.homology.rep(i);
        ++out.dims[B.space.gen(rep.first_set()).deg];
    }
    out.product = MultiMap({H, H}, H);
    for (std::size_t i = 0; i < H.dim(); ++i)
        for (std::size_t j = 0; j < H.dim(); ++j) {
            F2Vec w = B.product.apply_linear(
                {out.homology.rep(i), out.homology.rep(j)});
            F2Vec cls = out.homology.project(w);
            if (!cls.is_zero()) out.product.add_entry({i, j}, cls);
        }
    return out;
}

}  // namespace fukalg
