#include "hoch.hpp"

#include <algorithm>

namespace fukalg {

namespace {

int cc_len_bound(const AInftyBimodule& P) {
    if (!P.alg().directed())
        throw InputError("Hochschild complex requires a directed algebra");
    return P.alg().space().idempotents();  // lengths 0 .. m-1
}

std::vector<std::size_t> slice(const std::vector<std::size_t>& t,
                               std::size_t a, std::size_t b) {
    return {t.begin() + a, t.begin() + b};
}

}  // namespace

HochschildCochain zero_cochain(const AInftyBimodule& P) {
    int m = cc_len_bound(P);
    HochschildCochain phi;
    phi.coeff = P;
    phi.comp0 = P.space().zero();
    for (int d = 1; d < m; ++d)
        phi.comps.emplace_back(
            std::vector<RSpace>(static_cast<std::size_t>(d), P.alg().space()),
            P.space());
    return phi;
}

void validate_cochain(const HochschildCochain& phi) {
    const AInftyBimodule& P = phi.coeff;
    int m = cc_len_bound(P);
    if (phi.comp0.size() != P.space().dim())
        throw InputError("HochschildCochain: comp0 has the wrong dimension");
    for (std::size_t g : phi.comp0.support())
        if (P.space().gen(g).src != P.space().gen(g).tgt)
            throw InputError("HochschildCochain: comp0 leaves the diagonal");
    if (phi.comps.size() != static_cast<std::size_t>(m - 1))
        throw InputError("HochschildCochain: wrong number of components");
    for (int d = 1; d < m; ++d) {
        const MultiMap& c = phi.comps[static_cast<std::size_t>(d - 1)];
        if (c.arity() != static_cast<std::size_t>(d) ||
            !(c.codomain() == P.space()) ||
            !(c.domain()[0] == P.alg().space()))
            throw InputError("HochschildCochain: component shape mismatch");
    }
}

HochschildCochain cc_differential(const HochschildCochain& phi) {
    validate_cochain(phi);
    const AInftyBimodule& P = phi.coeff;
    int m = cc_len_bound(P);
    HochschildCochain out = zero_cochain(P);
    out.comp0 = P.apply_mid(0, 0, {}, phi.comp0, {});
    for (int d = 1; d < m; ++d) {
        std::vector<RSpace> dom(static_cast<std::size_t>(d), P.alg().space());
        for (const auto& T : composable_tuples(dom)) {
            F2Vec val = P.space().zero();
            // structure maps of P around an inner phi component
            for (int q = 0; q <= d; ++q) {
                for (int p = 0; p + q <= d; ++p) {
                    int r = d - q - p;
                    std::size_t Q = static_cast<std::size_t>(q);
                    F2Vec mid =
                        (r == 0)
                            ? phi.comp0
                            : phi.comps[static_cast<std::size_t>(r - 1)].apply(
                                  slice(T, Q, Q + static_cast<std::size_t>(r)));
                    if (mid.is_zero()) continue;
                    val ^= P.apply_mid(
                        q, p, slice(T, 0, Q), mid,
                        slice(T, Q + static_cast<std::size_t>(r), T.size()));
                }
            }
            // phi around an inner mu of the algebra
            for (int j = 1; j <= d; ++j) {
                int r = d - j + 1;
                if (r > m - 1) continue;
                const MultiMap& c = phi.comps[static_cast<std::size_t>(r - 1)];
                for (int s = 0; s + j <= d; ++s) {
                    std::size_t S = static_cast<std::size_t>(s);
                    F2Vec inner = P.alg().apply_mu(
                        static_cast<std::size_t>(j),
                        slice(T, S, S + static_cast<std::size_t>(j)));
                    if (inner.is_zero()) continue;
                    std::vector<F2Vec> args;
                    for (std::size_t l = 0; l < S; ++l)
                        args.push_back(P.alg().space().unit_vec(T[l]));
                    args.push_back(inner);
                    for (std::size_t l = S + static_cast<std::size_t>(j);
                         l < T.size(); ++l)
                        args.push_back(P.alg().space().unit_vec(T[l]));
                    val ^= c.apply_linear(args);
                }
            }
            if (!val.is_zero())
                out.comps[static_cast<std::size_t>(d - 1)].add_entry(T, val);
        }
    }
    return out;
}

CCComplex::CCComplex(const AInftyBimodule& P) : P_(P) {
    int m = cc_len_bound(P_);
    for (std::size_t g = 0; g < P_.space().dim(); ++g)
        if (P_.space().gen(g).src == P_.space().gen(g).tgt) {
            index_[{0, {}, g}] = basis_.size();
            basis_.push_back({0, {}, g});
        }
    for (int d = 1; d < m; ++d) {
        std::vector<RSpace> dom(static_cast<std::size_t>(d), P_.alg().space());
        for (const auto& t : composable_tuples(dom)) {
            int in_src = P_.alg().space().gen(t.back()).src;
            int in_tgt = P_.alg().space().gen(t.front()).tgt;
            for (std::size_t out : P_.space().slot(in_src, in_tgt)) {
                index_[{d, t, out}] = basis_.size();
                basis_.push_back({d, t, out});
            }
        }
    }
    delta_ = F2Matrix(basis_.size(), basis_.size());
    for (std::size_t col = 0; col < basis_.size(); ++col) {
        F2Vec e(basis_.size());
        e.set(col, true);
        F2Vec image = to_vec(cc_differential(from_vec(e)));
        for (std::size_t r : image.support()) delta_.set(r, col, true);
    }
    if (!delta_.multiply(delta_).is_zero())
        throw InputError("CCComplex: differential does not square to zero");
}

F2Vec CCComplex::to_vec(const HochschildCochain& phi) const {
    validate_cochain(phi);
    if (!(phi.coeff.space() == P_.space()))
        throw InputError("CCComplex: cochain over a different bimodule");
    F2Vec v(basis_.size());
    for (std::size_t g : phi.comp0.support())
        v.flip(index_.at({0, {}, g}));
    for (std::size_t d = 1; d <= phi.comps.size(); ++d)
        for (const auto& [t, val] : phi.comps[d - 1].entries())
            for (std::size_t g : val.support())
                v.flip(index_.at({static_cast<int>(d), t, g}));
    return v;
}

HochschildCochain CCComplex::from_vec(const F2Vec& v) const {
    if (v.size() != basis_.size())
        throw InputError("CCComplex: wrong vector dimension");
    HochschildCochain phi = zero_cochain(P_);
    for (std::size_t i : v.support()) {
        const BasisElt& b = basis_[i];
        if (b.d == 0)
            phi.comp0.flip(b.out);
        else
            phi.comps[static_cast<std::size_t>(b.d - 1)].add_entry(
                b.tuple, P_.space().unit_vec(b.out));
    }
    return phi;
}

std::size_t CCComplex::homology_dim() const {
    return dim() - 2 * rank(delta_);
}

std::size_t cc_homology_dim(const AInftyBimodule& P) {
    return CCComplex(P).homology_dim();
}

std::size_t hom_homology_dim(const AInftyBimodule& P,
                             const AInftyBimodule& Q) {
    return HomComplex(P, Q).homology_dim();
}

BimoduleHom X_map(const UnitalAInftyAlgebra& UA, const HochschildCochain& phi) {
    validate_cochain(phi);
    const AInftyBimodule& P = phi.coeff;
    if (!(P.alg().space() == UA.base().space()))
        throw InputError("X_map: cochain is not over the given algebra");
    int m = UA.m();
    const RSpace& bar = UA.base().space();
    BimoduleHom X(diagonal(UA), P);
    for (int q = 0; q < m; ++q) {
        for (int p = 0; p < m; ++p) {
            std::size_t Q = static_cast<std::size_t>(q);
            std::vector<RSpace> dom(Q, bar);
            dom.push_back(UA.extended());
            dom.insert(dom.end(), static_cast<std::size_t>(p), bar);
            for (const auto& T : composable_tuples(dom)) {
                std::vector<std::size_t> L = slice(T, 0, Q);
                std::size_t x = T[Q];
                std::vector<std::size_t> R = slice(T, Q + 1, T.size());
                F2Vec val = P.space().zero();
                if (UA.is_unit(x)) {
                    // strictly unital extension: only the identity action
                    // of the unit on the phi value survives
                    if (q != 0) continue;
                    int k = UA.extended().gen(x).src;
                    val = (p == 0)
                              ? P.space().project_slot(phi.comp0, k, k)
                              : phi.comps[static_cast<std::size_t>(p - 1)]
                                    .apply(R);
                } else {
                    std::size_t xb = x - static_cast<std::size_t>(m);
                    for (int i = 0; i + 0 <= p; ++i) {
                        for (int j = 0; i + j <= p; ++j) {
                            std::size_t I = static_cast<std::size_t>(i);
                            std::size_t J = static_cast<std::size_t>(j);
                            std::size_t Pp = static_cast<std::size_t>(p);
                            F2Vec mid =
                                (j == 0)
                                    ? phi.comp0
                                    : phi.comps[J - 1].apply(
                                          slice(R, Pp - I - J, Pp - I));
                            if (mid.is_zero()) continue;
                            std::vector<std::size_t> left = L;
                            left.push_back(xb);
                            for (std::size_t l = 0; l < Pp - I - J; ++l)
                                left.push_back(R[l]);
                            val ^= P.apply_mid(q + 1 + p - i - j, i, left, mid,
                                               slice(R, Pp - I, Pp));
                        }
                    }
                }
                if (!val.is_zero()) X.comp(q, p).add_entry(T, val);
            }
        }
    }
    return X;
}

BimoduleHom Y_map(const UnitalAInftyAlgebra& UA, const HochschildCochain& psi) {
    return dual_hom(X_map(UA, psi));
}

namespace {

// Induced H-bimodule structure on the slot homology of a bimodule; lifts
// of homology-algebra classes split into unit coordinates (acting by slot
// projection) and ideal coordinates (acting through mu^{1|1|0}/mu^{0|1|1}).
struct InducedModule {
    SlotHomology hom;
    HBimodule mod;
};

InducedModule induced_module(const AInftyBimodule& P, const HomologyAlgebra& H,
                             const std::string& prefix) {
    SlotHomology MH = module_homology(P, prefix);
    HBimodule mod{MH.H(), MultiMap({H.H, MH.H()}, MH.H()),
                  MultiMap({MH.H(), H.H}, MH.H())};
    int m = P.space().idempotents();
    auto act = [&](std::size_t ha, std::size_t hx, bool left_side) {
        F2Vec a = H.homology.lift(H.H.unit_vec(ha));
        F2Vec x = MH.lift(MH.H().unit_vec(hx));
        F2Vec val = P.space().zero();
        for (std::size_t c : a.support()) {
            if (c < static_cast<std::size_t>(m)) {
                int k = static_cast<int>(c) + 1;
                for (std::size_t g : x.support()) {
                    const Generator& xg = P.space().gen(g);
                    if (left_side ? xg.tgt == k : xg.src == k) val.flip(g);
                }
            } else {
                std::size_t g = c - static_cast<std::size_t>(m);
                val ^= left_side ? P.apply_mid(1, 0, {g}, x, {})
                                 : P.apply_mid(0, 1, {}, x, {g});
            }
        }
        return MH.project(val);
    };
    for (const auto& t : composable_tuples({H.H, MH.H()})) {
        F2Vec v = act(t[0], t[1], true);
        if (!v.is_zero()) mod.left.add_entry(t, v);
    }
    for (const auto& t : composable_tuples({MH.H(), H.H})) {
        F2Vec v = act(t[1], t[0], false);
        if (!v.is_zero()) mod.right.add_entry(t, v);
    }
    return {std::move(MH), std::move(mod)};
}

}  // namespace

ExtensionClass extension_class(const BimoduleSES& ses, const BimoduleHom& delta,
                               const HomologyAlgebra& H) {
    if (delta.comp_if(0, 0) && !delta.comp_if(0, 0)->is_zero())
        throw InputError("extension_class: linear component must vanish");
    if (!hom_delta(delta).is_zero())
        throw InputError("extension_class: map is not closed");
    HAlgebra Ha = h_algebra(H);
    int m = ses.total.space().idempotents();
    InducedModule M = induced_module(ses.quot, H, "q");
    InducedModule N = induced_module(ses.sub, H, "s");
    BarComplex bc(Ha, M.mod, N.mod);

    F2Vec c1(bc.dim(1));
    for (std::size_t hb = 0; hb < Ha.space.dim(); ++hb) {
        if (std::find(Ha.unit_idx.begin(), Ha.unit_idx.end(), hb) !=
            Ha.unit_idx.end())
            continue;
        F2Vec b = H.homology.lift(Ha.space.unit_vec(hb));
        for (std::size_t hx = 0; hx < M.hom.dim(); ++hx) {
            F2Vec x = M.hom.lift(M.hom.H().unit_vec(hx));
            F2Vec lv = ses.sub.space().zero();
            F2Vec rv = ses.sub.space().zero();
            for (std::size_t c : b.support()) {
                std::size_t g = c - static_cast<std::size_t>(m);
                lv ^= delta.apply_mid(1, 0, {g}, x, {});
                rv ^= delta.apply_mid(0, 1, {}, x, {g});
            }
            if (Ha.space.gen(hb).src == M.hom.H().gen(hx).tgt)
                for (std::size_t out : N.hom.project(lv).support())
                    c1.flip(bc.index_of(1, 0, {hb, hx}, out));
            else if (!lv.is_zero())
                throw InputError("extension_class: non-composable value");
            if (M.hom.H().gen(hx).src == Ha.space.gen(hb).tgt)
                for (std::size_t out : N.hom.project(rv).support())
                    c1.flip(bc.index_of(0, 1, {hx, hb}, out));
            else if (!rv.is_zero())
                throw InputError("extension_class: non-composable value");
        }
    }
    bool trivial = bc.is_zero_class(c1);
    return {std::move(bc), c1, trivial};
}

}  // namespace fukalg
