#include "homcomplex.hpp"

#include <algorithm>
#include <random>

namespace fukalg {

namespace {

int side_bound(const AInftyAlgebra& A) {
    if (!A.directed())
        throw InputError("hom complex machinery requires a directed algebra");
    return A.space().idempotents() - 1;
}

}  // namespace

BimoduleHom::BimoduleHom(AInftyBimodule source, AInftyBimodule target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (!(source_.alg().space() == target_.alg().space()))
        throw InputError("BimoduleHom: source and target share the algebra");
}

MultiMap& BimoduleHom::comp(int q, int p) {
    auto it = comps_.find({q, p});
    if (it == comps_.end()) {
        std::vector<RSpace> dom = source_.domain(q, p);
        it = comps_.emplace(std::make_pair(q, p),
                            MultiMap(std::move(dom), target_.space()))
                 .first;
    }
    return it->second;
}

const MultiMap* BimoduleHom::comp_if(int q, int p) const {
    auto it = comps_.find({q, p});
    return it == comps_.end() ? nullptr : &it->second;
}

F2Vec BimoduleHom::apply(int q, int p,
                         const std::vector<std::size_t>& tuple) const {
    const MultiMap* m = comp_if(q, p);
    if (!m) return target_.space().zero();
    return m->apply(tuple);
}

F2Vec BimoduleHom::apply_mid(int q, int p,
                             const std::vector<std::size_t>& left,
                             const F2Vec& mid,
                             const std::vector<std::size_t>& right) const {
    F2Vec acc = target_.space().zero();
    std::vector<std::size_t> tuple(left);
    tuple.push_back(0);
    tuple.insert(tuple.end(), right.begin(), right.end());
    for (std::size_t i : mid.support()) {
        tuple[left.size()] = i;
        acc ^= apply(q, p, tuple);
    }
    return acc;
}

bool BimoduleHom::is_zero() const {
    for (const auto& [k, m] : comps_)
        if (!m.is_zero()) return false;
    return true;
}

BimoduleHom identity_hom(const AInftyBimodule& P) {
    return strict_hom(P, P, F2Matrix::identity(P.space().dim()));
}

BimoduleHom strict_hom(const AInftyBimodule& P, const AInftyBimodule& Q,
                       const F2Matrix& linear) {
    if (linear.rows() != Q.space().dim() || linear.cols() != P.space().dim())
        throw InputError("strict_hom: matrix shape mismatch");
    BimoduleHom phi(P, Q);
    MultiMap& c = phi.comp(0, 0);
    for (std::size_t j = 0; j < P.space().dim(); ++j) {
        F2Vec col(Q.space().dim());
        for (std::size_t r = 0; r < Q.space().dim(); ++r)
            col.set(r, linear.get(r, j));
        c.add_entry({j}, col);
    }
    return phi;
}

BimoduleHom hom_delta(const BimoduleHom& phi) {
    const AInftyBimodule& P = phi.source();
    const AInftyBimodule& Q = phi.target();
    const AInftyAlgebra& A = P.alg();
    int bound = side_bound(A);
    BimoduleHom out(P, Q);
    for (int q = 0; q <= bound; ++q) {
        for (int p = 0; p <= bound; ++p) {
            MultiMap* dst = nullptr;
            std::size_t Qi = static_cast<std::size_t>(q);
            for (const auto& t : composable_tuples(P.domain(q, p))) {
                F2Vec val = Q.space().zero();
                // mu_Q outer, phi inner; phi outer, mu_P inner
                for (int s = 0; s <= q; ++s) {
                    for (int r = 0; r <= p; ++r) {
                        std::vector<std::size_t> li(t.begin() + (Qi - s),
                                                    t.begin() + Qi);
                        std::vector<std::size_t> ri(t.begin() + Qi + 1,
                                                    t.begin() + Qi + 1 + r);
                        std::vector<std::size_t> lo(t.begin(),
                                                    t.begin() + (Qi - s));
                        std::vector<std::size_t> ro(t.begin() + Qi + 1 + r,
                                                    t.end());
                        F2Vec mid = P.space().unit_vec(t[Qi]);
                        val ^= Q.apply_mid(q - s, p - r, lo,
                                           phi.apply_mid(s, r, li, mid, ri), ro);
                        val ^= phi.apply_mid(q - s, p - r, lo,
                                             P.apply_mid(s, r, li, mid, ri), ro);
                    }
                }
                // algebra blocks on either side
                for (int j = 1; j <= A.d_max(); ++j) {
                    for (int l = 0; l + j <= q + 1 + p; ++l) {
                        // the block must avoid the module position q
                        if (!(l + j <= q || l >= q + 1)) continue;
                        std::vector<std::size_t> block(t.begin() + l,
                                                       t.begin() + l + j);
                        F2Vec w = A.apply_mu(static_cast<std::size_t>(j), block);
                        for (std::size_t g : w.support()) {
                            std::vector<std::size_t> tup(t.begin(), t.begin() + l);
                            tup.push_back(g);
                            tup.insert(tup.end(), t.begin() + l + j, t.end());
                            if (l + j <= q)
                                val ^= phi.apply(q - j + 1, p, tup);
                            else
                                val ^= phi.apply(q, p - j + 1, tup);
                        }
                    }
                }
                if (!val.is_zero()) {
                    if (!dst) dst = &out.comp(q, p);
                    dst->add_entry(t, val);
                }
            }
        }
    }
    return out;
}

BimoduleHom compose(const BimoduleHom& psi, const BimoduleHom& phi) {
    if (!(psi.source().space() == phi.target().space()))
        throw InputError("compose: middle bimodules differ");
    const AInftyBimodule& P = phi.source();
    int bound = side_bound(P.alg());
    BimoduleHom out(P, psi.target());
    for (int q = 0; q <= bound; ++q) {
        for (int p = 0; p <= bound; ++p) {
            MultiMap* dst = nullptr;
            std::size_t Qi = static_cast<std::size_t>(q);
            for (const auto& t : composable_tuples(P.domain(q, p))) {
                F2Vec val = psi.target().space().zero();
                for (int s = 0; s <= q; ++s) {
                    for (int r = 0; r <= p; ++r) {
                        std::vector<std::size_t> li(t.begin() + (Qi - s),
                                                    t.begin() + Qi);
                        std::vector<std::size_t> ri(t.begin() + Qi + 1,
                                                    t.begin() + Qi + 1 + r);
                        std::vector<std::size_t> lo(t.begin(),
                                                    t.begin() + (Qi - s));
                        std::vector<std::size_t> ro(t.begin() + Qi + 1 + r,
                                                    t.end());
                        F2Vec mid = P.space().unit_vec(t[Qi]);
                        val ^= psi.apply_mid(q - s, p - r, lo,
                                             phi.apply_mid(s, r, li, mid, ri),
                                             ro);
                    }
                }
                if (!val.is_zero()) {
                    if (!dst) dst = &out.comp(q, p);
                    dst->add_entry(t, val);
                }
            }
        }
    }
    return out;
}

HomComplex::HomComplex(const AInftyBimodule& P, const AInftyBimodule& Q)
    : P_(P), Q_(Q) {
    int bound = side_bound(P.alg());
    if (!(P.alg().space() == Q.alg().space()))
        throw InputError("HomComplex: bimodules over different algebras");
    for (int q = 0; q <= bound; ++q) {
        for (int p = 0; p <= bound; ++p) {
            auto tuples = composable_tuples(P.domain(q, p));
            std::sort(tuples.begin(), tuples.end());
            for (const auto& t : tuples) {
                // slot of the would-be output
                const std::vector<RSpace> dom = P.domain(q, p);
                int in_src = dom.back().gen(t.back()).src;
                int in_tgt = dom.front().gen(t.front()).tgt;
                for (std::size_t g : Q.space().slot(in_src, in_tgt)) {
                    index_[{q, p, t, g}] = basis_.size();
                    basis_.push_back({q, p, t, g});
                }
            }
        }
    }
    delta_ = F2Matrix(basis_.size(), basis_.size());
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        BimoduleHom e(P_, Q_);
        e.comp(basis_[j].q, basis_[j].p)
            .add_entry(basis_[j].tuple, Q_.space().unit_vec(basis_[j].out));
        F2Vec col = to_vec(hom_delta(e));
        for (std::size_t r : col.support()) delta_.set(r, j, true);
    }
}

F2Vec HomComplex::to_vec(const BimoduleHom& phi) const {
    F2Vec v(basis_.size());
    for (const auto& [key, m] : phi.comps()) {
        for (const auto& [tuple, val] : m.entries()) {
            for (std::size_t g : val.support()) {
                auto it = index_.find({key.first, key.second, tuple, g});
                if (it == index_.end())
                    throw InputError("HomComplex: component outside the basis");
                v.flip(it->second);
            }
        }
    }
    return v;
}

BimoduleHom HomComplex::from_vec(const F2Vec& v) const {
    BimoduleHom phi(P_, Q_);
    for (std::size_t i : v.support()) {
        const BasisElt& b = basis_[i];
        phi.comp(b.q, b.p).add_entry(b.tuple, Q_.space().unit_vec(b.out));
    }
    return phi;
}

std::size_t HomComplex::homology_dim() const {
    std::size_t rk = rank(delta_);
    return (dim() - rk) - rk;
}

std::optional<BimoduleHom> decide_homotopic(const BimoduleHom& phi,
                                            const BimoduleHom& psi) {
    HomComplex C(phi.source(), phi.target());
    F2Vec target = C.to_vec(phi) ^ C.to_vec(psi);
    auto h = solve(C.delta(), target);
    if (!h) return std::nullopt;
    return C.from_vec(*h);
}

ConeResult cone(const BimoduleHom& phi) {
    if (!hom_delta(phi).is_zero())
        throw InputError("cone: the homomorphism is not closed");
    const AInftyBimodule& P = phi.source();
    const AInftyBimodule& Q = phi.target();
    std::vector<Generator> gens;
    for (const Generator& g : Q.space().gens())
        gens.push_back({g.name + "~t", g.src, g.tgt, g.deg});
    for (const Generator& g : P.space().gens())
        gens.push_back({g.name + "~s", g.src, g.tgt, g.deg});
    RSpace S(Q.space().idempotents(), gens);
    std::size_t off = Q.space().dim();
    AInftyBimodule C(P.alg(), S);
    auto copy_into = [&](const std::map<std::pair<int, int>, MultiMap>& src,
                         std::size_t in_off, std::size_t out_off) {
        for (const auto& [key, m] : src) {
            if (m.is_zero()) continue;
            MultiMap& dst = C.op(key.first, key.second);
            std::size_t Qi = static_cast<std::size_t>(key.first);
            for (const auto& [tuple, val] : m.entries()) {
                std::vector<std::size_t> t(tuple);
                t[Qi] += in_off;
                F2Vec v = S.zero();
                for (std::size_t i : val.support()) v.set(i + out_off, true);
                dst.add_entry(t, v);
            }
        }
    };
    copy_into(Q.ops(), 0, 0);
    copy_into(P.ops(), off, off);
    copy_into(phi.comps(), off, 0);
    ConeResult out;
    out.cone = std::move(C);
    F2Matrix incl(S.dim(), Q.space().dim());
    for (std::size_t i = 0; i < Q.space().dim(); ++i) incl.set(i, i, true);
    out.incl = strict_hom(Q, out.cone, incl);
    F2Matrix proj(P.space().dim(), S.dim());
    for (std::size_t i = 0; i < P.space().dim(); ++i) proj.set(i, off + i, true);
    out.proj = strict_hom(out.cone, P, proj);
    return out;
}

bool quasi_iso(const BimoduleHom& phi) {
    SlotHomology hs = module_homology(phi.source());
    SlotHomology ht = module_homology(phi.target());
    if (hs.dim() != ht.dim()) return false;
    std::vector<F2Vec> images;
    for (std::size_t i = 0; i < hs.dim(); ++i) {
        F2Vec w = phi.apply_mid(0, 0, {}, hs.rep(i), {});
        if (!ht.is_cycle(w)) return false;  // would contradict closedness
        images.push_back(ht.project(w));
    }
    return rank(F2Matrix::from_columns(images, ht.dim())) == ht.dim();
}

QuasiInverse quasi_inverse(const BimoduleHom& phi) {
    if (!hom_delta(phi).is_zero())
        throw InputError("quasi_inverse: the homomorphism is not closed");
    if (!quasi_iso(phi))
        throw InputError("quasi_inverse: not a quasi-isomorphism");
    const AInftyBimodule& P = phi.source();
    const AInftyBimodule& Q = phi.target();
    HomComplex CQP(Q, P), CPP(P, P), CQQ(Q, Q);
    std::size_t np = CQP.dim(), n1 = CPP.dim(), n2 = CQQ.dim();
    std::size_t rows = np + n1 + n2, cols = np + n1 + n2;
    F2Matrix M(rows, cols);
    auto put = [&](std::size_t r0, std::size_t c0, const F2Matrix& blk) {
        for (std::size_t r = 0; r < blk.rows(); ++r)
            for (std::size_t c : blk.row(r).support())
                M.set(r0 + r, c0 + c, true);
    };
    put(0, 0, CQP.delta());
    // columns of compose(e_j, phi) and compose(phi, e_j)
    F2Matrix L1(n1, np), L2(n2, np);
    for (std::size_t j = 0; j < np; ++j) {
        F2Vec ej(np);
        ej.set(j, true);
        BimoduleHom psi_j = CQP.from_vec(ej);
        for (std::size_t r : CPP.to_vec(compose(psi_j, phi)).support())
            L1.set(r, j, true);
        for (std::size_t r : CQQ.to_vec(compose(phi, psi_j)).support())
            L2.set(r, j, true);
    }
    put(np, 0, L1);
    put(np, np, CPP.delta());
    put(np + n1, 0, L2);
    put(np + n1, np + n1, CQQ.delta());
    F2Vec rhs(rows);
    for (std::size_t r : CPP.to_vec(identity_hom(P)).support())
        rhs.set(np + r, true);
    for (std::size_t r : CQQ.to_vec(identity_hom(Q)).support())
        rhs.set(np + n1 + r, true);
    auto x = solve(M, rhs);
    if (!x)
        throw InputError("quasi_inverse: obstruction system unsolvable");
    QuasiInverse out;
    F2Vec xp(np), xh1(n1), xh2(n2);
    for (std::size_t i = 0; i < np; ++i) xp.set(i, x->get(i));
    for (std::size_t i = 0; i < n1; ++i) xh1.set(i, x->get(np + i));
    for (std::size_t i = 0; i < n2; ++i) xh2.set(i, x->get(np + n1 + i));
    out.inverse = CQP.from_vec(xp);
    out.h_source = CPP.from_vec(xh1);
    out.h_target = CQQ.from_vec(xh2);
    return out;
}

BimoduleHom dual_hom(const BimoduleHom& phi) {
    BimoduleHom out(dual(phi.target()), dual(phi.source()));
    for (const auto& [qp, mm] : phi.comps()) {
        auto [q, p] = qp;
        std::size_t Qi = static_cast<std::size_t>(q);
        for (const auto& [t, val] : mm.entries()) {
            for (std::size_t y : val.support()) {
                std::vector<std::size_t> dt(t.begin() + Qi + 1, t.end());
                dt.push_back(y);
                dt.insert(dt.end(), t.begin(), t.begin() + Qi);
                out.comp(p, q).add_entry(dt, out.target().space().unit_vec(t[Qi]));
            }
        }
    }
    return out;
}

BimoduleHom connecting_map(const BimoduleSES& ses, unsigned splitting_seed) {
    const AInftyBimodule& B = ses.total;
    int bound = side_bound(B.alg());
    std::size_t ns = ses.incl.size(), nq = ses.sigma.size();
    // linear structure maps in the chosen bases
    auto mat_of = [&](const AInftyBimodule& M) {
        std::size_t n = M.space().dim();
        F2Matrix D(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r :
                 M.apply(0, 0, std::vector<std::size_t>{j}).support())
                D.set(r, j, true);
        return D;
    };
    F2Matrix Dp = mat_of(ses.sub), Dm = mat_of(ses.quot);
    F2Matrix Cm(ns, nq);
    for (std::size_t j = 0; j < nq; ++j) {
        F2Vec w = B.apply_mid(0, 0, {}, ses.sigma[j], {});
        for (std::size_t r : ses.sub_coords(w).support()) Cm.set(r, j, true);
    }
    // repair the splitting: solve Dp tau + tau Dm = C for tau, with tau
    // supported on slot-compatible (sub, quot) generator pairs only so
    // that the repaired representatives stay slot-homogeneous
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < nq; ++j) {
            const Generator& gs = ses.sub.space().gen(i);
            const Generator& gq = ses.quot.space().gen(j);
            if (gs.src == gq.src && gs.tgt == gq.tgt) {
                var[{i, j}] = pairs.size();
                pairs.emplace_back(i, j);
            }
        }
    F2Matrix sys(pairs.size(), pairs.size());
    F2Vec rhs(pairs.size());
    for (std::size_t row = 0; row < pairs.size(); ++row) {
        auto [i, j] = pairs[row];
        for (std::size_t k = 0; k < ns; ++k)
            if (Dp.get(i, k) && var.count({k, j}))
                sys.row(row).flip(var[{k, j}]);
        for (std::size_t k = 0; k < nq; ++k)
            if (Dm.get(k, j) && var.count({i, k}))
                sys.row(row).flip(var[{i, k}]);
        rhs.set(row, Cm.get(i, j));
    }
    auto tau = solve(sys, rhs);
    if (!tau)
        throw InputError("connecting_map: no differential-compatible splitting");
    if (splitting_seed != 0) {
        std::mt19937 rng(splitting_seed);
        for (const F2Vec& k : kernel_basis(sys))
            if (rng() & 1u) *tau ^= k;
    }
    std::vector<F2Vec> sigma2(ses.sigma);
    for (std::size_t v = 0; v < pairs.size(); ++v)
        if (tau->get(v)) sigma2[pairs[v].second] ^= ses.incl[pairs[v].first];
    std::vector<F2Vec> cols(ses.incl);
    cols.insert(cols.end(), sigma2.begin(), sigma2.end());
    F2Matrix decomp = F2Matrix::from_columns(cols, B.space().dim());
    auto sub_part = [&](const F2Vec& v) {
        auto x = solve(decomp, v);
        if (!x) throw InputError("connecting_map: decomposition failed");
        F2Vec out(ns);
        for (std::size_t i = 0; i < ns; ++i) out.set(i, x->get(i));
        return out;
    };
    BimoduleHom delta(ses.quot, ses.sub);
    for (int q = 0; q <= bound; ++q) {
        for (int p = 0; p <= bound; ++p) {
            std::size_t Qi = static_cast<std::size_t>(q);
            for (const auto& t : composable_tuples(ses.quot.domain(q, p))) {
                std::vector<std::size_t> left(t.begin(), t.begin() + Qi);
                std::vector<std::size_t> right(t.begin() + Qi + 1, t.end());
                F2Vec w = B.apply_mid(q, p, left, sigma2[t[Qi]], right);
                if (w.is_zero()) continue;
                F2Vec val = sub_part(w);
                if (!val.is_zero()) delta.comp(q, p).add_entry(t, val);
            }
        }
    }
    if (delta.comp_if(0, 0) && !delta.comp_if(0, 0)->is_zero())
        throw InputError("connecting_map: linear component did not vanish");
    if (!hom_delta(delta).is_zero())
        throw InputError("connecting_map: output is not closed (malformed input)");
    return delta;
}

BcResult bc_family(const AInftyBimodule& B, const std::vector<F2Vec>& u,
                   const std::vector<double>& ordinates, double c) {
    BimoduleSES plus = b_plus_minus(B, u);
    std::vector<Generator> fgens;
    std::vector<F2Vec> fvecs;
    filtration_sub(B, ordinates, c, &fgens, &fvecs);
    BimoduleSES fses = quotient_by(B, fgens, fvecs);
    // B^+ -> B -> B/F^c as a strict map
    F2Matrix lin(fses.quot.space().dim(), plus.sub.space().dim());
    for (std::size_t j = 0; j < plus.sub.space().dim(); ++j)
        for (std::size_t r : fses.quot_coords(plus.incl[j]).support())
            lin.set(r, j, true);
    BimoduleHom phi = strict_hom(plus.sub, fses.quot, lin);
    BcResult out;
    out.bc = cone(phi).cone;
    out.f_dim = fvecs.size();
    return out;
}

AInftyBimodule tensor_over(const AInftyBimodule& P, const AInftyBimodule& Q) {
    const AInftyAlgebra& A = P.alg();
    int bound = side_bound(A);
    if (!(A.space() == Q.alg().space()))
        throw InputError("tensor_over: bimodules over different algebras");
    // chains x (x) a_k ... a_1 (x) y, 0 <= k <= m-1
    struct Chain {
        std::vector<std::size_t> t;  // [x, a_k..a_1, y]
    };
    std::vector<Chain> chains;
    std::map<std::vector<std::size_t>, std::size_t> index;
    std::vector<Generator> gens;
    for (int k = 0; k <= bound; ++k) {
        std::vector<RSpace> dom;
        dom.push_back(P.space());
        for (int i = 0; i < k; ++i) dom.push_back(A.space());
        dom.push_back(Q.space());
        auto tuples = composable_tuples(dom);
        std::sort(tuples.begin(), tuples.end());
        for (const auto& t : tuples) {
            std::string name = P.space().gen(t.front()).name;
            for (std::size_t i = 1; i + 1 < t.size(); ++i)
                name += "|" + A.space().gen(t[i]).name;
            name += "|" + Q.space().gen(t.back()).name;
            gens.push_back({name, Q.space().gen(t.back()).src,
                            P.space().gen(t.front()).tgt, 0});
            index[t] = chains.size();
            chains.push_back({t});
        }
    }
    RSpace S(A.space().idempotents(), gens);
    AInftyBimodule T(P.alg(), S);
    auto emit = [&](MultiMap& dst, const std::vector<std::size_t>& key,
                    const std::vector<std::size_t>& chain) {
        auto it = index.find(chain);
        if (it == index.end())
            throw InputError("tensor_over: internal chain lookup failed");
        dst.add_entry(key, S.unit_vec(it->second));
    };
    for (std::size_t ci = 0; ci < chains.size(); ++ci) {
        const std::vector<std::size_t>& t = chains[ci].t;
        std::size_t k = t.size() - 2;  // number of algebra factors
        std::vector<std::size_t> key{ci};
        // differential: mu_P consuming a prefix of the a's
        MultiMap& d00 = T.op(0, 0);
        for (std::size_t r = 0; r <= k; ++r) {
            std::vector<std::size_t> args(t.begin() + 1, t.begin() + 1 + r);
            F2Vec w = P.apply_mid(0, static_cast<int>(r), {},
                                  P.space().unit_vec(t[0]), args);
            for (std::size_t g : w.support()) {
                std::vector<std::size_t> chain{g};
                chain.insert(chain.end(), t.begin() + 1 + r, t.end());
                emit(d00, key, chain);
            }
        }
        // differential: algebra contractions
        for (int j = 1; j <= A.d_max(); ++j) {
            for (std::size_t l = 1; l + j <= 1 + k; ++l) {
                std::vector<std::size_t> block(t.begin() + l, t.begin() + l + j);
                F2Vec w = A.apply_mu(static_cast<std::size_t>(j), block);
                for (std::size_t g : w.support()) {
                    std::vector<std::size_t> chain(t.begin(), t.begin() + l);
                    chain.push_back(g);
                    chain.insert(chain.end(), t.begin() + l + j, t.end());
                    emit(d00, key, chain);
                }
            }
        }
        // differential: mu_Q consuming a suffix of the a's
        for (std::size_t s = 0; s <= k; ++s) {
            std::vector<std::size_t> args(t.end() - 1 - s, t.end() - 1);
            F2Vec w = Q.apply_mid(static_cast<int>(s), 0, args,
                                  Q.space().unit_vec(t.back()), {});
            for (std::size_t g : w.support()) {
                std::vector<std::size_t> chain(t.begin(), t.end() - 1 - s);
                chain.push_back(g);
                emit(d00, key, chain);
            }
        }
        // left action through mu_P
        for (int q = 1; q <= bound; ++q) {
            for (const auto& bt :
                 composable_tuples(std::vector<RSpace>(q, A.space()))) {
                // composability of (b_1, x): src(b_1) == tgt(x)
                if (A.space().gen(bt.back()).src != P.space().gen(t[0]).tgt)
                    continue;
                std::vector<std::size_t> full_key(bt);
                full_key.push_back(ci);
                for (std::size_t r = 0; r <= k; ++r) {
                    std::vector<std::size_t> args(t.begin() + 1,
                                                  t.begin() + 1 + r);
                    F2Vec w = P.apply_mid(q, static_cast<int>(r), bt,
                                          P.space().unit_vec(t[0]), args);
                    if (w.is_zero()) continue;
                    MultiMap& dst = T.op(q, 0);
                    for (std::size_t g : w.support()) {
                        std::vector<std::size_t> chain{g};
                        chain.insert(chain.end(), t.begin() + 1 + r, t.end());
                        emit(dst, full_key, chain);
                    }
                }
            }
        }
        // right action through mu_Q
        for (int p = 1; p <= bound; ++p) {
            for (const auto& at :
                 composable_tuples(std::vector<RSpace>(p, A.space()))) {
                if (A.space().gen(at.front()).tgt != Q.space().gen(t.back()).src)
                    continue;
                std::vector<std::size_t> full_key{ci};
                full_key.insert(full_key.end(), at.begin(), at.end());
                for (std::size_t s = 0; s <= k; ++s) {
                    std::vector<std::size_t> largs(t.end() - 1 - s, t.end() - 1);
                    F2Vec w = Q.apply_mid(static_cast<int>(s), p, largs,
                                          Q.space().unit_vec(t.back()), at);
                    if (w.is_zero()) continue;
                    MultiMap& dst = T.op(0, p);
                    for (std::size_t g : w.support()) {
                        std::vector<std::size_t> chain(t.begin(),
                                                       t.end() - 1 - s);
                        chain.push_back(g);
                        emit(dst, full_key, chain);
                    }
                }
            }
        }
    }
    return T;
}

}  // namespace fukalg
