#include "bimodule.hpp"

#include <algorithm>
#include <cmath>

namespace fukalg {

std::string BimoduleViolation::describe(const AInftyBimodule& P) const {
    std::string s = "bimodule relation fails at (" + std::to_string(q) + "|1|" +
                    std::to_string(p) + ") on (";
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k) s += ", ";
        const RSpace& sp = (k == static_cast<std::size_t>(q)) ? P.space()
                                                              : P.alg().space();
        s += sp.gen(tuple[k]).name;
    }
    s += "), residual";
    for (std::size_t i : residual.support()) s += " " + P.space().gen(i).name;
    return s;
}

std::vector<RSpace> AInftyBimodule::domain(int q, int p) const {
    std::vector<RSpace> dom;
    for (int i = 0; i < q; ++i) dom.push_back(alg_.space());
    dom.push_back(space_);
    for (int i = 0; i < p; ++i) dom.push_back(alg_.space());
    return dom;
}

MultiMap& AInftyBimodule::op(int q, int p) {
    auto it = ops_.find({q, p});
    if (it == ops_.end())
        it = ops_.emplace(std::make_pair(q, p), MultiMap(domain(q, p), space_))
                 .first;
    return it->second;
}

const MultiMap* AInftyBimodule::op_if(int q, int p) const {
    auto it = ops_.find({q, p});
    return it == ops_.end() ? nullptr : &it->second;
}

F2Vec AInftyBimodule::apply(int q, int p,
                            const std::vector<std::size_t>& tuple) const {
    const MultiMap* m = op_if(q, p);
    if (!m) return space_.zero();
    return m->apply(tuple);
}

F2Vec AInftyBimodule::apply_mid(int q, int p,
                                const std::vector<std::size_t>& left,
                                const F2Vec& mid,
                                const std::vector<std::size_t>& right) const {
    F2Vec acc = space_.zero();
    std::vector<std::size_t> tuple(left);
    tuple.push_back(0);
    tuple.insert(tuple.end(), right.begin(), right.end());
    for (std::size_t i : mid.support()) {
        tuple[left.size()] = i;
        acc ^= apply(q, p, tuple);
    }
    return acc;
}

int AInftyBimodule::max_q() const {
    int q = 0;
    for (const auto& [key, m] : ops_)
        if (!m.is_zero()) q = std::max(q, key.first);
    return q;
}

int AInftyBimodule::max_p() const {
    int p = 0;
    for (const auto& [key, m] : ops_)
        if (!m.is_zero()) p = std::max(p, key.second);
    return p;
}

// Residual of the three-sum bimodule relation at (q|1|p) on one tuple.
F2Vec bimodule_residual(const AInftyBimodule& P, int q, int p,
                        const std::vector<std::size_t>& t) {
    const AInftyAlgebra& A = P.alg();
    std::size_t Q = static_cast<std::size_t>(q);
    F2Vec residual = P.space().zero();
    // inner bimodule op, outer bimodule op
    for (int s = 0; s <= q; ++s) {
        for (int r = 0; r <= p; ++r) {
            std::vector<std::size_t> left_in(t.begin() + (Q - s), t.begin() + Q);
            std::vector<std::size_t> right_in(t.begin() + Q + 1,
                                              t.begin() + Q + 1 + r);
            F2Vec inner = P.apply_mid(s, r, left_in, P.space().unit_vec(t[Q]),
                                      right_in);
            std::vector<std::size_t> left_out(t.begin(), t.begin() + (Q - s));
            std::vector<std::size_t> right_out(t.begin() + Q + 1 + r, t.end());
            residual ^= P.apply_mid(q - s, p - r, left_out, inner, right_out);
        }
    }
    // algebra op inside the left block
    for (int j = 1; j <= A.d_max(); ++j) {
        for (int l = 0; l + j <= q; ++l) {
            std::vector<std::size_t> block(t.begin() + l, t.begin() + l + j);
            F2Vec w = A.apply_mu(static_cast<std::size_t>(j), block);
            for (std::size_t g : w.support()) {
                std::vector<std::size_t> tup(t.begin(), t.begin() + l);
                tup.push_back(g);
                tup.insert(tup.end(), t.begin() + l + j, t.end());
                residual ^= P.apply(q - j + 1, p, tup);
            }
        }
    }
    // algebra op inside the right block
    for (int j = 1; j <= A.d_max(); ++j) {
        for (int l = q + 1; l + j <= q + 1 + p; ++l) {
            std::vector<std::size_t> block(t.begin() + l, t.begin() + l + j);
            F2Vec w = A.apply_mu(static_cast<std::size_t>(j), block);
            for (std::size_t g : w.support()) {
                std::vector<std::size_t> tup(t.begin(), t.begin() + l);
                tup.push_back(g);
                tup.insert(tup.end(), t.begin() + l + j, t.end());
                residual ^= P.apply(q, p - j + 1, tup);
            }
        }
    }
    return residual;
}

std::optional<BimoduleViolation> check_bimodule(const AInftyBimodule& P) {
    const AInftyAlgebra& A = P.alg();
    int qb, pb;
    if (A.directed()) {
        qb = pb = A.space().idempotents() - 1;
    } else {
        qb = std::max(2 * P.max_q(), P.max_q() + A.d_max() - 1);
        pb = std::max(2 * P.max_p(), P.max_p() + A.d_max() - 1);
    }
    for (int total = 0; total <= qb + pb; ++total) {
        for (int q = 0; q <= qb; ++q) {
            int p = total - q;
            if (p < 0 || p > pb) continue;
            auto tuples = composable_tuples(P.domain(q, p));
            std::sort(tuples.begin(), tuples.end());
            for (const auto& t : tuples) {
                F2Vec residual = bimodule_residual(P, q, p, t);
                if (!residual.is_zero())
                    return BimoduleViolation{q, p, t, residual};
            }
        }
    }
    return std::nullopt;
}

AInftyBimodule diagonal(const UnitalAInftyAlgebra& A) {
    const RSpace& E = A.extended();
    int m = A.m();
    AInftyBimodule D(A.base(), E);
    int arity_cap = std::max(A.base().d_max(), 2);
    int side_cap = A.base().directed() ? m - 1 : arity_cap - 1;
    for (int q = 0; q <= side_cap; ++q) {
        for (int p = 0; p <= side_cap && q + p + 1 <= arity_cap; ++p) {
            MultiMap& op = D.op(q, p);
            for (const auto& t : composable_tuples(D.domain(q, p))) {
                std::vector<std::size_t> ext;
                for (std::size_t k = 0; k < t.size(); ++k)
                    ext.push_back(k == static_cast<std::size_t>(q)
                                      ? t[k]
                                      : A.bar_index(t[k]));
                op.add_entry(t, A.mu_ext(ext));
            }
        }
    }
    return D;
}

AInftyBimodule dual(const AInftyBimodule& P) {
    const RSpace& S = P.space();
    std::vector<Generator> dual_gens;
    for (const Generator& g : S.gens()) {
        std::string name = g.name + "^";
        while (S.has(name)) name += "^";
        dual_gens.push_back({name, g.tgt, g.src, g.deg});
    }
    RSpace DS(S.idempotents(), dual_gens);
    AInftyBimodule D(P.alg(), DS);
    for (const auto& [key, m] : P.ops()) {
        auto [q, p] = key;
        MultiMap& dop = D.op(p, q);
        for (const auto& [tuple, val] : m.entries()) {
            std::size_t Q = static_cast<std::size_t>(q);
            std::vector<std::size_t> left(tuple.begin(), tuple.begin() + Q);
            std::size_t x = tuple[Q];
            std::vector<std::size_t> right(tuple.begin() + Q + 1, tuple.end());
            for (std::size_t y : val.support()) {
                // blocks trade sides, internal order preserved
                std::vector<std::size_t> dtuple(right);
                dtuple.push_back(y);
                dtuple.insert(dtuple.end(), left.begin(), left.end());
                dop.add_entry(dtuple, DS.unit_vec(x));
            }
        }
    }
    return D;
}

AInftyBimodule dual_diagonal(const UnitalAInftyAlgebra& A) {
    return dual(diagonal(A));
}

AInftyBimodule direct_sum(const AInftyBimodule& P, const AInftyBimodule& Q) {
    const RSpace& SP = P.space();
    const RSpace& SQ = Q.space();
    std::vector<Generator> gens;
    for (const Generator& g : SP.gens())
        gens.push_back({g.name + "+l", g.src, g.tgt, g.deg});
    for (const Generator& g : SQ.gens())
        gens.push_back({g.name + "+r", g.src, g.tgt, g.deg});
    RSpace S(SP.idempotents(), gens);
    AInftyBimodule D(P.alg(), S);
    auto copy_ops = [&](const AInftyBimodule& src, std::size_t offset) {
        for (const auto& [key, m] : src.ops()) {
            MultiMap& dop = D.op(key.first, key.second);
            std::size_t Q = static_cast<std::size_t>(key.first);
            for (const auto& [tuple, val] : m.entries()) {
                std::vector<std::size_t> t(tuple);
                t[Q] += offset;
                F2Vec v = S.zero();
                for (std::size_t i : val.support()) v.set(i + offset, true);
                dop.add_entry(t, v);
            }
        }
    };
    copy_ops(P, 0);
    copy_ops(Q, SP.dim());
    return D;
}

AInftyBimodule sub_bimodule(const AInftyBimodule& B,
                            const std::vector<Generator>& gens,
                            const std::vector<F2Vec>& vecs) {
    if (gens.size() != vecs.size())
        throw InputError("sub_bimodule: generator/vector count mismatch");
    const RSpace& S = B.space();
    RSpace sub_space(S.idempotents(), gens);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        for (std::size_t k : vecs[i].support()) {
            const Generator& g = S.gen(k);
            if (g.src != gens[i].src || g.tgt != gens[i].tgt)
                throw InputError("sub_bimodule: spanning vector for '" +
                                 gens[i].name + "' is not slot-homogeneous");
        }
    }
    if (rank(F2Matrix::from_columns(vecs, S.dim())) != vecs.size())
        throw InputError("sub_bimodule: spanning vectors are dependent");
    AInftyBimodule sub(B.alg(), sub_space);
    for (const auto& [key, m] : B.ops()) {
        if (m.is_zero()) continue;
        auto [q, p] = key;
        MultiMap& sop = sub.op(q, p);
        std::size_t Q = static_cast<std::size_t>(q);
        for (const auto& t : composable_tuples(sub.domain(q, p))) {
            std::vector<std::size_t> left(t.begin(), t.begin() + Q);
            std::vector<std::size_t> right(t.begin() + Q + 1, t.end());
            F2Vec out = B.apply_mid(q, p, left, vecs[t[Q]], right);
            if (out.is_zero()) continue;
            auto coords = express_in_span(vecs, out);
            if (!coords)
                throw InputError(
                    "sub_bimodule: span is not closed under mu^{" +
                    std::to_string(q) + "|1|" + std::to_string(p) + "}");
            sop.add_entry(t, *coords);
        }
    }
    return sub;
}

F2Vec BimoduleSES::sub_coords(const F2Vec& v) const {
    std::vector<F2Vec> cols(incl);
    cols.insert(cols.end(), sigma.begin(), sigma.end());
    auto x = solve(F2Matrix::from_columns(cols, total.space().dim()), v);
    if (!x) throw InputError("BimoduleSES: vector outside the total space");
    F2Vec out(incl.size());
    for (std::size_t i = 0; i < incl.size(); ++i) out.set(i, x->get(i));
    return out;
}

F2Vec BimoduleSES::quot_coords(const F2Vec& v) const {
    std::vector<F2Vec> cols(incl);
    cols.insert(cols.end(), sigma.begin(), sigma.end());
    auto x = solve(F2Matrix::from_columns(cols, total.space().dim()), v);
    if (!x) throw InputError("BimoduleSES: vector outside the total space");
    F2Vec out(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        out.set(i, x->get(incl.size() + i));
    return out;
}

BimoduleSES quotient_by(const AInftyBimodule& B,
                        const std::vector<Generator>& sub_gens,
                        const std::vector<F2Vec>& sub_vecs) {
    BimoduleSES ses;
    ses.total = B;
    ses.sub = sub_bimodule(B, sub_gens, sub_vecs);
    ses.incl = sub_vecs;
    const RSpace& S = B.space();
    std::vector<F2Vec> basis;
    for (std::size_t i = 0; i < S.dim(); ++i) basis.push_back(S.unit_vec(i));
    ses.sigma = quotient_basis(sub_vecs, basis, S.dim());
    std::vector<Generator> quot_gens;
    for (const auto& v : ses.sigma) {
        const Generator& g = S.gen(v.first_set());
        quot_gens.push_back(g);
    }
    RSpace quot_space(S.idempotents(), quot_gens);
    ses.quot = AInftyBimodule(B.alg(), quot_space);
    for (const auto& [key, m] : B.ops()) {
        if (m.is_zero()) continue;
        auto [q, p] = key;
        MultiMap& qop = ses.quot.op(q, p);
        std::size_t Q = static_cast<std::size_t>(q);
        for (const auto& t : composable_tuples(ses.quot.domain(q, p))) {
            std::vector<std::size_t> left(t.begin(), t.begin() + Q);
            std::vector<std::size_t> right(t.begin() + Q + 1, t.end());
            F2Vec out = B.apply_mid(q, p, left, ses.sigma[t[Q]], right);
            if (out.is_zero()) continue;
            qop.add_entry(t, ses.quot_coords(out));
        }
    }
    return ses;
}

BimoduleSES b_plus_minus(const AInftyBimodule& B, const std::vector<F2Vec>& u) {
    const RSpace& S = B.space();
    int m = S.idempotents();
    if (u.size() != static_cast<std::size_t>(m))
        throw InputError("b_plus_minus: need one unit cochain per idempotent");
    std::vector<Generator> gens;
    std::vector<F2Vec> vecs;
    for (int i = 1; i <= m; ++i) {
        const F2Vec& ui = u[static_cast<std::size_t>(i - 1)];
        if (ui.is_zero()) continue;
        for (std::size_t k : ui.support()) {
            const Generator& g = S.gen(k);
            if (g.src != i || g.tgt != i)
                throw InputError("b_plus_minus: u_" + std::to_string(i) +
                                 " does not lie in the diagonal slot");
        }
        if (!B.apply_mid(0, 0, {}, ui, {}).is_zero())
            throw InputError("b_plus_minus: u_" + std::to_string(i) +
                             " is not a cocycle");
        std::string name = "u" + std::to_string(i);
        while (S.has(name)) name += "+";
        gens.push_back({name, i, i, 0});
        vecs.push_back(ui);
    }
    for (std::size_t k = 0; k < S.dim(); ++k) {
        const Generator& g = S.gen(k);
        if (g.src < g.tgt) {
            gens.push_back(g);
            vecs.push_back(S.unit_vec(k));
        }
    }
    return quotient_by(B, gens, vecs);
}

AInftyBimodule filtration_sub(const AInftyBimodule& B,
                              const std::vector<double>& ordinates, double c,
                              std::vector<Generator>* gens_out,
                              std::vector<F2Vec>* vecs_out) {
    const RSpace& S = B.space();
    int m = S.idempotents();
    if (ordinates.size() != static_cast<std::size_t>(m))
        throw InputError("filtration_sub: need one ordinate per idempotent");
    for (std::size_t i = 0; i + 1 < ordinates.size(); ++i)
        if (!(ordinates[i] > ordinates[i + 1]))
            throw InputError("filtration_sub: ordinates must strictly decrease");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (std::fabs(c - (ordinates[j] - ordinates[i])) < 1e-12)
                throw InputError(
                    "filtration_sub: c equals a difference of ordinates");
    std::vector<Generator> gens;
    std::vector<F2Vec> vecs;
    for (std::size_t k = 0; k < S.dim(); ++k) {
        const Generator& g = S.gen(k);
        if (ordinates[g.tgt - 1] - ordinates[g.src - 1] < c) {
            gens.push_back(g);
            vecs.push_back(S.unit_vec(k));
        }
    }
    if (gens_out) *gens_out = gens;
    if (vecs_out) *vecs_out = vecs;
    return sub_bimodule(B, gens, vecs);
}

SlotHomology module_homology(const AInftyBimodule& P, const std::string& prefix) {
    const MultiMap* d = P.op_if(0, 0);
    if (d) return SlotHomology(P.space(), *d, prefix);
    return SlotHomology(P.space(), MultiMap({P.space()}, P.space()), prefix);
}

}  // namespace fukalg
