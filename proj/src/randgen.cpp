#include "randgen.hpp"

#include <algorithm>

namespace fukalg {

namespace {

// Random square-zero endomorphism of one slot, by rejection.
F2Matrix random_square_zero(std::mt19937& rng, std::size_t n) {
    std::bernoulli_distribution bit(0.35);
    for (int attempt = 0; attempt < 60; ++attempt) {
        F2Matrix M(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (r != c) M.set(r, c, bit(rng));
        if (M.multiply(M).is_zero()) return M;
    }
    return F2Matrix(n, n);
}

F2Vec random_solution(std::mt19937& rng, const F2Matrix& L, const F2Vec& c,
                      bool* ok) {
    auto x0 = solve(L, c);
    if (!x0) {
        *ok = false;
        return F2Vec(L.cols());
    }
    *ok = true;
    F2Vec x = *x0;
    std::bernoulli_distribution coin(0.5);
    for (const F2Vec& k : kernel_basis(L))
        if (coin(rng)) x ^= k;
    return x;
}

struct AlgUnknown {
    std::vector<std::size_t> tuple;
    std::size_t out;
};

// Stacked residuals of the algebra relation at arity D over all tuples.
F2Vec stacked_alg_residual(const AInftyAlgebra& A, std::size_t D,
                           const std::vector<std::vector<std::size_t>>& tuples) {
    F2Vec out(tuples.size() * A.space().dim());
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
        F2Vec r = relation_residual(A, D, tuples[ti]);
        for (std::size_t i : r.support()) out.set(ti * A.space().dim() + i, true);
    }
    return out;
}

struct BimUnknown {
    int q, p;
    std::vector<std::size_t> tuple;
    std::size_t out;
};

F2Vec stacked_bim_residual(
    const AInftyBimodule& P,
    const std::vector<std::tuple<int, int, std::vector<std::size_t>>>& sites) {
    F2Vec out(sites.size() * P.space().dim());
    for (std::size_t si = 0; si < sites.size(); ++si) {
        const auto& [q, p, t] = sites[si];
        F2Vec r = bimodule_residual(P, q, p, t);
        for (std::size_t i : r.support())
            out.set(si * P.space().dim() + i, true);
    }
    return out;
}

}  // namespace

AInftyAlgebra random_directed_algebra(std::mt19937& rng, int m_max,
                                      int max_per_slot) {
    std::uniform_int_distribution<int> m_dist(2, m_max);
    int m = m_dist(rng);
    std::uniform_int_distribution<int> cnt(0, max_per_slot);
    std::vector<Generator> gens;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            int n = cnt(rng);
            for (int k = 0; k < n; ++k)
                gens.push_back({"a" + std::to_string(i) + std::to_string(j) +
                                    "_" + std::to_string(k),
                                i, j, 0});
        }
    RSpace V(m, gens);
    int d_max = std::max(1, m - 1);
    AInftyAlgebra A(V, true, d_max);
    // mu^1 slotwise square-zero
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            auto idxs = V.slot(i, j);
            if (idxs.empty()) continue;
            F2Matrix M = random_square_zero(rng, idxs.size());
            for (std::size_t c = 0; c < idxs.size(); ++c) {
                F2Vec out = V.zero();
                for (std::size_t r = 0; r < idxs.size(); ++r)
                    if (M.get(r, c)) out.set(idxs[r], true);
                A.mu(1).add_entry({idxs[c]}, out);
            }
        }
    // higher arities: relation at arity D is linear in mu^D
    for (int D = 2; D <= d_max; ++D) {
        std::vector<RSpace> dom(static_cast<std::size_t>(D), V);
        std::vector<AlgUnknown> unknowns;
        for (const auto& t : composable_tuples(dom)) {
            int in_src = V.gen(t.back()).src;
            int in_tgt = V.gen(t.front()).tgt;
            for (std::size_t g : V.slot(in_src, in_tgt))
                unknowns.push_back({t, g});
        }
        auto sites = composable_tuples(dom);
        std::sort(sites.begin(), sites.end());
        F2Vec c = stacked_alg_residual(A, static_cast<std::size_t>(D), sites);
        F2Matrix L(sites.size() * V.dim(), unknowns.size());
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            A.mu(D).add_entry(unknowns[u].tuple, V.unit_vec(unknowns[u].out));
            F2Vec col =
                stacked_alg_residual(A, static_cast<std::size_t>(D), sites) ^ c;
            A.mu(D).add_entry(unknowns[u].tuple, V.unit_vec(unknowns[u].out));
            for (std::size_t r : col.support()) L.set(r, u, true);
        }
        bool ok = false;
        F2Vec x = random_solution(rng, L, c, &ok);
        if (!ok) {
            // homogeneous fallback: c must come from lower arities; wipe
            // them and retry once (always solvable with everything zero)
            for (int d = 2; d < D; ++d) {
                MultiMap zero(std::vector<RSpace>(static_cast<std::size_t>(d), V),
                              V);
                A.mu(d) = zero;
            }
            c = stacked_alg_residual(A, static_cast<std::size_t>(D), sites);
            x = random_solution(rng, L, c, &ok);
        }
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (x.get(u))
                A.mu(D).add_entry(unknowns[u].tuple, V.unit_vec(unknowns[u].out));
    }
    return A;
}

AInftyBimodule random_bimodule(std::mt19937& rng, const AInftyAlgebra& A,
                               int max_per_slot) {
    const RSpace& AV = A.space();
    int m = AV.idempotents();
    std::uniform_int_distribution<int> cnt(0, max_per_slot);
    std::vector<Generator> gens;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            int n = cnt(rng);
            for (int k = 0; k < n; ++k)
                gens.push_back({"p" + std::to_string(i) + std::to_string(j) +
                                    "_" + std::to_string(k),
                                i, j, 0});
        }
    RSpace S(m, gens);
    AInftyBimodule P(A, S);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            auto idxs = S.slot(i, j);
            if (idxs.empty()) continue;
            F2Matrix M = random_square_zero(rng, idxs.size());
            for (std::size_t c = 0; c < idxs.size(); ++c) {
                F2Vec out = S.zero();
                for (std::size_t r = 0; r < idxs.size(); ++r)
                    if (M.get(r, c)) out.set(idxs[r], true);
                P.op(0, 0).add_entry({idxs[c]}, out);
            }
        }
    int bound = m - 1;
    for (int w = 1; w <= 2 * bound; ++w) {
        std::vector<BimUnknown> unknowns;
        std::vector<std::tuple<int, int, std::vector<std::size_t>>> sites;
        for (int q = 0; q <= bound; ++q) {
            int p = w - q;
            if (p < 0 || p > bound) continue;
            std::vector<RSpace> dom = P.domain(q, p);
            auto tuples = composable_tuples(dom);
            std::sort(tuples.begin(), tuples.end());
            for (const auto& t : tuples) {
                sites.emplace_back(q, p, t);
                int in_src = dom.back().gen(t.back()).src;
                int in_tgt = dom.front().gen(t.front()).tgt;
                for (std::size_t g : S.slot(in_src, in_tgt))
                    unknowns.push_back({q, p, t, g});
            }
        }
        if (unknowns.empty()) continue;
        F2Vec c = stacked_bim_residual(P, sites);
        F2Matrix L(sites.size() * S.dim(), unknowns.size());
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const BimUnknown& bu = unknowns[u];
            P.op(bu.q, bu.p).add_entry(bu.tuple, S.unit_vec(bu.out));
            F2Vec col = stacked_bim_residual(P, sites) ^ c;
            P.op(bu.q, bu.p).add_entry(bu.tuple, S.unit_vec(bu.out));
            for (std::size_t r : col.support()) L.set(r, u, true);
        }
        bool ok = false;
        F2Vec x = random_solution(rng, L, c, &ok);
        if (!ok) {
            // wipe all intermediate weights and retry; with only the
            // differential left the offset is zero
            for (int wp = 1; wp < w; ++wp)
                for (int q = 0; q <= bound; ++q) {
                    int p = wp - q;
                    if (p < 0 || p > bound) continue;
                    P.op(q, p) = MultiMap(P.domain(q, p), S);
                }
            c = stacked_bim_residual(P, sites);
            x = random_solution(rng, L, c, &ok);
        }
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            if (x.get(u)) {
                const BimUnknown& bu = unknowns[u];
                P.op(bu.q, bu.p).add_entry(bu.tuple, S.unit_vec(bu.out));
            }
    }
    return P;
}

}  // namespace fukalg
