#include "ainfty.hpp"

#include <algorithm>

namespace fukalg {

std::string RelationViolation::describe(const RSpace& space) const {
    std::string s = "relation fails at arity " + std::to_string(arity) + " on (";
    for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k) s += ", ";
        s += space.gen(tuple[k]).name;
    }
    s += "), residual";
    for (std::size_t i : residual.support()) s += " " + space.gen(i).name;
    return s;
}

AInftyAlgebra::AInftyAlgebra(RSpace space, bool directed, int d_max)
    : space_(std::move(space)), directed_(directed), d_max_(d_max) {
    if (d_max_ < 1) throw InputError("AInftyAlgebra: d_max must be >= 1");
    if (directed_) {
        for (const Generator& g : space_.gens())
            if (g.src >= g.tgt)
                throw InputError("AInftyAlgebra: directed but generator '" +
                                 g.name + "' has src >= tgt");
    }
    for (int d = 1; d <= d_max_; ++d) {
        std::vector<RSpace> dom(static_cast<std::size_t>(d), space_);
        mu_.emplace_back(std::move(dom), space_);
    }
}

const MultiMap& AInftyAlgebra::mu(int d) const {
    if (d < 1 || d > d_max_) throw InputError("AInftyAlgebra: mu arity out of range");
    return mu_[static_cast<std::size_t>(d - 1)];
}

MultiMap& AInftyAlgebra::mu(int d) {
    if (d < 1 || d > d_max_) throw InputError("AInftyAlgebra: mu arity out of range");
    return mu_[static_cast<std::size_t>(d - 1)];
}

F2Vec AInftyAlgebra::apply_mu(std::size_t d,
                              const std::vector<std::size_t>& tuple) const {
    if (d == 0 || d != tuple.size())
        throw InputError("AInftyAlgebra: apply_mu arity mismatch");
    if (d > static_cast<std::size_t>(d_max_)) return space_.zero();
    return mu_[d - 1].apply(tuple);
}

F2Vec relation_residual(const AInftyAlgebra& A, std::size_t D,
                        const std::vector<std::size_t>& t) {
    const RSpace& V = A.space();
    if (D == 0 || t.size() != D)
        throw InputError("relation_residual: arity mismatch");
    F2Vec residual = V.zero();
    for (std::size_t j = 1; j <= D; ++j) {
        for (std::size_t i = 0; i + j <= D; ++i) {
            // inner block a_{i+j},...,a_{i+1} = list[D-i-j .. D-i-1]
            std::vector<std::size_t> inner(t.begin() + (D - i - j),
                                           t.begin() + (D - i));
            F2Vec w = A.apply_mu(j, inner);
            for (std::size_t g : w.support()) {
                std::vector<std::size_t> outer(t.begin(),
                                               t.begin() + (D - i - j));
                outer.push_back(g);
                outer.insert(outer.end(), t.begin() + (D - i), t.end());
                residual ^= A.apply_mu(D - j + 1, outer);
            }
        }
    }
    return residual;
}

std::optional<RelationViolation> check_relations(const AInftyAlgebra& A) {
    const RSpace& V = A.space();
    std::size_t D_top = 2 * static_cast<std::size_t>(A.d_max()) - 1;
    for (std::size_t D = 1; D <= D_top; ++D) {
        std::vector<RSpace> dom(D, V);
        auto tuples = composable_tuples(dom);
        std::sort(tuples.begin(), tuples.end());
        for (const auto& t : tuples) {
            F2Vec residual = relation_residual(A, D, t);
            if (!residual.is_zero())
                return RelationViolation{D, t, residual};
        }
    }
    return std::nullopt;
}

namespace {

std::vector<Generator> extended_gens(const RSpace& bar, int m) {
    std::vector<Generator> gens;
    for (int i = 1; i <= m; ++i) {
        std::string name = "e" + std::to_string(i);
        while (bar.has(name)) name += "_u";
        gens.push_back({name, i, i, 0});
    }
    for (const Generator& g : bar.gens()) gens.push_back(g);
    return gens;
}

}  // namespace

UnitalAInftyAlgebra::UnitalAInftyAlgebra(AInftyAlgebra base)
    : base_(std::move(base)),
      extended_(base_.space().idempotents(),
                extended_gens(base_.space(), base_.space().idempotents())) {}

UnitalAInftyAlgebra adjoin_units(const AInftyAlgebra& abar) {
    if (auto v = check_relations(abar))
        throw InputError("adjoin_units: " + v->describe(abar.space()));
    return UnitalAInftyAlgebra(abar);
}

F2Vec UnitalAInftyAlgebra::embed(const F2Vec& bar_vec) const {
    F2Vec out = extended_.zero();
    for (std::size_t i : bar_vec.support()) out.set(bar_index(i), true);
    return out;
}

F2Vec UnitalAInftyAlgebra::bar_part(const F2Vec& ext_vec) const {
    F2Vec out = base_.space().zero();
    for (std::size_t i : ext_vec.support())
        if (!is_unit(i)) out.set(i - m(), true);
    return out;
}

F2Vec UnitalAInftyAlgebra::mu_ext(const std::vector<std::size_t>& tuple) const {
    std::size_t d = tuple.size();
    if (d == 0) throw InputError("mu_ext: arity must be >= 1");
    std::vector<RSpace> dom(d, extended_);
    if (!MultiMap::composable(dom, tuple)) return extended_.zero();
    std::size_t units = 0;
    for (std::size_t idx : tuple)
        if (is_unit(idx)) ++units;
    if (d == 1) {
        if (units) return extended_.zero();
        return embed(base_.apply_mu(1, {tuple[0] - m()}));
    }
    if (d == 2) {
        // composability already forces matching idempotents, so
        // mu^2(e_i, a) = a and mu^2(a, e_i) = a on the nose
        if (is_unit(tuple[0])) return extended_.unit_vec(tuple[1]);
        if (is_unit(tuple[1])) return extended_.unit_vec(tuple[0]);
        return embed(base_.apply_mu(2, {tuple[0] - m(), tuple[1] - m()}));
    }
    if (units) return extended_.zero();
    std::vector<std::size_t> bar;
    for (std::size_t idx : tuple) bar.push_back(idx - m());
    return embed(base_.apply_mu(d, bar));
}

F2Vec UnitalAInftyAlgebra::mu_ext_linear(const std::vector<F2Vec>& args) const {
    F2Vec acc = extended_.zero();
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& a : args) {
        if (a.size() != extended_.dim())
            throw InputError("mu_ext_linear: dimension mismatch");
        supports.push_back(a.support());
        if (supports.back().empty()) return acc;
    }
    std::vector<std::size_t> tuple(args.size());
    std::vector<std::size_t> pos(args.size(), 0);
    while (true) {
        for (std::size_t k = 0; k < args.size(); ++k) tuple[k] = supports[k][pos[k]];
        acc ^= mu_ext(tuple);
        std::size_t k = args.size();
        while (k > 0) {
            --k;
            if (++pos[k] < supports[k].size()) break;
            pos[k] = 0;
            if (k == 0) return acc;
        }
    }
}

SlotHomology::SlotHomology(const RSpace& ambient, const MultiMap& d1,
                           const std::string& prefix)
    : ambient_(ambient) {
    if (d1.arity() != 1 || !(d1.codomain() == ambient))
        throw InputError("SlotHomology: differential shape mismatch");
    std::size_t n = ambient.dim();
    d1_ = F2Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        F2Vec col = d1.apply({j});
        for (std::size_t r : col.support()) d1_.set(r, j, true);
    }
    if (!d1_.multiply(d1_).is_zero())
        throw InputError("SlotHomology: differential does not square to zero");

    std::vector<Generator> h_gens;
    int m = ambient.idempotents();
    for (int s = 1; s <= m; ++s) {
        for (int t = 1; t <= m; ++t) {
            std::vector<std::size_t> idxs = ambient.slot(s, t);
            if (idxs.empty()) continue;
            std::size_t k = idxs.size();
            F2Matrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    sub.set(a, b, d1_.get(idxs[a], idxs[b]));
            auto ker = kernel_basis(sub);
            auto im = image_basis(sub);
            auto reps = quotient_basis(im, ker, k);
            auto lift_slot = [&](const F2Vec& v) {
                F2Vec out(n);
                for (std::size_t a : v.support()) out.set(idxs[a], true);
                return out;
            };
            for (std::size_t r = 0; r < reps.size(); ++r) {
                h_gens.push_back({prefix + std::to_string(s) + "_" +
                                      std::to_string(t) + "_" + std::to_string(r),
                                  s, t, 0});
                reps_.push_back(lift_slot(reps[r]));
            }
            for (const auto& v : im) im_basis_.push_back(lift_slot(v));
        }
    }
    h_ = RSpace(m, h_gens);
    std::vector<F2Vec> cols = reps_;
    cols.insert(cols.end(), im_basis_.begin(), im_basis_.end());
    decomp_ = F2Matrix::from_columns(cols, n);
}

std::map<std::pair<int, int>, std::size_t> SlotHomology::slot_dims() const {
    std::map<std::pair<int, int>, std::size_t> out;
    for (const Generator& g : h_.gens()) ++out[{g.src, g.tgt}];
    return out;
}

F2Vec SlotHomology::lift(const F2Vec& h_vec) const {
    F2Vec out = ambient_.zero();
    for (std::size_t i : h_vec.support()) out ^= reps_[i];
    return out;
}

bool SlotHomology::is_cycle(const F2Vec& v) const {
    return d1_.apply(v).is_zero();
}

F2Vec SlotHomology::project(const F2Vec& v) const {
    if (!is_cycle(v)) throw InputError("SlotHomology: project of a non-cycle");
    auto x = solve(decomp_, v);
    if (!x) throw InputError("SlotHomology: cycle outside ker (internal)");
    F2Vec out = h_.zero();
    for (std::size_t i = 0; i < h_.dim(); ++i) out.set(i, x->get(i));
    return out;
}

HomologyAlgebra homology_algebra(const UnitalAInftyAlgebra& A) {
    const RSpace& E = A.extended();
    MultiMap d1({E}, E);
    for (std::size_t i = 0; i < E.dim(); ++i) d1.add_entry({i}, A.mu_ext({i}));
    HomologyAlgebra out;
    out.homology = SlotHomology(E, d1, "h");
    out.H = out.homology.H();
    out.product = MultiMap({out.H, out.H}, out.H);
    for (const auto& t : composable_tuples({out.H, out.H})) {
        F2Vec prod = A.mu_ext_linear(
            {out.homology.lift(out.H.unit_vec(t[0])),
             out.homology.lift(out.H.unit_vec(t[1]))});
        out.product.add_entry(t, out.homology.project(prod));
    }
    for (int i = 1; i <= A.m(); ++i)
        out.unit_classes.push_back(
            out.homology.project(E.unit_vec(A.unit_index(i))));
    return out;
}

}  // namespace fukalg
