#include "rspace.hpp"

namespace fukalg {

RSpace::RSpace(int m, std::vector<Generator> gens)
    : m_(m), gens_(std::move(gens)) {
    if (m_ < 1) throw InputError("RSpace: m must be >= 1");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        if (g.src < 1 || g.src > m_ || g.tgt < 1 || g.tgt > m_)
            throw InputError("RSpace: generator '" + g.name +
                             "' has idempotent outside 1.." + std::to_string(m_));
        if (by_name_.count(g.name))
            throw InputError("RSpace: duplicate generator name '" + g.name + "'");
        by_name_[g.name] = i;
    }
}

std::size_t RSpace::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw InputError("RSpace: unknown generator '" + name + "'");
    return it->second;
}

std::vector<std::size_t> RSpace::slot(int src, int tgt) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].src == src && gens_[i].tgt == tgt) out.push_back(i);
    return out;
}

F2Vec RSpace::unit_vec(std::size_t i) const {
    F2Vec v(dim());
    v.set(i, true);
    return v;
}

F2Vec RSpace::project_slot(const F2Vec& v, int src, int tgt) const {
    F2Vec out(dim());
    for (std::size_t i : v.support())
        if (gens_[i].src == src && gens_[i].tgt == tgt) out.set(i, true);
    return out;
}

bool MultiMap::composable(const std::vector<RSpace>& domain,
                          const std::vector<std::size_t>& tuple) {
    for (std::size_t k = 0; k + 1 < tuple.size(); ++k) {
        const Generator& left = domain[k].gen(tuple[k]);
        const Generator& right = domain[k + 1].gen(tuple[k + 1]);
        if (left.src != right.tgt) return false;
    }
    return true;
}

void MultiMap::add_entry(const std::vector<std::size_t>& tuple, const F2Vec& value) {
    if (tuple.size() != domain_.size())
        throw InputError("MultiMap: tuple arity mismatch");
    for (std::size_t k = 0; k < tuple.size(); ++k)
        if (tuple[k] >= domain_[k].dim())
            throw InputError("MultiMap: generator index out of range");
    if (value.size() != codomain_.dim())
        throw InputError("MultiMap: value dimension mismatch");
    if (!composable(tuple))
        throw InputError("MultiMap: entry keyed by non-composable tuple");
    if (!tuple.empty()) {
        int in_src = domain_.back().gen(tuple.back()).src;
        int in_tgt = domain_.front().gen(tuple.front()).tgt;
        for (std::size_t i : value.support()) {
            const Generator& h = codomain_.gen(i);
            if (h.src != in_src || h.tgt != in_tgt)
                throw InputError("MultiMap: entry output '" + h.name +
                                 "' violates the R-bimodule map condition");
        }
    } else {
        // arity 0: output must live in a diagonal slot
        for (std::size_t i : value.support()) {
            const Generator& h = codomain_.gen(i);
            if (h.src != h.tgt)
                throw InputError("MultiMap: arity-0 output '" + h.name +
                                 "' must lie in a diagonal slot");
        }
    }
    auto it = entries_.find(tuple);
    if (it == entries_.end()) {
        if (!value.is_zero()) entries_[tuple] = value;
    } else {
        it->second ^= value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

void MultiMap::add_entry_names(const std::vector<std::string>& names,
                               const std::vector<std::string>& out_names) {
    if (names.size() != domain_.size())
        throw InputError("MultiMap: tuple arity mismatch");
    std::vector<std::size_t> tuple;
    for (std::size_t k = 0; k < names.size(); ++k)
        tuple.push_back(domain_[k].index_of(names[k]));
    F2Vec v = codomain_.zero();
    for (const auto& n : out_names) v.flip(codomain_.index_of(n));
    add_entry(tuple, v);
}

F2Vec MultiMap::apply(const std::vector<std::size_t>& tuple) const {
    if (tuple.size() != domain_.size())
        throw InputError("MultiMap: apply arity mismatch");
    auto it = entries_.find(tuple);
    if (it == entries_.end()) return codomain_.zero();
    return it->second;
}

F2Vec MultiMap::apply_linear(const std::vector<F2Vec>& args) const {
    if (args.size() != domain_.size())
        throw InputError("MultiMap: apply_linear arity mismatch");
    for (std::size_t k = 0; k < args.size(); ++k)
        if (args[k].size() != domain_[k].dim())
            throw InputError("MultiMap: apply_linear slot dimension mismatch");
    F2Vec acc = codomain_.zero();
    std::vector<std::vector<std::size_t>> supports;
    for (const auto& a : args) supports.push_back(a.support());
    std::vector<std::size_t> tuple(args.size());
    // iterate the product of supports
    std::vector<std::size_t> pos(args.size(), 0);
    if (args.empty()) return apply({});
    for (const auto& s : supports) if (s.empty()) return acc;
    while (true) {
        for (std::size_t k = 0; k < args.size(); ++k) tuple[k] = supports[k][pos[k]];
        auto it = entries_.find(tuple);
        if (it != entries_.end()) acc ^= it->second;
        std::size_t k = args.size();
        while (k > 0) {
            --k;
            if (++pos[k] < supports[k].size()) break;
            pos[k] = 0;
            if (k == 0) return acc;
        }
    }
}

bool MultiMap::is_zero() const {
    for (const auto& [k, v] : entries_) if (!v.is_zero()) return false;
    return true;
}

std::vector<std::vector<std::size_t>> composable_tuples(
    const std::vector<RSpace>& domain) {
    std::vector<std::vector<std::size_t>> out;
    if (domain.empty()) {
        out.push_back({});
        return out;
    }
    // Build right-to-left so the chain condition is local: the element
    // pushed for position k must satisfy src(list[k]) == tgt(list[k+1]).
    std::vector<std::size_t> tuple;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.push_back(std::vector<std::size_t>(tuple.rbegin(), tuple.rend()));
            return;
        }
        std::size_t k = remaining - 1;
        for (std::size_t i = 0; i < domain[k].dim(); ++i) {
            if (tuple.empty() ||
                domain[k].gen(i).src == domain[k + 1].gen(tuple.back()).tgt) {
                tuple.push_back(i);
                self(self, remaining - 1);
                tuple.pop_back();
            }
        }
    };
    rec(rec, domain.size());
    return out;
}

}  // namespace fukalg
