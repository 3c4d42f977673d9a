// Finite R-bimodules over R = K^m and sparse multilinear maps between them.
//
// A generator carries a source/target idempotent pair (src, tgt), meaning it
// spans a line inside e_tgt X e_src.  A tuple of generators is listed
// leftmost-first, i.e. (g_d, ..., g_1); it is composable when
// src(g_{k+1}) = tgt(g_k), which in list order reads
// src(list[k]) == tgt(list[k+1]).

#pragma once

#include "f2linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace fukalg {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Generator {
    std::string name;
    int src = 1;
    int tgt = 1;
    int deg = 0;

    bool operator==(const Generator& o) const {
        return name == o.name && src == o.src && tgt == o.tgt && deg == o.deg;
    }
};

class RSpace {
public:
    RSpace() : m_(1) {}
    RSpace(int m, std::vector<Generator> gens);

    int idempotents() const { return m_; }
    std::size_t dim() const { return gens_.size(); }
    const std::vector<Generator>& gens() const { return gens_; }
    const Generator& gen(std::size_t i) const { return gens_[i]; }

    // Index by name; throws InputError if absent.
    std::size_t index_of(const std::string& name) const;
    bool has(const std::string& name) const { return by_name_.count(name) > 0; }

    // Generator indices in slot e_tgt X e_src.
    std::vector<std::size_t> slot(int src, int tgt) const;

    F2Vec zero() const { return F2Vec(dim()); }
    F2Vec unit_vec(std::size_t i) const;

    // Keep only coordinates of generators whose (src, tgt) matches.
    F2Vec project_slot(const F2Vec& v, int src, int tgt) const;

    bool operator==(const RSpace& o) const {
        return m_ == o.m_ && gens_ == o.gens_;
    }

private:
    int m_;
    std::vector<Generator> gens_;
    std::map<std::string, std::size_t> by_name_;
};

// Sparse F2 multilinear map between R-bimodule spaces.
//
// Domain factors are tensored over R: entries keyed by non-composable tuples
// are rejected at insertion, and apply() returns zero for them.  Every
// nonzero output generator must respect the R-bimodule map condition
// src(out) = src(rightmost input), tgt(out) = tgt(leftmost input).
class MultiMap {
public:
    MultiMap() = default;
    MultiMap(std::vector<RSpace> domain, RSpace codomain)
        : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

    const std::vector<RSpace>& domain() const { return domain_; }
    const RSpace& codomain() const { return codomain_; }
    std::size_t arity() const { return domain_.size(); }

    static bool composable(const std::vector<RSpace>& domain,
                           const std::vector<std::size_t>& tuple);
    bool composable(const std::vector<std::size_t>& tuple) const {
        return composable(domain_, tuple);
    }

    // Adds `value` (XOR) to the entry at `tuple`.  Rejects malformed input:
    // wrong arity, non-composable tuple, or value violating the bimodule
    // map condition.
    void add_entry(const std::vector<std::size_t>& tuple, const F2Vec& value);
    void add_entry_names(const std::vector<std::string>& names,
                         const std::vector<std::string>& out_names);

    // Value on a generator tuple; zero for absent or non-composable tuples.
    F2Vec apply(const std::vector<std::size_t>& tuple) const;

    // Multilinear extension to coordinate vectors, one per slot.
    F2Vec apply_linear(const std::vector<F2Vec>& args) const;

    const std::map<std::vector<std::size_t>, F2Vec>& entries() const {
        return entries_;
    }
    bool is_zero() const;

    bool operator==(const MultiMap& o) const {
        return domain_ == o.domain_ && codomain_ == o.codomain_ &&
               entries_ == o.entries_;
    }

private:
    std::vector<RSpace> domain_;
    RSpace codomain_;
    std::map<std::vector<std::size_t>, F2Vec> entries_;
};

// All composable generator tuples of the given length (leftmost-first order).
std::vector<std::vector<std::size_t>> composable_tuples(
    const std::vector<RSpace>& domain);

}  // namespace fukalg
