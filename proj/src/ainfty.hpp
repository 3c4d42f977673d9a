// Directed A-infinity algebras over R = K^m with F2 coefficients.
//
// Operations mu^d take d inputs listed leftmost-first (a_d, ..., a_1).
// Structures are finitely supported: mu^d = 0 for d > d_max, and relations
// are checked for every arity D <= 2*d_max - 1, beyond which all terms
// vanish identically.

#pragma once

#include "rspace.hpp"

#include <optional>

namespace fukalg {

struct RelationViolation {
    std::size_t arity = 0;
    std::vector<std::size_t> tuple;
    F2Vec residual;
    std::string describe(const RSpace& space) const;
};

class AInftyAlgebra {
public:
    AInftyAlgebra() : directed_(false), d_max_(1) {}
    AInftyAlgebra(RSpace space, bool directed, int d_max);

    const RSpace& space() const { return space_; }
    bool directed() const { return directed_; }
    int d_max() const { return d_max_; }

    // Structure map of arity d (1 <= d <= d_max); the zero map by default.
    const MultiMap& mu(int d) const;
    MultiMap& mu(int d);

    // mu^d on a generator tuple, zero when d > d_max.
    F2Vec apply_mu(std::size_t d, const std::vector<std::size_t>& tuple) const;

private:
    RSpace space_;
    bool directed_;
    int d_max_;
    std::vector<MultiMap> mu_;  // mu_[d-1] has arity d
};

// A-infinity relation at every arity D <= 2*d_max - 1:
//   sum_{i,j} mu^{D-j+1}(a_D,...,a_{i+j+1}, mu^j(a_{i+j},...,a_{i+1}),
//             a_i,...,a_1) = 0.
// Returns the first violation in lexicographic (D, tuple) order, if any.
std::optional<RelationViolation> check_relations(const AInftyAlgebra& A);

// Residual of the relation at one arity and tuple (zero iff it holds there).
F2Vec relation_residual(const AInftyAlgebra& A, std::size_t D,
                        const std::vector<std::size_t>& tuple);

// A = R + Abar with strict units adjoined: mu^1(e_i) = 0,
// mu^2(e_i, a) = e_i a, mu^2(a, e_i) = a e_i, and units annihilate every
// mu^d with d > 2.  Units are never stored in the bar part; they live as
// extra generators of the extended space only.
class UnitalAInftyAlgebra {
public:
    explicit UnitalAInftyAlgebra(AInftyAlgebra base);

    const AInftyAlgebra& base() const { return base_; }
    int m() const { return base_.space().idempotents(); }

    // Extended space R + Abar: units first (indices 0..m-1), then the
    // generators of Abar in their original order.
    const RSpace& extended() const { return extended_; }
    bool is_unit(std::size_t idx) const { return idx < static_cast<std::size_t>(m()); }
    std::size_t unit_index(int i) const { return static_cast<std::size_t>(i - 1); }
    std::size_t bar_index(std::size_t bar_i) const { return bar_i + m(); }

    F2Vec embed(const F2Vec& bar_vec) const;    // Abar -> extended
    F2Vec bar_part(const F2Vec& ext_vec) const; // extended -> Abar

    // Unital mu^d on generator tuples of the extended space; implements the
    // strict-unit conventions exactly.
    F2Vec mu_ext(const std::vector<std::size_t>& tuple) const;
    F2Vec mu_ext_linear(const std::vector<F2Vec>& args) const;

private:
    AInftyAlgebra base_;
    RSpace extended_;
};

// adjoin_units refuses (throws InputError with the violation report) when
// the relations fail.
UnitalAInftyAlgebra adjoin_units(const AInftyAlgebra& abar);

// ker/im data of a square-zero arity-1 map, computed slotwise with
// deterministic representatives.
class SlotHomology {
public:
    SlotHomology() = default;
    SlotHomology(const RSpace& ambient, const MultiMap& d1,
                 const std::string& prefix);

    const RSpace& ambient() const { return ambient_; }
    const RSpace& H() const { return h_; }
    std::size_t dim() const { return h_.dim(); }
    std::map<std::pair<int, int>, std::size_t> slot_dims() const;

    // Cycle representative of an H coordinate vector, in the ambient space.
    F2Vec lift(const F2Vec& h_vec) const;
    const F2Vec& rep(std::size_t i) const { return reps_[i]; }

    bool is_cycle(const F2Vec& v) const;
    // Class of a cycle; throws InputError if v is not a cycle.
    F2Vec project(const F2Vec& v) const;

private:
    RSpace ambient_;
    RSpace h_;
    std::vector<F2Vec> reps_;       // cycle representatives
    std::vector<F2Vec> im_basis_;   // basis of im d1
    F2Matrix d1_;                   // ambient matrix of the differential
    F2Matrix decomp_;               // [reps | im_basis] as columns
};

// The homology algebra H(A) of a unital A-infinity algebra: unital
// associative, computed on the extended space R + Abar.
struct HomologyAlgebra {
    SlotHomology homology;       // over the extended space
    RSpace H;                    // = homology.H()
    MultiMap product;            // [H, H] -> H, induced by mu^2
    std::vector<F2Vec> unit_classes;  // class of e_i in H coords, i = 1..m
};

HomologyAlgebra homology_algebra(const UnitalAInftyAlgebra& A);

}  // namespace fukalg
