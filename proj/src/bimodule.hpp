// A-infinity bimodules over a fixed algebra Abar.
//
// Operations mu^{q|1|p} take q left algebra inputs, one module input, and
// p right algebra inputs, all listed leftmost-first:
//   (b_q, ..., b_1, x, a_p, ..., a_1).

#pragma once

#include "ainfty.hpp"

#include <utility>

namespace fukalg {

class AInftyBimodule;

struct BimoduleViolation {
    int q = 0, p = 0;
    std::vector<std::size_t> tuple;
    F2Vec residual;
    std::string describe(const AInftyBimodule& P) const;
};

class AInftyBimodule {
public:
    AInftyBimodule() = default;
    AInftyBimodule(AInftyAlgebra alg, RSpace space)
        : alg_(std::move(alg)), space_(std::move(space)) {}

    const AInftyAlgebra& alg() const { return alg_; }
    const RSpace& space() const { return space_; }

    // Domain [Abar^q, P, Abar^p] of mu^{q|1|p}.
    std::vector<RSpace> domain(int q, int p) const;

    // Structure map accessors; absent (q,p) means the zero map.
    MultiMap& op(int q, int p);
    const MultiMap* op_if(int q, int p) const;
    const std::map<std::pair<int, int>, MultiMap>& ops() const { return ops_; }

    // mu^{q|1|p} on a generator tuple (zero when the map is absent).
    F2Vec apply(int q, int p, const std::vector<std::size_t>& tuple) const;
    // Same with an arbitrary vector in the module slot.
    F2Vec apply_mid(int q, int p, const std::vector<std::size_t>& left,
                    const F2Vec& mid, const std::vector<std::size_t>& right) const;

    int max_q() const;
    int max_p() const;

private:
    AInftyAlgebra alg_;
    RSpace space_;
    std::map<std::pair<int, int>, MultiMap> ops_;
};

// The bimodule A-infinity relation (three sums, F2) at every relevant
// arity pair; first violation in lexicographic (q+p, q, tuple) order.
std::optional<BimoduleViolation> check_bimodule(const AInftyBimodule& P);

// Residual of the relation at one (q|1|p) and tuple.
F2Vec bimodule_residual(const AInftyBimodule& P, int q, int p,
                        const std::vector<std::size_t>& tuple);

// Diagonal bimodule A = R + Abar with mu^{q|1|p} = mu^{p+q+1} of the
// unital algebra, and its dual.
AInftyBimodule diagonal(const UnitalAInftyAlgebra& A);
AInftyBimodule dual_diagonal(const UnitalAInftyAlgebra& A);

// Dual bimodule: slots transposed; structure defined by
//   <mu_{P^v}^{q|1|p}(b_q..b_1, xi, a_p..a_1), x>
//     = <xi, mu_P^{p|1|q}(a_p..a_1, x, b_q..b_1)>
// (the two algebra blocks trade sides, keeping their internal order; this
// is the unique slot-consistent F2 convention, and dual(dual(P)) = P).
AInftyBimodule dual(const AInftyBimodule& P);

AInftyBimodule direct_sum(const AInftyBimodule& P, const AInftyBimodule& Q);

// Sub-bimodule spanned by the given slot-homogeneous vectors; refuses
// (throws InputError) if the span is not closed under the operations.
AInftyBimodule sub_bimodule(const AInftyBimodule& B,
                            const std::vector<Generator>& gens,
                            const std::vector<F2Vec>& vecs);

// Short exact sequence 0 -> sub -> total -> quot -> 0 with a chosen
// linear splitting sigma (quotient representatives in the total space).
struct BimoduleSES {
    AInftyBimodule total, sub, quot;
    std::vector<F2Vec> incl;   // sub generator -> vector in total
    std::vector<F2Vec> sigma;  // quot generator -> representative in total
    // coordinates of v in the decomposition incl-span + sigma-span
    F2Vec sub_coords(const F2Vec& v) const;
    F2Vec quot_coords(const F2Vec& v) const;
};

// Quotient of B by the sub-bimodule spanned by sub_vecs (assumed closed).
BimoduleSES quotient_by(const AInftyBimodule& B,
                        const std::vector<Generator>& sub_gens,
                        const std::vector<F2Vec>& sub_vecs);

// B^+ = sum_i K u_i + sum_{i<j} e_j B e_i, with B^- the quotient.
// Each u_i must be a cocycle in e_i B e_i; otherwise refuses.
BimoduleSES b_plus_minus(const AInftyBimodule& B, const std::vector<F2Vec>& u);

// F^c = sum over slots with o_tgt - o_src < c; refuses when c equals a
// difference of ordinates.
AInftyBimodule filtration_sub(const AInftyBimodule& B,
                              const std::vector<double>& ordinates, double c,
                              std::vector<Generator>* gens_out = nullptr,
                              std::vector<F2Vec>* vecs_out = nullptr);

// Slot homology of the module differential mu^{0|1|0}.
SlotHomology module_homology(const AInftyBimodule& P,
                             const std::string& prefix = "h");

}  // namespace fukalg
