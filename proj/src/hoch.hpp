// Hochschild cochain complexes of Abar with bimodule coefficients, the
// chain maps X and Y into bimodule hom complexes, and extraction of the
// extension class of a connecting map.

#pragma once

#include "extcalc.hpp"
#include "homcomplex.hpp"

namespace fukalg {

// A cochain in CC(Abar, P): one component per input length d < m.
// The length-0 component is a vector in the diagonal slots of P.
struct HochschildCochain {
    AInftyBimodule coeff;
    F2Vec comp0;                  // element of sum_k e_k P e_k
    std::vector<MultiMap> comps;  // comps[d-1]: Abar^{x d} -> P, 1 <= d < m
};

// Zero cochain with correctly shaped components; requires directed Abar.
HochschildCochain zero_cochain(const AInftyBimodule& P);

// Throws InputError when comp0 leaves the diagonal slots or a component
// has the wrong shape.
void validate_cochain(const HochschildCochain& phi);

// Hochschild differential; (delta delta phi) = 0.
HochschildCochain cc_differential(const HochschildCochain& phi);

// The finite complex CC(Abar, P) as a based F2 complex.
class CCComplex {
public:
    explicit CCComplex(const AInftyBimodule& P);

    std::size_t dim() const { return basis_.size(); }
    const F2Matrix& delta() const { return delta_; }

    F2Vec to_vec(const HochschildCochain& phi) const;
    HochschildCochain from_vec(const F2Vec& v) const;

    std::size_t homology_dim() const;

private:
    struct BasisElt {
        int d;  // input length; d = 0 entries have an empty tuple
        std::vector<std::size_t> tuple;
        std::size_t out;
    };
    AInftyBimodule P_;
    std::vector<BasisElt> basis_;
    std::map<std::tuple<int, std::vector<std::size_t>, std::size_t>,
             std::size_t>
        index_;
    F2Matrix delta_;
};

// Total homology dimensions of the two finite complexes.
std::size_t cc_homology_dim(const AInftyBimodule& P);
std::size_t hom_homology_dim(const AInftyBimodule& P, const AInftyBimodule& Q);

// The chain map X: CC(Abar, P) -> hom(A, P), where A = diagonal(UA) and
// the module argument is consumed through the strictly unital extension
// of P (units die except in the two arity-(1|1|0)/(0|1|1) identity cases,
// of which only the left one can occur here).
BimoduleHom X_map(const UnitalAInftyAlgebra& UA, const HochschildCochain& phi);

// Y: CC(Abar, P^v) -> hom(P^vv, A^v), realized as the dualization of X.
// The source is dual(psi.coeff) and the target is dual_diagonal(UA).
BimoduleHom Y_map(const UnitalAInftyAlgebra& UA, const HochschildCochain& psi);

// Extension class of a connecting map delta: quot -> sub with vanishing
// linear term, as a 1-cocycle in the two-sided bar complex of H(A) with
// coefficients hom(H(quot), H(sub)).
struct ExtensionClass {
    BarComplex complex;  // bar complex of (H, H(quot), H(sub))
    F2Vec cocycle;       // element of C^1
    bool trivial;
};
ExtensionClass extension_class(const BimoduleSES& ses, const BimoduleHom& delta,
                               const HomologyAlgebra& H);

}  // namespace fukalg
