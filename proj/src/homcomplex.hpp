// The dg category of bimodules over a directed Abar: hom complexes,
// homotopy decision, cones, quasi-isomorphisms, connecting maps of short
// exact sequences, and bar tensor products.

#pragma once

#include "bimodule.hpp"

#include <tuple>

namespace fukalg {

// A pre-homomorphism P -> Q: components phi^{q|1|p} with domain
// [Abar^q, P, Abar^p] and codomain Q.  Closed (delta phi = 0) pre-homs are
// the bimodule homomorphisms.
class BimoduleHom {
public:
    BimoduleHom() = default;
    BimoduleHom(AInftyBimodule source, AInftyBimodule target);

    const AInftyBimodule& source() const { return source_; }
    const AInftyBimodule& target() const { return target_; }

    MultiMap& comp(int q, int p);
    const MultiMap* comp_if(int q, int p) const;
    const std::map<std::pair<int, int>, MultiMap>& comps() const {
        return comps_;
    }

    F2Vec apply(int q, int p, const std::vector<std::size_t>& tuple) const;
    F2Vec apply_mid(int q, int p, const std::vector<std::size_t>& left,
                    const F2Vec& mid, const std::vector<std::size_t>& right) const;

    bool is_zero() const;

private:
    AInftyBimodule source_, target_;
    std::map<std::pair<int, int>, MultiMap> comps_;
};

// Identity homomorphism and the strict hom with a single linear component.
BimoduleHom identity_hom(const AInftyBimodule& P);
BimoduleHom strict_hom(const AInftyBimodule& P, const AInftyBimodule& Q,
                       const F2Matrix& linear);

// Hom-complex differential (three sums over F2); delta^2 = 0.
BimoduleHom hom_delta(const BimoduleHom& phi);

// Composition (psi compose phi)^{q|1|p} =
//   sum psi^{q-s|1|p-r}(..., phi^{s|1|r}(..., x, ...), ...).
BimoduleHom compose(const BimoduleHom& psi, const BimoduleHom& phi);

// The finite hom complex of pre-homomorphisms P -> Q (requires directed
// Abar, which bounds q, p < m).
class HomComplex {
public:
    HomComplex(const AInftyBimodule& P, const AInftyBimodule& Q);

    std::size_t dim() const { return basis_.size(); }
    const F2Matrix& delta() const { return delta_; }

    F2Vec to_vec(const BimoduleHom& phi) const;
    BimoduleHom from_vec(const F2Vec& v) const;

    std::size_t homology_dim() const;

private:
    struct BasisElt {
        int q, p;
        std::vector<std::size_t> tuple;
        std::size_t out;
    };
    AInftyBimodule P_, Q_;
    std::vector<BasisElt> basis_;
    std::map<std::tuple<int, int, std::vector<std::size_t>, std::size_t>,
             std::size_t>
        index_;
    F2Matrix delta_;
};

// Homotopy h with delta h = phi + psi, or nullopt when the classes differ.
std::optional<BimoduleHom> decide_homotopic(const BimoduleHom& phi,
                                            const BimoduleHom& psi);

// Mapping cone of a closed homomorphism, with its triangle maps.
struct ConeResult {
    AInftyBimodule cone;   // target + source as a space
    BimoduleHom incl;      // target -> cone
    BimoduleHom proj;      // cone -> source
};
ConeResult cone(const BimoduleHom& phi);

// Quasi-isomorphism test via the linear term on homology.
bool quasi_iso(const BimoduleHom& phi);

// Quasi-inverse with certifying homotopies; refuses on non-quasi-isos.
struct QuasiInverse {
    BimoduleHom inverse;  // psi: Q -> P, closed
    BimoduleHom h_source; // delta h_source = compose(psi, phi) + id_P
    BimoduleHom h_target; // delta h_target = compose(phi, psi) + id_Q
};
QuasiInverse quasi_inverse(const BimoduleHom& phi);

// Dual homomorphism dual(Q) -> dual(P) of phi: P -> Q, with the algebra
// blocks trading sides as in the dual bimodule convention.
BimoduleHom dual_hom(const BimoduleHom& phi);

// Connecting map of a short exact sequence, built from a splitting made
// compatible with the differential: Delta: quot -> sub is closed and its
// linear component vanishes identically.  A nonzero seed picks a different
// compatible splitting (the class of the result does not depend on it).
BimoduleHom connecting_map(const BimoduleSES& ses, unsigned splitting_seed = 0);

// B^c = Cone(B^+ -> B/F^c) for the given ordinates and cutoff.
struct BcResult {
    AInftyBimodule bc;
    std::size_t f_dim;  // dim F^c
};
BcResult bc_family(const AInftyBimodule& B, const std::vector<F2Vec>& u,
                   const std::vector<double>& ordinates, double c);

// Bar tensor product P (x)_Abar Q with the outer bimodule structure
// (one-sided: mu^{q|1|p} vanishes unless q = 0 or p = 0).  Requires a
// directed algebra, which makes the bar complex finite.
AInftyBimodule tensor_over(const AInftyBimodule& P, const AInftyBimodule& Q);

}  // namespace fukalg
