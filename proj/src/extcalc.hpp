// Ext groups of finite bimodules over a unital associative algebra H with
// directed augmentation ideal, via the finite two-sided bar resolution.

#pragma once

#include "ainfty.hpp"

namespace fukalg {

// Unital associative algebra over R = K^m whose units are single basis
// coordinates and whose augmentation ideal (the non-unit generators) is
// directed.  This is what the bar resolution needs to terminate.
struct HAlgebra {
    RSpace space;
    MultiMap product;  // H (x) H -> H, leftmost-first
    std::vector<std::size_t> unit_idx;  // unit coordinate per idempotent
};

// Validates units, associativity, unitality, and directedness of the
// ideal; throws InputError on failure.
void validate_h_algebra(const HAlgebra& H);

// Conversion from a computed homology algebra; refuses when a unit class
// is not a single coordinate.
HAlgebra h_algebra(const HomologyAlgebra& H);

// Finite bimodule over H: left action H (x) M -> M, right M (x) H -> M.
struct HBimodule {
    RSpace space;
    MultiMap left, right;
};

void validate_h_bimodule(const HAlgebra& H, const HBimodule& M);

// The cochain complex C^k = sum_{i+j=k} hom_{RxR}(Hbar^i (x) M (x) Hbar^j, N)
// computing Ext^k_{H (x) H^opp}(M, N), for k = 0..3.  When normalized is
// false the full H is used in the tensor slots instead of the ideal Hbar.
// Construction asserts exactness of the underlying bar resolution.
class BarComplex {
public:
    BarComplex(const HAlgebra& H, const HBimodule& M, const HBimodule& N,
               bool normalized = true);

    static constexpr int k_max = 3;
    std::size_t dim(int k) const;
    const F2Matrix& delta(int k) const;  // C^k -> C^{k+1}, k = 0..2

    // Basis index of the C^k element with the given argument tuple
    // (leftmost-first; the module argument sits at position i) and output.
    std::size_t index_of(int i, int j, const std::vector<std::size_t>& tuple,
                         std::size_t out) const;

    std::size_t ext_dim(int k) const;        // k = 0..2
    bool is_zero_class(const F2Vec& c1) const;  // c1 in C^1, must be closed

private:
    struct BasisElt {
        int i, j;
        std::vector<std::size_t> tuple;
        std::size_t out;
    };
    HAlgebra H_;
    HBimodule M_, N_;
    std::vector<std::size_t> bar_;  // generator indices spanning the tensor slot
    std::vector<BasisElt> basis_[k_max + 1];
    std::map<std::tuple<int, int, std::vector<std::size_t>, std::size_t>,
             std::size_t>
        index_[k_max + 1];
    F2Matrix delta_[k_max];
    void check_resolution() const;
};

std::size_t ext_dim(const HAlgebra& H, const HBimodule& M, const HBimodule& N,
                    int k);

// Diagonal bimodule H over itself, and its linear dual.
HBimodule h_diagonal(const HAlgebra& H);
HBimodule h_dual(const HAlgebra& H, const HBimodule& M);

// dim of the space of H-bimodule maps M -> N by direct linear solve
// (independent cross-check for ext_dim(..., 0)).
std::size_t intertwiner_dim(const HAlgebra& H, const HBimodule& M,
                            const HBimodule& N);

}  // namespace fukalg
