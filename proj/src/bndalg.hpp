// Algebras with boundary (A, D) over F2 with integer gradings, and the
// associated Frobenius dga on A + A^dual.

#pragma once

#include "ainfty.hpp"

#include <map>

namespace fukalg {

// Finite graded unital associative algebra (single idempotent) together
// with a distinguished tensor D of degree n+1, stored as the matrix
// D[s][t] = coefficient of b_s (x) b_t.
struct BoundaryAlgebra {
    RSpace space;
    MultiMap product;  // A (x) A -> A, leftmost-first
    F2Vec unit;
    int n = 0;
    F2Matrix D;
};

// Shape, grading, unitality, associativity; throws InputError.
void validate_boundary_input(const BoundaryAlgebra& A);

// Axioms on D: degree n+1, symmetry, and centrality in both forms
// (a.D = D.a on either factor pair); nullopt when all hold.
std::optional<std::string> check_boundary_axioms(const BoundaryAlgebra& A);

// The boundary Frobenius dga on A + A^dual (dual generator of b has
// degree n - deg b): trivial-extension product, differential reading the
// dual component through D, Frobenius functional evaluating at the unit.
struct FrobeniusDGA {
    RSpace space;  // A generators first, then duals (name + "^")
    MultiMap product;
    MultiMap d;       // arity 1, degree +1
    F2Vec integral;   // functional as a coordinate vector
    std::size_t a_dim = 0;

    // pairing <x, y> = integral(x y)
    bool pair(const F2Vec& x, const F2Vec& y) const;
};

// Refuses (throws InputError) when the axioms fail; asserts d^2 = 0, the
// derivation property, pairing compatibility <dx,y> = <x,dy>, and
// integral(dx) = 0 on the result.
FrobeniusDGA boundary_dga(const BoundaryAlgebra& A);

// Homology of the dga with its induced (unital associative) product and
// dimensions per degree.
struct GradedHomology {
    SlotHomology homology;
    std::map<int, std::size_t> dims;
    MultiMap product;  // [H, H] -> H
};
GradedHomology dga_homology(const FrobeniusDGA& B);

}  // namespace fukalg
