// Sturm-Liouville spectra of the boundary-value operator
//   A Y = i dY/dt + a_t Y,  Y(0) in lambda0, Y(1) in lambda1,
// the eigenvalue/winding correspondence, and the index formula
// index(D) = euler characteristic + boundary-line degree for
// Cauchy-Riemann operators on surfaces with strip-like ends.

#pragma once

#include "rspace.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace fukalg {

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boundary lines stored as angles in [0, pi); a_t is either a constant
// multiple of the identity or symmetric 2x2 matrices (axx, axy, ayy)
// sampled on a uniform grid over [0, 1].
struct SLProblem {
    double theta0 = 0.0;
    double theta1 = 0.0;
    bool constant = true;
    double angle0 = 0.0;
    std::vector<std::array<double, 3>> samples;
};

// Shape checks; throws InputError.
void validate_sl(const SLProblem& p);

// Total angle of t -> g_t(lambda0) where g_0 = Id, (dg_t/dt) g_t^{-1} =
// i a_t; one anticlockwise loop around RP^1 counts as pi. Closed form in
// the constant case, fixed-step RK4 on the angle equation otherwise.
double total_angle(const SLProblem& p);

// Angle swept by the solution of (A - mu) Y = 0 started on lambda0;
// strictly decreasing in mu. mu is an eigenvalue exactly when this lands
// in (theta1 - theta0) + pi Z.
double angle_defect(const SLProblem& p, double mu);

struct Eigenvalue {
    double mu;       // eigenvalue
    double winding;  // total angle of the eigenvector path
};

// The k eigenvalues nearest 0 in increasing order, each labeled by the
// winding of its eigenvector; found by bisecting angle_defect against
// the target lattice. Refuses non-transverse inputs (margin 1e-9);
// throws NumericalError when a bracket cannot be pinned down.
std::vector<Eigenvalue> spectrum_near_zero(const SLProblem& p, int k,
                                           double tol = 1e-6);

// The same boundary problem read in the opposite direction: swapped
// lines, a'_t = -a_{1-t}. Its spectrum is the negated one (eigenvector
// paths reverse), and its total angle lies in the same lattice interval
// of (theta0 - theta1) + pi Z as the negated total angle, which is what
// the selection rule in cr_index sees.
SLProblem relabel_output_as_input(const SLProblem& p);

struct End {
    SLProblem problem;
    bool input = true;
};

// euler = chi of the compactified surface; arcs are the angle increments
// of the boundary line field along the boundary arcs between ends.
struct CROperatorData {
    int euler = 0;
    std::vector<End> ends;
    std::vector<double> arcs;
};

struct IndexResult {
    int deg = 0;    // degree of the compactified boundary line field
    int index = 0;  // euler + deg
    bool injective = false;
    bool regular_if_index_zero = false;
};

// Degree via the selection rule: inputs close up along the largest
// lattice angle below the end's total angle, outputs along the smallest
// one above it (traversed backwards). Asserts that the summed boundary
// angle is an integer multiple of pi within tol.
IndexResult cr_index(const CROperatorData& data, double tol = 1e-6);

}  // namespace fukalg
