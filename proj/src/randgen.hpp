// Seeded random valid instances for property suites.
//
// Directed structures are sampled arity-by-arity (algebras) or
// weight-by-weight (bimodules): at each level the defining relation is
// linear in the top-level operations given the lower ones, so a particular
// solution plus a random kernel element always yields a valid structure.

#pragma once

#include "bimodule.hpp"

#include <random>

namespace fukalg {

// Directed algebra with 2..m_max idempotents and at most max_per_slot
// generators in each slot i < j; relations hold by construction.
AInftyAlgebra random_directed_algebra(std::mt19937& rng, int m_max = 3,
                                      int max_per_slot = 2);

// Bimodule over A with at most max_per_slot generators per slot;
// check_bimodule passes by construction.
AInftyBimodule random_bimodule(std::mt19937& rng, const AInftyAlgebra& A,
                               int max_per_slot = 2);

}  // namespace fukalg
