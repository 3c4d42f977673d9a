// JSON file formats: parsing with strict schema validation (unknown keys
// rejected, entries checked by the library validators) and canonical
// emission, one document kind per top-level structure.

#pragma once

#include "bndalg.hpp"
#include "crindex.hpp"
#include "hoch.hpp"

#include <iosfwd>
#include <string>

namespace fukalg::io {

// Document kinds, as stored in the "kind" field.
//   ainfty_algebra, ainfty_bimodule, bimodule_hom, hochschild_cochain,
//   boundary_algebra, cr_operator
std::string document_kind(const std::string& text);

AInftyAlgebra parse_algebra(const std::string& text);
std::string emit_algebra(const AInftyAlgebra& A);

AInftyBimodule parse_bimodule(const std::string& text);
std::string emit_bimodule(const AInftyBimodule& P);

BimoduleHom parse_hom(const std::string& text);
std::string emit_hom(const BimoduleHom& phi);

HochschildCochain parse_cochain(const std::string& text);
std::string emit_cochain(const HochschildCochain& phi);

BoundaryAlgebra parse_boundary(const std::string& text);
std::string emit_boundary(const BoundaryAlgebra& A);

CROperatorData parse_cr_operator(const std::string& text);
std::string emit_cr_operator(const CROperatorData& d);

// Whole-file helper; throws InputError with a diagnostic on failure.
std::string read_file(const std::string& path);

}  // namespace fukalg::io
