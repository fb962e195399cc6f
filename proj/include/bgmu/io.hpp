#pragma once

// Datum files: a small JSON schema describing a Coxeter/Tits datum.
//
//   {
//     "type":   "A3" | "GL4" | "D5" | "A1xA1" | ...,
//     "sigma0": "id" | "flip" | [2,1,3,...]   (1-based node images),
//     "tau":    0 | k | {"rotate": i}         (0 = identity, k = 1-based
//                                              minuscule node; rotate is
//                                              GL mode only),
//     "mu":     [c1,...,cr] | "w2"            (integer lattice coordinates
//                                              or a fundamental-coweight
//                                              label)
//   }
//
// "sigma0" defaults to "id" and "tau" to 0 when omitted; "type" and "mu"
// are required. Unknown keys are rejected. Every malformed input raises
// std::invalid_argument with a field-specific diagnostic.

#include <string>

#include "bgmu/datum.hpp"

namespace bgmu {

CoxeterDatum parse_datum_text(const std::string& text);
CoxeterDatum parse_datum_file(const std::string& path);

}  // namespace bgmu
