#pragma once

#include <string>

#include "finring/ring.hpp"

namespace finring {

// Ring spec grammar, case sensitive:
//   Z<n>                             cyclic ring of order n
//   GF(<q>)                          finite field, q in {2,3,4,5,7,8,9}
//   M<n>(<spec>)                     full n x n matrix ring
//   Tn(<spec>,<n>)  Sn(...)  Sprime(...)  TRn(...)  TprimeRn(...)
//   An(...)  Bn(...)  Un(...)        matrix subring families
//   prod(<spec>,<spec>)
//   quot(<spec>,strictupper)         quotient by strictly upper entries
//                                    (base must be a triangular family build)
//   @<path>.json                     load from file
// Throws SpecParseError with position info on bad input.
FiniteRing parse_ring_spec(const std::string& spec, const Limits& limits = {});

}  // namespace finring
