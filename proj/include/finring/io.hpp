#pragma once

#include <iosfwd>
#include <string>

#include "finring/ring.hpp"

namespace finring {

// JSON shape: {"size": n, "one": index|null, "add": [[..]..], "mul": [[..]..],
// "labels": [..]?}. Loading runs full validation; a stated "one" must check
// out, an absent/null "one" triggers unity detection.
FiniteRing load_ring_json(std::istream& in, ValidationMode mode = ValidationMode::Full);
FiniteRing load_ring_file(const std::string& path, ValidationMode mode = ValidationMode::Full);

std::string ring_to_json(const FiniteRing& r);
void save_ring_file(const FiniteRing& r, const std::string& path);

}  // namespace finring
