#pragma once

#include "nalg/identity.hpp"

#include <vector>

namespace nalg {

// Full multilinearization over a characteristic-0 field: the identity is
// split into its multihomogeneous components (each is again an identity),
// and every variable of multiplicity k >= 2 is replaced by k fresh
// variables, keeping the part linear in each. The output identities are
// multilinear and jointly equivalent to the input.
std::vector<Identity> linearize(const Identity& f);

} // namespace nalg
