#pragma once

#include "nalg/polynomial.hpp"
#include "nalg/variety.hpp"

namespace nalg {

// Rule-based normal form, independent of the linear-algebra route. For perm
// the word is flattened (associativity) and its tail sorted
// (right-commutativity), any degree. For binary-perm the monomial is
// rewritten to a combination of left-normed sorted-tail words by orienting
// the derived identities of the variety (degree >= 5; the low-degree
// components do not have the sorted-tail shape). Any other variety is an
// error. Agrees with normal_form on the sorted-tail basis by construction of
// the rules; the test suites check the agreement exhaustively at desk scale.
Polynomial rewrite_nf(const Variety& v, const Monomial& m);

} // namespace nalg
