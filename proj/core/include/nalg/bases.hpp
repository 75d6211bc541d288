#pragma once

#include "nalg/monomial.hpp"

#include <vector>

namespace nalg {

// Left-normed words x_{i1}*x_{i2}*...*x_{in} with sorted tail
// i2 <= i3 <= ... <= in, one word per choice of the leading letter. This is
// the basis shape shared by the free perm algebra (any degree) and the free
// binary perm algebra from degree 5 on.
std::vector<Monomial> sorted_tail_words(const MultiDegree& d);

// The candidate basis of the free binary perm algebra at any multidegree:
// the explicit degree <= 4 pattern families, sorted-tail words from degree
// 5. Patterns at degrees 3 and 4 are instantiated for arbitrary
// multidegrees by the multiplicity-preserving relabeling of the
// representative pattern (letter assignment by multiplicity class,
// ascending within a class).
std::vector<Monomial> binary_perm_basis(const MultiDegree& d);

// Left-normed words with sorted tail and a strict comparison between the
// first two letters: i1 < i2 <= ... <= in when first_greater is false,
// i1 > i2 <= ... <= in when true. Candidate bases for the bracket-word
// quotients of anticommutative varieties.
std::vector<Monomial> strict_head_tail_words(const MultiDegree& d, bool first_greater);

} // namespace nalg
