#pragma once

#include "nalg/polynomial.hpp"

#include <string>
#include <vector>

namespace nalg {

// A polynomial identity in abstract variables, stored in normalized "= 0"
// form: `poly` is LHS - RHS over leaves 1..k, where leaf i stands for
// variables[i-1].
struct Identity {
    std::string name; // optional label for reports
    std::vector<std::string> variables;
    Polynomial poly;
    bool multilinear = false;

    int variable_count() const { return static_cast<int>(variables.size()); }
    std::string render() const;
};

// Recomputes the multilinear flag: every term must contain each of the
// identity's variables exactly once.
bool compute_multilinear(const Polynomial& poly, int variable_count);

struct VarietyDef {
    std::string name;
    std::vector<Identity> identities; // empty means the free magma
};

} // namespace nalg
