#pragma once

#include "nalg/identity.hpp"

#include <map>
#include <string>
#include <vector>

namespace nalg {

// How the bracket sugar forms elaborate into the binary product:
//
//   expand            [a,b] -> a*b - b*a, {a,b} -> a*b + b*a,
//                     J(a,b,c) -> [[a,b],c] + [[b,c],a] + [[c,a],b]
//                     (identities about a host algebra, brackets are the
//                     derived commutator / anti-commutator)
//
//   bracket_as_product  [a,b] -> a*b, {a,b} -> a*b,
//                     J(a,b,c) -> (a*b)*c + (b*c)*a + (c*a)*b
//                     (identities in the signature of the derived algebra
//                     itself, the bracket is the magma product)
enum class SugarMode { expand, bracket_as_product };

struct ParseContext {
    SugarMode mode = SugarMode::expand;
    // Filled during parsing: variable names in order of first appearance;
    // leaf i corresponds to variables[i-1].
    std::vector<std::string> variables;
};

// Parses one expression of the identity DSL. Syntax errors carry 1-based
// line:column positions.
Polynomial parse_expression(const std::string& text, ParseContext& ctx);
Polynomial parse_expression(const std::string& text, SugarMode mode = SugarMode::expand);

// Parses "LHS = RHS" into an identity (polynomial LHS - RHS).
Identity parse_identity(const std::string& text, SugarMode mode = SugarMode::expand,
                        const std::string& name = "");

// Parses a variety-definition file:
//   file  := block+
//   block := "variety" NAME "{" ( "free" | (identity ";")* ) "}"
// '#' starts a comment to end of line. Duplicate variety names are rejected.
std::vector<VarietyDef> parse_variety_file(const std::string& text);

// The variety registry shipped with the engine, as DSL text.
const std::string& builtin_registry_text();
// Parsed form of the above (computed once).
const std::vector<VarietyDef>& builtin_varieties();
const VarietyDef& builtin_variety(const std::string& name);

// Named identities usable as derived-algebra candidates (--candidates) and
// in consequence checks. Stored as DSL text in bracket sugar so both
// SugarModes apply; a name may map to a bundle of identities.
struct NamedIdentity {
    std::string name;
    std::vector<std::string> texts;
};
const std::vector<NamedIdentity>& builtin_identities();
// Resolves one candidate name in the given mode; throws on unknown names.
std::vector<Identity> resolve_identity_name(const std::string& name, SugarMode mode);

} // namespace nalg
