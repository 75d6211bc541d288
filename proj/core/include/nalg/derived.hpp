#pragma once

#include "nalg/identity.hpp"
#include "nalg/variety.hpp"

#include <memory>
#include <string>
#include <vector>

namespace nalg {

// Which derived product a bracket word is read under.
enum class Sign { minus, plus };

inline const char* to_string(Sign s) { return s == Sign::minus ? "minus" : "plus"; }
Sign sign_from_string(const std::string& s);

// Recursive replacement of every node: [u,v] -> uv - vu (minus) or
// uv + vu (plus). A word with k internal nodes expands to (up to) 2^k
// monomials with coefficients +-1.
Polynomial expand_bracket(const Monomial& w, Sign sign);

// Forgets the brackets: the same tree read with plain products. Bracket
// words share the Monomial representation, so this is the identity map;
// kept as a named operation for intent.
inline Monomial tilde(const Monomial& w) { return w; }

// Good words: the recursive basis monomials of the free anticommutative
// algebra. u is good iff u is a leaf, or u = vw with v, w good and v < w.
// Any strict total order on monomials yields such a basis (one word per
// orbit of child swaps); deg-lex is the default. The right-deg-lex variant
// is the one whose words also have the leading-word property below.
bool is_good_word(const Monomial& m, TermOrder order = TermOrder::deg_lex);
// All good words of the multidegree, deg-lex ordered.
std::vector<Monomial> good_words(const MultiDegree& d, TermOrder order = TermOrder::deg_lex);

// Membership in the right-comb basis of the free right-commutative (NAP)
// algebra: m = (..((x_i w1) w2)..) wn with w1 <= w2 <= ... <= wn in deg-lex
// and every wi itself a basis word.
bool is_nap_basis_word(const Monomial& m);

// Leading-word property of a good word w: the right-deg-lex leading
// monomial of its minus-expansion equals the bracket-erased word, and that
// word is a NAP basis monomial.
bool leading_word_check(const Monomial& good_word);

// Reinterprets a magma-signature identity as an identity of the derived
// algebra and expands it into the host: every product node becomes a
// commutator or anti-commutator.
Identity expand_identity_into_host(const Identity& magma_identity, Sign sign);

// The subspace of one free-magma component annihilated by evaluation into
// the host variety's quotient (bracket words evaluated via expand_bracket
// then reduced). Its vectors are exactly the multilinear/multihomogeneous
// identities of host^(sign) at this multidegree.
struct KernelSpace {
    MultiDegree d;
    std::shared_ptr<const std::vector<Monomial>> monomials; // bracket words
    EchelonForm kernel;                                     // canonical RREF of the kernel
    std::size_t eval_rank = 0;                              // rank of the evaluation map

    std::size_t total() const { return monomials->size(); }
    std::size_t kernel_dimension() const { return total() - eval_rank; }
};

KernelSpace derived_kernel(Engine& eng, const Variety& host, Sign sign, const MultiDegree& d);

struct GeneratesOutcome {
    bool generates = false;
    bool candidates_hold = false; // every candidate is an identity of host^(sign)
    std::size_t kernel_dim = 0;
    std::size_t closure_dim = 0; // rank of the candidates' consequence space

    long gap() const
    {
        return static_cast<long>(kernel_dim) - static_cast<long>(closure_dim);
    }
};

// Compares the consequence span of the candidate identities (in the magma
// signature) with the kernel of evaluation: equal iff the candidates
// generate all identities of host^(sign) at d.
GeneratesOutcome generates_all(Engine& eng, const std::vector<Identity>& candidates,
                               const Variety& host, Sign sign, const MultiDegree& d);

// Kernel basis rendering: commutator sugar via good-word coordinates where
// the vector is an expansion combination, raw magma polynomial otherwise.
std::vector<std::string> render_kernel_basis(const KernelSpace& ks, Sign sign);

} // namespace nalg
