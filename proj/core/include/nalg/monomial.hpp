#pragma once

#include "nalg/error.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nalg {

// Generators are the letters of the ordered alphabet x1 < x2 < ...,
// identified by their 1-based index.
using Gen = std::int16_t;

enum class TermOrder { deg_lex, right_deg_lex };

// A monomial of the free magma: a binary tree whose leaves carry generator
// indices. Stored in preorder ("Polish") form, one int16 per symbol:
// 0 marks an internal node, k >= 1 a leaf labelled x_k. A tree with L leaves
// occupies 2L-1 symbols, so equality and hashing are plain vector operations
// and the degree is recovered from the length alone.
class Monomial {
  public:
    using Code = std::vector<std::int16_t>;
    using View = std::span<const std::int16_t>;

    Monomial() = default;

    static Monomial leaf(Gen g)
    {
        if (g < 1)
            throw Error("generator index must be >= 1");
        Monomial m;
        m.code_.push_back(g);
        return m;
    }

    static Monomial node(const Monomial& l, const Monomial& r)
    {
        Monomial m;
        m.code_.reserve(1 + l.code_.size() + r.code_.size());
        m.code_.push_back(0);
        m.code_.insert(m.code_.end(), l.code_.begin(), l.code_.end());
        m.code_.insert(m.code_.end(), r.code_.begin(), r.code_.end());
        return m;
    }

    bool empty() const { return code_.empty(); }
    int degree() const { return static_cast<int>((code_.size() + 1) / 2); }
    bool is_leaf() const { return code_.size() == 1; }

    Gen leaf_gen() const
    {
        if (!is_leaf())
            throw Error("leaf_gen on a non-leaf monomial");
        return code_[0];
    }

    std::pair<Monomial, Monomial> split() const;

    View view() const { return {code_.data(), code_.size()}; }
    const Code& code() const { return code_; }

    Gen max_generator() const;

    // Leaf labels in left-to-right order.
    std::vector<Gen> leaf_sequence() const;

    // Replaces every leaf labelled `g` by `value` (used for identity
    // substitution and context plugging).
    Monomial substitute(Gen g, const Monomial& value) const;

    // Fully parenthesized rendering, e.g. "((x1*x2)*x3)". This is the exact
    // form used in reports and golden files.
    std::string render() const;

    bool operator==(const Monomial& o) const { return code_ == o.code_; }
    bool operator!=(const Monomial& o) const { return code_ != o.code_; }

    static Monomial from_code(Code c)
    {
        Monomial m;
        m.code_ = std::move(c);
        return m;
    }

  private:
    Code code_;
};

// Three-way comparison under the given order; negative means u < v.
int compare(TermOrder order, const Monomial& u, const Monomial& v);
int compare(TermOrder order, Monomial::View u, Monomial::View v);

struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return compare(TermOrder::deg_lex, a, b) < 0;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const
    {
        std::size_t h = 1469598103934665603ull;
        for (auto s : m.code()) {
            h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(s));
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Left-normed words (((l1*l2)*l3)*...)*ln and their recognition.
Monomial left_normed(const std::vector<Gen>& letters);
bool is_left_normed(const Monomial& m);

// The multidegree of a graded component: entry i counts occurrences of
// x_{i+1}. Trailing zeros are normalized away so equality is structural.
class MultiDegree {
  public:
    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> counts);

    static MultiDegree multilinear(int n);
    static MultiDegree of(const Monomial& m);
    // Parses "1,1,2" (or "d1,d2,...").
    static MultiDegree parse(const std::string& text);

    int degree() const;
    // Number of tracked letters (index of last nonzero).
    int width() const { return static_cast<int>(counts_.size()); }
    int count(Gen g) const; // 1-based
    int distinct_letters() const;
    const std::vector<int>& counts() const { return counts_; }
    bool is_zero() const { return counts_.empty(); }

    MultiDegree plus(const MultiDegree& o) const;
    // Componentwise difference; throws if any entry would go negative.
    MultiDegree minus(const MultiDegree& o) const;
    // Appends one occurrence of letter g.
    MultiDegree with_extra(Gen g, int n = 1) const;

    std::string to_string() const;

    bool operator==(const MultiDegree& o) const { return counts_ == o.counts_; }
    bool operator!=(const MultiDegree& o) const { return counts_ != o.counts_; }
    bool operator<(const MultiDegree& o) const { return counts_ < o.counts_; }

  private:
    std::vector<int> counts_;
};

// All multidegrees of the given total degree over an alphabet of `letters`
// letters, in lexicographic order of the count vectors.
std::vector<MultiDegree> multidegrees_of_degree(int degree, int letters);

// All monomials of the given multidegree, each exactly once, sorted by
// deg-lex. The result is cached per multidegree for the lifetime of the
// process; callers share the vector.
std::shared_ptr<const std::vector<Monomial>> enumerate_monomials(const MultiDegree& d);

} // namespace nalg
