#pragma once

#include "nalg/monomial.hpp"
#include "nalg/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nalg {

// A finite Q-linear combination of magma monomials. Zero coefficients are
// never stored; the term map is kept in deg-lex order so rendering and
// iteration are canonical.
class Polynomial {
  public:
    using Terms = std::map<Monomial, Rat, DegLexLess>;

    Polynomial() = default;
    explicit Polynomial(const Monomial& m) { terms_[m] = 1; }
    Polynomial(const Monomial& m, const Rat& c)
    {
        if (c != 0)
            terms_[m] = c;
    }

    static Polynomial zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rat& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
    friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a)
    {
        return a *= Rat(-1);
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Bilinear extension of the magma product.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    // Order-maximal monomial with nonzero coefficient. Throws on zero
    // polynomials ("empty support").
    const Monomial& leading_monomial(TermOrder order) const;

    // Multidegree common to every term, if the polynomial is homogeneous.
    std::optional<MultiDegree> homogeneous_multidegree() const;

    // Replaces every leaf labelled g by the given polynomial (linearly).
    Polynomial substitute(Gen g, const Polynomial& value) const;
    Polynomial substitute(Gen g, const Monomial& value) const;

    // Renders with an optional leaf namer (defaults to "x<k>"):
    // "(a*b) - (b*a)", "2*(x1*x2)", "0".
    std::string render(const std::function<std::string(Gen)>& namer = nullptr) const;

  private:
    Terms terms_;
};

} // namespace nalg
