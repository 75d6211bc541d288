#include "nalg/rewrite.hpp"

#include "nalg/bases.hpp"

#include <doctest.h>

using namespace nalg;

namespace {

Monomial lf(Gen g) { return Monomial::leaf(g); }
Monomial nd(const Monomial& a, const Monomial& b) { return Monomial::node(a, b); }

Engine& engine()
{
    static Engine eng(2);
    return eng;
}

} // namespace

TEST_CASE("perm rewriting flattens and sorts the tail")
{
    Variety perm = Variety::builtin("perm");
    Polynomial p = rewrite_nf(perm, nd(lf(1), nd(lf(2), lf(3))));
    CHECK(p == Polynomial(left_normed({1, 2, 3})));

    CHECK(rewrite_nf(perm, nd(nd(lf(3), lf(2)), lf(1))) == Polynomial(left_normed({3, 1, 2})));
    CHECK(rewrite_nf(perm, lf(2)) == Polynomial(lf(2)));
    CHECK(rewrite_nf(perm, nd(lf(2), lf(1))) == Polynomial(left_normed({2, 1})));
}

TEST_CASE("binary-perm tail transposition")
{
    Variety bp = Variety::builtin("binary-perm");
    // (((x1x2)x3)x5)x4 -> (((x1x2)x3)x4)x5 with coefficient 1
    Monomial m = nd(nd(nd(nd(lf(1), lf(2)), lf(3)), lf(5)), lf(4));
    CHECK(rewrite_nf(bp, m) == Polynomial(left_normed({1, 2, 3, 4, 5})));
}

TEST_CASE("binary-perm inner right product straightens")
{
    Variety bp = Variety::builtin("binary-perm");
    // ((x1(x2x3))x4)x5 -> (((x1x2)x3)x4)x5
    Monomial m = nd(nd(nd(lf(1), nd(lf(2), lf(3))), lf(4)), lf(5));
    CHECK(rewrite_nf(bp, m) == Polynomial(left_normed({1, 2, 3, 4, 5})));
}

TEST_CASE("binary-perm degree guard")
{
    Variety bp = Variety::builtin("binary-perm");
    CHECK_THROWS_AS(rewrite_nf(bp, nd(lf(1), nd(lf(2), lf(3)))), Error);
    CHECK_THROWS_AS(rewrite_nf(Variety::builtin("nap"), lf(1)), Error);
}

TEST_CASE("rewriter agrees with the echelon normal form on degree 5 over 2 letters")
{
    Engine& eng = engine();
    Variety bp = Variety::builtin("binary-perm");
    for (const auto& d : multidegrees_of_degree(5, 2)) {
        std::vector<Monomial> basis = binary_perm_basis(d);
        REQUIRE(eng.verify_basis(bp, d, basis).ok);
        for (const auto& m : *enumerate_monomials(d)) {
            auto nf = eng.normal_form(bp, Polynomial(m), basis);
            Polynomial rw = rewrite_nf(bp, m);
            // expected: a combination supported on basis words
            std::vector<Rat> rc(basis.size(), Rat(0));
            for (const auto& [w, c] : rw.terms()) {
                bool found = false;
                for (std::size_t i = 0; i < basis.size(); ++i)
                    if (basis[i] == w) {
                        rc[i] = c;
                        found = true;
                        break;
                    }
                REQUIRE(found);
            }
            CHECK(rc == nf);
        }
    }
}

TEST_CASE("rewriter terminates on every degree-6 shape over 2 letters")
{
    Variety bp = Variety::builtin("binary-perm");
    for (const auto& d : multidegrees_of_degree(6, 2))
        for (const auto& m : *enumerate_monomials(d)) {
            Polynomial p = rewrite_nf(bp, m);
            for (const auto& [w, c] : p.terms()) {
                CHECK(is_left_normed(w));
                auto letters = w.leaf_sequence();
                for (std::size_t i = 2; i < letters.size(); ++i)
                    CHECK(letters[i - 1] <= letters[i]);
            }
        }
}
