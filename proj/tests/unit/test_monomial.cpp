#include "nalg/monomial.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace nalg;

namespace {

Monomial lf(Gen g) { return Monomial::leaf(g); }
Monomial nd(const Monomial& a, const Monomial& b) { return Monomial::node(a, b); }

long catalan(int n)
{
    long c = 1;
    for (int i = 0; i < n; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

long factorial(int n)
{
    long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// Closed count of monomials with the given leaf multiset.
long expected_count(const MultiDegree& d)
{
    int n = d.degree();
    long count = catalan(n - 1) * factorial(n);
    for (int c : d.counts())
        count /= factorial(c);
    return count;
}

std::vector<Monomial> all_monomials_up_to(int max_degree, int letters)
{
    std::vector<Monomial> out;
    for (int deg = 1; deg <= max_degree; ++deg)
        for (const auto& d : multidegrees_of_degree(deg, letters))
            for (const auto& m : *enumerate_monomials(d))
                out.push_back(m);
    return out;
}

} // namespace

TEST_CASE("structure and rendering")
{
    Monomial m = nd(nd(lf(1), lf(2)), lf(3));
    CHECK(m.degree() == 3);
    CHECK(m.render() == "((x1*x2)*x3)");
    CHECK(lf(7).render() == "x7");
    auto [l, r] = m.split();
    CHECK(l == nd(lf(1), lf(2)));
    CHECK(r == lf(3));
    CHECK(is_left_normed(m));
    CHECK_FALSE(is_left_normed(nd(lf(1), nd(lf(2), lf(3)))));
    CHECK(left_normed({1, 2, 3}) == m);
    CHECK_THROWS_AS(lf(0), Error);
}

TEST_CASE("multidegree")
{
    Monomial m = nd(nd(lf(1), lf(2)), nd(lf(1), lf(2)));
    CHECK(MultiDegree::of(m) == MultiDegree::parse("2,2"));
    CHECK(MultiDegree::parse("1,0,2").degree() == 3);
    CHECK(MultiDegree::parse("1,1,0") == MultiDegree::parse("1,1"));
    CHECK(MultiDegree::multilinear(3).to_string() == "1,1,1");
    CHECK_THROWS_AS(MultiDegree::parse("1,x"), Error);
    CHECK(MultiDegree::parse("2,1").minus(MultiDegree::parse("1")).to_string() == "1,1");
}

TEST_CASE("deg-lex basics")
{
    // degree dominates
    CHECK(compare(TermOrder::deg_lex, lf(2), nd(lf(1), lf(1))) < 0);
    // equal degree: left factor first
    CHECK(compare(TermOrder::deg_lex, nd(lf(1), lf(2)), nd(lf(2), lf(1))) < 0);
    // right-deg-lex compares right factors first
    CHECK(compare(TermOrder::right_deg_lex, nd(lf(3), lf(1)), nd(lf(1), lf(3))) < 0);
}

TEST_CASE("order is total and transitive")
{
    // exhaustive on degree <= 3 over 3 letters, sampled beyond
    auto monos = all_monomials_up_to(3, 3);
    for (TermOrder ord : {TermOrder::deg_lex, TermOrder::right_deg_lex}) {
        for (const auto& u : monos)
            for (const auto& v : monos) {
                int c1 = compare(ord, u, v), c2 = compare(ord, v, u);
                CHECK(c1 == -c2);
                CHECK((c1 == 0) == (u == v));
            }
        for (const auto& u : monos)
            for (const auto& v : monos)
                for (const auto& w : monos)
                    if (compare(ord, u, v) < 0 && compare(ord, v, w) < 0)
                        CHECK(compare(ord, u, w) < 0);
    }

    auto big = all_monomials_up_to(5, 3);
    std::mt19937_64 rng(42);
    for (TermOrder ord : {TermOrder::deg_lex, TermOrder::right_deg_lex}) {
        for (int i = 0; i < 100000; ++i) {
            const auto& u = big[rng() % big.size()];
            const auto& v = big[rng() % big.size()];
            const auto& w = big[rng() % big.size()];
            CHECK(compare(ord, u, v) == -compare(ord, v, u));
            if (compare(ord, u, v) < 0 && compare(ord, v, w) < 0)
                CHECK(compare(ord, u, w) < 0);
        }
    }
}

TEST_CASE("enumeration matches the closed count and is duplicate-free")
{
    CHECK(enumerate_monomials(MultiDegree::parse("1,1"))->size() == 2);
    CHECK((*enumerate_monomials(MultiDegree::parse("1,1")))[0] == nd(lf(1), lf(2)));
    CHECK(enumerate_monomials(MultiDegree::multilinear(3))->size() == 12);
    CHECK(enumerate_monomials(MultiDegree::multilinear(5))->size() == 1680);

    for (int deg = 1; deg <= 6; ++deg) {
        for (const auto& d : multidegrees_of_degree(deg, 3)) {
            auto ms = enumerate_monomials(d);
            CHECK(static_cast<long>(ms->size()) == expected_count(d));
            std::set<Monomial, DegLexLess> unique(ms->begin(), ms->end());
            CHECK(unique.size() == ms->size());
            for (std::size_t i = 0; i + 1 < ms->size(); ++i)
                CHECK(compare(TermOrder::deg_lex, (*ms)[i], (*ms)[i + 1]) < 0);
            for (const auto& m : *ms)
                CHECK(MultiDegree::of(m) == d);
        }
    }
}

TEST_CASE("substitution")
{
    Monomial m = nd(lf(1), nd(lf(2), lf(1)));
    Monomial sub = m.substitute(1, nd(lf(3), lf(4)));
    CHECK(sub == nd(nd(lf(3), lf(4)), nd(lf(2), nd(lf(3), lf(4)))));
    CHECK(sub.render() == "((x3*x4)*(x2*(x3*x4)))");
}
