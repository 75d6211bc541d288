#include "nalg/derived.hpp"

#include "nalg/parser.hpp"

#include <doctest.h>

#include <set>

using namespace nalg;

namespace {

Monomial lf(Gen g) { return Monomial::leaf(g); }
Monomial nd(const Monomial& a, const Monomial& b) { return Monomial::node(a, b); }

Engine& engine()
{
    static Engine eng(2);
    return eng;
}

long double_factorial(int n) // (2n-3)!! for the multilinear good-word count
{
    long f = 1;
    for (int k = 2 * n - 3; k > 1; k -= 2)
        f *= k;
    return f;
}

} // namespace

TEST_CASE("bracket expansion")
{
    // [x1,[x2,x3]] expands to the four-term commutator polynomial
    Monomial w = nd(lf(1), nd(lf(2), lf(3)));
    Polynomial e = expand_bracket(w, Sign::minus);
    Polynomial want;
    want += Polynomial(nd(lf(1), nd(lf(2), lf(3))));
    want -= Polynomial(nd(lf(1), nd(lf(3), lf(2))));
    want -= Polynomial(nd(nd(lf(2), lf(3)), lf(1)));
    want += Polynomial(nd(nd(lf(3), lf(2)), lf(1)));
    CHECK(e == want);

    CHECK(expand_bracket(nd(lf(1), lf(2)), Sign::plus) ==
          Polynomial(nd(lf(1), lf(2))) + Polynomial(nd(lf(2), lf(1))));
    CHECK(expand_bracket(lf(1), Sign::minus) == Polynomial(lf(1)));
}

TEST_CASE("eight-term expansion signs in deg-lex order")
{
    Polynomial e = expand_bracket(nd(nd(lf(1), lf(2)), nd(lf(3), lf(4))), Sign::minus);
    REQUIRE(e.term_count() == 8);
    std::vector<int> signs;
    for (const auto& [m, c] : e.terms()) {
        REQUIRE((c == 1 || c == -1));
        signs.push_back(c == 1 ? 1 : -1);
    }
    CHECK(signs == std::vector<int>{1, -1, -1, 1, -1, 1, 1, -1});
}

TEST_CASE("expansion is alternating in the minus reading")
{
    // swapping the two children of any node negates the expansion; check all
    // shapes of degree <= 4 over distinct letters
    for (int degree = 2; degree <= 4; ++degree) {
        for (const auto& m : *enumerate_monomials(MultiDegree::multilinear(degree))) {
            if (m.is_leaf())
                continue;
            auto [u, v] = m.split();
            Monomial swapped = Monomial::node(v, u);
            CHECK(expand_bracket(m, Sign::minus) ==
                  -1 * expand_bracket(swapped, Sign::minus));
        }
    }
}

TEST_CASE("tilde forgets brackets")
{
    Monomial w = nd(nd(lf(1), lf(2)), nd(lf(3), lf(4)));
    CHECK(tilde(w) == w);
    CHECK(tilde(w).render() == "((x1*x2)*(x3*x4))");
}

TEST_CASE("good words")
{
    CHECK(good_words(MultiDegree::parse("1,1")).size() == 1);
    CHECK(good_words(MultiDegree::multilinear(3)).size() == 3);
    CHECK(good_words(MultiDegree::multilinear(4)).size() == 15);

    // multilinear counts follow the double factorial for degrees 2..6
    for (int n = 2; n <= 6; ++n)
        CHECK(static_cast<long>(good_words(MultiDegree::multilinear(n)).size()) ==
              double_factorial(n));

    // a repeated-letter good word and a non-good one
    CHECK(is_good_word(nd(lf(1), nd(lf(1), lf(2)))));
    CHECK_FALSE(is_good_word(nd(nd(lf(1), lf(2)), lf(3))));
    CHECK_FALSE(is_good_word(nd(lf(1), lf(1))));
}

TEST_CASE("nap basis words")
{
    CHECK(is_nap_basis_word(lf(1)));
    CHECK(is_nap_basis_word(nd(lf(1), nd(lf(2), lf(3)))));
    CHECK(is_nap_basis_word(nd(nd(lf(1), lf(2)), nd(lf(3), lf(4)))));
    // tail out of order: w1 = x3 > w2 = x2
    CHECK_FALSE(is_nap_basis_word(nd(nd(lf(1), lf(3)), lf(2))));
    // inner factor not a basis word
    CHECK_FALSE(is_nap_basis_word(nd(lf(1), nd(nd(lf(2), lf(4)), lf(3)))));
}

TEST_CASE("leading word checks")
{
    CHECK(leading_word_check(nd(lf(1), nd(lf(2), lf(3)))));
    CHECK(leading_word_check(nd(nd(lf(1), lf(2)), nd(lf(3), lf(4)))));
    Polynomial e = expand_bracket(nd(nd(lf(1), lf(2)), nd(lf(3), lf(4))), Sign::minus);
    CHECK(e.leading_monomial(TermOrder::right_deg_lex) ==
          nd(nd(lf(1), lf(2)), nd(lf(3), lf(4))));
}

TEST_CASE("derived kernel of nap at degree 3")
{
    Engine& eng = engine();
    KernelSpace ks = derived_kernel(eng, Variety::builtin("nap"), Sign::minus,
                                    MultiDegree::multilinear(3));
    CHECK(ks.total() == 12);
    CHECK(ks.eval_rank == 3);
    CHECK(ks.kernel_dimension() == 9);
    CHECK(ks.kernel.rank() == 9);
}

TEST_CASE("kernel vectors evaluate to zero in the host quotient")
{
    Engine& eng = engine();
    Variety host = Variety::builtin("binary-perm");
    MultiDegree d = MultiDegree::multilinear(4);
    KernelSpace ks = derived_kernel(eng, host, Sign::minus, d);
    auto comp = eng.consequences(host, d);
    for (int i = 0; i < ks.kernel.rank(); ++i) {
        SparseVec row = ks.kernel.rational_row(i);
        Polynomial sum;
        for (const auto& e : row)
            sum += e.value *
                   expand_bracket((*ks.monomials)[static_cast<std::size_t>(e.col)], Sign::minus);
        if (sum.is_zero())
            continue;
        CHECK(Engine::reduce_exact(*comp, Engine::poly_to_vec(*comp, sum)).empty());
    }
}

TEST_CASE("the metabelian law lies in the degree-4 kernel of perm-minus")
{
    Engine& eng = engine();
    Identity metab = resolve_identity_name("metabelian-law", SugarMode::expand)[0];
    CHECK(eng.is_consequence(Variety::builtin("perm"), metab).holds);
}

TEST_CASE("degree-3 kernel of binary-perm-minus is the anticom closure")
{
    Engine& eng = engine();
    auto out = generates_all(eng, resolve_identity_name("anticom", SugarMode::bracket_as_product),
                             Variety::builtin("binary-perm"), Sign::minus,
                             MultiDegree::multilinear(3));
    CHECK(out.candidates_hold);
    CHECK(out.generates);
    CHECK(out.gap() == 0);
}

TEST_CASE("anticom alone misses the degree-4 kernel of binary-perm-minus")
{
    Engine& eng = engine();
    auto out = generates_all(eng, resolve_identity_name("anticom", SugarMode::bracket_as_product),
                             Variety::builtin("binary-perm"), Sign::minus,
                             MultiDegree::multilinear(4));
    CHECK(out.candidates_hold);
    CHECK_FALSE(out.generates);
    CHECK(out.gap() > 0);
}

TEST_CASE("expand_identity_into_host")
{
    Identity anticom = resolve_identity_name("anticom", SugarMode::bracket_as_product)[0];
    CHECK(expand_identity_into_host(anticom, Sign::minus).poly.is_zero());
    Identity comm = resolve_identity_name("comm", SugarMode::bracket_as_product)[0];
    CHECK(expand_identity_into_host(comm, Sign::plus).poly.is_zero());
    // under the opposite sign commutativity is a real constraint
    CHECK_FALSE(expand_identity_into_host(comm, Sign::minus).poly.is_zero());
}

TEST_CASE("kernel rendering round-trips")
{
    // Bracket-sugared strings must expand back to the vector they render;
    // raw strings must parse to it directly. Variables xk map to leaf k.
    Engine& eng = engine();
    KernelSpace ks = derived_kernel(eng, Variety::builtin("perm"), Sign::minus,
                                    MultiDegree::multilinear(4));
    auto rendered = render_kernel_basis(ks, Sign::minus);
    REQUIRE(rendered.size() == ks.kernel_dimension());
    for (std::size_t i = 0; i < rendered.size(); ++i) {
        ParseContext ctx;
        Polynomial parsed = parse_expression(rendered[i], ctx);
        Polynomial relabeled = parsed;
        // map variable "xk" back to leaf k (parse order is arbitrary)
        for (Gen g = 1; g <= static_cast<Gen>(ctx.variables.size()); ++g) {
            int target = std::stoi(ctx.variables[static_cast<std::size_t>(g) - 1].substr(1));
            relabeled = relabeled.substitute(g, Monomial::leaf(static_cast<Gen>(100 + target)));
        }
        for (Gen g = 1; g <= 4; ++g)
            relabeled = relabeled.substitute(static_cast<Gen>(100 + g), Monomial::leaf(g));
        Polynomial vec;
        for (const auto& e : ks.kernel.rational_row(static_cast<int>(i)))
            vec.add_term((*ks.monomials)[static_cast<std::size_t>(e.col)], e.value);
        CHECK(relabeled == vec);
    }
}
