#include "nalg/polarize.hpp"

#include "nalg/parser.hpp"

#include <doctest.h>

using namespace nalg;

namespace {

// Substitutes every polarized copy back to one variable and checks the
// result is a nonzero integer multiple of the original component.
void check_depolarization(const Identity& original, const std::vector<Identity>& pieces)
{
    Polynomial sum;
    for (const auto& piece : pieces) {
        // glue: all variables with the same name stem map back to one leaf
        Polynomial glued = piece.poly;
        for (Gen g = 1; g <= static_cast<Gen>(piece.variables.size()); ++g) {
            // strip a numeric suffix to find the original variable name
            std::string name = piece.variables[static_cast<std::size_t>(g) - 1];
            while (!name.empty() && std::isdigit(static_cast<unsigned char>(name.back())))
                name.pop_back();
            Gen target = 0;
            for (std::size_t i = 0; i < original.variables.size(); ++i)
                if (original.variables[i] == name)
                    target = static_cast<Gen>(i + 1);
            REQUIRE(target != 0);
            glued = glued.substitute(g, Monomial::leaf(static_cast<Gen>(100 + target)));
        }
        for (std::size_t i = 0; i < original.variables.size(); ++i)
            glued = glued.substitute(static_cast<Gen>(101 + i),
                                     Monomial::leaf(static_cast<Gen>(i + 1)));
        sum += glued;
    }
    // sum must be an integer multiple of the original polynomial
    REQUIRE_FALSE(sum.is_zero());
    const auto& [m0, c0] = *original.poly.terms().begin();
    Rat factor = sum.terms().at(m0) / c0;
    CHECK(factor.get_den() == 1);
    CHECK(factor != 0);
    CHECK(sum == factor * original.poly);
}

} // namespace

TEST_CASE("multilinear identities pass through")
{
    Identity f = parse_identity("[a,b] = -[b,a]");
    auto out = linearize(f);
    REQUIRE(out.size() == 1);
    CHECK(out[0].poly == f.poly);
}

TEST_CASE("jordan identity polarizes to one multilinear degree-4 identity")
{
    Identity jordan = parse_identity("((a*a)*b)*a = (a*a)*(b*a)", SugarMode::expand, "jordan");
    REQUIRE_FALSE(jordan.multilinear);
    auto out = linearize(jordan);
    REQUIRE(out.size() == 1);
    CHECK(out[0].multilinear);
    CHECK(out[0].variables.size() == 4);
    for (const auto& [m, c] : out[0].poly.terms())
        CHECK(m.degree() == 4);
    check_depolarization(jordan, out);
}

TEST_CASE("malcev identity polarizes to one multilinear degree-4 identity")
{
    Identity malcev = resolve_identity_name("malcev", SugarMode::expand)[0];
    REQUIRE_FALSE(malcev.multilinear);
    auto out = linearize(malcev);
    REQUIRE(out.size() == 1);
    CHECK(out[0].multilinear);
    CHECK(out[0].variables.size() == 4);
    check_depolarization(malcev, out);
}

TEST_CASE("inhomogeneous identities split into components")
{
    Identity f = parse_identity("a*a + a = 0");
    auto out = linearize(f);
    // components (2) and (1): the square polarizes, the linear part stays
    REQUIRE(out.size() == 2);
    for (const auto& piece : out)
        CHECK(piece.multilinear);
}

TEST_CASE("plus-reading of the jordan law polarizes cleanly")
{
    Identity jordan = resolve_identity_name("jordan", SugarMode::expand)[0];
    auto out = linearize(jordan);
    REQUIRE(out.size() == 1);
    CHECK(out[0].multilinear);
    check_depolarization(jordan, out);
}
