#include "nalg/bases.hpp"

#include <algorithm>

namespace nalg {

namespace {

std::vector<Gen> letters_of(const MultiDegree& d)
{
    std::vector<Gen> out;
    for (Gen g = 1; g <= d.width(); ++g)
        for (int k = 0; k < d.count(g); ++k)
            out.push_back(g);
    return out;
}

Monomial L(std::initializer_list<Gen> gens) { return left_normed(std::vector<Gen>(gens)); }

Monomial nd(const Monomial& a, const Monomial& b) { return Monomial::node(a, b); }
Monomial lf(Gen g) { return Monomial::leaf(g); }

} // namespace

std::vector<Monomial> sorted_tail_words(const MultiDegree& d)
{
    std::vector<Monomial> out;
    for (Gen g = 1; g <= d.width(); ++g) {
        if (d.count(g) == 0)
            continue;
        std::vector<Gen> tail = letters_of(d.minus(MultiDegree::of(Monomial::leaf(g))));
        std::vector<Gen> word;
        word.push_back(g);
        word.insert(word.end(), tail.begin(), tail.end());
        out.push_back(left_normed(word));
    }
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

std::vector<Monomial> binary_perm_basis(const MultiDegree& d)
{
    const int n = d.degree();
    std::vector<Monomial> out;

    if (n >= 5)
        return sorted_tail_words(d);

    // Distinct letters ascending, then ascending multiplicity classes.
    std::vector<Gen> support;
    for (Gen g = 1; g <= d.width(); ++g)
        if (d.count(g) > 0)
            support.push_back(g);

    auto letters_with_count = [&](int c) {
        std::vector<Gen> v;
        for (Gen g : support)
            if (d.count(g) == c)
                v.push_back(g);
        return v;
    };

    if (n == 1) {
        out.push_back(lf(support[0]));
        return out;
    }
    if (n == 2) {
        // no identities in degree 2: the whole component
        return std::vector<Monomial>(enumerate_monomials(d)->begin(),
                                     enumerate_monomials(d)->end());
    }
    if (n == 3) {
        if (support.size() == 3) {
            Gen i = support[0], j = support[1], k = support[2];
            out = {L({i, j, k}), L({i, k, j}), L({j, i, k}), L({k, i, j}),
                   nd(lf(k), nd(lf(i), lf(j)))};
        } else if (support.size() == 2) {
            Gen i = letters_with_count(2)[0];
            Gen j = letters_with_count(1)[0];
            out = {L({j, i, i}), L({i, i, j})};
        } else {
            Gen i = support[0];
            out = {L({i, i, i})};
        }
    } else { // n == 4
        if (support.size() == 4) {
            Gen i = support[0], j = support[1], k = support[2], l = support[3];
            out = {L({i, j, k, l}),
                   L({i, j, l, k}),
                   L({j, i, k, l}),
                   L({k, i, j, l}),
                   L({l, i, j, k}),
                   nd(nd(lf(k), nd(lf(i), lf(j))), lf(l))};
        } else if (support.size() == 3) {
            // multiplicity signature 2+1+1
            Gen i = letters_with_count(2)[0];
            auto singles = letters_with_count(1);
            Gen j = singles[0], k = singles[1];
            out = {L({k, i, i, j}), L({j, i, i, k}), L({i, i, j, k})};
        } else if (support.size() == 2) {
            if (!letters_with_count(3).empty()) { // 3+1
                Gen i = letters_with_count(3)[0];
                Gen j = letters_with_count(1)[0];
                out = {L({j, i, i, i}), L({i, i, i, j})};
            } else { // 2+2
                Gen i = support[0], j = support[1];
                out = {L({j, i, i, j}), L({i, i, j, j})};
            }
        } else { // single letter
            Gen i = support[0];
            out = {L({i, i, i, i})};
        }
    }
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

std::vector<Monomial> strict_head_tail_words(const MultiDegree& d, bool first_greater)
{
    std::vector<Monomial> out;
    if (d.degree() < 2)
        return out;
    for (Gen g = 1; g <= d.width(); ++g) {
        if (d.count(g) == 0)
            continue;
        std::vector<Gen> tail = letters_of(d.minus(MultiDegree::of(Monomial::leaf(g))));
        if (tail.empty())
            continue;
        bool ok = first_greater ? (g > tail.front()) : (g < tail.front());
        if (!ok)
            continue;
        std::vector<Gen> word;
        word.push_back(g);
        word.insert(word.end(), tail.begin(), tail.end());
        out.push_back(left_normed(word));
    }
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

} // namespace nalg
