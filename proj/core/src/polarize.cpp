#include "nalg/polarize.hpp"

#include <algorithm>
#include <map>

namespace nalg {

namespace {

// Degree of variable g in monomial m.
int var_degree(const Monomial& m, Gen g)
{
    int n = 0;
    for (auto s : m.code())
        n += (s == g);
    return n;
}

// Keeps only the terms in which each of the listed variables occurs exactly
// once.
Polynomial multilinear_part(const Polynomial& p, const std::vector<Gen>& vars)
{
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        bool ok = true;
        for (Gen g : vars)
            if (var_degree(m, g) != 1) {
                ok = false;
                break;
            }
        if (ok)
            out.add_term(m, c);
    }
    return out;
}

} // namespace

std::vector<Identity> linearize(const Identity& f)
{
    if (f.multilinear)
        return {f};

    // Multihomogeneous components, keyed by the variable multidegree.
    std::map<MultiDegree, Polynomial> components;
    for (const auto& [m, c] : f.poly.terms()) {
        std::vector<int> counts(static_cast<std::size_t>(f.variable_count()), 0);
        for (auto s : m.code())
            if (s != 0)
                ++counts[static_cast<std::size_t>(s) - 1];
        components[MultiDegree(counts)].add_term(m, c);
    }

    std::vector<Identity> out;
    int piece = 0;
    for (auto& [vdeg, comp] : components) {
        ++piece;
        Polynomial poly = comp;
        // Polarize each repeated variable in turn. Fresh variables are
        // appended after the existing ones; names get numeric suffixes.
        std::vector<std::string> names = f.variables;
        Gen next_free = static_cast<Gen>(names.size() + 1);
        for (Gen g = 1; g <= static_cast<Gen>(f.variables.size()); ++g) {
            int k = vdeg.count(g);
            if (k < 2)
                continue;
            Polynomial sum;
            std::vector<Gen> fresh;
            for (int i = 0; i < k; ++i) {
                sum += Polynomial(Monomial::leaf(next_free));
                fresh.push_back(next_free);
                names.push_back(f.variables[static_cast<std::size_t>(g) - 1] +
                                std::to_string(i + 1));
                ++next_free;
            }
            poly = multilinear_part(poly.substitute(g, sum), fresh);
        }
        if (poly.is_zero())
            continue;

        // Compact the variable numbering: drop the polarized originals (and
        // any variable that never occurs in this component).
        std::vector<Gen> used;
        for (Gen g = 1; g < next_free; ++g) {
            bool occurs = false;
            for (const auto& [m, c] : poly.terms())
                if (var_degree(m, g) > 0) {
                    occurs = true;
                    break;
                }
            if (occurs)
                used.push_back(g);
        }
        Identity id;
        id.name = f.name.empty() ? "" : f.name + (components.size() > 1 ? ".lin" + std::to_string(piece) : ".lin");
        Polynomial renumbered = poly;
        // Renumber via a temporary alias range to avoid collisions.
        Gen tmp_base = next_free;
        for (std::size_t i = 0; i < used.size(); ++i)
            renumbered = renumbered.substitute(used[i], Monomial::leaf(static_cast<Gen>(tmp_base + i)));
        for (std::size_t i = 0; i < used.size(); ++i)
            renumbered = renumbered.substitute(static_cast<Gen>(tmp_base + i),
                                               Monomial::leaf(static_cast<Gen>(i + 1)));
        id.poly = renumbered;
        for (Gen g : used)
            id.variables.push_back(names[static_cast<std::size_t>(g) - 1]);
        id.multilinear = compute_multilinear(id.poly, id.variable_count());
        if (!id.multilinear)
            throw Error("linearize produced a non-multilinear identity (internal error)");
        out.push_back(std::move(id));
    }
    return out;
}

} // namespace nalg
