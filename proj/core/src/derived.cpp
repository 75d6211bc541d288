#include "nalg/derived.hpp"

#include <algorithm>

namespace nalg {

Sign sign_from_string(const std::string& s)
{
    if (s == "minus" || s == "-")
        return Sign::minus;
    if (s == "plus" || s == "+")
        return Sign::plus;
    throw Error("unknown sign '" + s + "' (expected minus or plus)");
}

Polynomial expand_bracket(const Monomial& w, Sign sign)
{
    if (w.is_leaf())
        return Polynomial(w);
    auto [u, v] = w.split();
    Polynomial eu = expand_bracket(u, sign);
    Polynomial ev = expand_bracket(v, sign);
    Polynomial out = eu * ev;
    if (sign == Sign::minus)
        out -= ev * eu;
    else
        out += ev * eu;
    return out;
}

bool is_good_word(const Monomial& m, TermOrder order)
{
    if (m.is_leaf())
        return true;
    auto [u, v] = m.split();
    return compare(order, u, v) < 0 && is_good_word(u, order) && is_good_word(v, order);
}

std::vector<Monomial> good_words(const MultiDegree& d, TermOrder order)
{
    std::vector<Monomial> out;
    for (const auto& m : *enumerate_monomials(d))
        if (is_good_word(m, order))
            out.push_back(m);
    return out; // already deg-lex sorted
}

bool is_nap_basis_word(const Monomial& m)
{
    if (m.is_leaf())
        return true;
    // peel the left spine down to the head letter
    std::vector<Monomial> ws;
    Monomial cur = m;
    while (!cur.is_leaf()) {
        auto [l, r] = cur.split();
        ws.push_back(r);
        cur = l;
    }
    std::reverse(ws.begin(), ws.end()); // w1, w2, ..., wn
    for (std::size_t i = 0; i + 1 < ws.size(); ++i)
        if (compare(TermOrder::deg_lex, ws[i], ws[i + 1]) > 0)
            return false;
    for (const auto& w : ws)
        if (!is_nap_basis_word(w))
            return false;
    return true;
}

bool leading_word_check(const Monomial& good_word)
{
    Polynomial e = expand_bracket(good_word, Sign::minus);
    if (e.is_zero())
        return false;
    const Monomial& lead = e.leading_monomial(TermOrder::right_deg_lex);
    return lead == tilde(good_word) && is_nap_basis_word(tilde(good_word));
}

Identity expand_identity_into_host(const Identity& magma_identity, Sign sign)
{
    Identity out;
    out.name = magma_identity.name + (sign == Sign::minus ? ".minus" : ".plus");
    out.variables = magma_identity.variables;
    for (const auto& [m, c] : magma_identity.poly.terms())
        out.poly += c * expand_bracket(m, sign);
    out.multilinear = compute_multilinear(out.poly, out.variable_count());
    return out;
}

KernelSpace derived_kernel(Engine& eng, const Variety& host, Sign sign, const MultiDegree& d)
{
    auto comp = eng.consequences(host, d);
    KernelSpace ks;
    ks.d = d;
    ks.monomials = comp->monomials;
    const std::int32_t total = static_cast<std::int32_t>(comp->total());

    // Quotient coordinates live on the non-pivot columns.
    std::vector<std::int32_t> dense_of(static_cast<std::size_t>(total), -1);
    std::int32_t ncoords = 0;
    for (std::int32_t j = 0; j < total; ++j)
        if (comp->ech.row_of_column(j) < 0)
            dense_of[static_cast<std::size_t>(j)] = ncoords++;

    // Evaluation matrix, transposed: row = quotient coordinate, column =
    // bracket word. Row scaling never changes a right kernel, but per-column
    // scaling would, so the reduction must be exact.
    std::vector<SparseVec> ecols(static_cast<std::size_t>(ncoords));
    for (std::int32_t m = 0; m < total; ++m) {
        Polynomial e = expand_bracket((*ks.monomials)[static_cast<std::size_t>(m)], sign);
        if (e.is_zero())
            continue;
        SparseVec v = Engine::reduce_exact(*comp, Engine::poly_to_vec(*comp, e));
        for (const auto& en : v)
            ecols[static_cast<std::size_t>(dense_of[static_cast<std::size_t>(en.col)])].push_back(
                {m, en.value});
    }
    SparseMatrix et(static_cast<int>(total));
    for (auto& row : ecols)
        if (!row.empty())
            et.add_row(std::move(row));
    EchelonForm ech = rref(et);
    ks.eval_rank = static_cast<std::size_t>(ech.rank());

    std::vector<IntRow> kernel_rows;
    for (const auto& v : nullspace(ech)) {
        IntRow r;
        Int scale = 1;
        for (const auto& e : v)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.value.get_den().get_mpz_t());
        for (const auto& e : v)
            r.emplace_back(e.col, e.value.get_num() * (scale / e.value.get_den()));
        kernel_rows.push_back(std::move(r));
    }
    ks.kernel = rref_rows(std::move(kernel_rows), static_cast<int>(total));
    return ks;
}

GeneratesOutcome generates_all(Engine& eng, const std::vector<Identity>& candidates,
                               const Variety& host, Sign sign, const MultiDegree& d)
{
    GeneratesOutcome out;
    out.candidates_hold = true;
    for (const auto& cand : candidates) {
        Identity expanded = expand_identity_into_host(cand, sign);
        if (expanded.poly.is_zero())
            continue; // holds syntactically (e.g. anti-commutativity under minus)
        if (!expanded.multilinear)
            throw Error("generates_all requires multilinear candidates");
        if (!eng.is_consequence(host, expanded).holds)
            out.candidates_hold = false;
    }
    Variety closure = Variety::from_identities("candidates", candidates);
    out.closure_dim = eng.consequences(closure, d)->rank();
    KernelSpace ks = derived_kernel(eng, host, sign, d);
    out.kernel_dim = ks.kernel_dimension();
    out.generates = out.candidates_hold && out.closure_dim == out.kernel_dim;
    return out;
}

namespace {

std::string render_bracket(const Monomial& m, Sign sign)
{
    if (m.is_leaf())
        return "x" + std::to_string(m.leaf_gen());
    auto [u, v] = m.split();
    const char* open = sign == Sign::minus ? "[" : "{";
    const char* close = sign == Sign::minus ? "]" : "}";
    return open + render_bracket(u, sign) + "," + render_bracket(v, sign) + close;
}

} // namespace

std::vector<std::string> render_kernel_basis(const KernelSpace& ks, Sign sign)
{
    // Augmented solve against the expansions of the good words (minus) or
    // the v <= w tree words (plus); those expansions are independent, so the
    // coordinates are unique whenever they exist.
    const std::int32_t total = static_cast<std::int32_t>(ks.total());
    std::vector<Monomial> frame;
    for (const auto& m : *ks.monomials) {
        if (m.is_leaf())
            continue;
        bool usable = sign == Sign::minus ? is_good_word(m) : true;
        if (usable)
            frame.push_back(m);
    }
    RatEliminator el(total);
    std::vector<Monomial> kept;
    for (const auto& w : frame) {
        Polynomial e = expand_bracket(w, sign);
        if (e.is_zero())
            continue;
        SparseVec row;
        for (const auto& [m, c] : e.terms()) {
            auto it = std::lower_bound(ks.monomials->begin(), ks.monomials->end(), m,
                                       DegLexLess{});
            row.push_back({static_cast<std::int32_t>(it - ks.monomials->begin()), c});
        }
        row.push_back({total + static_cast<std::int32_t>(kept.size()), Rat(1)});
        if (el.insert(std::move(row)))
            kept.push_back(w);
    }

    std::vector<std::string> out;
    for (int i = 0; i < ks.kernel.rank(); ++i) {
        SparseVec v = ks.kernel.rational_row(i);
        SparseVec red = el.reduce(v);
        bool expressible = true;
        for (const auto& e : red)
            if (e.col < total) {
                expressible = false;
                break;
            }
        if (!expressible) {
            Polynomial p;
            for (const auto& e : v)
                p.add_term((*ks.monomials)[static_cast<std::size_t>(e.col)], e.value);
            out.push_back(p.render());
            continue;
        }
        // v = sum(-red[aug_i]) * expand(kept[i])
        std::string s;
        bool first = true;
        for (const auto& e : red) {
            Rat c = -e.value;
            bool neg = c < 0;
            Rat a = neg ? -c : c;
            if (first) {
                if (neg)
                    s += "-";
                first = false;
            } else {
                s += neg ? " - " : " + ";
            }
            if (a != 1)
                s += to_string(a) + "*";
            s += render_bracket(kept[static_cast<std::size_t>(e.col - total)], sign);
        }
        out.push_back(s.empty() ? "0" : s);
    }
    return out;
}

} // namespace nalg
