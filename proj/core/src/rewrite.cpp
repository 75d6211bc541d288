#include "nalg/rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace nalg {

namespace {

Monomial nd(const Monomial& a, const Monomial& b) { return Monomial::node(a, b); }

// (a(bc))d with four leaves: the one non-left-normed shape of the degree <= 4
// normal form.
bool is_padded_right_triple(const Monomial& m)
{
    if (m.degree() != 4)
        return false;
    auto [u, v] = m.split();
    if (!v.is_leaf() || u.is_leaf())
        return false;
    auto [a, bc] = u.split();
    return a.is_leaf() && !bc.is_leaf();
}

class Rewriter {
  public:
    // Combination of left-normed monomials equal to m, degree >= 5.
    Polynomial left_normalize(const Monomial& m)
    {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = ln_cache_.find(m);
            if (it != ln_cache_.end())
                return it->second;
        }
        Polynomial out = left_normalize_uncached(m);
        std::lock_guard<std::mutex> lock(mu_);
        ln_cache_.emplace(m, out);
        return out;
    }

    // Degree-4 normal form: left-normed words plus the (a(bc))d shape.
    Polynomial nf4(const Monomial& m)
    {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = nf4_cache_.find(m);
            if (it != nf4_cache_.end())
                return it->second;
        }
        Polynomial out = nf4_uncached(m);
        std::lock_guard<std::mutex> lock(mu_);
        nf4_cache_.emplace(m, out);
        return out;
    }

  private:
    Polynomial map_ln(const Polynomial& p)
    {
        Polynomial out;
        for (const auto& [m, c] : p.terms())
            out += c * left_normalize(m);
        return out;
    }

    Polynomial left_normalize_uncached(const Monomial& m)
    {
        if (is_left_normed(m))
            return Polynomial(m);
        auto [u, v] = m.split();
        const int s = v.degree();
        const int t = u.degree();

        if (s == 1) {
            // normalize the prefix, then re-append the last letter
            Polynomial prefix = (t == 4) ? nf4(u) : left_normalize(u);
            Polynomial out;
            for (const auto& [w, c] : prefix.terms()) {
                if (is_left_normed(w)) {
                    out.add_term(nd(w, v), c);
                    continue;
                }
                // ((a(bc))d)e = (((ab)c)d)e
                auto [w1, d_] = w.split();
                auto [a, bc] = w1.split();
                auto [b, c2] = bc.split();
                out.add_term(nd(nd(nd(nd(a, b), c2), d_), v), c);
            }
            return out;
        }

        if (s == 2) {
            auto [x, y] = v.split();
            auto [p, q] = u.split();
            if (q.is_leaf()) {
                // (PQ)(xy) = -((xP)y)Q + (P(xy))Q + ((xy)P)Q
                Polynomial out;
                out -= left_normalize(nd(nd(nd(x, p), y), q));
                out += left_normalize(nd(nd(p, v), q));
                out += left_normalize(nd(nd(v, p), q));
                return out;
            }
            if (t == 3) {
                // u = p*(q) with q of degree 2; left-alternativity with the
                // whole factors: (pq)v = p(qv) - (qp)v + q(pv)
                Polynomial out;
                out += left_normalize(nd(p, nd(q, v)));
                out -= left_normalize(nd(nd(q, p), v));
                out += left_normalize(nd(q, nd(p, v)));
                return out;
            }
            // reshape the prefix first; every reshaped term has a leaf right
            // child, which the (v1) branch above handles
            Polynomial prefix = (t == 4) ? nf4(u) : left_normalize(u);
            Polynomial out;
            for (const auto& [w, c] : prefix.terms())
                out += c * left_normalize(nd(w, v));
            return out;
        }

        // s >= 3
        auto [a, b] = v.split();
        if (!a.is_leaf()) {
            // u((a1 a2)b) = ((u a2)a1)b
            auto [a1, a2] = a.split();
            return left_normalize(nd(nd(nd(u, a2), a1), b));
        }
        // right-alternativity: u(ab) = (ua)b + (ub)a - u(ba)
        Polynomial out;
        out += left_normalize(nd(nd(u, a), b));
        out += left_normalize(nd(nd(u, b), a));
        out -= left_normalize(nd(u, nd(b, a)));
        return out;
    }

    Polynomial nf4_uncached(const Monomial& m)
    {
        if (is_left_normed(m) || is_padded_right_triple(m))
            return Polynomial(m);
        auto [u, v] = m.split();
        const int s = v.degree();
        if (s == 2) {
            // (ab)(xy) = -((xa)y)b + (a(xy))b + ((xy)a)b, all target shapes
            auto [a, b] = u.split();
            auto [x, y] = v.split();
            Polynomial out;
            out -= Polynomial(nd(nd(nd(x, a), y), b));
            out += Polynomial(nd(nd(a, v), b));
            out += Polynomial(nd(nd(v, a), b));
            return out;
        }
        // s == 3 (s == 1 shapes are all normal forms already)
        auto [a, b] = v.split();
        if (!a.is_leaf()) {
            auto [a1, a2] = a.split();
            return Polynomial(nd(nd(nd(u, a2), a1), b));
        }
        // u(ab) = (ua)b + (ub)a - u(ba)
        Polynomial out;
        out += nf4(nd(nd(u, a), b));
        out += Polynomial(nd(nd(u, b), a)); // (u(bc))a shape
        out -= nf4(nd(u, nd(b, a)));
        return out;
    }

    std::mutex mu_;
    std::unordered_map<Monomial, Polynomial, MonomialHash> ln_cache_;
    std::unordered_map<Monomial, Polynomial, MonomialHash> nf4_cache_;
};

Rewriter& shared_rewriter()
{
    static Rewriter r;
    return r;
}

Monomial sort_tail(const Monomial& w)
{
    std::vector<Gen> letters = w.leaf_sequence();
    std::sort(letters.begin() + 1, letters.end());
    return left_normed(letters);
}

} // namespace

Polynomial rewrite_nf(const Variety& v, const Monomial& m)
{
    if (v.name() == "perm") {
        // associativity flattens, right-commutativity sorts the tail
        std::vector<Gen> letters = m.leaf_sequence();
        std::sort(letters.begin() + 1, letters.end());
        return Polynomial(left_normed(letters));
    }
    if (v.name() != "binary-perm")
        throw Error("rewrite_nf supports only the perm and binary-perm varieties");
    if (m.degree() < 5)
        throw Error("rewrite_nf(binary-perm) requires degree >= 5");
    Polynomial ln = shared_rewriter().left_normalize(m);
    Polynomial out;
    for (const auto& [w, c] : ln.terms())
        out.add_term(sort_tail(w), c);
    return out;
}

} // namespace nalg
