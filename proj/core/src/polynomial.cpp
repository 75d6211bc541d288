#include "nalg/polynomial.hpp"

namespace nalg {

void Polynomial::add_term(const Monomial& m, const Rat& c)
{
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(Monomial::node(ma, mb), ca * cb);
    return out;
}

const Monomial& Polynomial::leading_monomial(TermOrder order) const
{
    if (terms_.empty())
        throw Error("leading_monomial: empty support");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (compare(order, it->first, best->first) > 0)
            best = it;
    return best->first;
}

std::optional<MultiDegree> Polynomial::homogeneous_multidegree() const
{
    std::optional<MultiDegree> d;
    for (const auto& [m, c] : terms_) {
        MultiDegree md = MultiDegree::of(m);
        if (!d)
            d = md;
        else if (*d != md)
            return std::nullopt;
    }
    return d;
}

Polynomial Polynomial::substitute(Gen g, const Polynomial& value) const
{
    for (const auto& [vm, vc] : value.terms())
        for (auto s : vm.code())
            if (s == g)
                throw Error("substitute: replacement polynomial reuses the replaced leaf");
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        // Expand occurrences of g one leaf at a time; each leaf multiplies
        // the term count by |value|.
        Polynomial acc(Monomial::from_code(m.code()), c);
        for (;;) {
            Polynomial next;
            bool expanded = false;
            for (const auto& [mm, cc] : acc.terms()) {
                const auto& code = mm.code();
                std::size_t pos = code.size();
                for (std::size_t i = 0; i < code.size(); ++i)
                    if (code[i] == g) {
                        pos = i;
                        break;
                    }
                if (pos == code.size()) {
                    next.add_term(mm, cc);
                    continue;
                }
                expanded = true;
                for (const auto& [vm, vc] : value.terms()) {
                    Monomial::Code spliced;
                    spliced.reserve(code.size() + vm.code().size());
                    spliced.insert(spliced.end(), code.begin(), code.begin() + pos);
                    spliced.insert(spliced.end(), vm.code().begin(), vm.code().end());
                    spliced.insert(spliced.end(), code.begin() + pos + 1, code.end());
                    next.add_term(Monomial::from_code(std::move(spliced)), cc * vc);
                }
            }
            acc = std::move(next);
            if (!expanded)
                break;
        }
        out += acc;
    }
    return out;
}

Polynomial Polynomial::substitute(Gen g, const Monomial& value) const
{
    Polynomial out;
    for (const auto& [m, c] : terms_)
        out.add_term(m.substitute(g, value), c);
    return out;
}

std::string Polynomial::render(const std::function<std::string(Gen)>& namer) const
{
    if (terms_.empty())
        return "0";
    auto render_mono = [&](const Monomial& m) {
        if (!namer)
            return m.render();
        std::string out;
        std::function<void(Monomial::View)> rec = [&](Monomial::View v) {
            if (v.size() == 1) {
                out += namer(v[0]);
                return;
            }
            std::size_t need = 1, i = 1;
            while (need > 0) {
                need += (v[i] == 0) ? 1 : -1;
                ++i;
            }
            out += "(";
            rec(v.subspan(1, i - 1));
            out += "*";
            rec(v.subspan(i));
            out += ")";
        };
        rec(m.view());
        return out;
    };
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        bool neg = a < 0;
        if (neg)
            a = -a;
        if (first) {
            if (neg)
                s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (a != 1)
            s += to_string(a) + "*";
        s += render_mono(m);
    }
    return s;
}

} // namespace nalg
