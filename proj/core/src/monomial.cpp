#include "nalg/monomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace nalg {

namespace {

// Length of the complete subtree starting at position `pos`.
std::size_t subtree_len(Monomial::View c, std::size_t pos)
{
    std::size_t need = 1, i = pos;
    while (need > 0) {
        need += (c[i] == 0) ? 1 : -1;
        ++i;
    }
    return i - pos;
}

int view_degree(Monomial::View v) { return static_cast<int>((v.size() + 1) / 2); }

} // namespace

std::pair<Monomial, Monomial> Monomial::split() const
{
    if (is_leaf() || empty())
        throw Error("split on a leaf monomial");
    View v = view();
    std::size_t ll = subtree_len(v, 1);
    Code l(code_.begin() + 1, code_.begin() + 1 + ll);
    Code r(code_.begin() + 1 + ll, code_.end());
    return {from_code(std::move(l)), from_code(std::move(r))};
}

Gen Monomial::max_generator() const
{
    Gen g = 0;
    for (auto s : code_)
        g = std::max(g, s);
    return g;
}

std::vector<Gen> Monomial::leaf_sequence() const
{
    std::vector<Gen> out;
    out.reserve((code_.size() + 1) / 2);
    for (auto s : code_)
        if (s != 0)
            out.push_back(s);
    return out;
}

Monomial Monomial::substitute(Gen g, const Monomial& value) const
{
    Code out;
    out.reserve(code_.size() + value.code().size());
    for (auto s : code_) {
        if (s == g)
            out.insert(out.end(), value.code().begin(), value.code().end());
        else
            out.push_back(s);
    }
    return from_code(std::move(out));
}

std::string Monomial::render() const
{
    if (empty())
        throw Error("render on empty monomial");
    std::string out;
    // One pass over the preorder code with an explicit close-paren counter
    // per subtree would need a stack anyway; recursion is simplest.
    std::function<void(View)> rec = [&](View v) {
        if (v.size() == 1) {
            out += "x" + std::to_string(v[0]);
            return;
        }
        std::size_t ll = subtree_len(v, 1);
        out += "(";
        rec(v.subspan(1, ll));
        out += "*";
        rec(v.subspan(1 + ll));
        out += ")";
    };
    rec(view());
    return out;
}

int compare(TermOrder order, Monomial::View u, Monomial::View v)
{
    int du = view_degree(u), dv = view_degree(v);
    if (du != dv)
        return du < dv ? -1 : 1;
    if (du == 1) {
        if (u[0] != v[0])
            return u[0] < v[0] ? -1 : 1;
        return 0;
    }
    std::size_t ul = subtree_len(u, 1), vl = subtree_len(v, 1);
    Monomial::View u1 = u.subspan(1, ul), u2 = u.subspan(1 + ul);
    Monomial::View v1 = v.subspan(1, vl), v2 = v.subspan(1 + vl);
    if (order == TermOrder::deg_lex) {
        if (int c = compare(order, u1, v1))
            return c;
        return compare(order, u2, v2);
    }
    // right deg-lex: subwords are compared from the right side first
    if (int c = compare(order, u2, v2))
        return c;
    return compare(order, u1, v1);
}

int compare(TermOrder order, const Monomial& u, const Monomial& v)
{
    return compare(order, u.view(), v.view());
}

Monomial left_normed(const std::vector<Gen>& letters)
{
    if (letters.empty())
        throw Error("left_normed needs at least one letter");
    Monomial m = Monomial::leaf(letters[0]);
    for (std::size_t i = 1; i < letters.size(); ++i)
        m = Monomial::node(m, Monomial::leaf(letters[i]));
    return m;
}

bool is_left_normed(const Monomial& m)
{
    Monomial::View v = m.view();
    // In preorder a left comb is 0 0 ... 0 l1 l2 ... ln: all node markers
    // first, then the leaves.
    bool seen_leaf = false;
    for (auto s : v) {
        if (s == 0) {
            if (seen_leaf)
                return false;
        } else {
            seen_leaf = true;
        }
    }
    return true;
}

MultiDegree::MultiDegree(std::vector<int> counts) : counts_(std::move(counts))
{
    for (int c : counts_)
        if (c < 0)
            throw Error("negative multidegree entry");
    while (!counts_.empty() && counts_.back() == 0)
        counts_.pop_back();
}

MultiDegree MultiDegree::multilinear(int n)
{
    if (n < 1)
        throw Error("multilinear degree must be >= 1");
    return MultiDegree(std::vector<int>(static_cast<std::size_t>(n), 1));
}

MultiDegree MultiDegree::of(const Monomial& m)
{
    std::vector<int> counts;
    for (auto s : m.code()) {
        if (s == 0)
            continue;
        if (static_cast<std::size_t>(s) > counts.size())
            counts.resize(s, 0);
        ++counts[s - 1];
    }
    return MultiDegree(std::move(counts));
}

MultiDegree MultiDegree::parse(const std::string& text)
{
    std::vector<int> counts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            throw Error("bad multidegree '" + text + "'");
        }
        if (used != part.size() || v < 0)
            throw Error("bad multidegree '" + text + "'");
        counts.push_back(v);
    }
    if (counts.empty())
        throw Error("empty multidegree");
    return MultiDegree(std::move(counts));
}

int MultiDegree::degree() const
{
    int d = 0;
    for (int c : counts_)
        d += c;
    return d;
}

int MultiDegree::count(Gen g) const
{
    if (g < 1 || static_cast<std::size_t>(g) > counts_.size())
        return 0;
    return counts_[g - 1];
}

int MultiDegree::distinct_letters() const
{
    int n = 0;
    for (int c : counts_)
        n += (c > 0);
    return n;
}

MultiDegree MultiDegree::plus(const MultiDegree& o) const
{
    std::vector<int> out(std::max(counts_.size(), o.counts_.size()), 0);
    for (std::size_t i = 0; i < counts_.size(); ++i)
        out[i] += counts_[i];
    for (std::size_t i = 0; i < o.counts_.size(); ++i)
        out[i] += o.counts_[i];
    return MultiDegree(std::move(out));
}

MultiDegree MultiDegree::minus(const MultiDegree& o) const
{
    std::vector<int> out = counts_;
    if (o.counts_.size() > out.size())
        throw Error("multidegree subtraction underflow");
    for (std::size_t i = 0; i < o.counts_.size(); ++i) {
        out[i] -= o.counts_[i];
        if (out[i] < 0)
            throw Error("multidegree subtraction underflow");
    }
    return MultiDegree(std::move(out));
}

MultiDegree MultiDegree::with_extra(Gen g, int n) const
{
    std::vector<int> out = counts_;
    if (static_cast<std::size_t>(g) > out.size())
        out.resize(g, 0);
    out[g - 1] += n;
    return MultiDegree(std::move(out));
}

std::string MultiDegree::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(counts_[i]);
    }
    return s.empty() ? "0" : s;
}

std::vector<MultiDegree> multidegrees_of_degree(int degree, int letters)
{
    std::vector<MultiDegree> out;
    std::vector<int> cur(static_cast<std::size_t>(letters), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == letters - 1) {
            cur[pos] = left;
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (letters < 1 || degree < 1)
        throw Error("multidegrees_of_degree needs degree >= 1 and letters >= 1");
    rec(0, degree);
    return out;
}

namespace {

std::vector<Monomial> enumerate_impl(const MultiDegree& d);

std::shared_ptr<const std::vector<Monomial>> enumerate_cached(const MultiDegree& d)
{
    static std::map<MultiDegree, std::shared_ptr<const std::vector<Monomial>>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end())
            return it->second;
    }
    auto result = std::make_shared<const std::vector<Monomial>>(enumerate_impl(d));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(d, result);
    return it->second;
}

// Every monomial has a unique root split into (left multidegree, right
// multidegree), so recursing over proper sub-multidegrees yields each tree
// exactly once.
std::vector<Monomial> enumerate_impl(const MultiDegree& d)
{
    std::vector<Monomial> out;
    if (d.degree() == 1) {
        for (Gen g = 1; g <= d.width(); ++g)
            if (d.count(g) > 0)
                out.push_back(Monomial::leaf(g));
        return out;
    }
    // Odometer over componentwise 0 <= e <= d, skipping e = 0 and e = d.
    const auto& counts = d.counts();
    std::vector<int> e(counts.size(), 0);
    for (;;) {
        // advance
        std::size_t i = 0;
        while (i < e.size()) {
            if (e[i] < counts[i]) {
                ++e[i];
                break;
            }
            e[i] = 0;
            ++i;
        }
        if (i == e.size())
            break;
        MultiDegree d1{e};
        if (d1 == d)
            continue;
        MultiDegree d2 = d.minus(d1);
        auto ls = enumerate_cached(d1);
        auto rs = enumerate_cached(d2);
        for (const auto& l : *ls)
            for (const auto& r : *rs)
                out.push_back(Monomial::node(l, r));
    }
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

} // namespace

std::shared_ptr<const std::vector<Monomial>> enumerate_monomials(const MultiDegree& d)
{
    if (d.degree() < 1)
        throw Error("enumerate_monomials needs degree >= 1");
    return enumerate_cached(d);
}

} // namespace nalg
