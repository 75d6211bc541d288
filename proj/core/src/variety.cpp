#include "nalg/variety.hpp"

#include "nalg/parser.hpp"
#include "nalg/polarize.hpp"
#include "nalg/threading.hpp"
#include "nalg/version.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace nalg {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fnv_hex(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace

Variety Variety::from_identities(std::string name, std::vector<Identity> identities)
{
    Variety v;
    v.name_ = std::move(name);
    v.source_ = identities;
    for (const auto& id : identities) {
        if (id.poly.is_zero())
            continue;
        if (id.multilinear) {
            v.identities_.push_back(id);
            continue;
        }
        for (auto& piece : linearize(id))
            if (!piece.poly.is_zero())
                v.identities_.push_back(std::move(piece));
    }
    // Content hash over the canonicalized multilinear identity set; the
    // variety name deliberately does not participate.
    std::vector<std::string> rendered;
    rendered.reserve(v.identities_.size());
    for (const auto& id : v.identities_)
        rendered.push_back(id.poly.render());
    std::sort(rendered.begin(), rendered.end());
    std::string blob;
    for (const auto& r : rendered)
        blob += r + "\n";
    v.hash_ = fnv_hex(blob);
    return v;
}

Variety Variety::from_def(const VarietyDef& def)
{
    return from_identities(def.name, def.identities);
}

Variety Variety::builtin(const std::string& name)
{
    return from_def(builtin_variety(name));
}

std::int32_t ComponentSpace::col_of(const Monomial& m) const
{
    auto it = index.find(m);
    if (it == index.end())
        throw Error("monomial " + m.render() + " is not in the component of multidegree " +
                    d.to_string());
    return it->second;
}

std::vector<Monomial> ComponentSpace::quotient_basis() const
{
    std::vector<Monomial> out;
    for (std::int32_t j = 0; j < static_cast<std::int32_t>(monomials->size()); ++j)
        if (ech.row_of_column(j) < 0)
            out.push_back((*monomials)[static_cast<std::size_t>(j)]);
    return out;
}

std::string ComponentReport::to_json() const
{
    ordered_json j;
    j["schema"] = 1;
    j["engine"] = engine_version;
    j["variety"] = variety;
    j["multidegree"] = d.counts();
    j["total"] = total;
    j["rank"] = rank;
    j["dimension"] = dimension;
    if (basis)
        j["basis"] = *basis;
    return j.dump();
}

std::string ComponentReport::to_text() const
{
    std::ostringstream os;
    os << "variety " << variety << ", multidegree (" << d.to_string() << "): total " << total
       << ", consequence rank " << rank << ", dimension " << dimension;
    if (basis) {
        os << "\nbasis:";
        for (const auto& b : *basis)
            os << "\n  " << b;
    }
    return os.str();
}

namespace {

// Single-pass simultaneous substitution: leaf i of `term` is replaced by
// ms[i-1]. Avoids index collisions between variable slots and alphabet
// letters.
Monomial subst_all(const Monomial& term, const std::vector<const Monomial*>& ms)
{
    Monomial::Code out;
    out.reserve(term.code().size() * 2);
    for (auto s : term.code()) {
        if (s == 0) {
            out.push_back(0);
            continue;
        }
        const Monomial::Code& c = ms[static_cast<std::size_t>(s) - 1]->code();
        out.insert(out.end(), c.begin(), c.end());
    }
    return Monomial::from_code(std::move(out));
}

// Identity pre-scaled to integer coefficients, terms as (coef, tree).
struct ScaledIdentity {
    std::vector<std::pair<Int, Monomial>> terms;
    int nvars = 0;
};

ScaledIdentity scale_identity(const Identity& id)
{
    Int lcm = 1;
    for (const auto& [m, c] : id.poly.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ScaledIdentity out;
    out.nvars = id.variable_count();
    for (const auto& [m, c] : id.poly.terms())
        out.terms.emplace_back(c.get_num() * (lcm / c.get_den()), m);
    return out;
}

void canonicalize_row(IntRow& row)
{
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicate columns (distinct identity terms can substitute to the
    // same monomial)
    IntRow merged;
    for (auto& [c, v] : row) {
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += v;
        else
            merged.emplace_back(c, std::move(v));
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    if (merged.empty()) {
        row.clear();
        return;
    }
    Int g = 0;
    for (const auto& [c, v] : merged)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    bool flip = sgn(merged[0].second) < 0;
    if (g != 1 || flip)
        for (auto& [c, v] : merged) {
            if (g != 1)
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            if (flip)
                v = -v;
        }
    row = std::move(merged);
}

// One way of distributing the target multidegree over the identity's k
// variable slots.
struct Split {
    std::vector<MultiDegree> parts; // size k
};

std::vector<Split> enumerate_splits(const MultiDegree& d, int k)
{
    const auto& counts = d.counts();
    int width = d.width();
    std::vector<Split> out;
    // Odometer over per-letter compositions into k slots.
    std::vector<std::vector<int>> comp(static_cast<std::size_t>(width),
                                       std::vector<int>(static_cast<std::size_t>(k), 0));
    for (int j = 0; j < width; ++j)
        comp[static_cast<std::size_t>(j)][0] = counts[static_cast<std::size_t>(j)];

    // Composition successor: move one unit right, standard colex walk.
    auto next_comp = [&](std::vector<int>& c, int total) -> bool {
        if (total == 0)
            return false;
        // find rightmost position with something to move
        int n = static_cast<int>(c.size());
        int i = n - 2;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == 0)
            --i;
        if (i < 0)
            return false;
        --c[static_cast<std::size_t>(i)];
        int tail = 1;
        for (int t = i + 1; t < n; ++t) {
            tail += c[static_cast<std::size_t>(t)];
            c[static_cast<std::size_t>(t)] = 0;
        }
        c[static_cast<std::size_t>(i) + 1] = tail;
        return true;
    };

    for (;;) {
        Split s;
        s.parts.reserve(static_cast<std::size_t>(k));
        bool vars_ok = true;
        for (int slot = 0; slot < k; ++slot) {
            std::vector<int> part(static_cast<std::size_t>(width), 0);
            for (int j = 0; j < width; ++j)
                part[static_cast<std::size_t>(j)] = comp[static_cast<std::size_t>(j)][static_cast<std::size_t>(slot)];
            MultiDegree md{part};
            if (md.is_zero()) {
                vars_ok = false;
                break;
            }
            s.parts.push_back(std::move(md));
        }
        if (vars_ok)
            out.push_back(std::move(s));
        // advance odometer
        int j = 0;
        for (; j < width; ++j) {
            if (next_comp(comp[static_cast<std::size_t>(j)], counts[static_cast<std::size_t>(j)]))
                break;
            // reset letter j and carry
            std::fill(comp[static_cast<std::size_t>(j)].begin(), comp[static_cast<std::size_t>(j)].end(), 0);
            comp[static_cast<std::size_t>(j)][0] = counts[static_cast<std::size_t>(j)];
        }
        if (j == width)
            break;
    }
    return out;
}

// Proper nonzero sub-multidegrees of d.
std::vector<MultiDegree> proper_submultidegrees(const MultiDegree& d)
{
    std::vector<MultiDegree> out;
    const auto& counts = d.counts();
    std::vector<int> e(counts.size(), 0);
    for (;;) {
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
        MultiDegree md{e};
        if (md != d)
            out.push_back(std::move(md));
    }
    return out;
}

} // namespace

// The degree-d component of the T-ideal is spanned by the substitution
// instances c[f(m1,...,mk)] over all one-hole contexts c. Contexts factor
// through their root: c is either the bare hole or m*(c') / (c')*m for a
// full monomial m and a smaller context c'. The span is therefore exactly
//
//   { f(m1,...,mk) of multidegree d }                        (bare hole)
//   u  { m*w, w*m : m in monomials(e), w spanning T(d - e) } (0 < e < d)
//
// and for the embedded part it suffices to run w over the echelon rows of
// the already-reduced smaller component, which keeps every generated row as
// narrow as those rows. Substituted monomials still range over all
// monomials of their multidegree, as do the embedding factors m.
std::shared_ptr<const ComponentSpace> Engine::build_component(const Variety& v,
                                                              const MultiDegree& d)
{
    auto comp = std::make_shared<ComponentSpace>();
    comp->d = d;
    comp->monomials = enumerate_monomials(d);
    comp->index.reserve(comp->monomials->size() * 2);
    for (std::size_t i = 0; i < comp->monomials->size(); ++i)
        comp->index.emplace((*comp->monomials)[i], static_cast<std::int32_t>(i));

    int min_identity_degree = 0;
    for (const auto& id : v.identities()) {
        if (!id.multilinear)
            throw Error("internal: variety carries a non-multilinear identity");
        if (min_identity_degree == 0 || id.variable_count() < min_identity_degree)
            min_identity_degree = id.variable_count();
    }
    if (min_identity_degree == 0 || d.degree() < min_identity_degree) {
        comp->ech = EchelonForm(static_cast<int>(comp->monomials->size()), {});
        return comp;
    }

    // Sub-components first (cache-mediated recursion), sequential to keep
    // the worker pool for row generation.
    std::vector<std::pair<MultiDegree, std::shared_ptr<const ComponentSpace>>> subs;
    for (const auto& e : proper_submultidegrees(d)) {
        MultiDegree rest = d.minus(e);
        if (rest.degree() < min_identity_degree)
            continue;
        auto sub = consequences(v, rest);
        if (sub->rank() > 0)
            subs.emplace_back(e, std::move(sub));
    }

    // Work units: direct instances per (identity, split), and embeddings per
    // (sub-multidegree). Units are merged in order, then sorted and
    // deduplicated, so the result does not depend on the thread count.
    struct Unit {
        const ScaledIdentity* id = nullptr; // direct instances when set
        Split split;
        const ComponentSpace* sub = nullptr; // embeddings when set
        MultiDegree embed;
    };
    std::vector<ScaledIdentity> scaled;
    scaled.reserve(v.identities().size());
    for (const auto& id : v.identities())
        if (id.variable_count() >= 1 && id.variable_count() <= d.degree())
            scaled.push_back(scale_identity(id));
    std::vector<Unit> units;
    for (const auto& sid : scaled)
        for (auto& sp : enumerate_splits(d, sid.nvars)) {
            Unit u;
            u.id = &sid;
            u.split = std::move(sp);
            units.push_back(std::move(u));
        }
    for (const auto& [e, sub] : subs) {
        Unit u;
        u.sub = sub.get();
        u.embed = e;
        units.push_back(std::move(u));
    }

    std::vector<std::vector<IntRow>> per_unit(units.size());
    parallel_for(units.size(), threads_, [&](std::size_t ui) {
        const Unit& unit = units[ui];
        std::vector<IntRow>& rows = per_unit[ui];
        if (unit.id) {
            const ScaledIdentity& sid = *unit.id;
            const int k = sid.nvars;
            std::vector<std::shared_ptr<const std::vector<Monomial>>> choices;
            choices.reserve(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                choices.push_back(enumerate_monomials(unit.split.parts[static_cast<std::size_t>(i)]));
            std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
            std::vector<const Monomial*> ms(static_cast<std::size_t>(k));
            for (;;) {
                for (int i = 0; i < k; ++i)
                    ms[static_cast<std::size_t>(i)] =
                        &(*choices[static_cast<std::size_t>(i)])[pick[static_cast<std::size_t>(i)]];
                IntRow row;
                row.reserve(sid.terms.size());
                for (const auto& [coef, term] : sid.terms)
                    row.emplace_back(comp->col_of(subst_all(term, ms)), coef);
                canonicalize_row(row);
                if (!row.empty())
                    rows.push_back(std::move(row));
                int i = 0;
                for (; i < k; ++i) {
                    if (++pick[static_cast<std::size_t>(i)] <
                        choices[static_cast<std::size_t>(i)]->size())
                        break;
                    pick[static_cast<std::size_t>(i)] = 0;
                }
                if (i == k)
                    break;
            }
            return;
        }
        // embeddings m*w and w*m of the reduced smaller component
        const ComponentSpace& sub = *unit.sub;
        auto factors = enumerate_monomials(unit.embed);
        for (const auto& m : *factors) {
            for (const auto& srow : sub.ech.rows()) {
                IntRow left, right;
                left.reserve(srow.size());
                right.reserve(srow.size());
                for (const auto& [scol, coef] : srow) {
                    const Monomial& w = (*sub.monomials)[static_cast<std::size_t>(scol)];
                    left.emplace_back(comp->col_of(Monomial::node(m, w)), coef);
                    right.emplace_back(comp->col_of(Monomial::node(w, m)), coef);
                }
                canonicalize_row(left);
                canonicalize_row(right);
                if (!left.empty())
                    rows.push_back(std::move(left));
                if (!right.empty())
                    rows.push_back(std::move(right));
            }
        }
    });

    std::vector<IntRow> rows;
    std::size_t nrows = 0;
    for (const auto& r : per_unit)
        nrows += r.size();
    rows.reserve(nrows);
    for (auto& r : per_unit)
        for (auto& row : r)
            rows.push_back(std::move(row));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    comp->ech = rref_rows(std::move(rows), static_cast<int>(comp->monomials->size()));
    return comp;
}

std::shared_ptr<const ComponentSpace> Engine::consequences(const Variety& v, const MultiDegree& d)
{
    if (d.degree() < 1)
        throw Error("component multidegree must have degree >= 1");
    std::pair<std::string, MultiDegree> key{v.content_hash(), d};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
    }
    auto comp = build_component(v, d);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(std::move(key), std::move(comp));
    return it->second;
}

ComponentReport Engine::dimension(const Variety& v, const MultiDegree& d, bool with_basis)
{
    auto comp = consequences(v, d);
    ComponentReport rep;
    rep.variety = v.name();
    rep.d = d;
    rep.total = comp->total();
    rep.rank = comp->rank();
    rep.dimension = comp->dimension();
    if (with_basis) {
        std::vector<std::string> rendered;
        for (const auto& m : comp->quotient_basis())
            rendered.push_back(m.render());
        rep.basis = std::move(rendered);
    }
    return rep;
}

IntRow Engine::poly_to_row(const ComponentSpace& comp, const Polynomial& p)
{
    Int lcm = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    IntRow row;
    row.reserve(p.term_count());
    for (const auto& [m, c] : p.terms())
        row.emplace_back(comp.col_of(m), c.get_num() * (lcm / c.get_den()));
    // terms iterate in deg-lex order, which is exactly the column order
    return row;
}

Polynomial Engine::row_to_poly(const ComponentSpace& comp, const IntRow& row)
{
    Polynomial p;
    for (const auto& [c, n] : row)
        p.add_term((*comp.monomials)[static_cast<std::size_t>(c)], Rat(n));
    return p;
}

Polynomial Engine::vec_to_poly(const ComponentSpace& comp, const SparseVec& v)
{
    Polynomial p;
    for (const auto& e : v)
        p.add_term((*comp.monomials)[static_cast<std::size_t>(e.col)], e.value);
    return p;
}

Engine::ConsequenceOutcome Engine::is_consequence(const Variety& v, const Identity& f)
{
    if (!f.multilinear)
        throw Error("is_consequence requires a multilinear identity; linearize first");
    ConsequenceOutcome out;
    if (f.poly.is_zero()) {
        out.holds = true;
        return out;
    }
    MultiDegree d = MultiDegree::multilinear(f.variable_count());
    auto comp = consequences(v, d);
    IntRow residue = reduce_int(comp->ech, poly_to_row(*comp, f.poly));
    out.holds = residue.empty();
    if (!out.holds)
        out.residue = row_to_poly(*comp, residue);
    return out;
}

Engine::BasisOutcome Engine::verify_basis(const Variety& v, const MultiDegree& d,
                                          const std::vector<Monomial>& candidates)
{
    for (const auto& m : candidates)
        if (MultiDegree::of(m) != d)
            throw Error("candidate " + m.render() + " does not have multidegree " + d.to_string());
    auto comp = consequences(v, d);
    BasisOutcome out;
    if (candidates.size() != comp->dimension()) {
        out.ok = false;
        out.diagnosis = "wrong count: " + std::to_string(candidates.size()) + " candidates vs dimension " +
                        std::to_string(comp->dimension());
        return out;
    }
    std::vector<IntRow> residues;
    for (const auto& m : candidates) {
        IntRow unit{{comp->col_of(m), Int(1)}};
        IntRow r = reduce_int(comp->ech, std::move(unit));
        if (r.empty()) {
            out.ok = false;
            out.diagnosis = "candidate " + m.render() + " lies in the consequence space";
            return out;
        }
        residues.push_back(std::move(r));
    }
    EchelonForm re = rref_rows(std::move(residues), static_cast<int>(comp->total()));
    if (re.rank() != static_cast<int>(candidates.size())) {
        out.ok = false;
        out.diagnosis = "candidates are linearly dependent modulo the consequence space";
        return out;
    }
    out.ok = true;
    out.diagnosis = "basis of dimension " + std::to_string(candidates.size());
    return out;
}

SparseVec Engine::poly_to_vec(const ComponentSpace& comp, const Polynomial& p)
{
    SparseVec v;
    v.reserve(p.term_count());
    for (const auto& [m, c] : p.terms())
        v.push_back({comp.col_of(m), c});
    return v;
}

SparseVec Engine::reduce_exact(const ComponentSpace& comp, SparseVec v)
{
    // rational_row is scaled to pivot value 1, so adding -v[i] times it
    // cancels the pivot entry exactly; fill-in lands strictly to the right.
    std::size_t i = 0;
    while (i < v.size()) {
        int r = comp.ech.row_of_column(v[i].col);
        if (r < 0) {
            ++i;
            continue;
        }
        axpy(v, -v[i].value, comp.ech.rational_row(r));
    }
    return v;
}

std::vector<Rat> Engine::normal_form(const Variety& v, const Polynomial& p,
                                     const std::vector<Monomial>& basis)
{
    if (p.is_zero())
        return std::vector<Rat>(basis.size(), Rat(0));
    auto hd = p.homogeneous_multidegree();
    if (!hd)
        throw Error("normal_form requires a homogeneous polynomial");
    if (basis.empty())
        throw Error("normal_form requires a nonempty basis");
    MultiDegree d = *hd;
    BasisOutcome chk = verify_basis(v, d, basis);
    if (!chk.ok)
        throw Error("normal_form basis fails verification: " + chk.diagnosis);
    auto comp = consequences(v, d);
    const std::int32_t n = static_cast<std::int32_t>(comp->total());

    RatEliminator el(n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        SparseVec row{{comp->col_of(basis[i]), Rat(1)}};
        row = reduce_exact(*comp, std::move(row));
        row.push_back({n + static_cast<std::int32_t>(i), Rat(1)});
        if (!el.insert(std::move(row)))
            throw Error("internal: verified basis produced a dependent residue");
    }
    SparseVec target = reduce_exact(*comp, poly_to_vec(*comp, p));
    SparseVec reduced = el.reduce(std::move(target));
    std::vector<Rat> coords(basis.size(), Rat(0));
    for (const auto& e : reduced) {
        if (e.col < n)
            throw Error("internal: polynomial class not spanned by the verified basis");
        coords[static_cast<std::size_t>(e.col - n)] = -e.value;
    }
    return coords;
}

} // namespace nalg
