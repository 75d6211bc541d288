#include "nalg/sparse.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace nalg {

void SparseMatrix::add_row(SparseVec row)
{
    std::int32_t last = -1;
    SparseVec clean;
    clean.reserve(row.size());
    for (auto& e : row) {
        if (e.col <= last || e.col >= ncols_)
            throw Error("matrix row not sorted or column out of range");
        last = e.col;
        if (e.value != 0)
            clean.push_back(std::move(e));
    }
    rows_.push_back(std::move(clean));
}

EchelonForm::EchelonForm(int ncols, std::vector<IntRow> rows)
    : ncols_(ncols), rows_(std::move(rows))
{
    pivots_.reserve(rows_.size());
    col2row_.assign(static_cast<std::size_t>(ncols_), -1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        pivots_.push_back(rows_[i][0].first);
        col2row_[static_cast<std::size_t>(rows_[i][0].first)] = static_cast<std::int32_t>(i);
    }
}

int EchelonForm::row_of_column(std::int32_t col) const
{
    if (col < 0 || col >= ncols_)
        return -1;
    return col2row_[static_cast<std::size_t>(col)];
}

SparseVec EchelonForm::rational_row(int row) const
{
    SparseVec out;
    const IntRow& r = rows_[static_cast<std::size_t>(row)];
    const Int& pe = r[0].second;
    for (const auto& [c, n] : r) {
        Rat q(n, pe);
        q.canonicalize();
        out.push_back({c, q});
    }
    return out;
}

namespace {

struct OverflowBail {};

// int64 coefficient policy with overflow detection; every operation that
// could leave the representable range throws OverflowBail and the caller
// restarts with the GMP policy. Both policies normalize rows identically,
// so the final echelon form does not depend on which one ran.
struct I64 {
    using C = std::int64_t;
    static C add(C a, C b)
    {
        C r;
        if (__builtin_add_overflow(a, b, &r))
            throw OverflowBail{};
        return r;
    }
    static C sub(C a, C b)
    {
        C r;
        if (__builtin_sub_overflow(a, b, &r))
            throw OverflowBail{};
        return r;
    }
    static C mul(C a, C b)
    {
        C r;
        if (__builtin_mul_overflow(a, b, &r))
            throw OverflowBail{};
        return r;
    }
    static C neg(C a) { return sub(0, a); }
    static C quot_exact(C a, C b) { return a / b; }
    static C gcd(C a, C b)
    {
        // INT64_MIN has no representable absolute value; bail to GMP.
        a = a < 0 ? neg(a) : a;
        b = b < 0 ? neg(b) : b;
        while (b != 0) {
            C t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    static int sign(C a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
    static bool fits(const Int& z) { return z.fits_slong_p(); }
    static C from_mpz(const Int& z) { return z.get_si(); }
    static Int to_mpz(C a) { return Int(static_cast<long>(a)); }
    // Content reduction is only worth its cost once values get large.
    static bool wants_normalize(C a) { return a > (C(1) << 40) || a < -(C(1) << 40); }
};

struct MpzP {
    using C = Int;
    static C add(const C& a, const C& b) { return a + b; }
    static C sub(const C& a, const C& b) { return a - b; }
    static C mul(const C& a, const C& b) { return a * b; }
    static C neg(const C& a) { return -a; }
    static C quot_exact(const C& a, const C& b)
    {
        C q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static C gcd(const C& a, const C& b)
    {
        C g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static int sign(const C& a) { return sgn(a); }
    static bool fits(const Int&) { return true; }
    static C from_mpz(const Int& z) { return z; }
    static Int to_mpz(const C& a) { return a; }
    static bool wants_normalize(const C& a) { return mpz_size(a.get_mpz_t()) > 2; }
};

template <class P> using PRow = std::vector<std::pair<std::int32_t, typename P::C>>;

// Divides by the content gcd and makes the leading entry positive.
template <class P> void normalize_row(PRow<P>& r)
{
    if (r.empty())
        return;
    typename P::C g = r[0].second;
    for (std::size_t i = 1; i < r.size(); ++i) {
        g = P::gcd(g, r[i].second);
        // gcd 1 short-circuit matters with mpz rows
        if (P::sign(g) > 0 && g == 1)
            break;
    }
    if (P::sign(g) < 0)
        g = P::neg(g);
    bool flip = P::sign(r[0].second) < 0;
    if (g == 1 && !flip)
        return;
    for (auto& [c, v] : r) {
        if (g != 1)
            v = P::quot_exact(v, g);
        if (flip)
            v = P::neg(v);
    }
}

// out = a*r - b*p, merged by column. The entry of r at p's leading column
// cancels by construction.
template <class P>
void combine(PRow<P>& out, const PRow<P>& r, const typename P::C& a, const PRow<P>& p,
             const typename P::C& b)
{
    out.clear();
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() && j < p.size()) {
        if (r[i].first < p[j].first) {
            out.emplace_back(r[i].first, P::mul(a, r[i].second));
            ++i;
        } else if (r[i].first > p[j].first) {
            out.emplace_back(p[j].first, P::neg(P::mul(b, p[j].second)));
            ++j;
        } else {
            typename P::C v = P::sub(P::mul(a, r[i].second), P::mul(b, p[j].second));
            if (P::sign(v) != 0)
                out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    for (; i < r.size(); ++i)
        out.emplace_back(r[i].first, P::mul(a, r[i].second));
    for (; j < p.size(); ++j)
        out.emplace_back(p[j].first, P::neg(P::mul(b, p[j].second)));
}

// Incremental RREF with the reduced invariant maintained online: stored
// rows never carry entries at other pivot columns. Reducing an incoming row
// then needs one combine per pivot-column entry (fill-in lands only on
// currently free columns), and installing a new pivot back-substitutes it
// into the stored rows that reference its column (tracked by an inverted
// column index). For matrices whose RREF is sparse this keeps every row
// narrow for the whole run.
template <class P> class Eliminator {
  public:
    explicit Eliminator(int ncols)
        : ncols_(ncols), col2row_(static_cast<std::size_t>(ncols), -1),
          col_users_(static_cast<std::size_t>(ncols))
    {
    }

    bool insert(PRow<P>& r)
    {
        reduce_inplace(r);
        if (r.empty())
            return false;
        normalize_row<P>(r);
        std::int32_t pivot_col = r[0].first;
        std::int32_t row_id = static_cast<std::int32_t>(rows_.size());
        rows_.push_back(std::move(r));
        back_fix(pivot_col, row_id);
        col2row_[static_cast<std::size_t>(pivot_col)] = row_id;
        const PRow<P>& stored = rows_[static_cast<std::size_t>(row_id)];
        for (std::size_t i = 1; i < stored.size(); ++i)
            col_users_[static_cast<std::size_t>(stored[i].first)].push_back(row_id);
        return true;
    }

    void reduce_inplace(PRow<P>& r) const
    {
        std::size_t i = 0;
        PRow<P> tmp;
        while (i < r.size()) {
            std::int32_t idx = col2row_[static_cast<std::size_t>(r[i].first)];
            if (idx < 0) {
                ++i;
                continue;
            }
            const PRow<P>& p = rows_[static_cast<std::size_t>(idx)];
            typename P::C a = p[0].second, b = r[i].second;
            typename P::C g = P::gcd(a, b);
            if (g != 1) {
                a = P::quot_exact(a, g);
                b = P::quot_exact(b, g);
            }
            combine<P>(tmp, r, a, p, b);
            r.swap(tmp);
            maybe_normalize(r);
            ++stat_eliminations;
            stat_entries += r.size();
            stat_maxwidth = std::max(stat_maxwidth, r.size());
        }
    }

    mutable std::size_t stat_eliminations = 0, stat_entries = 0, stat_maxwidth = 0;

    // Rows are RREF already; hand them out sorted by pivot column.
    std::vector<PRow<P>> take_rows()
    {
        std::erase_if(rows_, [](const PRow<P>& r) { return r.empty(); });
        std::sort(rows_.begin(), rows_.end(),
                  [](const PRow<P>& a, const PRow<P>& b) { return a[0].first < b[0].first; });
        return std::move(rows_);
    }

  private:
    static void maybe_normalize(PRow<P>& r)
    {
        // Normalize only once coefficients actually grow; the final echelon
        // is normalized regardless, so this changes cost, never results.
        for (const auto& [c, v] : r)
            if (P::wants_normalize(v)) {
                normalize_row<P>(r);
                return;
            }
    }

    // Eliminates the new pivot column from every stored row referencing it.
    void back_fix(std::int32_t pivot_col, std::int32_t pivot_row)
    {
        auto& users = col_users_[static_cast<std::size_t>(pivot_col)];
        if (users.empty())
            return;
        const PRow<P>& p = rows_[static_cast<std::size_t>(pivot_row)];
        PRow<P> tmp;
        for (std::int32_t uid : users) {
            if (uid == pivot_row)
                continue;
            PRow<P>& s = rows_[static_cast<std::size_t>(uid)];
            // the index may be stale: the entry can have cancelled earlier
            const auto it = std::lower_bound(
                s.begin(), s.end(), pivot_col,
                [](const auto& e, std::int32_t c) { return e.first < c; });
            if (it == s.end() || it->first != pivot_col)
                continue;
            typename P::C a = p[0].second, b = it->second;
            typename P::C g = P::gcd(a, b);
            if (g != 1) {
                a = P::quot_exact(a, g);
                b = P::quot_exact(b, g);
            }
            combine<P>(tmp, s, a, p, b);
            s.swap(tmp);
            maybe_normalize(s);
            ++stat_eliminations;
            stat_entries += s.size();
            stat_maxwidth = std::max(stat_maxwidth, s.size());
            // register the fill-in (entries gained from p's free columns)
            for (std::size_t i = 1; i < p.size(); ++i) {
                auto& lst = col_users_[static_cast<std::size_t>(p[i].first)];
                if (lst.empty() || lst.back() != uid)
                    lst.push_back(uid);
            }
        }
        users.clear();
        users.shrink_to_fit();
    }

    int ncols_;
    std::vector<PRow<P>> rows_;
    std::vector<std::int32_t> col2row_;
    std::vector<std::vector<std::int32_t>> col_users_;
};

template <class P> PRow<P> convert_row(const IntRow& r)
{
    PRow<P> out;
    out.reserve(r.size());
    for (const auto& [c, v] : r) {
        if (!P::fits(v))
            throw OverflowBail{};
        out.emplace_back(c, P::from_mpz(v));
    }
    return out;
}

template <class P> EchelonForm run_rref(const std::vector<IntRow>& input, int ncols)
{
    std::vector<PRow<P>> rows;
    rows.reserve(input.size());
    for (const auto& r : input)
        rows.push_back(convert_row<P>(r));
    // Canonical processing order: the echelon form is unique anyway, but a
    // fixed order makes intermediate states (and timings) reproducible.
    // Narrow rows first: they install cheap pivots that keep the later,
    // wider rows from cascading.
    std::sort(rows.begin(), rows.end(), [](const PRow<P>& a, const PRow<P>& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        if (a[0].first != b[0].first)
            return a[0].first < b[0].first;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].first != b[i].first)
                return a[i].first < b[i].first;
            if (a[i].second != b[i].second)
                return a[i].second < b[i].second;
        }
        return false;
    });
    Eliminator<P> el(ncols);
    for (auto& r : rows)
        el.insert(r);
    if (std::getenv("NALG_RREF_STATS"))
        std::fprintf(stderr,
                     "rref: %zu rows, %d cols -> eliminations %zu, entries %zu, max width %zu\n",
                     rows.size(), ncols, el.stat_eliminations, el.stat_entries,
                     el.stat_maxwidth);
    auto out_rows = el.take_rows();
    std::vector<IntRow> final_rows;
    final_rows.reserve(out_rows.size());
    for (const auto& r : out_rows) {
        IntRow fr;
        fr.reserve(r.size());
        for (const auto& [c, v] : r)
            fr.emplace_back(c, P::to_mpz(v));
        final_rows.push_back(std::move(fr));
    }
    return EchelonForm(ncols, std::move(final_rows));
}

IntRow to_int_row(const SparseVec& v)
{
    Int scale = 1;
    for (const auto& e : v)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.value.get_den().get_mpz_t());
    IntRow out;
    out.reserve(v.size());
    for (const auto& e : v) {
        Int num = e.value.get_num() * (scale / e.value.get_den());
        if (num != 0)
            out.emplace_back(e.col, std::move(num));
    }
    return out;
}

} // namespace

EchelonForm rref_rows(std::vector<IntRow> rows, int ncols)
{
    std::erase_if(rows, [](const IntRow& r) { return r.empty(); });
    try {
        return run_rref<I64>(rows, ncols);
    } catch (const OverflowBail&) {
        return run_rref<MpzP>(rows, ncols);
    }
}

EchelonForm rref(const SparseMatrix& m)
{
    std::vector<IntRow> rows;
    rows.reserve(m.nrows());
    for (const auto& r : m.rows())
        if (!r.empty())
            rows.push_back(to_int_row(r));
    return rref_rows(std::move(rows), m.ncols());
}

IntRow reduce_int(const EchelonForm& e, IntRow v)
{
    PRow<MpzP> r;
    r.reserve(v.size());
    for (auto& [c, n] : v)
        r.emplace_back(c, std::move(n));
    PRow<MpzP> tmp;
    std::size_t i = 0;
    while (i < r.size()) {
        int idx = e.row_of_column(r[i].first);
        if (idx < 0) {
            ++i;
            continue;
        }
        const IntRow& p = e.rows()[static_cast<std::size_t>(idx)];
        Int a = p[0].second, b = r[i].second;
        Int g = MpzP::gcd(a, b);
        if (g != 1) {
            a = MpzP::quot_exact(a, g);
            b = MpzP::quot_exact(b, g);
        }
        combine<MpzP>(tmp, r, a, p, b);
        r.swap(tmp);
        normalize_row<MpzP>(r);
    }
    IntRow out;
    out.reserve(r.size());
    for (auto& [c, n] : r)
        out.emplace_back(c, std::move(n));
    return out;
}

ReduceOutcome reduce(const EchelonForm& e, const SparseVec& v)
{
    IntRow res = reduce_int(e, to_int_row(v));
    ReduceOutcome out;
    out.in_rowspace = res.empty();
    if (!res.empty()) {
        const Int& lead = res[0].second;
        for (const auto& [c, n] : res) {
            Rat q(n, lead);
            q.canonicalize();
            out.residue.push_back({c, q});
        }
    }
    return out;
}

std::vector<SparseVec> nullspace(const EchelonForm& e)
{
    std::vector<SparseVec> basis;
    int ncols = e.ncols();
    for (std::int32_t j = 0; j < ncols; ++j) {
        if (e.row_of_column(j) >= 0)
            continue;
        // Kernel vector supported on pivot columns < j plus j itself.
        SparseVec v;
        for (int i = 0; i < e.rank(); ++i) {
            const IntRow& r = e.rows()[static_cast<std::size_t>(i)];
            if (r[0].first > j)
                break;
            for (const auto& [c, n] : r) {
                if (c == j) {
                    Rat q(-n, e.pivot_value(i));
                    q.canonicalize();
                    v.push_back({r[0].first, q});
                    break;
                }
                if (c > j)
                    break;
            }
        }
        v.push_back({j, Rat(1)});
        std::sort(v.begin(), v.end(), [](const RatEntry& a, const RatEntry& b) { return a.col < b.col; });
        // normalize first nonzero to 1
        Rat lead = v[0].value;
        if (lead != 1)
            for (auto& en : v)
                en.value /= lead;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<SparseVec> nullspace(const SparseMatrix& m)
{
    return nullspace(rref(m));
}

std::string dump(const SparseMatrix& m)
{
    std::ostringstream os;
    os << "%%exact-rational\n";
    std::size_t nnz = 0;
    for (const auto& r : m.rows())
        nnz += r.size();
    os << m.nrows() << " " << m.ncols() << " " << nnz << "\n";
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (const auto& e : m.rows()[i])
            os << (i + 1) << " " << (e.col + 1) << " " << e.value.get_num().get_str() << "/"
               << e.value.get_den().get_str() << "\n";
    return os.str();
}

void axpy(SparseVec& v, const Rat& c, const SparseVec& w)
{
    if (c == 0)
        return;
    SparseVec out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() && j < w.size()) {
        if (v[i].col < w[j].col)
            out.push_back(std::move(v[i++]));
        else if (v[i].col > w[j].col) {
            out.push_back({w[j].col, c * w[j].value});
            ++j;
        } else {
            Rat s = v[i].value + c * w[j].value;
            if (s != 0)
                out.push_back({v[i].col, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < v.size(); ++i)
        out.push_back(std::move(v[i]));
    for (; j < w.size(); ++j)
        out.push_back({w[j].col, c * w[j].value});
    v = std::move(out);
}

bool RatEliminator::insert(SparseVec row)
{
    row = reduce(std::move(row));
    // leading entry among columns < pivot_limit
    std::size_t li = row.size();
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i].col < pivot_limit_) {
            li = i;
            break;
        }
    if (li == row.size())
        return false;
    // move leading to front is unnecessary; scale so the pivot value is 1
    Rat lead = row[li].value;
    for (auto& e : row)
        e.value /= lead;
    leads_.push_back(row[li].col);
    rows_.push_back(std::move(row));
    return true;
}

SparseVec RatEliminator::reduce(SparseVec v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::int32_t lead = leads_[r];
        const RatEntry* hit = nullptr;
        for (const auto& e : v)
            if (e.col == lead) {
                hit = &e;
                break;
            }
        if (hit)
            axpy(v, -hit->value, rows_[r]);
    }
    return v;
}

} // namespace nalg
