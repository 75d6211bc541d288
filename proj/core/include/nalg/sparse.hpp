#pragma once

#include "nalg/error.hpp"
#include "nalg/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nalg {

// Sparse rational vector: entries sorted by column index, no stored zeros.
struct RatEntry {
    std::int32_t col;
    Rat value;

    bool operator==(const RatEntry& o) const { return col == o.col && value == o.value; }
};
using SparseVec = std::vector<RatEntry>;

// Integer row used by the elimination kernels (a rational row scaled to a
// primitive integer vector).
using IntRow = std::vector<std::pair<std::int32_t, Int>>;

class SparseMatrix {
  public:
    explicit SparseMatrix(int ncols) : ncols_(ncols)
    {
        if (ncols < 0)
            throw Error("negative column count");
    }

    int ncols() const { return ncols_; }
    std::size_t nrows() const { return rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }

    // Row must be sorted by column with in-range indices; zero values are
    // dropped.
    void add_row(SparseVec row);

  private:
    int ncols_ = 0;
    std::vector<SparseVec> rows_;
};

// Reduced row echelon form over Q, stored fraction-free: row i is a
// primitive integer vector whose leading (pivot) entry is positive; the
// rational RREF row is rows[i] / pivot_value(i). Pivot columns are strictly
// increasing and the pivot column of every row is zero in all other rows.
class EchelonForm {
  public:
    EchelonForm() = default;
    EchelonForm(int ncols, std::vector<IntRow> rows);

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<IntRow>& rows() const { return rows_; }
    const std::vector<std::int32_t>& pivot_columns() const { return pivots_; }
    // Row index owning this pivot column, or -1.
    int row_of_column(std::int32_t col) const;
    const Int& pivot_value(int row) const { return rows_[static_cast<std::size_t>(row)][0].second; }

    SparseVec rational_row(int row) const;

    bool operator==(const EchelonForm& o) const
    {
        return ncols_ == o.ncols_ && rows_ == o.rows_;
    }

  private:
    int ncols_ = 0;
    std::vector<IntRow> rows_;
    std::vector<std::int32_t> pivots_;
    std::vector<std::int32_t> col2row_;
};

// Canonical RREF of the row space. The result depends only on the row span,
// not on the input order (sorted canonically before insertion; RREF itself
// is unique). Elimination runs fraction-free over int64 and falls back to
// GMP integers if any intermediate value overflows.
EchelonForm rref(const SparseMatrix& m);
EchelonForm rref_rows(std::vector<IntRow> rows, int ncols);

struct ReduceOutcome {
    bool in_rowspace = false;
    // Residue normalized so its first nonzero entry is 1; empty iff the
    // vector lies in the row space.
    SparseVec residue;
};

// Reduces v by the echelon rows (membership test with witness).
ReduceOutcome reduce(const EchelonForm& e, const SparseVec& v);
// Integer-row variant; returns the content-normalized residue.
IntRow reduce_int(const EchelonForm& e, IntRow v);

// Basis of the right kernel: size ncols - rank, each vector normalized so
// its first nonzero entry (lowest column index) is 1.
std::vector<SparseVec> nullspace(const SparseMatrix& m);
std::vector<SparseVec> nullspace(const EchelonForm& e);

// Matrix-market style debugging dump: header line "%%exact-rational",
// dimensions, then 1-based "row col numerator/denominator" lines.
std::string dump(const SparseMatrix& m);

// Small exact eliminator over rational rows, for augmented solves
// (expresses vectors in a given spanning set). Pivots are chosen only among
// columns < pivot_limit; augmentation columns ride along.
class RatEliminator {
  public:
    explicit RatEliminator(std::int32_t pivot_limit) : pivot_limit_(pivot_limit) {}

    // Returns true if the row added a pivot (was independent).
    bool insert(SparseVec row);
    // Reduces v by the stored rows; the part below pivot_limit of the result
    // is the residue, columns >= pivot_limit carry the accumulated
    // combination coefficients.
    SparseVec reduce(SparseVec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    std::int32_t pivot_limit_;
    std::vector<SparseVec> rows_;   // each with leading col < pivot_limit, leading value 1
    std::vector<std::int32_t> leads_;
};

// In-place v += c * w on sparse rational vectors.
void axpy(SparseVec& v, const Rat& c, const SparseVec& w);

} // namespace nalg
