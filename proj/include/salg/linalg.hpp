#pragma once

#include "salg/rational.hpp"

#include <map>
#include <vector>

namespace salg {

// Sparse row vector, column index -> nonzero coefficient.
using SparseRow = std::map<long, Rational>;

// Incrementally built row-echelon basis over Q.  Rows are keyed by pivot
// column; each stored row has leading coefficient 1 at its pivot, which is
// its smallest column.
class RowEchelon {
  public:
    // Reduce r against the current basis (eliminates every leading entry
    // that matches a pivot).
    SparseRow reduce(SparseRow r) const;

    // Reduce and, if nonzero, add to the basis.  Returns true iff the rank
    // increased.
    bool insert(SparseRow r);

    long rank() const { return (long)rows_.size(); }
    bool contains(const SparseRow& r) const { return reduce(r).empty(); }

    // Back-substitute so pivot columns are eliminated from all other rows.
    void to_rref();

    // Basis of the solution space of (rows) * x = 0 over columns 0..ncols-1.
    // Calls to_rref internally.
    std::vector<SparseRow> nullspace(long ncols);

    const std::map<long, SparseRow>& rows() const { return rows_; }

  private:
    std::map<long, SparseRow> rows_;
};

long rank_of(const std::vector<SparseRow>& rows);

}  // namespace salg
