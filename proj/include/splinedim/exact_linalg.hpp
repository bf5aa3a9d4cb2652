#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "splinedim/polynomial.hpp"

namespace splinedim {

/// Sparse integer row: (column, nonzero value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;
using RationalRow = std::vector<std::pair<std::size_t, Rational>>;

/// Clears denominators and removes the content; sign is left as is.
SparseRow integer_row(const RationalRow& row);

/// Incremental row echelon form over Z. Each inserted row is top-reduced
/// fraction-free against the stored pivots, with content removed after every
/// step, so entries stay small on the block-sparse systems used here.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t columns) : pivot_of_column_(columns, -1) {}

  /// True when the row was independent of the rows inserted so far.
  bool insert(SparseRow row);
  /// Remainder after top-reduction; empty iff the row lies in the span.
  SparseRow reduce(SparseRow row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t columns() const { return pivot_of_column_.size(); }

 private:
  std::vector<SparseRow> rows_;
  std::vector<long> pivot_of_column_;
};

std::size_t rank(const std::vector<SparseRow>& rows, std::size_t columns);

/// Basis of { v in Q^columns : row . v = 0 for every row }, one vector per
/// free column of the reduced row echelon form, scaled to coprime integers.
std::vector<std::vector<Rational>> kernel_basis(const std::vector<SparseRow>& rows, std::size_t columns);

}  // namespace splinedim
