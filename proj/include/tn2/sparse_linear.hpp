#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "tn2/scalar.hpp"

namespace tn2 {

/// Sparse vector: (column, value) pairs sorted by column, no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Homogeneous linear system A x = 0 with sparse rational rows.
struct LinearSystem {
  std::size_t columns = 0;
  std::vector<SparseVector> rows;
};

/// Row echelon form over the integers, built one row at a time.
///
/// Rows are cleared of denominators and reduced fraction-free
/// (r <- (p_c/g) r - (r_c/g) p, then divided by its content), so intermediate
/// growth stays bounded by the row contents. The pivot of a stored row is its
/// leading column; the first inserted row that reaches a column owns it.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns);

  /// Returns true when `row` was independent of the stored rows.
  bool insert(const SparseVector& row);

  [[nodiscard]] bool in_span(const SparseVector& row) const;
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t columns() const { return columns_; }

  /// Basis of {x : stored rows . x = 0}: one vector per non-pivot column f,
  /// with x_f = 1 and zero at every other non-pivot column.
  [[nodiscard]] std::vector<SparseVector> nullspace() const;

 private:
  using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

  [[nodiscard]] IntRow reduce(IntRow row) const;
  static IntRow to_integer_row(const SparseVector& row);
  static void make_primitive(IntRow& row);
  static IntRow combine(const IntRow& row, const IntRow& pivot, const mpz_class& row_coeff,
                        const mpz_class& pivot_coeff);

  std::size_t columns_;
  std::vector<IntRow> rows_;
  std::vector<long> pivot_row_;  // column -> index into rows_, or -1
};

/// Canonical reduced nullspace basis (see RowEchelon::nullspace).
std::vector<SparseVector> nullspace(const LinearSystem& system);

/// Dot product of a sparse row with a sparse vector.
Scalar dot(const SparseVector& a, const SparseVector& b);

/// Rank of a family of vectors living in `columns`-dimensional space.
std::size_t rank(const std::vector<SparseVector>& vectors, std::size_t columns);

}  // namespace tn2
