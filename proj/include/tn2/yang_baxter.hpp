#pragma once

#include <string>
#include <vector>

#include "tn2/tensor.hpp"

namespace tn2 {

/// A parity-homogeneous element r of the tensor square.
class RMatrix {
 public:
  /// Throws AlgebraError when `value` mixes parities. `algebra` tags a zero
  /// value so windowed sweeps know which generators to visit.
  explicit RMatrix(Tensor2 value, const AlgebraSpec* algebra = nullptr);

  [[nodiscard]] const Tensor2& value() const { return value_; }
  [[nodiscard]] Parity parity() const { return parity_; }
  [[nodiscard]] bool is_skew() const { return tn2::is_skew(value_); }

 private:
  Tensor2 value_;
  Parity parity_ = 0;
};

/// Coboundary cobracket (-1)^{[r][x]} x . r.
Tensor2 cobracket(const RMatrix& r, const Element& x);

/// [r12,r13] + [r12,r23] + [r13,r23] expanded componentwise with Koszul signs.
Tensor3 cybe_defect(const RMatrix& r);

/// Delta_r([x,y]) - (-1)^{[r][x]} x.Delta_r(y) + (-1)^{[y]([r]+[x])} y.Delta_r(x).
/// For even r this is the bialgebra compatibility defect.
Tensor2 cocycle_defect(const RMatrix& r, const Element& x, const Element& y);

/// (1 + xi + xi^2)(1 (x) Delta_r)(Delta_r(x)).
Tensor3 co_jacobi_defect(const RMatrix& r, const Element& x);

/// Result of one windowed check. `violations` lists the offending generator
/// tuples (one entry per failing case, in sweep order).
struct CheckReport {
  std::string check;
  IndexRange window;
  std::vector<std::vector<Generator>> violations;
  std::size_t defect_terms = 0;

  [[nodiscard]] bool passed() const { return violations.empty() && defect_terms == 0; }
};

CheckReport skew_check(const RMatrix& r);
/// Violation recorded as the empty tuple when c(r) != 0; defect_terms counts terms of c(r).
CheckReport cybe_check(const RMatrix& r);
CheckReport mybe_check(const RMatrix& r, const IndexRange& window);
CheckReport co_skew_check(const RMatrix& r, const IndexRange& window);
CheckReport co_jacobi_check(const RMatrix& r, const IndexRange& window);
CheckReport cocycle_check(const RMatrix& r, const IndexRange& window);

}  // namespace tn2
