#pragma once

#include "tn2/algebra.hpp"

namespace tn2 {

Tensor2 tensor(const Element& a, const Element& b);
Tensor3 tensor(const Element& a, const Element& b, const Element& c);

/// Super-twist: a (x) b -> (-1)^{[a][b]} b (x) a.
Tensor2 twist(const Tensor2& t);

/// Super-cyclic map: a (x) b (x) c -> (-1)^{[a]([b]+[c])} b (x) c (x) a.
Tensor3 cyclic(const Tensor3& t);

/// Adjoint diagonal action on the tensor square. Throws AlgebraError when x is
/// not parity-homogeneous.
Tensor2 act2(const Element& x, const Tensor2& t);
/// Adjoint diagonal action on the tensor cube.
Tensor3 act3(const Element& x, const Tensor3& t);

/// (1 - tau) t.
Tensor2 skew_project(const Tensor2& t);

/// Membership in Im(1 - tau), tested as (1 + tau) t = 0.
bool is_skew(const Tensor2& t);

}  // namespace tn2
