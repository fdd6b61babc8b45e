#include "tn2/tensor.hpp"

namespace tn2 {

namespace {

template <std::size_t N>
Combination<Slots<N>> act_slots(const Element& x, const Combination<Slots<N>>& t) {
  const auto px = x.homogeneous_parity();
  if (!px) throw AlgebraError("action by a parity-inhomogeneous element: " + to_string(x));
  Combination<Slots<N>> out(t.algebra());
  out.adopt(x.algebra());
  if (x.is_zero() || t.is_zero()) return out;
  const AlgebraSpec& algebra = *out.algebra();
  for (const auto& [gx, cx] : x) {
    for (const auto& [slots, c] : t) {
      Parity passed = 0;
      for (std::size_t i = 0; i < N; ++i) {
        const Scalar sign(koszul(*px, passed));
        for (const auto& [g, k] : algebra.bracket(gx, slots[i])) {
          Slots<N> moved = slots;
          moved[i] = g;
          out.add(moved, sign * cx * c * k);
        }
        passed ^= parity(slots[i]);
      }
    }
  }
  return out;
}

}  // namespace

Tensor2 tensor(const Element& a, const Element& b) {
  Tensor2 out(a.algebra());
  out.adopt(b.algebra());
  for (const auto& [ga, ca] : a) {
    for (const auto& [gb, cb] : b) out.add({ga, gb}, ca * cb);
  }
  return out;
}

Tensor3 tensor(const Element& a, const Element& b, const Element& c) {
  Tensor3 out(a.algebra());
  out.adopt(b.algebra());
  out.adopt(c.algebra());
  for (const auto& [ga, ca] : a) {
    for (const auto& [gb, cb] : b) {
      for (const auto& [gc, cc] : c) out.add({ga, gb, gc}, ca * cb * cc);
    }
  }
  return out;
}

Tensor2 twist(const Tensor2& t) {
  Tensor2 out(t.algebra());
  for (const auto& [s, c] : t) {
    out.add({s[1], s[0]}, Scalar(koszul(parity(s[0]), parity(s[1]))) * c);
  }
  return out;
}

Tensor3 cyclic(const Tensor3& t) {
  Tensor3 out(t.algebra());
  for (const auto& [s, c] : t) {
    const int sign = koszul(parity(s[0]), parity(s[1]) ^ parity(s[2]));
    out.add({s[1], s[2], s[0]}, Scalar(sign) * c);
  }
  return out;
}

Tensor2 act2(const Element& x, const Tensor2& t) { return act_slots(x, t); }

Tensor3 act3(const Element& x, const Tensor3& t) { return act_slots(x, t); }

Tensor2 skew_project(const Tensor2& t) { return t - twist(t); }

bool is_skew(const Tensor2& t) { return (t + twist(t)).is_zero(); }

}  // namespace tn2
