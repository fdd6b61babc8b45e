#include "tn2/yang_baxter.hpp"

namespace tn2 {

RMatrix::RMatrix(Tensor2 value, const AlgebraSpec* algebra) : value_(std::move(value)) {
  value_.adopt(algebra);
  const auto p = value_.homogeneous_parity();
  if (!p) throw AlgebraError("r-matrix must be parity-homogeneous: " + to_string(value_));
  parity_ = *p;
}

Tensor2 cobracket(const RMatrix& r, const Element& x) {
  const auto px = x.homogeneous_parity();
  if (!px) throw AlgebraError("cobracket of a parity-inhomogeneous element: " + to_string(x));
  Tensor2 out = act2(x, r.value());
  return out *= Scalar(koszul(r.parity(), *px));
}

Tensor3 cybe_defect(const RMatrix& r) {
  Tensor3 out(r.value().algebra());
  if (r.value().is_zero()) return out;
  const AlgebraSpec& algebra = *r.value().algebra();
  for (const auto& [si, ci] : r.value()) {
    const Generator& ai = si[0];
    const Generator& bi = si[1];
    for (const auto& [sj, cj] : r.value()) {
      const Generator& aj = sj[0];
      const Generator& bj = sj[1];
      const Scalar c = ci * cj;
      const Scalar signed_c = Scalar(koszul(parity(aj), parity(bi))) * c;
      for (const auto& [g, k] : algebra.bracket(ai, aj)) out.add({g, bi, bj}, signed_c * k);
      for (const auto& [g, k] : algebra.bracket(bi, aj)) out.add({ai, g, bj}, c * k);
      for (const auto& [g, k] : algebra.bracket(bi, bj)) out.add({ai, aj, g}, signed_c * k);
    }
  }
  return out;
}

namespace {

Parity require_parity(const Element& x) {
  const auto p = x.homogeneous_parity();
  if (!p) throw AlgebraError("parity-inhomogeneous argument: " + to_string(x));
  return *p;
}

}  // namespace

Tensor2 cocycle_defect(const RMatrix& r, const Element& x, const Element& y) {
  const Parity px = require_parity(x);
  const Parity py = require_parity(y);
  const Parity pr = r.parity();
  Tensor2 out = cobracket(r, bracket(x, y));
  out.add_scaled(act2(x, cobracket(r, y)), Scalar(-koszul(pr, px)));
  out.add_scaled(act2(y, cobracket(r, x)), Scalar(koszul(py, pr ^ px)));
  return out;
}

Tensor3 co_jacobi_defect(const RMatrix& r, const Element& x) {
  require_parity(x);
  const Tensor2 first = cobracket(r, x);
  Tensor3 applied(first.algebra());
  for (const auto& [s, c] : first) {
    const AlgebraSpec& algebra = *first.algebra();
    const Tensor2 second = cobracket(r, algebra.element(s[1]));
    const Scalar sign(koszul(r.parity(), parity(s[0])));
    for (const auto& [t, k] : second) applied.add({s[0], t[0], t[1]}, sign * c * k);
  }
  const Tensor3 once = cyclic(applied);
  return applied + once + cyclic(once);
}

CheckReport skew_check(const RMatrix& r) {
  CheckReport report;
  report.check = "skew";
  const Tensor2 sym = r.value() + twist(r.value());
  report.defect_terms = sym.size();
  if (!sym.is_zero()) report.violations.push_back({});
  return report;
}

CheckReport cybe_check(const RMatrix& r) {
  CheckReport report;
  report.check = "cybe";
  report.defect_terms = cybe_defect(r).size();
  if (report.defect_terms != 0) report.violations.push_back({});
  return report;
}

namespace {

const AlgebraSpec& algebra_of(const RMatrix& r) {
  return r.value().algebra() ? *r.value().algebra() : topological_n2();
}

}  // namespace

CheckReport mybe_check(const RMatrix& r, const IndexRange& window) {
  CheckReport report;
  report.check = "mybe";
  report.window = window;
  const Tensor3 c = cybe_defect(r);
  const AlgebraSpec& algebra = algebra_of(r);
  for (const auto& g : algebra.generators(window)) {
    const Tensor3 moved = act3(algebra.element(g), c);
    if (!moved.is_zero()) {
      report.violations.push_back({g});
      report.defect_terms += moved.size();
    }
  }
  return report;
}

CheckReport co_skew_check(const RMatrix& r, const IndexRange& window) {
  CheckReport report;
  report.check = "coskew";
  report.window = window;
  const AlgebraSpec& algebra = algebra_of(r);
  for (const auto& g : algebra.generators(window)) {
    const Tensor2 delta = cobracket(r, algebra.element(g));
    const Tensor2 sym = delta + twist(delta);
    if (!sym.is_zero()) {
      report.violations.push_back({g});
      report.defect_terms += sym.size();
    }
  }
  return report;
}

CheckReport co_jacobi_check(const RMatrix& r, const IndexRange& window) {
  CheckReport report;
  report.check = "cojacobi";
  report.window = window;
  const AlgebraSpec& algebra = algebra_of(r);
  for (const auto& g : algebra.generators(window)) {
    const Tensor3 defect = co_jacobi_defect(r, algebra.element(g));
    if (!defect.is_zero()) {
      report.violations.push_back({g});
      report.defect_terms += defect.size();
    }
  }
  return report;
}

CheckReport cocycle_check(const RMatrix& r, const IndexRange& window) {
  CheckReport report;
  report.check = "cocycle";
  report.window = window;
  const AlgebraSpec& algebra = algebra_of(r);
  const auto gens = algebra.generators(window);
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      const Tensor2 defect = cocycle_defect(r, algebra.element(x), algebra.element(y));
      if (!defect.is_zero()) {
        report.violations.push_back({x, y});
        report.defect_terms += defect.size();
      }
    }
  }
  return report;
}

}  // namespace tn2
