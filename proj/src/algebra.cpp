#include "tn2/algebra.hpp"

#include <algorithm>

namespace tn2 {

AlgebraSpec::AlgebraSpec(std::string name, std::vector<Family> families, TableRule table)
    : name_(std::move(name)), families_(std::move(families)), table_(std::move(table)) {}

bool AlgebraSpec::has_family(Family f) const {
  return std::find(families_.begin(), families_.end(), f) != families_.end();
}

AlgebraSpec::Terms AlgebraSpec::bracket(const Generator& x, const Generator& y) const {
  Terms out;
  auto keep = [&out](const Generator& g, const Scalar& c) {
    if (!c.is_zero()) out.emplace_back(g, c);
  };
  if (auto direct = table_(x, y)) {
    for (const auto& [g, c] : *direct) keep(g, c);
  } else if (auto swapped = table_(y, x)) {
    const Scalar sign(-koszul(parity(x), parity(y)));
    for (const auto& [g, c] : *swapped) keep(g, sign * c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<Generator> AlgebraSpec::generators(const IndexRange& range) const {
  std::vector<Generator> out;
  for (Family f : families_) {
    for (int n = range.lo; n <= range.hi; ++n) out.push_back({f, n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element AlgebraSpec::element(const Generator& g, const Scalar& coeff) const {
  if (!contains(g)) throw AlgebraError(to_string(g) + " is not a generator of " + name_);
  return Element(this, g, coeff);
}

namespace {

using Terms = AlgebraSpec::Terms;

std::optional<Terms> n2_table(const Generator& x, const Generator& y) {
  const int m = x.index;
  const int n = y.index;
  const int s = m + n;
  auto one = [](Family f, int idx, long c) { return Terms{{Generator{f, idx}, Scalar(c)}}; };
  using F = Family;
  switch (x.family) {
    case F::L:
      switch (y.family) {
        case F::L: return one(F::L, s, m - n);
        case F::H: return one(F::H, s, -n);
        case F::G: return one(F::G, s, m - n);
        case F::Q: return one(F::Q, s, -n);
      }
      break;
    case F::H:
      if (y.family == F::G) return one(F::G, s, 1);
      if (y.family == F::Q) return one(F::Q, s, -1);
      break;
    case F::G:
      if (y.family == F::Q) return Terms{{Generator{F::L, s}, Scalar(2)}, {Generator{F::H, s}, Scalar(-2L * n)}};
      break;
    case F::Q:
      break;
  }
  return std::nullopt;
}

std::optional<Terms> witt_table(const Generator& x, const Generator& y) {
  if (x.family != Family::L || y.family != Family::L) return std::nullopt;
  return Terms{{Generator{Family::L, x.index + y.index}, Scalar(x.index - y.index)}};
}

const AlgebraSpec* check_same(const Element& x, const Element& y) {
  if (x.algebra() && y.algebra() && x.algebra() != y.algebra()) {
    throw AlgebraError("bracket of elements from different algebras");
  }
  return x.algebra() ? x.algebra() : y.algebra();
}

std::string triple_name(const Generator& x, const Generator& y, const Generator& z) {
  return "(" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) + ")";
}

}  // namespace

const AlgebraSpec& topological_n2() {
  static const AlgebraSpec spec("topological-n2", {Family::L, Family::H, Family::G, Family::Q}, n2_table);
  return spec;
}

const AlgebraSpec& witt() {
  static const AlgebraSpec spec("witt", {Family::L}, witt_table);
  return spec;
}

const AlgebraSpec* find_algebra(std::string_view name) {
  if (name == topological_n2().name()) return &topological_n2();
  if (name == witt().name()) return &witt();
  return nullptr;
}

Element bracket(const Element& x, const Element& y) {
  const AlgebraSpec* algebra = check_same(x, y);
  Element out(algebra);
  if (x.is_zero() || y.is_zero()) return out;
  for (const auto& [gx, cx] : x) {
    for (const auto& [gy, cy] : y) {
      const Scalar c = cx * cy;
      for (const auto& [g, k] : algebra->bracket(gx, gy)) out.add(g, c * k);
    }
  }
  return out;
}

Element jacobi_defect(const AlgebraSpec& algebra, const Generator& x, const Generator& y, const Generator& z) {
  const Element ex = algebra.element(x);
  const Element ey = algebra.element(y);
  const Element ez = algebra.element(z);
  Element out(&algebra);
  out.add_scaled(bracket(ex, bracket(ey, ez)), Scalar(koszul(parity(x), parity(z))));
  out.add_scaled(bracket(ey, bracket(ez, ex)), Scalar(koszul(parity(y), parity(x))));
  out.add_scaled(bracket(ez, bracket(ex, ey)), Scalar(koszul(parity(z), parity(y))));
  return out;
}

Element linear_combine(std::span<const std::pair<Scalar, Element>> pairs) {
  Element out;
  for (const auto& [c, e] : pairs) out.add_scaled(e, c);
  return out;
}

AxiomReport check_super_skew(const AlgebraSpec& algebra, const IndexRange& range) {
  AxiomReport report;
  report.check = "super-skew-symmetry";
  report.range = range;
  const auto gens = algebra.generators(range);
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      ++report.cases;
      Element sum = bracket(algebra.element(x), algebra.element(y));
      sum.add_scaled(bracket(algebra.element(y), algebra.element(x)), Scalar(koszul(parity(x), parity(y))));
      if (!sum.is_zero()) {
        report.counterexample = "[" + to_string(x) + "," + to_string(y) + "] skew defect " + to_string(sum);
        return report;
      }
    }
  }
  return report;
}

AxiomReport check_super_jacobi(const AlgebraSpec& algebra, const IndexRange& range) {
  AxiomReport report;
  report.check = "super-jacobi";
  report.range = range;
  const auto gens = algebra.generators(range);
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      for (const auto& z : gens) {
        ++report.cases;
        const Element defect = jacobi_defect(algebra, x, y, z);
        if (!defect.is_zero()) {
          report.counterexample = "jacobi defect at " + triple_name(x, y, z) + ": " + to_string(defect);
          return report;
        }
      }
    }
  }
  return report;
}

AxiomReport check_grading(const AlgebraSpec& algebra, const IndexRange& range) {
  AxiomReport report;
  report.check = "grading";
  report.range = range;
  const Element l0 = algebra.element(Family::L, 0);
  for (const auto& x : algebra.generators(range)) {
    ++report.cases;
    const Element got = bracket(l0, algebra.element(x));
    const Element want = algebra.element(x, Scalar(-x.index));
    if (!(got == want)) {
      report.counterexample = "[L_0," + to_string(x) + "] = " + to_string(got) + ", expected " + to_string(want);
      return report;
    }
  }
  return report;
}

AxiomReport check_parity(const AlgebraSpec& algebra, const IndexRange& range) {
  AxiomReport report;
  report.check = "parity";
  report.range = range;
  const auto gens = algebra.generators(range);
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      ++report.cases;
      for (const auto& [g, c] : algebra.bracket(x, y)) {
        if (parity(g) != (parity(x) ^ parity(y)) || g.index != x.index + y.index || !algebra.contains(g)) {
          report.counterexample = "[" + to_string(x) + "," + to_string(y) + "] has term " + to_string(g);
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace tn2
