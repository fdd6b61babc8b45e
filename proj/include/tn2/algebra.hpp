#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tn2/combination.hpp"

namespace tn2 {

/// A Z-graded Lie superalgebra presented by a one-sided bracket table on
/// generators. Pairs the table does not list are completed by
/// super-skew-symmetry, [y,x] = -(-1)^{[x][y]} [x,y]; pairs absent in both
/// orders bracket to zero.
class AlgebraSpec {
 public:
  using Terms = std::vector<std::pair<Generator, Scalar>>;
  /// Returns nullopt when (x, y) is not an entry of the table.
  using TableRule = std::function<std::optional<Terms>(const Generator& x, const Generator& y)>;

  AlgebraSpec(std::string name, std::vector<Family> families, TableRule table);

  AlgebraSpec(const AlgebraSpec&) = delete;
  AlgebraSpec& operator=(const AlgebraSpec&) = delete;

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<Family>& families() const { return families_; }
  [[nodiscard]] bool has_family(Family f) const;
  [[nodiscard]] bool contains(const Generator& g) const { return has_family(g.family); }

  /// Bracket of two generators as a sorted term list.
  [[nodiscard]] Terms bracket(const Generator& x, const Generator& y) const;

  /// Every generator of this algebra with index in `range`, in canonical order.
  [[nodiscard]] std::vector<Generator> generators(const IndexRange& range) const;

  /// Checked constructor for a single-term element; throws AlgebraError when
  /// the family does not belong to this algebra.
  [[nodiscard]] Element element(const Generator& g, const Scalar& coeff = Scalar(1)) const;
  [[nodiscard]] Element element(Family f, int index, const Scalar& coeff = Scalar(1)) const {
    return element(Generator{f, index}, coeff);
  }

 private:
  std::string name_;
  std::vector<Family> families_;
  TableRule table_;
};

/// The centerless topological N=2 superconformal algebra.
const AlgebraSpec& topological_n2();
/// The Witt algebra spanned by the L_n.
const AlgebraSpec& witt();
/// Registered algebra by identifier ("topological-n2", "witt"), or nullptr.
const AlgebraSpec* find_algebra(std::string_view name);

Element bracket(const Element& x, const Element& y);

/// (-1)^{[x][z]}[x,[y,z]] + (-1)^{[y][x]}[y,[z,x]] + (-1)^{[z][y]}[z,[x,y]].
Element jacobi_defect(const AlgebraSpec& algebra, const Generator& x, const Generator& y, const Generator& z);

Element linear_combine(std::span<const std::pair<Scalar, Element>> pairs);

/// Outcome of an exhaustive axiom sweep over a generator window.
struct AxiomReport {
  std::string check;
  IndexRange range;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;

  [[nodiscard]] bool passed() const { return !counterexample.has_value(); }
};

AxiomReport check_super_skew(const AlgebraSpec& algebra, const IndexRange& range);
AxiomReport check_super_jacobi(const AlgebraSpec& algebra, const IndexRange& range);
/// bracket(L_0, x_n) = -n x_n for every generator in range.
AxiomReport check_grading(const AlgebraSpec& algebra, const IndexRange& range);
/// [x,y] is homogeneous of parity [x]+[y] and degree deg x + deg y.
AxiomReport check_parity(const AlgebraSpec& algebra, const IndexRange& range);

}  // namespace tn2
