#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tn2/sparse_linear.hpp"
#include "tn2/tensor.hpp"

namespace tn2 {

/// A window configuration that cannot host a closed linear system.
class ClosureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An inner derivation whose values leave the value window.
class SupportOverflow : public std::runtime_error {
 public:
  SupportOverflow(const Generator& at, const std::string& what) : std::runtime_error(what), generator_(at) {}
  [[nodiscard]] const Generator& generator() const { return generator_; }

 private:
  Generator generator_;
};

/// A derivation that is not the inner derivation of its L_0 witness.
class WitnessError : public std::runtime_error {
 public:
  WitnessError(const Generator& at, const std::string& what) : std::runtime_error(what), generator_(at) {}
  [[nodiscard]] const Generator& generator() const { return generator_; }

 private:
  Generator generator_;
};

/// Finite truncation of the derivation problem for degree-`degree`,
/// parity-`parity` maps T -> T (x) T.
///
/// d is unknown on generators with index in gen_window, its values are
/// supported on slot indices in value_window, and the Leibniz identity is
/// imposed for every bracket [x_m, y_n] with m, n, m+n in relation_window.
/// Cohomology is read off on gen_window shrunk by `margin`.
struct WindowConfig {
  IndexRange gen_window{-2, 2};
  IndexRange value_window{-8, 8};
  IndexRange relation_window{-2, 2};
  Parity parity = 0;
  int degree = 0;
  int margin = 1;

  friend bool operator==(const WindowConfig&, const WindowConfig&) = default;
};

/// gen [-2,2], value [-8,8], relations on the generator window, margin 1.
WindowConfig reference_config(int degree, Parity parity);

/// Throws ClosureError unless relation_window is inside gen_window,
/// gen_window is inside value_window, and every value slice V_{n+degree}
/// (n in gen_window) has a basis term inside value_window.
void validate(const WindowConfig& config);

/// The sub-window on which cohomology is asserted; falls back to the whole
/// gen_window when the margin would empty it.
IndexRange inner_window(const WindowConfig& config);

/// Basis terms a (x) b of V_total with both slot indices in `window` and the
/// given total parity, in canonical order.
std::vector<Slots<2>> tensor_basis(const AlgebraSpec& algebra, const IndexRange& window, int total, Parity parity);

/// Values of a homogeneous map T -> T (x) T on the generators of a window.
struct DerivationTable {
  Parity parity = 0;
  int degree = 0;
  std::map<Generator, Tensor2> values;

  [[nodiscard]] Tensor2 at(const Generator& g) const;
  friend bool operator==(const DerivationTable& a, const DerivationTable& b);
};

/// x -> (-1)^{[u][x]} x . u on every generator of gen_window. Throws
/// SupportOverflow naming the first generator whose value leaves value_window,
/// and AlgebraError when u is not homogeneous of the configured degree/parity.
DerivationTable inner_derivation(const AlgebraSpec& algebra, const Tensor2& u, const WindowConfig& config);

/// The linearised Leibniz identity over the window.
class DerivationSystem {
 public:
  struct Unknown {
    Generator generator;
    Slots<2> term;
  };
  /// Row = coefficient of `term` in d([x,y]) - (-1)^{[d][x]} x.d(y) + (-1)^{[y]([d]+[x])} y.d(x).
  struct RowLabel {
    Generator x;
    Generator y;
    Slots<2> term;
  };

  DerivationSystem(const AlgebraSpec& algebra, const WindowConfig& config);

  [[nodiscard]] const AlgebraSpec& algebra() const { return *algebra_; }
  [[nodiscard]] const WindowConfig& config() const { return config_; }
  [[nodiscard]] const std::vector<Unknown>& unknowns() const { return unknowns_; }
  [[nodiscard]] const std::vector<SparseVector>& rows() const { return system_.rows; }
  [[nodiscard]] const std::vector<RowLabel>& row_labels() const { return labels_; }
  [[nodiscard]] const LinearSystem& linear_system() const { return system_; }

  [[nodiscard]] std::optional<std::size_t> column(const Generator& g, const Slots<2>& term) const;

  [[nodiscard]] DerivationTable to_table(const SparseVector& v) const;
  /// Coordinates of `table`, or nullopt when it has a value outside the unknowns.
  [[nodiscard]] std::optional<SparseVector> to_vector(const DerivationTable& table) const;
  /// True when every row vanishes on v.
  [[nodiscard]] bool satisfies(const SparseVector& v) const;

 private:
  void add_unknowns();
  void add_rows();

  const AlgebraSpec* algebra_;
  WindowConfig config_;
  std::vector<Unknown> unknowns_;
  std::map<Generator, std::map<Slots<2>, std::size_t>> columns_;
  LinearSystem system_;
  std::vector<RowLabel> labels_;
};

/// Validates the config and builds the system.
DerivationSystem assemble_system(const AlgebraSpec& algebra, const WindowConfig& config);

/// Exact nullspace of the system as derivation tables, in the canonical
/// free-column order of RowEchelon::nullspace. Each vector is re-checked
/// against every row; a nonzero residual throws std::logic_error.
std::vector<DerivationTable> solve_nullspace(const DerivationSystem& system);

/// u = -(1/i) d(L_0), returned only when inner_derivation(u) equals d on every
/// generator of `check` (default: the whole gen_window).
Tensor2 recover_inner_witness(const AlgebraSpec& algebra, const DerivationTable& d, const WindowConfig& config,
                              std::optional<IndexRange> check = std::nullopt);

struct CohomologyReport {
  WindowConfig config;
  std::string algebra;
  std::size_t unknowns = 0;
  std::size_t rows = 0;
  /// Dimensions of Der and Inn over the whole window.
  std::size_t full_nullspace_dim = 0;
  std::size_t full_inner_dim = 0;
  /// Ranks after restriction to inner_window(config).
  std::size_t nullspace_dim = 0;
  std::size_t inner_dim = 0;
  std::size_t quotient_dim = 0;
  bool containment = false;
  std::vector<std::string> witness_failures;
  std::vector<DerivationTable> nullspace_basis;
  std::vector<DerivationTable> inner_basis;
  std::vector<Tensor2> witnesses;

  [[nodiscard]] bool passed() const { return quotient_dim == 0 && containment && witness_failures.empty(); }
};

CohomologyReport compare_der_vs_inn(const AlgebraSpec& algebra, const WindowConfig& config);

/// Window for the tensor-square sweeps: r is supported on value_window, the
/// acting generators have index in gen_window (restricted to
/// acting_families when nonempty). Results are reported for the degrees in
/// `degrees`, or value_window shrunk by margin when unset.
struct ProbeConfig {
  IndexRange gen_window{-2, 2};
  IndexRange value_window{-8, 8};
  std::optional<IndexRange> degrees;
  std::vector<Family> acting_families;
  int margin = 1;
};

ProbeConfig reference_probe_config();

struct DegreeDims {
  int degree = 0;
  std::size_t unknowns = 0;
  std::size_t dim = 0;
};

struct KernelReport {
  ProbeConfig config;
  IndexRange reported_degrees;
  std::vector<DegreeDims> degrees;
  /// Kernel basis on the reported degrees.
  std::vector<Tensor2> basis;
};

/// Solves x . r = 0 for all acting generators x.
KernelReport invariant_kernel(const AlgebraSpec& algebra, const ProbeConfig& config);

struct SkewProbeReport {
  ProbeConfig config;
  IndexRange reported_degrees;
  std::vector<DegreeDims> degrees;
  /// Basis vectors of S on the reported degrees that are not in ker(1+tau).
  std::vector<Tensor2> violations;

  [[nodiscard]] bool passed() const { return violations.empty(); }
};

/// S = {r : (1+tau)(x . r) = 0 for all acting x}; checks S is inside ker(1+tau).
SkewProbeReport skew_invariance_probe(const AlgebraSpec& algebra, const ProbeConfig& config);

/// First acting generator x (canonical order) with (1+tau)(x . r) != 0.
std::optional<Generator> find_skew_witness(const AlgebraSpec& algebra, const Tensor2& r, const ProbeConfig& config);

}  // namespace tn2
