#include "tn2/derivation.hpp"

#include <algorithm>

namespace tn2 {

namespace {

using Term = std::pair<Slots<2>, Scalar>;

/// x . (a (x) b) for a single generator x, as raw terms (may repeat keys).
std::vector<Term> act_basis(const AlgebraSpec& algebra, const Generator& x, const Slots<2>& s) {
  std::vector<Term> out;
  for (const auto& [g, k] : algebra.bracket(x, s[0])) out.emplace_back(Slots<2>{g, s[1]}, k);
  const Scalar sign(koszul(parity(x), parity(s[0])));
  for (const auto& [g, k] : algebra.bracket(x, s[1])) out.emplace_back(Slots<2>{s[0], g}, sign * k);
  return out;
}

bool inside(const IndexRange& window, const Slots<2>& s) {
  return window.contains(s[0].index) && window.contains(s[1].index);
}

/// Accumulates sparse rows keyed by a label, dropping cancelled entries.
template <typename Label>
class RowAccumulator {
 public:
  void add(const Label& label, std::size_t column, const Scalar& value) {
    if (value.is_zero()) return;
    auto& row = rows_[label];
    auto [it, inserted] = row.try_emplace(column, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) row.erase(it);
    }
  }

  template <typename Emit>
  void drain(Emit&& emit) {
    for (auto& [label, entries] : rows_) {
      if (entries.empty()) continue;
      SparseVector row(entries.begin(), entries.end());
      emit(label, std::move(row));
    }
    rows_.clear();
  }

 private:
  std::map<Label, std::map<std::size_t, Scalar>> rows_;
};

Tensor2 from_coordinates(const AlgebraSpec& algebra, const std::vector<Slots<2>>& basis, const SparseVector& v) {
  Tensor2 out(&algebra);
  for (const auto& [col, c] : v) out.add(basis[col], c);
  return out;
}

std::vector<Generator> acting_generators(const AlgebraSpec& algebra, const ProbeConfig& config) {
  std::vector<Generator> out;
  for (const auto& g : algebra.generators(config.gen_window)) {
    if (config.acting_families.empty() ||
        std::find(config.acting_families.begin(), config.acting_families.end(), g.family) !=
            config.acting_families.end()) {
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Slots<2>> full_slice(const AlgebraSpec& algebra, const IndexRange& window, int total) {
  auto basis = tensor_basis(algebra, window, total, 0);
  auto odd = tensor_basis(algebra, window, total, 1);
  basis.insert(basis.end(), odd.begin(), odd.end());
  std::sort(basis.begin(), basis.end());
  return basis;
}

IndexRange reported_degrees(const ProbeConfig& config) {
  return config.degrees ? *config.degrees : config.value_window.shrink(config.margin);
}

void validate_probe(const ProbeConfig& config) {
  if (config.gen_window.empty() || config.value_window.empty()) throw ClosureError("empty window");
  if (config.margin < 0) throw ClosureError("negative margin");
}

}  // namespace

WindowConfig reference_config(int degree, Parity parity) {
  WindowConfig c;
  c.degree = degree;
  c.parity = parity;
  return c;
}

void validate(const WindowConfig& config) {
  if (config.gen_window.empty() || config.value_window.empty() || config.relation_window.empty()) {
    throw ClosureError("window ranges must be nonempty");
  }
  if (config.parity != 0 && config.parity != 1) throw ClosureError("parity must be 0 or 1");
  if (config.margin < 0) throw ClosureError("margin must be nonnegative");
  if (!config.gen_window.contains(config.relation_window)) {
    throw ClosureError("relation window " + to_string(config.relation_window) + " is not inside generator window " +
                       to_string(config.gen_window));
  }
  if (!config.value_window.contains(config.gen_window)) {
    throw ClosureError("generator window " + to_string(config.gen_window) + " is wider than value window " +
                       to_string(config.value_window));
  }
  for (int n : {config.gen_window.lo, config.gen_window.hi}) {
    const int total = n + config.degree;
    if (total < 2 * config.value_window.lo || total > 2 * config.value_window.hi) {
      throw ClosureError("value slice V_" + std::to_string(total) + " has no basis term inside value window " +
                         to_string(config.value_window));
    }
  }
}

IndexRange inner_window(const WindowConfig& config) {
  const IndexRange shrunk = config.gen_window.shrink(config.margin);
  return shrunk.empty() ? config.gen_window : shrunk;
}

std::vector<Slots<2>> tensor_basis(const AlgebraSpec& algebra, const IndexRange& window, int total, Parity parity) {
  std::vector<Slots<2>> out;
  for (Family fa : algebra.families()) {
    for (Family fb : algebra.families()) {
      if ((tn2::parity(fa) ^ tn2::parity(fb)) != parity) continue;
      for (int a = window.lo; a <= window.hi; ++a) {
        const int b = total - a;
        if (window.contains(b)) out.push_back({Generator{fa, a}, Generator{fb, b}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Tensor2 DerivationTable::at(const Generator& g) const {
  auto it = values.find(g);
  return it == values.end() ? Tensor2() : it->second;
}

bool operator==(const DerivationTable& a, const DerivationTable& b) {
  return a.parity == b.parity && a.degree == b.degree && a.values == b.values;
}

DerivationTable inner_derivation(const AlgebraSpec& algebra, const Tensor2& u, const WindowConfig& config) {
  if (!u.is_zero()) {
    const auto p = u.homogeneous_parity();
    const auto d = u.homogeneous_degree();
    if (!p || *p != config.parity || !d || *d != config.degree) {
      throw AlgebraError("inner derivation needs u homogeneous of degree " + std::to_string(config.degree) +
                         " and parity " + std::to_string(config.parity) + ": " + to_string(u));
    }
  }
  DerivationTable table{config.parity, config.degree, {}};
  if (u.is_zero()) return table;
  for (const auto& g : algebra.generators(config.gen_window)) {
    Tensor2 value = act2(algebra.element(g), u);
    value *= Scalar(koszul(config.parity, parity(g)));
    for (const auto& [s, c] : value) {
      if (!inside(config.value_window, s)) {
        throw SupportOverflow(g, "inner derivation of " + to_string(u) + " leaves value window " +
                                     to_string(config.value_window) + " at " + to_string(g) + " (term " +
                                     to_string(s) + ")");
      }
    }
    if (!value.is_zero()) table.values.emplace(g, std::move(value));
  }
  return table;
}

DerivationSystem::DerivationSystem(const AlgebraSpec& algebra, const WindowConfig& config)
    : algebra_(&algebra), config_(config) {
  validate(config_);
  add_unknowns();
  add_rows();
}

void DerivationSystem::add_unknowns() {
  for (const auto& g : algebra_->generators(config_.gen_window)) {
    auto& block = columns_[g];
    for (const auto& term :
         tensor_basis(*algebra_, config_.value_window, g.index + config_.degree, parity(g) ^ config_.parity)) {
      block.emplace(term, unknowns_.size());
      unknowns_.push_back({g, term});
    }
  }
  system_.columns = unknowns_.size();
}

void DerivationSystem::add_rows() {
  const Parity pd = config_.parity;
  const auto gens = algebra_->generators(config_.relation_window);
  RowAccumulator<Slots<2>> acc;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      const Generator& x = gens[i];
      const Generator& y = gens[j];
      if (!config_.relation_window.contains(x.index + y.index)) continue;

      for (const auto& [g, c] : algebra_->bracket(x, y)) {
        for (const auto& [term, col] : columns_.at(g)) acc.add(term, col, c);
      }
      const Scalar sx(-koszul(pd, parity(x)));
      for (const auto& [term, col] : columns_.at(y)) {
        for (const auto& [t, k] : act_basis(*algebra_, x, term)) acc.add(t, col, sx * k);
      }
      const Scalar sy(koszul(parity(y), pd ^ parity(x)));
      for (const auto& [term, col] : columns_.at(x)) {
        for (const auto& [t, k] : act_basis(*algebra_, y, term)) acc.add(t, col, sy * k);
      }
      acc.drain([&](const Slots<2>& term, SparseVector row) {
        system_.rows.push_back(std::move(row));
        labels_.push_back({x, y, term});
      });
    }
  }
}

std::optional<std::size_t> DerivationSystem::column(const Generator& g, const Slots<2>& term) const {
  auto block = columns_.find(g);
  if (block == columns_.end()) return std::nullopt;
  auto it = block->second.find(term);
  if (it == block->second.end()) return std::nullopt;
  return it->second;
}

DerivationTable DerivationSystem::to_table(const SparseVector& v) const {
  DerivationTable table{config_.parity, config_.degree, {}};
  for (const auto& [col, c] : v) {
    const Unknown& u = unknowns_.at(col);
    auto [it, inserted] = table.values.try_emplace(u.generator, algebra_);
    it->second.add(u.term, c);
  }
  std::erase_if(table.values, [](const auto& kv) { return kv.second.is_zero(); });
  return table;
}

std::optional<SparseVector> DerivationSystem::to_vector(const DerivationTable& table) const {
  SparseVector v;
  for (const auto& [g, value] : table.values) {
    for (const auto& [term, c] : value) {
      auto col = column(g, term);
      if (!col) return std::nullopt;
      v.emplace_back(*col, c);
    }
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

bool DerivationSystem::satisfies(const SparseVector& v) const {
  return std::all_of(system_.rows.begin(), system_.rows.end(),
                     [&](const SparseVector& row) { return dot(row, v).is_zero(); });
}

DerivationSystem assemble_system(const AlgebraSpec& algebra, const WindowConfig& config) {
  return DerivationSystem(algebra, config);
}

std::vector<DerivationTable> solve_nullspace(const DerivationSystem& system) {
  std::vector<DerivationTable> out;
  for (const auto& v : nullspace(system.linear_system())) {
    if (!system.satisfies(v)) throw std::logic_error("nullspace vector fails the residual check");
    out.push_back(system.to_table(v));
  }
  return out;
}

Tensor2 recover_inner_witness(const AlgebraSpec& algebra, const DerivationTable& d, const WindowConfig& config,
                              std::optional<IndexRange> check) {
  if (config.degree == 0) throw std::invalid_argument("inner witness recovery needs a nonzero degree");
  const Generator l0{Family::L, 0};
  if (!algebra.contains(l0) || !config.gen_window.contains(0)) {
    throw std::invalid_argument("inner witness recovery needs L_0 in the generator window");
  }
  Tensor2 u = d.at(l0);
  u *= Scalar(-1, config.degree);
  u.adopt(&algebra);

  DerivationTable inner;
  try {
    inner = inner_derivation(algebra, u, config);
  } catch (const SupportOverflow& e) {
    throw WitnessError(e.generator(), e.what());
  }
  const IndexRange window = check.value_or(config.gen_window);
  for (const auto& g : algebra.generators(window)) {
    if (!(inner.at(g) == d.at(g))) {
      throw WitnessError(g, "derivation differs from the inner derivation of " + to_string(u) + " at " +
                                to_string(g) + ": " + to_string(d.at(g)) + " vs " + to_string(inner.at(g)));
    }
  }
  return u;
}

CohomologyReport compare_der_vs_inn(const AlgebraSpec& algebra, const WindowConfig& config) {
  const DerivationSystem system = assemble_system(algebra, config);
  CohomologyReport report;
  report.config = config;
  report.algebra = algebra.name();
  report.unknowns = system.unknowns().size();
  report.rows = system.rows().size();

  const std::vector<SparseVector> der = nullspace(system.linear_system());
  for (const auto& v : der) {
    if (!system.satisfies(v)) throw std::logic_error("nullspace vector fails the residual check");
    report.nullspace_basis.push_back(system.to_table(v));
  }
  report.full_nullspace_dim = der.size();

  // Inner candidates: u in V_degree on the value window whose action on every
  // generator stays inside the window (overflow components must cancel).
  const auto candidates = tensor_basis(algebra, config.value_window, config.degree, config.parity);
  const auto gens = algebra.generators(config.gen_window);
  LinearSystem overflow{candidates.size(), {}};
  {
    RowAccumulator<std::pair<Generator, Slots<2>>> acc;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      for (const auto& x : gens) {
        const Scalar sign(koszul(config.parity, parity(x)));
        for (const auto& [t, k] : act_basis(algebra, x, candidates[b])) {
          if (!inside(config.value_window, t)) acc.add({x, t}, b, sign * k);
        }
      }
    }
    acc.drain([&](const auto&, SparseVector row) { overflow.rows.push_back(std::move(row)); });
  }

  RowEchelon inner_span(system.unknowns().size());
  std::vector<SparseVector> inner;
  report.containment = true;
  for (const auto& coords : nullspace(overflow)) {
    const Tensor2 u = from_coordinates(algebra, candidates, coords);
    const DerivationTable table = inner_derivation(algebra, u, config);
    const auto v = system.to_vector(table);
    if (!v || !system.satisfies(*v)) {
      report.containment = false;
      continue;
    }
    if (inner_span.insert(*v)) {
      inner.push_back(*v);
      report.inner_basis.push_back(table);
    }
  }
  report.full_inner_dim = inner.size();

  // Restrict both spaces to the inner generator window.
  const IndexRange sub = inner_window(config);
  std::vector<long> remap(system.unknowns().size(), -1);
  std::size_t sub_columns = 0;
  for (std::size_t c = 0; c < remap.size(); ++c) {
    if (sub.contains(system.unknowns()[c].generator.index)) remap[c] = static_cast<long>(sub_columns++);
  }
  auto project = [&](const SparseVector& v) {
    SparseVector out;
    for (const auto& [c, x] : v) {
      if (remap[c] >= 0) out.emplace_back(static_cast<std::size_t>(remap[c]), x);
    }
    return out;
  };
  RowEchelon der_sub(sub_columns);
  for (const auto& v : der) der_sub.insert(project(v));
  RowEchelon inn_sub(sub_columns);
  for (const auto& v : inner) {
    const auto p = project(v);
    inn_sub.insert(p);
    if (!der_sub.in_span(p)) report.containment = false;
  }
  report.nullspace_dim = der_sub.rank();
  report.inner_dim = inn_sub.rank();
  report.quotient_dim = report.nullspace_dim >= report.inner_dim ? report.nullspace_dim - report.inner_dim : 0;

  if (config.degree != 0 && config.gen_window.contains(0) && algebra.contains(Generator{Family::L, 0})) {
    for (std::size_t k = 0; k < report.nullspace_basis.size(); ++k) {
      try {
        report.witnesses.push_back(recover_inner_witness(algebra, report.nullspace_basis[k], config));
      } catch (const WitnessError& e) {
        report.witness_failures.push_back("basis " + std::to_string(k) + ": " + e.what());
      }
    }
  }
  return report;
}

ProbeConfig reference_probe_config() { return ProbeConfig{}; }

KernelReport invariant_kernel(const AlgebraSpec& algebra, const ProbeConfig& config) {
  validate_probe(config);
  KernelReport report{config, reported_degrees(config), {}, {}};
  const auto acting = acting_generators(algebra, config);
  for (int k = 2 * config.value_window.lo; k <= 2 * config.value_window.hi; ++k) {
    if (config.degrees && !config.degrees->contains(k)) continue;
    const auto basis = full_slice(algebra, config.value_window, k);
    LinearSystem sys{basis.size(), {}};
    RowAccumulator<Slots<2>> acc;
    for (const auto& x : acting) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        for (const auto& [t, c] : act_basis(algebra, x, basis[b])) acc.add(t, b, c);
      }
      acc.drain([&](const Slots<2>&, SparseVector row) { sys.rows.push_back(std::move(row)); });
    }
    const auto kernel = nullspace(sys);
    report.degrees.push_back({k, basis.size(), kernel.size()});
    if (report.reported_degrees.contains(k)) {
      for (const auto& v : kernel) report.basis.push_back(from_coordinates(algebra, basis, v));
    }
  }
  return report;
}

SkewProbeReport skew_invariance_probe(const AlgebraSpec& algebra, const ProbeConfig& config) {
  validate_probe(config);
  SkewProbeReport report{config, reported_degrees(config), {}, {}};
  const auto acting = acting_generators(algebra, config);
  for (int k = 2 * config.value_window.lo; k <= 2 * config.value_window.hi; ++k) {
    if (config.degrees && !config.degrees->contains(k)) continue;
    const auto basis = full_slice(algebra, config.value_window, k);
    LinearSystem sys{basis.size(), {}};
    RowAccumulator<Slots<2>> acc;
    for (const auto& x : acting) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        for (const auto& [t, c] : act_basis(algebra, x, basis[b])) {
          acc.add(t, b, c);
          acc.add({t[1], t[0]}, b, Scalar(koszul(parity(t[0]), parity(t[1]))) * c);
        }
      }
      acc.drain([&](const Slots<2>&, SparseVector row) { sys.rows.push_back(std::move(row)); });
    }
    const auto invariant = nullspace(sys);
    report.degrees.push_back({k, basis.size(), invariant.size()});
    if (!report.reported_degrees.contains(k)) continue;
    for (const auto& v : invariant) {
      const Tensor2 r = from_coordinates(algebra, basis, v);
      if (!is_skew(r)) report.violations.push_back(r);
    }
  }
  return report;
}

std::optional<Generator> find_skew_witness(const AlgebraSpec& algebra, const Tensor2& r, const ProbeConfig& config) {
  for (const auto& x : acting_generators(algebra, config)) {
    if (!is_skew(act2(algebra.element(x), r))) return x;
  }
  return std::nullopt;
}

}  // namespace tn2
