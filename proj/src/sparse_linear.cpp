#include "tn2/sparse_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace tn2 {

RowEchelon::RowEchelon(std::size_t columns) : columns_(columns), pivot_row_(columns, -1) {}

RowEchelon::IntRow RowEchelon::to_integer_row(const SparseVector& row) {
  mpz_class lcm = 1;
  for (const auto& [col, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.raw().get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [col, v] : row) {
    if (v.is_zero()) continue;
    out.emplace_back(col, v.numerator() * (lcm / v.denominator()));
  }
  make_primitive(out);
  return out;
}

void RowEchelon::make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1) {
    for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

RowEchelon::IntRow RowEchelon::combine(const IntRow& row, const IntRow& pivot, const mpz_class& row_coeff,
                                       const mpz_class& pivot_coeff) {
  // row_coeff * row - pivot_coeff * pivot
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  mpz_class v;
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.emplace_back(a->first, row_coeff * a->second);
      ++a;
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -(pivot_coeff * b->second));
      ++b;
    } else {
      v = row_coeff * a->second - pivot_coeff * b->second;
      if (v != 0) out.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  return out;
}

RowEchelon::IntRow RowEchelon::reduce(IntRow row) const {
  mpz_class g;
  while (!row.empty()) {
    const auto col = row.front().first;
    const long owner = pivot_row_[col];
    if (owner < 0) break;
    const IntRow& pivot = rows_[static_cast<std::size_t>(owner)];
    const mpz_class& p = pivot.front().second;
    const mpz_class& r = row.front().second;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), r.get_mpz_t());
    row = combine(row, pivot, p / g, r / g);
    make_primitive(row);
  }
  return row;
}

bool RowEchelon::insert(const SparseVector& row) {
  for (const auto& [col, v] : row) {
    if (col >= columns_) throw std::out_of_range("RowEchelon: column out of range");
  }
  IntRow reduced = reduce(to_integer_row(row));
  if (reduced.empty()) return false;
  pivot_row_[reduced.front().first] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(reduced));
  return true;
}

bool RowEchelon::in_span(const SparseVector& row) const { return reduce(to_integer_row(row)).empty(); }

std::vector<SparseVector> RowEchelon::nullspace() const {
  // Back-eliminate to reduced echelon form, last pivot first.
  std::vector<IntRow> reduced = rows_;
  std::vector<std::size_t> order(reduced.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return reduced[a].front().first < reduced[b].front().first; });

  mpz_class g;
  for (std::size_t k = order.size(); k-- > 0;) {
    const IntRow& pivot = reduced[order[k]];
    const std::size_t col = pivot.front().first;
    for (std::size_t j = 0; j < k; ++j) {
      IntRow& row = reduced[order[j]];
      auto it = std::lower_bound(row.begin(), row.end(), col,
                                 [](const auto& entry, std::size_t c) { return entry.first < c; });
      if (it == row.end() || it->first != col) continue;
      const mpz_class& p = pivot.front().second;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), it->second.get_mpz_t());
      const mpz_class rc = p / g;
      const mpz_class pc = it->second / g;
      row = combine(row, pivot, rc, pc);
      make_primitive(row);
    }
  }

  std::vector<long> free_slot(columns_, -1);
  std::vector<SparseVector> basis;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (pivot_row_[c] < 0) {
      free_slot[c] = static_cast<long>(basis.size());
      basis.push_back({{c, Scalar(1)}});
    }
  }
  for (const IntRow& row : reduced) {
    const std::size_t pcol = row.front().first;
    const mpq_class lead(row.front().second);
    for (auto it = std::next(row.begin()); it != row.end(); ++it) {
      const long slot = free_slot[it->first];
      if (slot < 0) throw std::logic_error("RowEchelon: back elimination left a pivot column");
      mpq_class v = -mpq_class(it->second) / lead;
      v.canonicalize();
      basis[static_cast<std::size_t>(slot)].emplace_back(pcol, Scalar(std::move(v)));
    }
  }
  for (auto& v : basis) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return basis;
}

std::vector<SparseVector> nullspace(const LinearSystem& system) {
  // Sparse rows first (stable). The reduced-echelon nullspace basis does not
  // depend on row order, only on the column order.
  std::vector<std::size_t> order(system.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return system.rows[a].size() < system.rows[b].size(); });
  RowEchelon echelon(system.columns);
  for (std::size_t i : order) echelon.insert(system.rows[i]);
  return echelon.nullspace();
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
  Scalar sum;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      sum += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return sum;
}

std::size_t rank(const std::vector<SparseVector>& vectors, std::size_t columns) {
  RowEchelon echelon(columns);
  for (const auto& v : vectors) echelon.insert(v);
  return echelon.rank();
}

}  // namespace tn2
