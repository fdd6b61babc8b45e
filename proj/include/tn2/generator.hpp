#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace tn2 {

enum class Family { L, H, G, Q };

/// Z/2 grade: 0 even, 1 odd.
using Parity = int;

constexpr Parity parity(Family f) { return (f == Family::G || f == Family::Q) ? 1 : 0; }

char family_symbol(Family f);
std::optional<Family> family_from_symbol(std::string_view s);

/// Basis element x_n of the algebra; degree is the index.
struct Generator {
  Family family = Family::L;
  int index = 0;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

constexpr Parity parity(const Generator& g) { return parity(g.family); }
constexpr int degree(const Generator& g) { return g.index; }

/// "L_3", "Q_-1".
std::string to_string(const Generator& g);

/// Ordered tensor slots, e.g. a basis term a (x) b.
template <std::size_t N>
using Slots = std::array<Generator, N>;

template <std::size_t N>
constexpr Parity parity(const Slots<N>& s) {
  Parity p = 0;
  for (const auto& g : s) p ^= parity(g);
  return p;
}

template <std::size_t N>
constexpr int degree(const Slots<N>& s) {
  int d = 0;
  for (const auto& g : s) d += g.index;
  return d;
}

template <std::size_t N>
std::string to_string(const Slots<N>& s) {
  std::string out;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += "(x)";
    out += to_string(s[i]);
  }
  return out;
}

/// Inclusive integer range lo..hi; empty when lo > hi.
struct IndexRange {
  int lo = 0;
  int hi = -1;

  [[nodiscard]] bool empty() const { return lo > hi; }
  [[nodiscard]] bool contains(int n) const { return lo <= n && n <= hi; }
  [[nodiscard]] bool contains(const IndexRange& r) const { return r.empty() || (lo <= r.lo && r.hi <= hi); }
  [[nodiscard]] int size() const { return empty() ? 0 : hi - lo + 1; }
  [[nodiscard]] IndexRange shrink(int margin) const { return {lo + margin, hi - margin}; }

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Parses "lo..hi"; throws std::invalid_argument.
IndexRange parse_range(std::string_view text);
std::string to_string(const IndexRange& r);

}  // namespace tn2
