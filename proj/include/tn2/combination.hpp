#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tn2/generator.hpp"
#include "tn2/scalar.hpp"

namespace tn2 {

class AlgebraSpec;

/// Raised when values from two different algebras meet, or when a value is
/// used where its parity would make a Koszul sign undefined.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite Scalar-linear combination of basis keys over one algebra.
///
/// Terms are kept in key order with zero coefficients erased, so equality is
/// structural. The zero combination may carry no algebra; it is compatible
/// with every algebra.
template <typename Key>
class Combination {
 public:
  using Map = std::map<Key, Scalar>;
  using const_iterator = typename Map::const_iterator;

  Combination() = default;
  explicit Combination(const AlgebraSpec* algebra) : algebra_(algebra) {}
  Combination(const AlgebraSpec* algebra, const Key& key, const Scalar& coeff = Scalar(1)) : algebra_(algebra) {
    add(key, coeff);
  }

  [[nodiscard]] const AlgebraSpec* algebra() const { return algebra_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
  [[nodiscard]] const_iterator end() const { return terms_.end(); }
  [[nodiscard]] const Map& terms() const { return terms_; }

  [[nodiscard]] Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += scale * other
  void add_scaled(const Combination& other, const Scalar& scale) {
    adopt(other.algebra_);
    if (scale.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  void adopt(const AlgebraSpec* other) {
    if (other == nullptr || other == algebra_) return;
    if (algebra_ != nullptr) throw AlgebraError("cannot combine values from different algebras");
    algebra_ = other;
  }

  Combination& operator+=(const Combination& rhs) {
    add_scaled(rhs, Scalar(1));
    return *this;
  }
  Combination& operator-=(const Combination& rhs) {
    add_scaled(rhs, Scalar(-1));
    return *this;
  }
  Combination& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Scalar& s, Combination a) { return a *= s; }
  Combination operator-() const {
    Combination out = *this;
    return out *= Scalar(-1);
  }

  /// Equality of term maps; the algebra tag of a zero value is ignored.
  friend bool operator==(const Combination& a, const Combination& b) {
    if (a.terms_ != b.terms_) return false;
    return a.is_zero() || a.algebra_ == b.algebra_;
  }

  /// Common parity of all terms, or nullopt when mixed. Zero is even.
  [[nodiscard]] std::optional<Parity> homogeneous_parity() const {
    if (terms_.empty()) return Parity{0};
    const Parity p = parity(terms_.begin()->first);
    for (const auto& [k, c] : terms_) {
      if (parity(k) != p) return std::nullopt;
    }
    return p;
  }

  /// Common degree of all terms, or nullopt when mixed or zero.
  [[nodiscard]] std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = degree(terms_.begin()->first);
    for (const auto& [k, c] : terms_) {
      if (degree(k) != d) return std::nullopt;
    }
    return d;
  }

 private:
  const AlgebraSpec* algebra_ = nullptr;
  Map terms_;
};

using Element = Combination<Generator>;
using Tensor2 = Combination<Slots<2>>;
using Tensor3 = Combination<Slots<3>>;

template <typename Key>
std::string to_string(const Combination<Key>& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, coeff] : c) {
    const bool neg = coeff.sign() < 0;
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    const Scalar mag = neg ? -coeff : coeff;
    if (mag != Scalar(1)) out += mag.to_string() + "*";
    out += to_string(k);
    first = false;
  }
  return out;
}

/// Koszul sign (-1)^(p*q).
constexpr int koszul(Parity p, Parity q) { return (p & q & 1) ? -1 : 1; }

}  // namespace tn2
