#pragma once

#include <random>

#include "tn2/algebra.hpp"
#include "tn2/tensor.hpp"

namespace tn2 {

inline void PrintTo(const Generator& g, std::ostream* os) { *os << to_string(g); }

}  // namespace tn2

namespace tn2::testing {

inline const AlgebraSpec& T() { return topological_n2(); }

inline Element L(int n, Scalar c = Scalar(1)) { return T().element(Family::L, n, c); }
inline Element H(int n, Scalar c = Scalar(1)) { return T().element(Family::H, n, c); }
inline Element G(int n, Scalar c = Scalar(1)) { return T().element(Family::G, n, c); }
inline Element Q(int n, Scalar c = Scalar(1)) { return T().element(Family::Q, n, c); }

inline Element gen(Family f, int n) { return T().element(f, n); }

inline constexpr Family kFamilies[] = {Family::L, Family::H, Family::G, Family::Q};

/// Random homogeneous sparse tensors and generators with indices in [lo, hi].
class Sampler {
 public:
  explicit Sampler(unsigned seed, int lo = -3, int hi = 3) : rng_(seed), lo_(lo), hi_(hi) {}

  Generator generator() {
    std::uniform_int_distribution<int> fam(0, 3), idx(lo_, hi_);
    return Generator{kFamilies[fam(rng_)], idx(rng_)};
  }

  Generator generator_of_parity(Parity p) {
    for (;;) {
      Generator g = generator();
      if (parity(g) == p) return g;
    }
  }

  Scalar coeff() {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    long n = 0;
    while (n == 0) n = num(rng_);
    return Scalar(n, den(rng_));
  }

  /// Up to `terms` random terms of the given total parity (any degree).
  Tensor2 tensor2(Parity p, int terms = 4) {
    Tensor2 t(&T());
    std::uniform_int_distribution<int> count(1, terms);
    for (int k = count(rng_); k > 0; --k) {
      Generator a = generator();
      Generator b = generator_of_parity((parity(a) + p) % 2);
      t.add(Slots<2>{a, b}, coeff());
    }
    return t;
  }

  Tensor3 tensor3(Parity p, int terms = 4) {
    Tensor3 t(&T());
    std::uniform_int_distribution<int> count(1, terms);
    for (int k = count(rng_); k > 0; --k) {
      Generator a = generator(), b = generator();
      Generator c = generator_of_parity((parity(a) + parity(b) + p) % 2);
      t.add(Slots<3>{a, b, c}, coeff());
    }
    return t;
  }

  Parity random_parity() { return std::uniform_int_distribution<int>(0, 1)(rng_); }

 private:
  std::mt19937 rng_;
  int lo_;
  int hi_;
};

}  // namespace tn2::testing
