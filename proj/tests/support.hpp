#pragma once

// Shared helpers for the test binaries: literals, error matching and a seeded
// generator of random tangles and links.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mqa/montesinos.hpp"
#include "mqa/notation.hpp"
#include "mqa/rational.hpp"

namespace mqa::test {

inline Fraction F(long long num, long long den = 1) { return Fraction::make(num, den); }

inline MontesinosLink L(std::string_view text) { return parse_montesinos(text); }

inline std::vector<Fraction> Fs(std::initializer_list<std::pair<long long, long long>> xs) {
  std::vector<Fraction> out;
  for (const auto& [n, d] : xs) out.push_back(F(n, d));
  return out;
}

/// Message of the mqa::Error thrown by fn, or "" if nothing was thrown.
inline std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

inline bool throws_with(const std::function<void()>& fn, std::string_view needle) {
  const std::string msg = error_of(fn);
  return !msg.empty() && msg.find(needle) != std::string::npos;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Random valid tangle: |num| in [2, max_num], any coprime denominator up to
  /// 2*max_num, random sign.
  Fraction tangle(long long max_num = 20) {
    for (;;) {
      const long long a = uniform(2, max_num);
      const long long b = uniform(1, 2 * max_num);
      if (std::gcd(a, b) != 1) continue;
      return F(coin() ? a : -a, b);
    }
  }

  /// Reduced tangle α/β > 1 with α <= max_num.
  Fraction reduced_tangle(long long max_num = 20) {
    for (;;) {
      const long long a = uniform(2, max_num);
      const long long b = uniform(1, a - 1);
      if (std::gcd(a, b) == 1) return F(a, b);
    }
  }

  /// Fraction outside {0, 1, −1}, numerator up to max_num in size.
  Fraction nonelementary(long long max_num = 200) {
    for (;;) {
      const long long a = uniform(-max_num, max_num);
      const long long b = uniform(1, max_num);
      if (a == 0 || std::gcd(a, b) != 1 || (b == 1 && (a == 1 || a == -1))) continue;
      return F(a, b);
    }
  }

  MontesinosLink link(std::size_t p_min = 3, std::size_t p_max = 5, long long max_num = 20, long long e_range = 4) {
    const std::size_t p = static_cast<std::size_t>(uniform(static_cast<long long>(p_min), static_cast<long long>(p_max)));
    std::vector<Fraction> ts;
    for (std::size_t k = 0; k < p; ++k) ts.push_back(tangle(max_num));
    return normalize_input(uniform(-e_range, e_range), ts);
  }

  /// Reduced link M(ε; t̂...) with ε in [lo, hi].
  MontesinosLink reduced_link(std::size_t p, long long max_num, long long lo, long long hi) {
    std::vector<Fraction> ts;
    for (std::size_t k = 0; k < p; ++k) ts.push_back(reduced_tangle(max_num));
    return normalize_input(uniform(lo, hi), ts);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mqa::test
