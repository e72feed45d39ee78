#pragma once

// Exact rationals and the fraction-level operators applied to tangle
// parameters: floor / fractional part, hat, flype transform and the
// sign-uniform continued-fraction expansion used by Conway's tangle words.

#include <compare>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mqa {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced fraction num/den with den > 0. Zero is 0/1.
class Fraction {
 public:
  Fraction() = default;
  Fraction(Integer value) : num_(std::move(value)) {}  // NOLINT: integers are fractions
  Fraction(long long value) : num_(value) {}           // NOLINT

  /// Reduces num/den and moves the sign to the numerator.
  /// Throws Error("undefined fraction") when den == 0.
  static Fraction make(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Fraction abs() const { return num_.sign() < 0 ? -*this : *this; }
  Fraction reciprocal() const { return make(den_, num_); }

  Fraction operator-() const;
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction& operator+=(const Fraction& b) { return *this = *this + b; }
  Fraction& operator-=(const Fraction& b) { return *this = *this - b; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  /// "a/b", or "a" for integers.
  std::string str() const;

 private:
  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// normalize_fraction: the reduced representative of num/den.
inline Fraction normalize_fraction(Integer num, Integer den) {
  return Fraction::make(std::move(num), std::move(den));
}

/// Floor division rounding toward negative infinity. den must be nonzero.
Integer floor_div(const Integer& num, const Integer& den);

/// (⌊t⌋, {t}) with 0 <= {t} < 1 and t = ⌊t⌋ + {t}.
std::pair<Integer, Fraction> floor_frac(const Fraction& t);

inline Integer floor(const Fraction& t) { return floor_div(t.num(), t.den()); }

/// t̂ = 1 / {1/t}. Always > 1; equals t when t > 1.
/// Throws when t == 0 or 1/t is an integer.
Fraction hat(const Fraction& t);

/// Flype parameter change: α/(β−α) for t > 0, α/(β+α) for t < 0.
/// The sign flips, and the transform undoes itself, exactly when |t| > 1.
/// Throws for t ∈ {0, 1, −1}.
Fraction flype_transform(const Fraction& t);

/// The two conventions on their own, whatever the sign of t: α/(β−α) and
/// α/(β+α). Each inverts the other.
Fraction flype_positive(const Fraction& t);
Fraction flype_negative(const Fraction& t);

/// Continued-fraction terms in evaluation order [a_m, ..., a_1], i.e.
/// value = a_m + 1/(a_{m-1} + ... + 1/a_1).
using IntSequence = std::vector<Integer>;

/// Sign-uniform expansion: for t > 0, a_1 >= 2, a_k >= 1 (1 < k < m),
/// a_m >= 0; for t < 0 every term negated. Throws for t ∈ {0, 1, −1}.
IntSequence cf_expand(const Fraction& t);

/// Evaluates [a_m, ..., a_1]. Throws on an empty list, a_1 == 0, or an
/// intermediate division by zero.
Fraction cf_eval(std::span<const Integer> terms);

/// Tangle word a_1 a_2 ... a_m for t (the reverse of cf_expand).
IntSequence tangle_word(const Fraction& t);

/// Fraction of the rational tangle a_1 a_2 ... a_m.
Fraction word_value(std::span<const Integer> word);

}  // namespace mqa
