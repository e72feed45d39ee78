#include "mqa/rational.hpp"

#include <algorithm>
#include <sstream>

namespace mqa {

Fraction Fraction::make(Integer num, Integer den) {
  if (den.is_zero()) throw Error("undefined fraction");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  Fraction f;
  if (num.is_zero()) return f;
  Integer g = boost::multiprecision::gcd(num, den);
  if (g != 1) {
    num /= g;
    den /= g;
  }
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

Fraction Fraction::operator-() const {
  Fraction f = *this;
  f.num_ = -f.num_;
  return f;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) return Fraction::make(a.num_ + b.num_, a.den_);
  return Fraction::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction::make(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  return Fraction::make(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  const Integer lhs = a.num_ * b.den_;
  const Integer rhs = b.num_ * a.den_;
  const int c = lhs.compare(rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Fraction::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(num, den, q, r);
  // divide_qr truncates toward zero.
  if (!r.is_zero() && (r.sign() < 0) != (den.sign() < 0)) --q;
  return q;
}

std::pair<Integer, Fraction> floor_frac(const Fraction& t) {
  Integer q = floor_div(t.num(), t.den());
  Fraction r = Fraction::make(t.num() - q * t.den(), t.den());
  return {std::move(q), std::move(r)};
}

Fraction hat(const Fraction& t) {
  if (t.is_zero()) throw Error("hat undefined: zero tangle");
  auto [q, r] = floor_frac(t.reciprocal());
  if (r.is_zero()) throw Error("hat undefined: 1/" + t.str() + " is an integer");
  return r.reciprocal();
}

namespace {

Fraction flype_with(const Fraction& t, bool positive) {
  if (t.is_zero()) throw Error("flype degenerates: zero tangle");
  const Integer& alpha = t.num();
  const Integer& beta = t.den();
  Integer den = positive ? Integer(beta - alpha) : Integer(beta + alpha);
  if (den.is_zero()) throw Error("flype degenerates at " + t.str());
  return Fraction::make(alpha, std::move(den));
}

}  // namespace

Fraction flype_transform(const Fraction& t) { return flype_with(t, t.sign() > 0); }
Fraction flype_positive(const Fraction& t) { return flype_with(t, true); }
Fraction flype_negative(const Fraction& t) { return flype_with(t, false); }

IntSequence cf_expand(const Fraction& t) {
  if (t.is_zero() || t == Fraction(1) || t == Fraction(-1)) {
    throw Error("elementary tangle " + t.str() + " has no expansion");
  }
  const bool negative = t.sign() < 0;
  IntSequence terms;
  Fraction x = t.abs();
  for (;;) {
    auto [q, r] = floor_frac(x);
    terms.push_back(std::move(q));
    if (r.is_zero()) break;
    x = r.reciprocal();
  }
  if (negative) {
    for (auto& a : terms) a = -a;
  }
  return terms;
}

Fraction cf_eval(std::span<const Integer> terms) {
  if (terms.empty()) throw Error("empty continued fraction");
  if (terms.back().is_zero()) throw Error("divergent continued fraction: a_1 = 0");
  Fraction x(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    if (x.is_zero()) throw Error("divergent continued fraction");
    x = Fraction(*it) + x.reciprocal();
  }
  return x;
}

IntSequence tangle_word(const Fraction& t) {
  IntSequence w = cf_expand(t);
  std::reverse(w.begin(), w.end());
  return w;
}

Fraction word_value(std::span<const Integer> word) {
  IntSequence terms(word.rbegin(), word.rend());
  return cf_eval(terms);
}

}  // namespace mqa
