#pragma once

// Montesinos links M(e; t_1, ..., t_p) = 1*(e + t_1 0 + ... + t_p 0) and the
// parameter-level isotopies acting on them.

#include <cstddef>
#include <span>
#include <vector>

#include "mqa/rational.hpp"

namespace mqa {

/// Unchecked parameter list (e; t_1, ..., t_p). Tangles may be ±1; used for
/// intermediate diagrams such as the crossing-inserted links of a certificate.
struct TangleSum {
  Integer e;
  std::vector<Fraction> tangles;

  friend bool operator==(const TangleSum&, const TangleSum&) = default;
};

/// A Montesinos link. Every tangle has |numerator| >= 2, so no tangle is 0,
/// ±1 or an integer reciprocal 1/n, and p >= 1.
class MontesinosLink {
 public:
  const Integer& e() const noexcept { return params_.e; }
  const std::vector<Fraction>& tangles() const noexcept { return params_.tangles; }
  const Fraction& tangle(std::size_t i) const { return params_.tangles.at(i - 1); }  // 1-based
  std::size_t p() const noexcept { return params_.tangles.size(); }
  const TangleSum& params() const noexcept { return params_; }

  friend bool operator==(const MontesinosLink&, const MontesinosLink&) = default;

 private:
  friend MontesinosLink normalize_input(Integer e, std::vector<Fraction> raw);
  explicit MontesinosLink(TangleSum params) : params_(std::move(params)) {}
  TangleSum params_;
};

/// Builds a link from raw parameters. Tangles 1/n (in particular ±1) are
/// twist regions and are absorbed into e (e += n).
/// Throws on a zero tangle or when nothing is left after absorption.
MontesinosLink normalize_input(Integer e, std::vector<Fraction> raw);

inline MontesinosLink normalize_input(const TangleSum& s) {
  return normalize_input(s.e, s.tangles);
}

/// ε = e + Σ ⌊1/t_i⌋.
Integer epsilon(const MontesinosLink& link);

/// Reduced form M(ε; t̂_1, ..., t̂_p).
MontesinosLink reduce(const MontesinosLink& link);

inline bool is_reduced(const MontesinosLink& link) { return reduce(link) == link; }

enum class FlypeSign { Positive, Negative };

/// Flype at tangle i (1-based). Positive requires t_i > 0 and gives
/// (e+1, t_i^f); Negative requires t_i < 0 and gives (e−1, t_i^f).
MontesinosLink flype(const MontesinosLink& link, std::size_t i, FlypeSign sign);

/// Mirror image M(−e; −t_1, ..., −t_p).
MontesinosLink reflect(const MontesinosLink& link);

/// Cyclic rotation moving tangle k+1 to the front (an isotopy).
MontesinosLink rotate(const MontesinosLink& link, std::size_t k);

/// |(∏ α_i)(e + Σ β_i/α_i)| for t_i = α_i/β_i. Valid for any tangle list.
Integer determinant(const Integer& e, std::span<const Fraction> tangles);
inline Integer determinant(const TangleSum& s) { return determinant(s.e, s.tangles); }
inline Integer determinant(const MontesinosLink& link) { return determinant(link.params()); }

/// e + Σ β_i/α_i, the classifying rational of the link.
Fraction classifying_number(const MontesinosLink& link);

/// |t̂^f| = α/(α−β) for a reduced parameter t̂ = α/β > 1.
Fraction flyped_abs(const Fraction& reduced_tangle);

/// Complete invariant for p >= 3: ε and the cycle (1/t̂_1, ..., 1/t̂_p)
/// taken lexicographically least over rotations and reversal.
struct CanonicalForm {
  Integer epsilon;
  std::vector<Fraction> cycle;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b);
};

/// Throws for p < 3 (those links are rational; see to_rational).
CanonicalForm canonical(const MontesinosLink& link);

/// Index of the lexicographically least dihedral image of `seq`:
/// {rotation, reversed}. Rotation r means seq[r], seq[r+1], ...
struct DihedralImage {
  std::size_t rotation = 0;
  bool reversed = false;
};
DihedralImage least_dihedral_image(std::span<const Fraction> seq);
std::vector<Fraction> dihedral_apply(std::span<const Fraction> seq, DihedralImage image);

bool equivalent(const MontesinosLink& a, const MontesinosLink& b);

enum class Closure { Vertical, Horizontal };

/// Two-bridge form of a link with p <= 2.
struct RationalReduction {
  Fraction fraction;
  Closure closure = Closure::Vertical;
};

/// t = [b_1, ..., b_l, e, a_k, ..., a_1] for t_1 = [a_k..a_1], t_2 = [b_l..b_1];
/// closure Vertical iff k + l is odd. |num(t)| equals the determinant.
/// Throws for p >= 3 or when the continued fraction diverges.
RationalReduction to_rational(const MontesinosLink& link);

enum class DiagramClass { Alternating, AdequateNonAlternating, Boundary };

/// Compares |ε + p/2| with p/2 − 1. Throws for p < 3.
DiagramClass diagram_class(const MontesinosLink& link);

const char* to_string(DiagramClass c);
const char* to_string(Closure c);

}  // namespace mqa
