#include "mqa/montesinos.hpp"

#include <algorithm>

namespace mqa {

MontesinosLink normalize_input(Integer e, std::vector<Fraction> raw) {
  std::vector<Fraction> kept;
  kept.reserve(raw.size());
  for (auto& t : raw) {
    if (t.is_zero()) throw Error("zero tangle");
    if (abs(t.num()) == 1) {
      // 1/n is an integral twist region; a flype carries it into e.
      e += t.num() * t.den();
      continue;
    }
    kept.push_back(std::move(t));
  }
  if (kept.empty()) throw Error("not a Montesinos link: every tangle was absorbed into e");
  return MontesinosLink(TangleSum{std::move(e), std::move(kept)});
}

Integer epsilon(const MontesinosLink& link) {
  Integer eps = link.e();
  for (const auto& t : link.tangles()) eps += floor_div(t.den(), t.num());
  return eps;
}

MontesinosLink reduce(const MontesinosLink& link) {
  std::vector<Fraction> hats;
  hats.reserve(link.p());
  for (const auto& t : link.tangles()) hats.push_back(hat(t));
  return normalize_input(epsilon(link), std::move(hats));
}

MontesinosLink flype(const MontesinosLink& link, std::size_t i, FlypeSign sign) {
  if (i < 1 || i > link.p()) throw Error("flype index out of range");
  const Fraction& t = link.tangle(i);
  if ((sign == FlypeSign::Positive) != (t.sign() > 0)) {
    throw Error("flype sign does not match the sign of tangle " + std::to_string(i));
  }
  TangleSum s = link.params();
  s.tangles[i - 1] = flype_transform(t);
  if (sign == FlypeSign::Positive) {
    ++s.e;
  } else {
    --s.e;
  }
  return normalize_input(s);
}

MontesinosLink reflect(const MontesinosLink& link) {
  TangleSum s = link.params();
  s.e = -s.e;
  for (auto& t : s.tangles) t = -t;
  return normalize_input(s);
}

MontesinosLink rotate(const MontesinosLink& link, std::size_t k) {
  TangleSum s = link.params();
  std::rotate(s.tangles.begin(), s.tangles.begin() + static_cast<std::ptrdiff_t>(k % s.tangles.size()),
              s.tangles.end());
  return normalize_input(s);
}

Integer determinant(const Integer& e, std::span<const Fraction> tangles) {
  // (∏ α_i) e + Σ_i β_i ∏_{j≠i} α_j
  Integer prod = 1;
  for (const auto& t : tangles) prod *= t.num();
  Integer total = prod * e;
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    Integer term = tangles[i].den();
    for (std::size_t j = 0; j < tangles.size(); ++j) {
      if (j != i) term *= tangles[j].num();
    }
    total += term;
  }
  return abs(total);
}

Fraction classifying_number(const MontesinosLink& link) {
  Fraction sum(link.e());
  for (const auto& t : link.tangles()) sum += t.reciprocal();
  return sum;
}

Fraction flyped_abs(const Fraction& reduced_tangle) {
  return flype_transform(reduced_tangle).abs();
}

bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
  if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
  return std::lexicographical_compare(a.cycle.begin(), a.cycle.end(), b.cycle.begin(), b.cycle.end());
}

std::vector<Fraction> dihedral_apply(std::span<const Fraction> seq, DihedralImage image) {
  const std::size_t n = seq.size();
  std::vector<Fraction> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t idx = image.reversed ? (image.rotation + n - k) % n : (image.rotation + k) % n;
    out[k] = seq[idx];
  }
  return out;
}

DihedralImage least_dihedral_image(std::span<const Fraction> seq) {
  const std::size_t n = seq.size();
  DihedralImage best;
  auto at = [&](DihedralImage im, std::size_t k) -> const Fraction& {
    return seq[im.reversed ? (im.rotation + n - k) % n : (im.rotation + k) % n];
  };
  for (int rev = 0; rev < 2; ++rev) {
    for (std::size_t r = 0; r < n; ++r) {
      DihedralImage cand{r, rev == 1};
      for (std::size_t k = 0; k < n; ++k) {
        const auto c = at(cand, k) <=> at(best, k);
        if (c < 0) {
          best = cand;
          break;
        }
        if (c > 0) break;
      }
    }
  }
  return best;
}

CanonicalForm canonical(const MontesinosLink& link) {
  if (link.p() < 3) throw Error("use to_rational: classification theorem applies only for p >= 3");
  std::vector<Fraction> parts;
  parts.reserve(link.p());
  for (const auto& t : link.tangles()) parts.push_back(hat(t).reciprocal());
  return CanonicalForm{epsilon(link), dihedral_apply(parts, least_dihedral_image(parts))};
}

bool equivalent(const MontesinosLink& a, const MontesinosLink& b) {
  return canonical(a) == canonical(b);
}

RationalReduction to_rational(const MontesinosLink& link) {
  if (link.p() > 2) throw Error("to_rational requires p <= 2");
  const IntSequence a = cf_expand(link.tangle(1));  // [a_k, ..., a_1]
  IntSequence terms;
  std::size_t l = 0;
  if (link.p() == 2) {
    const IntSequence b = cf_expand(link.tangle(2));  // [b_l, ..., b_1]
    l = b.size();
    terms.assign(b.rbegin(), b.rend());
  }
  terms.push_back(link.e());
  terms.insert(terms.end(), a.begin(), a.end());
  RationalReduction r;
  r.fraction = cf_eval(terms);
  r.closure = (a.size() + l) % 2 == 1 ? Closure::Vertical : Closure::Horizontal;
  return r;
}

DiagramClass diagram_class(const MontesinosLink& link) {
  if (link.p() < 3) throw Error("rational links are alternating");
  // |ε + p/2| vs p/2 − 1, doubled.
  const Integer p(static_cast<long long>(link.p()));
  const Integer lhs = abs(2 * epsilon(link) + p);
  const Integer rhs = p - 2;
  if (lhs > rhs) return DiagramClass::Alternating;
  if (lhs < rhs) return DiagramClass::AdequateNonAlternating;
  return DiagramClass::Boundary;
}

const char* to_string(DiagramClass c) {
  switch (c) {
    case DiagramClass::Alternating: return "Alternating";
    case DiagramClass::AdequateNonAlternating: return "AdequateNonAlternating";
    case DiagramClass::Boundary: return "Boundary";
  }
  return "?";
}

const char* to_string(Closure c) { return c == Closure::Vertical ? "Vertical" : "Horizontal"; }

}  // namespace mqa
