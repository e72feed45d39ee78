#pragma once

// Three-valued quasi-alternating classifier for Montesinos links.
//
// QA rules (sufficient conditions, ε and t̂ taken from the reduced form):
//   ε > −1;  ε = −1 and |t̂_i^f| > t̂_j for some i ≠ j;
//   ε < 1−p; ε = 1−p and |t̂_i^f| < t̂_j for some i ≠ j.
// NQA rules: det = 0; 1−p < ε < −1; ε = −1 and all t̂_i > 2;
//   ε = 1−p and all |t̂_i^f| > 2; a horizontal-foliation witness (m, a, σ)
//   for the Seifert fibered double branched cover.
// Everything else is Undetermined. Optional externally cited rules can
// be switched on with ClassifyOptions::use_external.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mqa/montesinos.hpp"

namespace mqa {

enum class Status { QA, NQA, Undetermined };

enum class Rule {
  QA_RationalNonzeroDet,
  QA_EpsilonHigh,
  QA_FlypeWitnessHigh,
  QA_EpsilonLow,
  QA_FlypeWitnessLow,
  NQA_DetZero,
  NQA_EpsilonStrip,
  NQA_AllAboveTwo,
  NQA_AllAboveTwoReflected,
  NQA_Foliation,
  NQA_ExternalCited,
  UNDETERMINED,
};

const char* to_string(Status s);
const char* to_string(Rule r);
Status status_of(Rule r);

/// Tangle indices (1-based) with |t̂_i^f| > t̂_j (or < for the low case).
struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Relatively prime 0 < a < m and a permutation σ (1-based) with
/// x_σ(1) > m/a, x_σ(2) > m/(m−a) and x_σ(k) > m for k >= 3.
/// `mirrored` marks a witness found on the |t̂^f| parameters of the mirror.
struct FoliationWitness {
  Integer m;
  Integer a;
  std::vector<std::size_t> sigma;
  bool mirrored = false;
  friend bool operator==(const FoliationWitness&, const FoliationWitness&) = default;
};

struct ExternalCitation {
  std::string citation;
  friend bool operator==(const ExternalCitation&, const ExternalCitation&) = default;
};

using Witness = std::variant<std::monostate, IndexPair, FoliationWitness, ExternalCitation>;

struct Verdict {
  Status status = Status::Undetermined;
  Rule rule = Rule::UNDETERMINED;
  Witness witness;
  std::vector<std::string> notes;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ClassifyOptions {
  bool use_external = false;
};

/// Raised when a QA rule and an NQA rule fire on the same link.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

Verdict classify(const MontesinosLink& link, ClassifyOptions options = {});

/// Least witness ordered by m ascending, a descending, then (σ(1), σ(2)).
/// m runs from 2 to ⌈max x_i⌉, beyond which the x_σ(k) > m condition fails.
/// Requires at least 3 parameters, each > 1.
std::optional<FoliationWitness> foliation_search(std::span<const Fraction> params);

/// Externally cited non-QA families, matched on reduced parameters with
/// ε = −1 (pass the |t̂^f| list for the ε = 1−p mirror side).
std::optional<ExternalCitation> external_rule(std::span<const Fraction> reduced_params);

}  // namespace mqa
