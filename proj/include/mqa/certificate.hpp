#pragma once

// Quasi-alternating certificates.
//
// A certificate starts from the target link, records a preamble of isotopies
// (reduce, flypes, mirror, rotation) and ends in one of two checkable forms:
//
//  * AlternatingLeaf: a sign-uniform (hence alternating) diagram with
//    nonzero determinant, or a two-bridge link with nonzero determinant;
//  * InductiveChain: a base form M(0; r_1, ..., r_n, -s) with s > min r_i,
//    grown from the two-bridge link M(0; r_min, -s) one tangle at a time.
//    Each step inserts a crossing (a 1-tangle) whose resolutions satisfy
//    det(L) = det(L0) + det(Linf), then extends it to the next tangle r.
//
// The serialized form is line based and tab separated; links use the
// notation grammar so certificates can be re-verified independently.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mqa/montesinos.hpp"

namespace mqa {

enum class StepKind { Reduce, FlypePositive, FlypeNegative, Reflect, Rotate };

struct PreambleStep {
  StepKind kind;
  std::size_t index = 0;  // flyped tangle (1-based) or rotation amount
  MontesinosLink result;
};

struct ChainStep {
  TangleSum link_with_crossing;  // M(0; ..., 1, ..., -s)
  std::size_t position = 0;      // 1-based slot of the inserted 1-tangle
  Integer det_L;
  Integer det_L0;    // connected sum of the two-bridge closures: num(s) * ∏ num(r)
  Integer det_Linf;  // the link without the crossing
  Fraction extension;  // rational tangle replacing the crossing
};

enum class CertificateKind { AlternatingLeaf, InductiveChain };

struct Certificate {
  explicit Certificate(MontesinosLink link) : target(std::move(link)) {}

  MontesinosLink target;
  std::vector<PreambleStep> preamble;
  CertificateKind kind = CertificateKind::AlternatingLeaf;
  std::optional<RationalReduction> rational;  // two-bridge leaves
  std::optional<TangleSum> base;             // chains: M(0; r_min, -s)
  std::vector<ChainStep> chain;

  /// Link reached by the preamble (the target when it is empty).
  const MontesinosLink& final_form() const { return preamble.empty() ? target : preamble.back().result; }
};

/// Throws Error("not applicable") unless classify() proves the link QA.
Certificate build_certificate(const MontesinosLink& link);

struct VerifyResult {
  bool ok = true;
  std::string failure;
  explicit operator bool() const { return ok; }
};

/// Recomputes every step from scratch.
VerifyResult verify_certificate(const Certificate& cert);

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

const char* to_string(CertificateKind k);
const char* to_string(StepKind k);

}  // namespace mqa
