#include <doctest.h>

#include <numeric>

#include "mqa/classify.hpp"
#include "support.hpp"

using namespace mqa;
using mqa::test::F;
using mqa::test::L;
using mqa::test::throws_with;

namespace {

// Straight transcription of the foliation conditions, searched over a bound
// well past the one the library uses; first hit in (m, -a, σ(1), σ(2)) order.
std::optional<FoliationWitness> brute_foliation(const std::vector<Fraction>& x, long long m_max) {
  const std::size_t n = x.size();
  for (long long m = 2; m <= m_max; ++m) {
    for (long long a = m - 1; a >= 1; --a) {
      if (std::gcd(m, a) != 1) continue;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          if (!(x[i] > F(m, a)) || !(x[j] > F(m, m - a))) continue;
          bool rest = true;
          std::vector<std::size_t> sigma{i + 1, j + 1};
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            rest = rest && x[k] > F(m);
            sigma.push_back(k + 1);
          }
          if (rest) return FoliationWitness{m, a, sigma, false};
        }
      }
    }
  }
  return std::nullopt;
}

Rule mirror_rule(Rule r) {
  switch (r) {
    case Rule::QA_EpsilonHigh: return Rule::QA_EpsilonLow;
    case Rule::QA_EpsilonLow: return Rule::QA_EpsilonHigh;
    case Rule::QA_FlypeWitnessHigh: return Rule::QA_FlypeWitnessLow;
    case Rule::QA_FlypeWitnessLow: return Rule::QA_FlypeWitnessHigh;
    case Rule::NQA_AllAboveTwo: return Rule::NQA_AllAboveTwoReflected;
    case Rule::NQA_AllAboveTwoReflected: return Rule::NQA_AllAboveTwo;
    default: return r;
  }
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("rule names and statuses") {
  CHECK(std::string(to_string(Rule::QA_EpsilonHigh)) == "QA_EpsilonHigh");
  CHECK(std::string(to_string(Rule::UNDETERMINED)) == "UNDETERMINED");
  CHECK(std::string(to_string(Status::Undetermined)) == "UNDETERMINED");
  CHECK(status_of(Rule::QA_RationalNonzeroDet) == Status::QA);
  CHECK(status_of(Rule::NQA_ExternalCited) == Status::NQA);
  CHECK(status_of(Rule::UNDETERMINED) == Status::Undetermined);
}

TEST_CASE("worked examples") {
  Verdict v = classify(L("M(3; 31/7, 5/16, -29/9)"));
  CHECK(v.status == Status::QA);
  CHECK(v.rule == Rule::QA_EpsilonHigh);

  v = classify(L("M(-1; 3/2, 4/3, 7/4)"));
  CHECK(v.rule == Rule::QA_FlypeWitnessHigh);
  CHECK(std::get<IndexPair>(v.witness) == IndexPair{1, 2});

  CHECK(classify(L("M(-1; 3, 3, 3)")).rule == Rule::NQA_AllAboveTwo);
  CHECK(classify(L("P(0; 3, 3, 3, -1)")).rule == Rule::NQA_AllAboveTwo);
  CHECK(classify(L("M(-2; 2, 2, 2, 2)")).rule == Rule::NQA_EpsilonStrip);

  v = classify(L("M(-1; 2, 4, 4)"));
  CHECK(v.status == Status::NQA);
  CHECK(v.rule == Rule::NQA_Foliation);
  const auto& w = std::get<FoliationWitness>(v.witness);
  CHECK(w.m == 3);
  CHECK(w.a == 2);
  CHECK(w.sigma == std::vector<std::size_t>{1, 2, 3});

  CHECK(classify(L("M(-1; 5/2, 3, 5/3)")).rule == Rule::UNDETERMINED);
  CHECK(classify(L("M(0; 5/2, 3, -5/2)")).rule == Rule::UNDETERMINED);
  CHECK(classify(L("P(0; 3, 3, 3, -2)")).rule == Rule::UNDETERMINED);
  v = classify(L("P(0; 3, 3, 3, -2)"), {true});
  CHECK(v.rule == Rule::NQA_ExternalCited);
  CHECK(v.notes.size() == 1);
  CHECK(std::holds_alternative<ExternalCitation>(v.witness));
  CHECK(v.notes[0].find("P(0; 3,3,3, -2)") != std::string::npos);
  CHECK(classify(L("P(0; 3, 3, 3, -1)"), {true}).rule == Rule::NQA_AllAboveTwo);
  v = classify(L("P(0; 4, 5, 4, -3)"), {true});
  CHECK(v.notes.at(0).find("-3)") != std::string::npos);
}

TEST_CASE("rational links") {
  CHECK(classify(L("M(0; 2, 3)")).rule == Rule::QA_RationalNonzeroDet);
  CHECK(classify(L("M(0; 5/2)")).rule == Rule::QA_RationalNonzeroDet);
  CHECK(classify(L("M(0; 3, -3)")).rule == Rule::NQA_DetZero);
}

TEST_CASE("det zero links take the most specific NQA rule") {
  // Both have determinant 0; the named foliation case is reported.
  Verdict v = classify(normalize_input(-1, {F(2), F(3), F(6)}));
  CHECK(v.rule == Rule::NQA_Foliation);
  CHECK(std::get<FoliationWitness>(v.witness).m == 5);
  CHECK(std::get<FoliationWitness>(v.witness).a == 3);
  v = classify(normalize_input(-1, {F(3, 2), F(6), F(6)}));
  CHECK(v.rule == Rule::NQA_Foliation);
  CHECK(std::get<FoliationWitness>(v.witness).m == 4);
  test::Gen g(711);
  for (int k = 0; k < 3000; ++k) {
    const MontesinosLink l = g.link(2, 4, 8, 3);
    if (determinant(l).is_zero()) REQUIRE(classify(l).status == Status::NQA);
  }
}

TEST_CASE("mirror side rules") {
  // ε = 1 − p with |t̂^f| all above two.
  const MontesinosLink m = reflect(L("M(-1; 3, 3, 3)"));
  CHECK(classify(m).rule == Rule::NQA_AllAboveTwoReflected);
  const Verdict v = classify(reflect(L("M(-1; 2, 4, 4)")));
  CHECK(v.rule == Rule::NQA_Foliation);
  CHECK(std::get<FoliationWitness>(v.witness).mirrored);
  CHECK(classify(reflect(L("P(0;3,3,3,-2)")), {true}).rule == Rule::NQA_ExternalCited);
  CHECK(classify(reflect(L("M(-1; 3/2, 4/3, 7/4)"))).rule == Rule::QA_FlypeWitnessLow);
}

TEST_CASE("foliation_search") {
  auto w = foliation_search(std::vector<Fraction>{F(5, 2), F(3), F(3)});
  REQUIRE(w);
  CHECK(w->m == 2);
  CHECK(w->a == 1);
  CHECK(w->sigma == std::vector<std::size_t>{1, 2, 3});
  w = foliation_search(std::vector<Fraction>{F(2), F(4), F(4)});
  REQUIRE(w);
  CHECK(w->m == 3);
  CHECK(w->a == 2);
  CHECK(w->sigma == std::vector<std::size_t>{1, 2, 3});
  CHECK_FALSE(foliation_search(std::vector<Fraction>{F(5, 2), F(3), F(5, 3)}));
  CHECK(throws_with([] { foliation_search(std::vector<Fraction>{F(2), F(1), F(3)}); }, "not in reduced form"));
  CHECK(throws_with([] { foliation_search(std::vector<Fraction>{F(2), F(1, 2), F(3)}); }, "not in reduced form"));
  CHECK(throws_with([] { foliation_search(std::vector<Fraction>{F(2), F(3)}); }, "at least 3"));
}

TEST_CASE("foliation_search matches an unbounded brute force") {
  test::Gen g(707);
  for (int k = 0; k < 3000; ++k) {
    std::vector<Fraction> x;
    const long long n = g.uniform(3, 5);
    for (long long i = 0; i < n; ++i) x.push_back(g.reduced_tangle(g.coin() ? 6 : 15));
    long long top = 0;
    for (const auto& t : x) top = std::max(top, static_cast<long long>(floor(t)) + 1);
    const auto expected = brute_foliation(x, top + 5);
    const auto got = foliation_search(x);
    REQUIRE(got.has_value() == expected.has_value());
    if (got) {
      REQUIRE(*got == *expected);
      REQUIRE(std::gcd(static_cast<long long>(got->m), static_cast<long long>(got->a)) == 1);
      REQUIRE(got->a > 0);
      REQUIRE(got->a < got->m);
    }
  }
}

TEST_CASE("all-above-two implies an m = 2 witness") {
  test::Gen g(708);
  for (int k = 0; k < 2000; ++k) {
    std::vector<Fraction> x;
    for (int i = 0; i < 4; ++i) {
      Fraction t = g.reduced_tangle(20);
      while (!(t > F(2))) t = g.reduced_tangle(20);
      x.push_back(t);
    }
    const auto w = foliation_search(x);
    REQUIRE(w);
    REQUIRE(w->m == 2);
  }
}

TEST_CASE("external rules") {
  CHECK(external_rule(std::vector<Fraction>{F(3), F(3), F(3), F(2)}));
  CHECK(external_rule(std::vector<Fraction>{F(5), F(4), F(3, 2)}));  // q = 3 <= 4
  CHECK_FALSE(external_rule(std::vector<Fraction>{F(5), F(4), F(6, 5)}));  // q = 6 > 4
  CHECK_FALSE(external_rule(std::vector<Fraction>{F(5, 2), F(3), F(3)}));
  // (m²+1)/m, n, (m²+1)/(m²−m+1) with m = 2, n = 3: the 11n50 link.
  CHECK(external_rule(std::vector<Fraction>{F(5, 2), F(3), F(5, 3)}));
  CHECK(classify(L("M(-1; 5/2, 3, 5/3)"), {true}).rule == Rule::NQA_ExternalCited);
  CHECK(external_rule(std::vector<Fraction>{F(10, 3), F(4), F(10, 7)}));
}

TEST_CASE("classification is invariant under isotopy and mirroring") {
  test::Gen g(709);
  for (int k = 0; k < 10000; ++k) {
    const MontesinosLink l = g.link(3, 4, 12, 4);
    const Verdict v = classify(l);
    REQUIRE(classify(reduce(l)) == v);
    const std::size_t i = static_cast<std::size_t>(g.uniform(1, static_cast<long long>(l.p())));
    const FlypeSign s = l.tangle(i) > Fraction(0) ? FlypeSign::Positive : FlypeSign::Negative;
    REQUIRE(classify(flype(l, i, s)) == v);
    const Verdict m = classify(reflect(l));
    REQUIRE(m.status == v.status);
    REQUIRE(m.rule == mirror_rule(v.rule));
    if (v.status == Status::QA) REQUIRE_FALSE(determinant(l).is_zero());
  }
}

TEST_CASE("no QA/NQA collisions in a dense box") {
  // The full p = 3, numerator <= 12 sweep runs in the acceptance suite.
  test::Gen g(710);
  for (int k = 0; k < 20000; ++k) {
    const MontesinosLink l = g.reduced_link(static_cast<std::size_t>(g.uniform(3, 5)), 9, -6, 1);
    REQUIRE_NOTHROW(classify(l, {true}));
  }
}

}  // TEST_SUITE
