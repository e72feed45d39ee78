#include <doctest.h>

#include <algorithm>

#include "mqa/diagram.hpp"
#include "mqa/montesinos.hpp"
#include "support.hpp"

using namespace mqa;
using mqa::test::F;
using mqa::test::L;
using mqa::test::throws_with;

namespace {

// Conway's fraction of e + t_1 0 + ... + t_p 0, computed as a sum of the
// reciprocals; the determinant is |numerator of the tangle| times ∏α / ∏α.
Fraction classifying_by_definition(const MontesinosLink& l) {
  Fraction sum(l.e());
  for (const auto& t : l.tangles()) sum += t.reciprocal();
  return sum;
}

std::vector<Fraction> rotated(std::vector<Fraction> v, std::size_t k) {
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return v;
}

}  // namespace

TEST_SUITE("montesinos") {

TEST_CASE("normalize_input") {
  const MontesinosLink a = normalize_input(2, {F(3, 2), F(1), F(7, 4)});
  CHECK(a.e() == 3);
  CHECK(a.tangles() == std::vector<Fraction>{F(3, 2), F(7, 4)});
  CHECK(determinant(a) == det_oracle(standard_diagram(TangleSum{2, {F(3, 2), F(1), F(7, 4)}})));
  CHECK(normalize_input(0, {F(5, 2), F(3), F(5, 3)}).tangles().size() == 3);
  CHECK(throws_with([] { normalize_input(0, {F(0), F(2)}); }, "zero tangle"));
  CHECK(throws_with([] { normalize_input(0, {F(1), F(-1)}); }, "not a Montesinos link"));
  // 1/n tangles are twist regions too.
  const MontesinosLink b = normalize_input(0, {F(1, 3), F(5, 2), F(-1, 2), F(7, 3)});
  CHECK(b.e() == 1);
  CHECK(b.p() == 2);
  CHECK(b.tangle(1) == F(5, 2));
}

TEST_CASE("epsilon") {
  CHECK(epsilon(L("M(3; 31/7, 5/16, -29/9)")) == 5);
  CHECK(epsilon(L("M(-1; 3/2, 4/3, 7/4)")) == -1);
  CHECK(epsilon(L("M(0; 2, 7, -4)")) == -1);
}

TEST_CASE("reduce") {
  CHECK(reduce(L("M(3; 31/7, 5/16, -29/9)")) == L("M(5; 31/7, 5/1, 29/20)"));
  CHECK(reduce(L("M(-1; 3/2, 4/3, 7/4)")) == L("M(-1; 3/2, 4/3, 7/4)"));
  CHECK(is_reduced(L("M(-1; 3/2, 4/3, 7/4)")));
  CHECK(reduce(L("M(0; 2, 7, -4)")) == L("M(-1; 2, 7, 4/3)"));
  CHECK_FALSE(is_reduced(L("M(0; 2, 7, -4)")));
}

TEST_CASE("flype") {
  CHECK(flype(L("M(-1; 3/2, 4/3, 7/4)"), 1, FlypeSign::Positive) == L("M(0; -3/1, 4/3, 7/4)"));
  CHECK(flype(L("M(0; 2, 7, -4)"), 3, FlypeSign::Negative) == L("M(-1; 2, 7, 4/3)"));
  const MontesinosLink x = L("M(-1; 3/2, 4/3, 7/4)");
  CHECK(flype(flype(x, 1, FlypeSign::Positive), 1, FlypeSign::Negative) == x);
  CHECK(throws_with([&] { flype(x, 1, FlypeSign::Negative); }, "flype sign does not match"));
  CHECK(throws_with([&] { flype(x, 4, FlypeSign::Positive); }, "out of range"));
  CHECK(throws_with([&] { flype(x, 0, FlypeSign::Positive); }, "out of range"));
}

TEST_CASE("reflect and rotate") {
  const MontesinosLink r = reflect(L("M(3; 31/7, 5/16, -29/9)"));
  CHECK(r == L("M(-3; -31/7, -5/16, 29/9)"));
  CHECK(epsilon(r) == -8);
  CHECK(rotate(L("M(0; 2, 3, 5)"), 1) == L("M(0; 3, 5, 2)"));
  CHECK(rotate(L("M(0; 2, 3, 5)"), 3) == L("M(0; 2, 3, 5)"));
}

TEST_CASE("determinant") {
  CHECK(determinant(L("M(3; 31/7, 5/16, -29/9)")) == 27489);
  CHECK(determinant(L("M(0; 2, 7, -4)")) == 22);
  CHECK(determinant(L("M(-1; 2, 7, 4/3)")) == 22);
  CHECK(determinant(L("M(-1; 5/2, 3, 5/3)")) == 25);
  CHECK(determinant(L("M(0; 2, 3)")) == 5);
  CHECK(determinant(L("M(1; 2, 2)")) == 8);
  test::Gen g(606);
  for (int k = 0; k < 2000; ++k) {
    const Fraction r = g.tangle(50);
    REQUIRE(determinant(normalize_input(0, {r, -r})).is_zero());
  }
}

TEST_CASE("determinant agrees with the fraction definition") {
  test::Gen g(607);
  for (int k = 0; k < 5000; ++k) {
    const MontesinosLink l = g.link(1, 6, 30, 5);
    Integer prod = 1;
    for (const auto& t : l.tangles()) prod *= t.num();
    const Fraction v = classifying_by_definition(l) * Fraction(prod);
    REQUIRE(v.is_integer());
    REQUIRE(abs(v.num()) == determinant(l));
    REQUIRE(classifying_number(l) == classifying_by_definition(l));
  }
}

TEST_CASE("link invariants under reduce, flype, reflect") {
  test::Gen g(608);
  for (int k = 0; k < 10000; ++k) {
    const MontesinosLink l = g.link(3, 5, 25, 4);
    const Integer eps = epsilon(l);
    const Integer det = determinant(l);
    const MontesinosLink red = reduce(l);
    REQUIRE(epsilon(red) == eps);
    REQUIRE(reduce(red) == red);
    REQUIRE(red.e() == eps);
    REQUIRE(determinant(red) == det);
    REQUIRE(equivalent(l, red));
    const std::size_t i = static_cast<std::size_t>(g.uniform(1, static_cast<long long>(l.p())));
    const FlypeSign s = l.tangle(i) > Fraction(0) ? FlypeSign::Positive : FlypeSign::Negative;
    const MontesinosLink fl = flype(l, i, s);
    REQUIRE(epsilon(fl) == eps);
    REQUIRE(determinant(fl) == det);
    REQUIRE(equivalent(l, fl));
    // The opposite flype is legal when the sign flipped, always so on reduced forms.
    if (l.tangle(i).abs() > Fraction(1)) {
      REQUIRE(flype(fl, i, s == FlypeSign::Positive ? FlypeSign::Negative : FlypeSign::Positive) == l);
    }
    REQUIRE(flype(flype(red, i, FlypeSign::Positive), i, FlypeSign::Negative) == red);
    const MontesinosLink mirror = reflect(l);
    REQUIRE(epsilon(mirror) == -eps - static_cast<long long>(l.p()));
    REQUIRE(determinant(mirror) == det);
    const CanonicalForm c = canonical(l);
    Fraction sum(c.epsilon);
    for (const auto& x : c.cycle) sum += x;
    REQUIRE(sum == classifying_by_definition(l));
  }
}

TEST_CASE("canonical and equivalent") {
  CHECK(canonical(L("M(0; 2, 7, -4)")) == canonical(L("M(0; 2, -7/6, 4/3)")));
  CHECK(equivalent(L("M(0; 2, 7, -4)"), L("M(-1; 2, 7, 4/3)")));
  CHECK(equivalent(L("M(0; 2, 7, -4)"), L("M(0; 2, -7/6, 4/3)")));
  CHECK_FALSE(canonical(L("M(0; 2, 7, -4)")) == canonical(L("M(0; 2, 7, 4)")));
  CHECK_FALSE(equivalent(L("M(0; 2, 7, -4)"), L("M(0; 2, 7, 4)")));
  const std::vector<Fraction> abc{F(5, 2), F(3), F(5, 3)};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(canonical(normalize_input(-1, rotated(abc, k))) == canonical(normalize_input(-1, abc)));
    auto rev = rotated(abc, k);
    std::reverse(rev.begin(), rev.end());
    CHECK(equivalent(normalize_input(-1, rev), normalize_input(-1, abc)));
  }
  // A dihedral group is smaller than the symmetric one: these are distinct classes.
  CHECK_FALSE(equivalent(L("M(-1; 3/2, 5/2, 7/2, 9/2)"), L("M(-1; 3/2, 7/2, 5/2, 9/2)")));
  CHECK(throws_with([] { canonical(L("M(0; 2, 3)")); }, "use to_rational"));
  CHECK(throws_with([] { equivalent(L("M(0; 2, 3)"), L("M(0; 2, 3)")); }, "use to_rational"));
}

TEST_CASE("least dihedral image") {
  const std::vector<Fraction> seq{F(1, 2), F(1, 3), F(2, 3), F(1, 3)};
  const DihedralImage im = least_dihedral_image(seq);
  const std::vector<Fraction> best = dihedral_apply(seq, im);
  CHECK(best == std::vector<Fraction>{F(1, 3), F(1, 2), F(1, 3), F(2, 3)});
  test::Gen g(609);
  for (int k = 0; k < 2000; ++k) {
    std::vector<Fraction> v;
    const long long n = g.uniform(1, 6);
    for (long long i = 0; i < n; ++i) v.push_back(F(1, g.uniform(2, 4)));
    const auto least = dihedral_apply(v, least_dihedral_image(v));
    for (std::size_t r = 0; r < v.size(); ++r) {
      for (bool rev : {false, true}) REQUIRE_FALSE(dihedral_apply(v, {r, rev}) < least);
    }
  }
}

TEST_CASE("to_rational") {
  const RationalReduction a = to_rational(L("M(0; 2, 3)"));
  CHECK(a.fraction == F(5));
  CHECK(a.closure == Closure::Horizontal);
  const RationalReduction b = to_rational(L("M(1; 2, 2)"));
  CHECK(b.fraction == F(8, 3));
  CHECK(b.closure == Closure::Horizontal);
  // [e, a_k..a_1] = [0, 2, 2]; the link has determinant 2.
  CHECK(to_rational(L("M(0; 5/2)")).fraction == F(2, 5));
  CHECK(determinant(L("M(0; 5/2)")) == 2);
  CHECK(throws_with([] { to_rational(L("M(0; 2, 3, 5)")); }, "to_rational requires p <= 2"));
}

TEST_CASE("to_rational numerator is the determinant, arbitrated by the oracle") {
  test::Gen g(610);
  int checked = 0;
  for (int k = 0; k < 3000; ++k) {
    const MontesinosLink l = g.link(1, 2, 12, 3);
    RationalReduction r;
    try {
      r = to_rational(l);
    } catch (const Error& e) {
      REQUIRE(std::string(e.what()).find("divergent") != std::string::npos);
      continue;
    }
    REQUIRE(abs(r.fraction.num()) == determinant(l));
    const PlanarDiagram d = standard_diagram(l);
    if (d.crossing_count() <= 24) {
      REQUIRE(det_oracle(d, 24) == determinant(l));
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("diagram_class") {
  CHECK(diagram_class(L("M(3; 31/7, 5/16, -29/9)")) == DiagramClass::Alternating);
  CHECK(diagram_class(normalize_input(-2, {F(2), F(2), F(2), F(2), F(2)})) == DiagramClass::AdequateNonAlternating);
  CHECK(diagram_class(L("M(-1; 2, 3, 5)")) == DiagramClass::Boundary);
  CHECK(diagram_class(L("M(-2; 2, 3, 5)")) == DiagramClass::Boundary);
  CHECK(diagram_class(L("M(-4; 2, 3, 5)")) == DiagramClass::Alternating);
  CHECK(throws_with([] { diagram_class(L("M(0; 2, 3)")); }, "rational links are alternating"));
}

}  // TEST_SUITE
