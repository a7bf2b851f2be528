#include "support.hpp"

#include "borelcover/borel.hpp"
#include "borelcover/errors.hpp"
#include "borelcover/fixtures.hpp"
#include "borelcover/hilbert.hpp"

#include <doctest.h>

using namespace borelcover;
using testing::Rng;

namespace {

// Binomial C(a, b) with C(a, b) = 0 for a < b, computed directly.
long binom(long a, long b) {
  if (b < 0 || a < b) return 0;
  long acc = 1;
  for (long i = 1; i <= b; ++i) acc = acc * (a - b + i) / i;
  return acc;
}

}  // namespace

TEST_CASE("HilbertPoly parse, print and evaluate") {
  const HilbertPoly p = HilbertPoly::parse("2*t+3");
  CHECK(p.degree() == 1);
  CHECK(p.at(0) == 3);
  CHECK(p.at(5) == 13);
  CHECK(p.to_string() == "2*t+3");
  CHECK(HilbertPoly::parse("7t-5").to_string() == "7*t-5");
  CHECK(HilbertPoly::parse("4").at(100) == 4);
  CHECK(HilbertPoly::parse("t^2+1").at(3) == 10);
  CHECK(HilbertPoly::parse(HilbertPoly::parse("t^2+2*t-1").to_string()) == HilbertPoly::parse("t^2+2*t-1"));
  CHECK_THROWS_AS(HilbertPoly::parse("2*s+1"), ParseError);
  CHECK_THROWS_AS(HilbertPoly::from_coefficients({Rational(0), Rational(1, 2)}), DomainError);
  // t(t+1)/2 is integer valued even with fractional coefficients.
  CHECK(HilbertPoly::from_coefficients({Rational(0), Rational(1, 2), Rational(1, 2)}).at(4) == 10);
}

TEST_CASE("Hilbert function matches a divisibility count") {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 3));
    std::vector<Monomial> gens;
    for (int k = 0; k < rng.integer(1, 4); ++k) gens.push_back(rng.monomial(n, static_cast<int>(rng.integer(1, 4))));
    const MonomialIdeal J(n, gens);
    for (int t = 0; t <= 6; ++t) CHECK(hilbert_function(J, t) == testing::count_outside(J, t));
  }
}

TEST_CASE("Hilbert polynomial equals the Hilbert function past the regularity") {
  const std::vector<MonomialIdeal> ideals = {
      fixtures::ideal(2, {"x2^2", "x2*x1", "x1^3"}),
      fixtures::ideal(2, {"x2", "x1^4"}),
      fixtures::ideal(3, {"x3", "x2^3"}),
      fixtures::ideal(3, {"x3^2", "x3*x2", "x2^2"}),
      fixtures::ideal(3, {"x3", "x2^2", "x2*x1^2"}),
  };
  const std::vector<std::string> expected = {"4", "4", "3*t", "3*t+1", "t+3"};
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const auto& J = ideals[i];
    REQUIRE(is_strongly_stable(J));
    const HilbertPoly hp = hilbert_polynomial(J);
    CHECK(hp.to_string() == expected[i]);
    const int reg = regularity(J);
    for (int t = reg; t <= reg + J.n() + 3; ++t) CHECK(hilbert_function(J, t) == hp.at(t));
  }
}

TEST_CASE("Hilbert polynomial of non-Borel monomial ideals") {
  // x1*x2 in P^2 is two lines: 2t + 1.
  CHECK(hilbert_polynomial(fixtures::ideal(2, {"x2*x1"})).to_string() == "2*t+1");
  // Complete intersection of a line and a conic in P^2: two points.
  CHECK(hilbert_polynomial(fixtures::ideal(2, {"x0", "x1^2"})).to_string() == "2");
  CHECK(hilbert_polynomial(fixtures::ideal(2, {"x0", "x1", "x2"})).is_zero());
}

TEST_CASE("Macaulay representation reconstructs h") {
  for (long h = 1; h <= 60; ++h) {
    for (long t = 1; t <= 5; ++t) {
      long sum = 0;
      long prev_k = 1L << 30;
      for (auto [k, i] : macaulay_representation(h, t)) {
        CHECK(k < prev_k);
        CHECK(k >= i);
        prev_k = k;
        sum += binom(k, i);
      }
      CHECK(sum == h);
      long growth = 0;
      for (auto [k, i] : macaulay_representation(h, t)) growth += binom(k + 1, i + 1);
      CHECK(macaulay_growth(h, t) == growth);
    }
  }
}

TEST_CASE("Gotzmann numbers and representations") {
  CHECK(gotzmann_number(HilbertPoly::parse("4"), 2) == 4);
  CHECK(gotzmann_number(HilbertPoly::parse("7"), 2) == 7);
  CHECK(gotzmann_number(HilbertPoly::parse("3*t"), 3) == 3);
  CHECK(gotzmann_number(HilbertPoly::parse("2*t+1"), 2) == 2);
  CHECK(gotzmann_number(HilbertPoly::parse("7*t-5"), 3) == 16);
  CHECK_THROWS_AS(gotzmann_number(HilbertPoly::parse("t^2"), 2), DomainError);
  CHECK_THROWS_AS(gotzmann_number(HilbertPoly::parse("-1"), 2), DomainError);

  // Rebuild p from the representation, independently of the library's evaluator.
  for (const char* text : {"4", "3*t", "2*t+2", "7*t-5", "3*t+1", "1/2*t^2+3/2*t+1"}) {
    const HilbertPoly p = HilbertPoly::from_coefficients(HilbertPoly::parse(text).coefficients());
    const auto a = gotzmann_representation(p, 3);
    CHECK(static_cast<int>(a.size()) == gotzmann_number(p, 3));
    for (long t = 0; t <= 8; ++t) {
      long sum = 0;
      for (std::size_t i = 1; i <= a.size(); ++i) sum += binom(t + a[i - 1] - static_cast<long>(i) + 1, a[i - 1]);
      if (t >= static_cast<long>(a.size())) CHECK(sum == p.at(t));
    }
  }
}

TEST_CASE("persistence recovers the Hilbert polynomial of a Borel ideal") {
  const auto J = fixtures::ideal(3, {"x3^2", "x3*x2", "x2^2"});
  const auto res = hilbert_polynomial_by_persistence([&](int t) { return hilbert_function(J, t); }, 2);
  CHECK(res.polynomial == hilbert_polynomial(J));
  CHECK(res.degree >= 2);
}

TEST_CASE("chart constants") {
  const ChartConstants c = chart_constants(HilbertPoly::parse("4"), 2);
  CHECK(c.r == 4);
  CHECK(c.N_r == 15);
  CHECK(c.s == 11);
  CHECK(c.s_next == 17);
  CHECK(c.D == 44);
  CHECK(ambient_dimension(3, 2) == 10);
}
