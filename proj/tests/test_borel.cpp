#include "support.hpp"

#include "borelcover/borel.hpp"
#include "borelcover/errors.hpp"
#include "borelcover/fixtures.hpp"
#include "borelcover/hilbert.hpp"
#include "borelcover/text.hpp"

#include <algorithm>

#include <doctest.h>

using namespace borelcover;
using fixtures::ideal;
using testing::Rng;

namespace {

std::vector<std::string> strings(const std::vector<MonomialIdeal>& list) {
  std::vector<std::string> out;
  for (const auto& J : list) {
    std::string s;
    for (const auto& g : J.basis()) s += (s.empty() ? "" : ",") + to_string(g);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("borel_leq agrees with partial sums") {
  Rng rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 4));
    const int d = static_cast<int>(rng.integer(0, 5));
    const Monomial a = rng.monomial(n, d);
    const Monomial b = rng.monomial(n, d);
    CHECK(borel_leq(a, b) == testing::borel_leq_partial_sums(a, b));
    // Borel order implies degrevlex order.
    if (borel_leq(a, b)) CHECK(degrevlex_cmp(b, a) >= 0);
  }
}

TEST_CASE("strong stability") {
  CHECK(is_strongly_stable(ideal(2, {"x2^2", "x2*x1", "x1^3"})));
  CHECK(is_strongly_stable(ideal(2, {"x2", "x1^4"})));
  CHECK_FALSE(is_strongly_stable(ideal(2, {"x1^2"})));
  CHECK_FALSE(is_strongly_stable(ideal(2, {"x2^2", "x1^3"})));
  CHECK(is_strongly_stable(MonomialIdeal::zero(2)));
}

TEST_CASE("enumeration in a single degree matches brute force") {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= (n == 3 ? 2 : 3); ++r) {
      const long N = count_monomials(n, r);
      for (long s = 1; s <= N; ++s) {
        const auto expected = testing::brute_force_borel_sets(n, r, static_cast<int>(s));
        const auto got = enumerate_borel_in_G(n, r, s);
        std::set<std::vector<Monomial>> got_sets;
        for (const auto& J : got) {
          CHECK(is_strongly_stable(J));
          CHECK(static_cast<long>(J.size()) == s);
          auto b = J.basis();
          std::sort(b.begin(), b.end(), DegrevlexGreater{});
          got_sets.insert(b);
        }
        CHECK(got_sets.size() == got.size());
        CHECK(got_sets == expected);
        CHECK(std::is_sorted(got.begin(), got.end(), canonical_less));
      }
    }
  }
}

TEST_CASE("enumeration node cap") {
  EnumerationOptions opts;
  opts.node_cap = 3;
  CHECK_THROWS_AS(enumerate_borel_in_G(2, 4, 11, opts), ScaleCapError);
}

TEST_CASE("saturated Borel ideals with a given Hilbert polynomial") {
  CHECK(strings(enumerate_borel_saturated(2, HilbertPoly::parse("4"))) ==
        std::vector<std::string>{"x2^2,x2*x1,x1^3", "x2,x1^4"});
  const auto seven = enumerate_borel_saturated(2, HilbertPoly::parse("7"));
  CHECK(seven.size() == 5);
  int prev = 0;
  for (const auto& J : seven) {
    CHECK(saturate(J) == J);
    CHECK(hilbert_polynomial(J) == HilbertPoly::parse("7"));
    CHECK(regularity(J) >= prev);
    prev = regularity(J);
  }
  CHECK(strings(enumerate_borel_saturated(3, HilbertPoly::parse("3*t"))) ==
        std::vector<std::string>{"x3,x2^3"});
}

TEST_CASE("saturation, truncation and regularity") {
  const auto J = ideal(2, {"x2^2", "x2*x1", "x1^3"});
  const auto J4 = truncate(J, 4);
  CHECK(J4.is_single_degree());
  CHECK(J4.min_degree() == 4);
  CHECK(saturate(J4) == J);
  CHECK(saturate(saturate(J4)) == saturate(J4));
  CHECK(saturate_general(J4) == J);
  CHECK(regularity(J) == 3);
  CHECK(regularity(ideal(2, {"x2", "x1^4"})) == 4);
  CHECK(rho(J) == 3);
  CHECK(rho(ideal(2, {"x2^2"})) == 0);
  CHECK(is_m_truncation(J4, 4));
  CHECK(is_truncation(J4));
  CHECK_FALSE(is_m_truncation(J4, 3));
  // Truncating below the generating degree changes nothing.
  CHECK(truncate(J, 0) == J);

  Rng rng(23);
  const auto ideals = enumerate_borel_saturated(2, HilbertPoly::parse("7"));
  for (const auto& I : ideals) {
    for (int m = regularity(I); m <= regularity(I) + 3; ++m) {
      const auto T = truncate(I, m);
      CHECK(saturate(T) == I);
      CHECK(hilbert_polynomial(T) == hilbert_polynomial(I));
      for (int t = m; t <= m + 2; ++t) CHECK(T.component(t) == I.component(t));
    }
  }
}

TEST_CASE("saturation of non-Borel monomial ideals") {
  CHECK(saturate_general(ideal(2, {"x2*x0", "x1*x0", "x0^2"})) == ideal(2, {"x0"}));
  CHECK(saturate_general(ideal(2, {"x2*x0", "x1*x0"})) == ideal(2, {"x2*x0", "x1*x0"}));
  CHECK(saturate_general(ideal(2, {"x0^2", "x0*x1", "x1^2", "x0*x2"})) == ideal(2, {"x0", "x1^2"}));
  CHECK(saturate_general(ideal(2, {"x0", "x1", "x2"})).is_unit());
}

TEST_CASE("star decomposition") {
  const auto J = ideal(2, {"x2^2", "x2*x1", "x1^3"});
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Monomial g = rng.monomial(2, static_cast<int>(rng.integer(2, 6)));
    if (!J.contains(g)) {
      CHECK_THROWS_AS(star_decompose(g, J), DomainError);
      continue;
    }
    const auto d = star_decompose(g, J);
    CHECK(d.eta * d.alpha == g);
    CHECK(J.is_generator(d.alpha));
    // Every variable of eta is at most the smallest variable of alpha.
    if (d.eta.degree() > 0) CHECK(d.eta.max_var() <= d.alpha.min_var());
  }
}

TEST_CASE("chart ideal data") {
  const auto c = make_chart_ideal(truncate(ideal(2, {"x2^2", "x2*x1", "x1^3"}), 4));
  CHECK(c.r == 4);
  CHECK(c.reg_sat == 3);
  CHECK(c.rho == 3);
  CHECK(c.sat == ideal(2, {"x2^2", "x2*x1", "x1^3"}));
}
