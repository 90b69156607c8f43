#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "hill/errors.hpp"
#include "hill/potential.hpp"

using hill::cdouble;
using hill::FourierPotential;

namespace {

FourierPotential make(std::initializer_list<std::pair<std::int64_t, cdouble>> cs) {
  FourierPotential::coeff_map m;
  for (const auto& [k, a] : cs) m.emplace(k, a);
  return FourierPotential(std::move(m));
}

const cdouble I{0.0, 1.0};

// Dyadic random coefficients: products with small integers stay exact, so
// structural equality of algebraically equal results is meaningful.
FourierPotential random_potential(std::mt19937& rng, bool gasymov) {
  std::uniform_int_distribution<int> nmodes(1, 4);
  std::uniform_int_distribution<std::int64_t> mode(gasymov ? 1 : -5, 5);
  std::uniform_int_distribution<int> ticks(-256, 256);
  FourierPotential::coeff_map m;
  const int n = nmodes(rng);
  for (int i = 0; i < n; ++i) {
    std::int64_t k = mode(rng);
    if (gasymov && k < 1) k = 1;
    m[k] = cdouble{ticks(rng) / 128.0, ticks(rng) / 128.0};
  }
  return FourierPotential(std::move(m));
}

}  // namespace

TEST_CASE("canonical form drops exact zeros") {
  const auto v = make({{1, 1.0}, {2, 0.0}, {-3, cdouble{0.0, 0.0}}});
  CHECK(v.mode_count() == 1);
  CHECK(v.coeff(1) == cdouble{1.0, 0.0});
  CHECK(v.coeff(2) == cdouble{0.0, 0.0});
  CHECK(v == make({{1, 1.0}}));
  CHECK(FourierPotential{}.is_zero());
}

TEST_CASE("non-finite coefficients are rejected") {
  FourierPotential::coeff_map m;
  m[1] = cdouble{std::numeric_limits<double>::infinity(), 0.0};
  CHECK_THROWS_AS(FourierPotential(std::move(m)), hill::InvalidArgument);
}

TEST_CASE("evaluate") {
  CHECK(std::abs(make({{1, 1.0}}).evaluate(0.0) - 1.0) < 1e-15);
  CHECK(std::abs(make({{1, 1.0}}).evaluate(M_PI) - (-1.0)) < 1e-15);
  // 2 cos x at pi/2
  CHECK(std::abs(make({{1, 1.0}, {-1, 1.0}}).evaluate(M_PI / 2)) < 1e-15);
}

TEST_CASE("scale") {
  CHECK(scale(make({{1, 1.0}}), 3) == make({{3, 9.0}}));
  CHECK(scale(make({{1, 1.0}}), 1) == make({{1, 1.0}}));
  CHECK(scale(make({{2, 0.5}}), 3) == make({{6, 4.5}}));
  CHECK_THROWS_AS(scale(make({{1, 1.0}}), 0), hill::InvalidArgument);
  CHECK_THROWS_AS(scale(make({{1, 1.0}}), -2), hill::InvalidArgument);
}

TEST_CASE("shift") {
  CHECK(shift(make({{1, 1.0}}), 2.0) == make({{0, 2.0}, {1, 1.0}}));
  CHECK(shift(make({{0, 1.0}}), -1.0).is_zero());
  CHECK(shift(FourierPotential{}, I) == make({{0, I}}));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(make({{1, 1.0}})) == make({{-1, 1.0}}));
  CHECK(conjugate(make({{1, I}})) == make({{-1, -I}}));
  const auto two_cos = make({{1, 1.0}, {-1, 1.0}});
  CHECK(conjugate(two_cos) == two_cos);
}

TEST_CASE("homotopy_member") {
  CHECK(homotopy_member(make({{1, 1.0}}), 0.0).is_zero());
  CHECK(homotopy_member(make({{1, 1.0}}), 1.0) == make({{1, 1.0}}));
  CHECK(homotopy_member(make({{1, 2.0}}), 0.5) == make({{1, 1.0}}));
  CHECK_THROWS_AS(homotopy_member(make({{1, 1.0}}), -0.1), hill::InvalidArgument);
  CHECK_THROWS_AS(homotopy_member(make({{1, 1.0}}), 1.5), hill::InvalidArgument);
}

TEST_CASE("gasymov class predicate") {
  CHECK(FourierPotential{}.is_gasymov_class());
  CHECK(make({{1, 1.0}, {7, 2.0}}).is_gasymov_class());
  CHECK_FALSE(make({{0, 1.0}}).is_gasymov_class());
  CHECK_FALSE(make({{1, 1.0}, {-1, 1.0}}).is_gasymov_class());
}

TEST_CASE("real-valuedness predicate") {
  CHECK(FourierPotential{}.is_real());
  CHECK(make({{1, 1.0}, {-1, 1.0}}).is_real());
  CHECK(make({{0, 1.5}}).is_real());
  CHECK(make({{1, I}, {-1, -I}}).is_real());  // -2 sin x
  CHECK_FALSE(make({{1, 1.0}}).is_real());
  CHECK_FALSE(make({{0, I}}).is_real());
}

TEST_CASE("load: schema example") {
  const auto f = hill::parse_potential(R"({"coeffs":[{"k":1,"re":1,"im":0}]})");
  CHECK(f.potential == make({{1, 1.0}}));
  CHECK(f.label.empty());
}

TEST_CASE("load: empty coeffs is the zero potential") {
  CHECK(hill::parse_potential(R"({"coeffs":[]})").potential.is_zero());
}

TEST_CASE("load: label is picked up") {
  const auto f = hill::parse_potential(R"({"coeffs":[],"label":"free"})");
  CHECK(f.label == "free");
}

TEST_CASE("load: malformed documents") {
  CHECK_THROWS_AS(hill::parse_potential("not json at all"), hill::ParseError);
  CHECK_THROWS_AS(hill::parse_potential("{}"), hill::ParseError);
  CHECK_THROWS_AS(hill::parse_potential(R"({"coeffs":42})"), hill::ParseError);
  // non-integer mode
  CHECK_THROWS_AS(hill::parse_potential(R"({"coeffs":[{"k":0.5,"re":1,"im":0}]})"),
                  hill::ParseError);
  // missing / non-numeric parts
  CHECK_THROWS_AS(hill::parse_potential(R"({"coeffs":[{"k":1,"re":"x","im":0}]})"),
                  hill::ParseError);
  CHECK_THROWS_AS(hill::parse_potential(R"({"coeffs":[{"k":1,"im":0}]})"), hill::ParseError);
  // duplicate mode
  CHECK_THROWS_AS(
      hill::parse_potential(R"({"coeffs":[{"k":1,"re":1,"im":0},{"k":1,"re":2,"im":0}]})"),
      hill::ParseError);
}

TEST_CASE("load: missing file") {
  CHECK_THROWS_AS(hill::load_potential("/nonexistent/path/v.json"), hill::ParseError);
}

TEST_CASE("property: scale(scale(V,m),n) == scale(V,mn)") {
  std::mt19937 rng(12345);
  for (int rep = 0; rep < 50; ++rep) {
    const auto v = random_potential(rng, false);
    for (std::int64_t m : {1, 2, 3})
      for (std::int64_t n : {1, 2, 5}) CHECK(scale(scale(v, m), n) == scale(v, m * n));
  }
}

TEST_CASE("property: conjugate is an involution") {
  std::mt19937 rng(777);
  for (int rep = 0; rep < 50; ++rep) {
    const auto v = random_potential(rng, false);
    CHECK(conjugate(conjugate(v)) == v);
  }
}

TEST_CASE("property: scaling preserves the gasymov class") {
  std::mt19937 rng(424242);
  for (int rep = 0; rep < 50; ++rep) {
    const auto v = random_potential(rng, true);
    REQUIRE(v.is_gasymov_class());
    CHECK(scale(v, 2).is_gasymov_class());
    CHECK(scale(v, 7).is_gasymov_class());
  }
}

TEST_CASE("property: evaluate(shift(V,c),x) == evaluate(V,x) + c") {
  std::mt19937 rng(999);
  std::uniform_real_distribution<double> xs(-10.0, 10.0);
  for (int rep = 0; rep < 20; ++rep) {
    const auto v = random_potential(rng, false);
    const cdouble c{xs(rng), xs(rng)};
    const auto shifted = shift(v, c);
    for (int i = 0; i < 5; ++i) {
      const double x = xs(rng);
      CHECK(std::abs(shifted.evaluate(x) - (v.evaluate(x) + c)) < 1e-12);
    }
  }
}
