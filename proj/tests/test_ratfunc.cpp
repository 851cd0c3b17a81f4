#include <doctest.h>

#include "helpers.hpp"

using namespace ogpush;
using testutil::error_code;
using testutil::F;
using testutil::P;

TEST_CASE("adding zero") {
  const auto a = F("t1", {"t1-z1"}, 1);
  CHECK(a + FactoredRatFunc(MultiPoly(1)) == a);
}

TEST_CASE("multiplication cancels a matching factor") {
  const auto a = F("1", {"t1-z1"}, 1);
  const auto b = FactoredRatFunc(P("t1-z1", 1));
  const auto prod = a * b;
  CHECK(prod.is_polynomial());
  CHECK(prod.numerator() == P("1", 1));
}

TEST_CASE("the two plus-component localization terms sum to 2*t1*t2") {
  const auto first = F("t1*t2*(t1+t2)", {"t1+t2"}, 2);
  const auto second = F("t1*t2*(-t1-t2)", {"-t1-t2"}, 2);
  const std::vector<FactoredRatFunc> terms{first, second};
  CHECK(ratfunc_to_poly(ratfunc_sum(2, terms)) == P("2*t1*t2", 2));
  CHECK(ratfunc_to_poly(first + second) == P("2*t1*t2", 2));
}

TEST_CASE("conversion to a polynomial") {
  CHECK(ratfunc_to_poly(FactoredRatFunc(P("2*t1*t2", 2))) == P("2*t1*t2", 2));
  CHECK(ratfunc_to_poly(F("t1^2-z1^2", {"t1-z1"}, 1)) == P("t1+z1", 1));
  CHECK(error_code([] { ratfunc_to_poly(F("t1+t2", {"t1-t2"}, 2)); }) == ErrorCode::NotPolynomial);
}

TEST_CASE("factors are normalized and merged") {
  const auto f = F("1", {"2*t1-2*t2", "t1-t2", "t2-t1"}, 2);
  REQUIRE(f.denominator_factors().size() == 1);
  CHECK(f.denominator_factors()[0].second == 3);
  // 1 / (2 * (t1-t2) * (t1-t2) * (-(t1-t2))) = -1/2 / (t1-t2)^3
  CHECK(f == F("-1/2", {"t1-t2", "t1-t2", "t1-t2"}, 2));
  CHECK(F("3", {"5"}, 1).numerator() == P("3/5", 1));
}

TEST_CASE("equality is semantic") {
  CHECK(F("t1+t2", {"t1^2-t2^2"}, 2) == F("1", {"t1-t2"}, 2));
  CHECK_FALSE(F("1", {"t1-t2"}, 2) == F("1", {"t1+t2"}, 2));
}

TEST_CASE("subtraction and negation") {
  const auto a = F("1", {"z1-t1"}, 1);
  const auto b = F("1", {"z1+t1"}, 1);
  CHECK(a - b == F("2*t1", {"z1^2-t1^2"}, 1));
  CHECK(-a + a == FactoredRatFunc(MultiPoly(1)));
  CHECK(a * Rat(2) == F("2", {"z1-t1"}, 1));
}

TEST_CASE("substitution that hits a pole is reported") {
  const auto f = F("z1", {"z1-t1"}, 1);
  CHECK(error_code([&] { ratfunc_substitute(f, {{z(1), P("t1", 1)}}); }) == ErrorCode::NotSimplePole);
  CHECK(ratfunc_substitute(f, {{z(1), P("2*t1", 1)}}) == FactoredRatFunc(P("2", 1)));
}

TEST_CASE("zero denominator factor is rejected") {
  CHECK(error_code([] { F("1", {"0"}, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("random sums agree with pairwise addition") {
  std::mt19937 rng(5);
  const std::vector<std::string> pool{"t1-t2", "t1+t2", "z1-t1", "z1+t2", "t1"};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<FactoredRatFunc> terms;
    FactoredRatFunc running(MultiPoly(2));
    for (int k = 0; k < 4; ++k) {
      std::vector<MultiPoly> den;
      for (const auto& s : pool) {
        if (rng() % 3 == 0) den.push_back(P(s, 2));
      }
      terms.emplace_back(testutil::random_poly(rng, 2, 3, 2), den);
      running = running + terms.back();
    }
    CHECK(ratfunc_sum(2, terms) == running);
  }
}
