#include <catch2/catch_amalgamated.hpp>

#include "nilorbit/rational.hpp"

using nilorbit::Rational;

TEST_CASE("rationals normalize on construction") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-10, -5) == Rational(2));
  CHECK(Rational(21, 14).num() == 3);
  CHECK(Rational(21, 14).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(2, 3) + Rational(1, 6) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
  CHECK(Rational(5, 8) / Rational(-15, 4) == Rational(-1, 6));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

  Rational acc(0);
  for (int k = 1; k <= 6; ++k) acc += Rational(1, k) - Rational(1, k + 1);
  CHECK(acc == Rational(6, 7));
}

TEST_CASE("rational comparisons order by value") {
  CHECK(Rational(-3, 2) < Rational(-1, 3));
  CHECK(Rational(-1, 3) < Rational(0));
  CHECK(Rational(2, 5) < Rational(1, 2));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(4, 6) == Rational(2, 3));
}

TEST_CASE("rational predicates and printing") {
  CHECK(Rational(0).is_zero());
  CHECK_FALSE(Rational(1, 9).is_zero());
  CHECK(Rational(-8, 4).is_integer());
  CHECK_FALSE(Rational(1, 2).is_integer());
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational(5).to_string() == "5");
}

TEST_CASE("rational overflow is detected, not wrapped") {
  Rational big(INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK(big - big == Rational(0));
}
