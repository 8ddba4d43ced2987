#include <catch2/catch_amalgamated.hpp>

#include "nilorbit/polynomial.hpp"

using nilorbit::Poly;
using nilorbit::Rational;

TEST_CASE("polynomial arithmetic over rationals") {
  Poly a = Poly::variable();
  Poly p = (Poly(1) + a) * (Poly(1) + a);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rational(1));
  CHECK(p.coeff(1) == Rational(2));
  CHECK(p.coeff(2) == Rational(1));

  Poly q = p - a * a - Rational(2) * a - Poly(1);
  CHECK(q.is_zero());
  CHECK(q.degree() == -1);

  Poly r = a * a * a - a + Poly(5) + Poly(2) * a * a * a;
  CHECK(r.degree() == 3);
  CHECK(r.coeff(3) == Rational(3));
}

TEST_CASE("evaluation uses exact arithmetic") {
  Poly a = Poly::variable();
  Poly p = Rational(2) * a * a * a - a + Poly(5);
  CHECK(p.eval(Rational(3, 2)) == Rational(41, 4));
  CHECK(p.eval(Rational(0)) == Rational(5));
  CHECK(p.eval(Rational(-1)) == Rational(4));
}

TEST_CASE("parity detection") {
  Poly a = Poly::variable();
  CHECK((a * a + Poly(1)).even_only());
  CHECK(Poly(7).even_only());
  CHECK(Poly().even_only());
  CHECK_FALSE((a * a * a).even_only());
  CHECK_FALSE((a * a + a).even_only());
}

TEST_CASE("reduction modulo a^2 - r") {
  Poly a = Poly::variable();

  // a^3 + 2a^2 - a + 1 with a^2 := 2 collapses to a + 5.
  Poly p = a * a * a + Rational(2) * a * a - a + Poly(1);
  Poly red = p.substitute_square(Rational(2));
  CHECK(red.degree() == 1);
  CHECK(red.coeff(0) == Rational(5));
  CHECK(red.coeff(1) == Rational(1));

  // 1 - a^2/2 vanishes exactly when a^2 = 2.
  Poly q = Poly(1) - (a * a) / Rational(2);
  CHECK(q.substitute_square(Rational(2)).is_zero());
  CHECK_FALSE(q.substitute_square(Rational(3)).is_zero());

  // 1 + a^2 vanishes at the imaginary parameter a^2 = -1.
  Poly s = Poly(1) + a * a;
  CHECK(s.substitute_square(Rational(-1)).is_zero());

  // Reduction agrees with evaluation whenever r is an honest square.
  Poly t = a * a * a * a - Rational(3) * a + Poly(2);
  Poly rt = t.substitute_square(Rational(9, 4));
  Rational direct = t.eval(Rational(3, 2));
  CHECK(rt.eval(Rational(3, 2)) == direct);
}

TEST_CASE("printing stays readable") {
  Poly a = Poly::variable();
  Poly p = (a * a) / Rational(2) - Poly(1);
  CHECK(p.to_string() == "1/2*a^2 + -1");
  CHECK(Poly().to_string() == "0");
}
