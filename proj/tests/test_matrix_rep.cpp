#include <catch2/catch_amalgamated.hpp>

#include "nilorbit/matrix_rep.hpp"
#include "nilorbit/polynomial.hpp"

using namespace nilorbit;

TEST_CASE("matrix sizes per family") {
  CHECK(algebra_matrix_size(RootSystemType(Family::A, 2)) == 3);
  CHECK(algebra_matrix_size(RootSystemType(Family::B, 2)) == 5);
  CHECK(algebra_matrix_size(RootSystemType(Family::C, 3)) == 6);
  CHECK(algebra_matrix_size(RootSystemType(Family::D, 3)) == 6);
}

TEST_CASE("orthogonal root vectors occupy the documented entries") {
  RootSystemType b2(Family::B, 2);

  QMatrix x = root_vector(b2, Root::diff(2, 1, 2));
  CHECK(x.at(0, 1) == Rational(1));
  CHECK(x.at(3, 4) == Rational(-1));

  QMatrix y = root_vector(b2, Root::sum(2, 1, 2));
  CHECK(y.at(0, 3) == Rational(1));
  CHECK(y.at(1, 4) == Rational(-1));

  QMatrix z = root_vector(b2, Root::single(2, 2));
  CHECK(z.at(0, 2) == Rational(1));
  CHECK(z.at(2, 4) == Rational(-1));

  QMatrix w = root_vector(b2, Root::single(2, 1));
  CHECK(w.at(1, 2) == Rational(1));
  CHECK(w.at(2, 3) == Rational(-1));

  RootSystemType c2(Family::C, 2);
  CHECK(root_vector(c2, Root::twice(2, 1)).at(1, 2) == Rational(1));
  CHECK(root_vector(c2, Root::twice(2, 2)).at(0, 3) == Rational(1));
  QMatrix cs = root_vector(c2, Root::sum(2, 1, 2));
  CHECK(cs.at(0, 2) == Rational(1));
  CHECK(cs.at(1, 3) == Rational(1));

  CHECK_THROWS_AS(root_vector(c2, Root::single(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(root_vector(b2, Root({2, 1})), std::invalid_argument);
}

TEST_CASE("every root vector satisfies the defining relations") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    RootSystemType t(f, f == Family::D ? 3 : 2);
    for (const Root& r : positive_roots(t)) {
      CHECK(is_in_algebra(t, root_vector(t, r)));
      CHECK(is_in_algebra(t, root_vector(t, -r)));
      CHECK(is_in_algebra(t, bracket(root_vector(t, r), root_vector(t, -r))));
    }
    for (const QMatrix& h : cartan_basis(t)) CHECK(is_in_algebra(t, h));
  }
}

TEST_CASE("cartan brackets recover the root coordinates") {
  // [H_p, X_r] = lambda X_r where lambda reads one coordinate of r (two
  // adjacent ones in the linear family).
  for (Family f : {Family::B, Family::C, Family::D}) {
    RootSystemType t(f, 3);
    int n = t.rank;
    std::vector<QMatrix> hs = cartan_basis(t);
    for (const Root& r : positive_roots(t)) {
      QMatrix x = root_vector(t, r);
      for (int p = 1; p <= n; ++p) {
        Rational lam(r.coeff(n + 1 - p));
        CHECK(bracket(hs[static_cast<size_t>(p - 1)], x) == x * lam);
      }
    }
  }
  RootSystemType a2(Family::A, 2);
  int N = 3;
  std::vector<QMatrix> hs = cartan_basis(a2);
  for (const Root& r : positive_roots(a2)) {
    QMatrix x = root_vector(a2, r);
    for (int k = 1; k < N; ++k) {
      Rational lam(r.coeff(N + 1 - k) - r.coeff(N - k));
      CHECK(bracket(hs[static_cast<size_t>(k - 1)], x) == x * lam);
    }
  }
}

TEST_CASE("bracket satisfies the jacobi identity") {
  RootSystemType c2(Family::C, 2);
  QMatrix x = root_vector(c2, Root::diff(2, 1, 2));
  QMatrix y = root_vector(c2, Root::twice(2, 1));
  QMatrix z = root_vector(c2, -Root::sum(2, 1, 2));
  QMatrix lhs = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                bracket(z, bracket(x, y));
  CHECK(lhs.is_zero());
  CHECK((bracket(x, y) + bracket(y, x)).is_zero());
}

TEST_CASE("nilpotency orders distinguish short and long roots") {
  CHECK(nilpotency_order(root_vector(RootSystemType(Family::B, 1),
                                     Root::single(1, 1))) == 3);
  RootSystemType b2(Family::B, 2);
  CHECK(nilpotency_order(root_vector(b2, Root::single(2, 2))) == 3);
  CHECK(nilpotency_order(root_vector(b2, Root::sum(2, 1, 2))) == 2);
  RootSystemType c2(Family::C, 2);
  CHECK(nilpotency_order(root_vector(c2, Root::twice(2, 1))) == 2);
  RootSystemType a2(Family::A, 2);
  QMatrix reg = root_vector(a2, Root::diff(3, 1, 2)) + root_vector(a2, Root::diff(3, 2, 3));
  CHECK(nilpotency_order(reg) == 3);
  QMatrix h = cartan_basis(a2).front();
  CHECK_THROWS_AS(nilpotency_order(h), std::invalid_argument);
}

TEST_CASE("weight decomposition reconstructs exactly or refuses") {
  RootSystemType c2(Family::C, 2);
  QMatrix y = root_vector(c2, Root::sum(2, 1, 2)) * Rational(3) -
              root_vector(c2, Root::twice(2, 1)) * Rational(1, 2);
  std::map<Root, Rational> dec = weight_decomposition(c2, y);
  REQUIRE(dec.size() == 2);
  CHECK(dec.at(Root::sum(2, 1, 2)) == Rational(3));
  CHECK(dec.at(Root::twice(2, 1)) == Rational(-1, 2));

  // A diagonal matrix is not in the span of the root spaces.
  CHECK_THROWS_AS(weight_decomposition(c2, cartan_basis(c2).front()),
                  std::invalid_argument);

  // Half of one root vector's support is not a lattice element either.
  QMatrix partial(4, 4);
  partial.at(0, 1) = Rational(1);
  CHECK_THROWS_AS(weight_decomposition(c2, partial), std::invalid_argument);
}

TEST_CASE("unipotent curve through a long root vector") {
  // exp(a X_{e2-e1}) moves X_{2e1} along 2e1 -> e2+e1 -> 2e2 with
  // coefficients 1, a, a^2.
  RootSystemType c2(Family::C, 2);
  Poly a = Poly::variable();
  PMatrix curve = exp_adjoint(a, root_vector(c2, Root::diff(2, 1, 2)),
                              root_vector(c2, Root::twice(2, 1)).cast<Poly>());
  std::map<Root, Poly> dec = weight_decomposition(c2, curve);
  REQUIRE(dec.size() == 3);
  CHECK(dec.at(Root::twice(2, 1)) == Poly(1));
  CHECK(dec.at(Root::sum(2, 1, 2)) == a);
  CHECK(dec.at(Root::twice(2, 2)) == a * a);

  // At a rational parameter the group element acts by an algebra
  // automorphism, so the orbit dimension oracle must not move.
  QMatrix moved = exp_adjoint(Rational(2), root_vector(c2, Root::diff(2, 1, 2)),
                              root_vector(c2, Root::twice(2, 1)));
  CHECK(orbit_dimension(c2, moved) == orbit_dimension(c2, root_vector(c2, Root::twice(2, 1))));
  CHECK(orbit_dimension(c2, moved) == 2);
}

TEST_CASE("orbit dimension oracle on the dense and zero orbits") {
  RootSystemType c2(Family::C, 2);
  QMatrix dense = root_vector(c2, Root::twice(2, 1)) + root_vector(c2, Root::twice(2, 2));
  CHECK(orbit_dimension(c2, dense) == 3);
  QMatrix zero(4, 4);
  CHECK(orbit_dimension(c2, zero) == 0);
  CHECK_THROWS_AS(orbit_dimension(c2, root_vector(c2, -Root::twice(2, 1))),
                  std::invalid_argument);
}
