#include <doctest.h>

#include <random>

#include "mckay/cyclotomic.hpp"
#include "mckay/error.hpp"

using namespace mckay;

namespace {

CycloNum random_cyclo(std::mt19937& rng, unsigned m) {
  std::uniform_int_distribution<long> coef(-5, 5), den(1, 4);
  CycloNum x = CycloNum::zero(m);
  for (unsigned k = 0; k < m; ++k) x += CycloNum(make_rational(coef(rng), den(rng)), m) * CycloNum::zeta(m, k);
  return x;
}

}  // namespace

TEST_CASE("zeta_4 squared is -1") {
  auto i = CycloNum::zeta(4);
  CHECK(i * i == CycloNum(-1));
  CHECK((i * i).as_rational() == Rational(-1));
}

TEST_CASE("golden ratio relation in Q(zeta_5)") {
  auto a = CycloNum::zeta(5, 1) + CycloNum::zeta(5, 4);
  CHECK((a * a + a - CycloNum(1)).is_zero());
}

TEST_CASE("conjugation") {
  CHECK(CycloNum::zeta(4).conj() == -CycloNum::zeta(4));
  CHECK(CycloNum(make_rational(3, 7)).conj() == CycloNum(make_rational(3, 7)));
  auto z = CycloNum::zeta(7, 3);
  CHECK(z.conj().conj() == z);
  CHECK(z.conj() == CycloNum::zeta(7, 4));
}

TEST_CASE("rational detection") {
  auto s = CycloNum::zeta(5, 1) + CycloNum::zeta(5, 2) + CycloNum::zeta(5, 3) + CycloNum::zeta(5, 4);
  REQUIRE(s.as_rational().has_value());
  CHECK(*s.as_rational() == -1);
  CHECK_FALSE(CycloNum::zeta(8).as_rational().has_value());
  CHECK(CycloNum(make_rational(3, 2), 12).as_rational() == make_rational(3, 2));
}

TEST_CASE("powers of zeta wrap around") {
  for (unsigned m : {1u, 2u, 3u, 4u, 6u, 12u, 15u, 24u, 60u}) {
    CHECK(CycloNum::zeta(m, static_cast<long>(m)) == CycloNum(1));
    CHECK(CycloNum::zeta(m, -1) * CycloNum::zeta(m, 1) == CycloNum(1));
    CycloNum sum = CycloNum::zero(m);
    for (unsigned k = 0; k < m; ++k) sum += CycloNum::zeta(m, k);
    if (m > 1) CHECK(sum.is_zero());
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(euler_phi(60) == 16);
  CHECK(euler_phi(24) == 8);
  CHECK(cyclotomic_polynomial(105).size() == euler_phi(105) + 1);
}

TEST_CASE("values compare across conductors") {
  CHECK(CycloNum::zeta(4) == CycloNum::zeta(8, 2));
  CHECK(CycloNum::zeta(3).promoted(12) == CycloNum::zeta(12, 4));
  CHECK(CycloNum::zeta(6) + CycloNum::zeta(12, 10) == CycloNum(1));
  CHECK_FALSE(CycloNum::zeta(8) == CycloNum::zeta(8, 3));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(5);
  for (unsigned m : {5u, 8u, 12u, 24u, 60u, 120u}) {
    for (int t = 0; t < 4; ++t) {
      auto a = random_cyclo(rng, m), b = random_cyclo(rng, m), c = random_cyclo(rng, m);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + CycloNum::zero(m) == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK((a + b).conj() == a.conj() + b.conj());
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == CycloNum(1));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("canonical form is unique") {
  std::mt19937 rng(9);
  auto a = random_cyclo(rng, 24);
  auto b = a + CycloNum::zeta(24, 3) - CycloNum::zeta(24, 3);
  CHECK(a.coeffs() == b.coeffs());
  CHECK(a.coeffs().size() == euler_phi(24));
}

TEST_CASE("division by zero and conductor overflow are errors") {
  CHECK_THROWS_AS(CycloNum::zeta(5) / CycloNum::zero(5), Error);
  CHECK_THROWS_AS(CycloNum::zero(7).inverse(), Error);
  try {
    (void)CycloNum::zero(3).inverse();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  const unsigned old = max_conductor();
  set_max_conductor(30);
  bool overflow = false;
  try {
    (void)(CycloNum::zeta(8) * CycloNum::zeta(7));
  } catch (const Error& e) {
    overflow = e.kind() == ErrorKind::ConductorOverflow;
  }
  set_max_conductor(old);
  CHECK(overflow);
}
