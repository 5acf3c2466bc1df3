#include <doctest.h>

#include <complex>

#include "cyclocover/cyclotomic.hpp"

using namespace cyclocover;
using Cq = CyclotomicNumber;
using Ci = CyclotomicInteger;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(CyclotomicField::get(105).degree == 48);
}

TEST_CASE("roots of unity") {
  for (std::int64_t n : {3, 4, 5, 7, 8, 9, 12, 15}) {
    const Ci z = Ci::root_of_unity(1, n);
    Ci p(1);
    for (std::int64_t k = 0; k < n; ++k) p = p * z;
    CHECK(p == Ci(1));
    Ci s(0);
    for (std::int64_t k = 0; k < n; ++k) s = s + Ci::root_of_unity(k, n);
    CHECK(s.is_zero());
  }
  // zeta_6 = -zeta_3^2
  CHECK(Ci::root_of_unity(1, 6) == -Ci::root_of_unity(2, 3));
  CHECK(Ci::root_of_unity(1, 2) == Ci(-1));
}

TEST_CASE("mixed levels") {
  const Ci i = Ci::root_of_unity(1, 4);
  const Ci w = Ci::root_of_unity(1, 3);
  const Ci x = i * w;
  CHECK(x.level() == 12);
  CHECK(x == Ci::root_of_unity(7, 12));
  CHECK(x.promote(24) == x);
}

TEST_CASE("field operations") {
  const Cq z = Cq::root_of_unity(1, 7);
  const Cq a = Cq(2) + z - z * z * Cq(3);
  const Cq inv = a.inverse();
  CHECK(a * inv == Cq(1));
  CHECK((a / a) == Cq(1));
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).is_real());
  CHECK(z.galois(3) == Cq::root_of_unity(3, 7));
  CHECK(Cq(Rational(1, 2)).norm() == Rational(1, 2));
  CHECK(z.norm() == 1);
}

TEST_CASE("real signs") {
  const Cq z = Cq::root_of_unity(1, 5);
  const Cq c = z + z.conj();  // 2 cos(2 pi / 5) > 0
  CHECK(c.real_sign(1) == 1);
  CHECK(c.real_sign(2) == -1);  // 2 cos(4 pi / 5)
  CHECK((c * c + c - Cq(1)).real_sign(1) == 0);
  const Cq tiny = c - Cq(Rational(618033988749894, 1000000000000000));
  CHECK(tiny.real_sign(1) == 1);
  const std::complex<double> v = z.approx(1);
  CHECK(v.real() == doctest::Approx(std::cos(2 * M_PI / 5)));
}

TEST_CASE("matrix helpers") {
  Matrix2<Integer> m;
  m << Ci(0), Ci(-1), Ci(1), Ci(0);
  CHECK(determinant(m) == Ci(1));
  CHECK(trace(m).is_zero());
  CHECK(is_identity(mul(mul(m, m), mul(m, m))));
  CHECK(Matrix2Hash<Integer>{}(at_level(identity2<Integer>(), 5)) ==
        Matrix2Hash<Integer>{}(at_level(mul(mul(m, m), mul(m, m)), 5)));
}
