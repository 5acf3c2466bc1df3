#include <doctest.h>

#include <set>

#include "cyclocover/error.hpp"
#include "cyclocover/residue.hpp"

using namespace cyclocover;

TEST_CASE("reduce") {
  CHECK(reduce(16, Modulus(8)).value() == 0);
  CHECK(reduce(4 * 3, Modulus(8)).value() == 4);
  CHECK(reduce(-1, Modulus(5)).value() == 4);
  for (std::int64_t x = -40; x <= 40; ++x) {
    const Residue r = reduce(x, Modulus(7));
    CHECK(reduce(r.value(), Modulus(7)) == r);
  }
  CHECK_THROWS_AS(Modulus(1), Error);
}

TEST_CASE("units and phi") {
  CHECK(is_unit(Residue(2, Modulus(5))));
  CHECK_FALSE(is_unit(Residue(4, Modulus(8))));
  CHECK(is_unit(Residue(22, Modulus(25))));
  auto values = [](Modulus n) {
    std::vector<std::int64_t> v;
    for (const Residue& r : units(n)) v.push_back(r.value());
    return v;
  };
  CHECK(values(Modulus(5)) == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(values(Modulus(6)) == std::vector<std::int64_t>{1, 5});
  CHECK(values(Modulus(12)) == std::vector<std::int64_t>{1, 5, 7, 11});
  for (std::int64_t n = 2; n <= 200; ++n) {
    std::int64_t brute = 0;
    for (std::int64_t k = 1; k <= n; ++k) brute += std::gcd(k, n) == 1;
    CHECK(static_cast<std::int64_t>(units(Modulus(n)).size()) == euler_phi(n));
    CHECK(euler_phi(n) == brute);
  }
}

TEST_CASE("galois orbits") {
  auto orbit = [](std::int64_t j, std::int64_t n) {
    std::set<std::int64_t> s;
    for (const Residue& r : galois_orbit(CharacterIndex(j, Modulus(n)))) s.insert(r.value());
    return s;
  };
  CHECK(orbit(4, 5) == std::set<std::int64_t>{1, 2, 3, 4});
  CHECK(orbit(2, 8) == std::set<std::int64_t>{2, 6});
  CHECK(orbit(3, 9) == std::set<std::int64_t>{3, 6});
  CHECK_THROWS_AS(galois_orbit(CharacterIndex(0, Modulus(5))), Error);
  for (std::int64_t n = 2; n <= 30; ++n)
    for (std::int64_t j = 1; j < n; ++j) {
      const auto o = orbit(j, n);
      CHECK(o.contains(j));
      for (const Residue& h : units(Modulus(n))) CHECK(orbit(mod_floor(h.value() * j, n), n) == o);
    }
}

TEST_CASE("inverse") {
  CHECK(inverse(Residue(3, Modulus(5))).value() == 2);
  try {
    inverse(Residue(2, Modulus(4)));
    FAIL("expected NoUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoUnit);
  }
}
