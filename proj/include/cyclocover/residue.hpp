#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "cyclocover/error.hpp"

namespace cyclocover {

/// The order n of the cyclic deck group; always n >= 2.
class Modulus {
 public:
  explicit Modulus(std::int64_t n) : n_(n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 2");
  }

  std::int64_t value() const noexcept { return n_; }
  operator std::int64_t() const noexcept { return n_; }

  auto operator<=>(const Modulus&) const = default;

 private:
  std::int64_t n_;
};

/// Canonical representative in [0, n-1].
class Residue {
 public:
  Residue(std::int64_t value, Modulus n);

  std::int64_t value() const noexcept { return value_; }
  Modulus modulus() const noexcept { return n_; }

  bool operator==(const Residue&) const = default;
  auto operator<=>(const Residue& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return value_ <=> o.value_;
  }

  Residue operator+(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;

 private:
  std::int64_t value_;
  Modulus n_;
};

/// Index j of the character zeta -> zeta^j.
struct CharacterIndex {
  Residue j;

  CharacterIndex(std::int64_t value, Modulus n) : j(value, n) {}
  explicit CharacterIndex(Residue r) : j(r) {}

  std::int64_t value() const noexcept { return j.value(); }
  Modulus modulus() const noexcept { return j.modulus(); }
  bool is_trivial() const noexcept { return j.value() == 0; }
  bool operator==(const CharacterIndex&) const = default;
};

/// The bracket [x]: x mod n in [0, n-1].
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

inline Residue reduce(std::int64_t x, Modulus n) { return Residue(x, n); }

bool is_unit(const Residue& r);

/// Residues coprime to n, ascending.
std::vector<Residue> units(Modulus n);

/// { [h*j] : h a unit mod n }. Rejects j = 0.
std::set<Residue> galois_orbit(const CharacterIndex& j);

/// Inverse of a unit; throws NoUnit otherwise.
Residue inverse(const Residue& r);

/// Euler phi by trial factorization.
std::int64_t euler_phi(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

}  // namespace cyclocover
