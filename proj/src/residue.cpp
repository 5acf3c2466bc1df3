#include "cyclocover/residue.hpp"

#include <string>

namespace cyclocover {

Residue::Residue(std::int64_t value, Modulus n) : value_(mod_floor(value, n.value())), n_(n) {}

namespace {
void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus())
    throw Error(ErrorCode::InvalidArgument, "residues with different moduli");
}
}  // namespace

Residue Residue::operator+(const Residue& o) const {
  require_same_modulus(*this, o);
  return Residue(value_ + o.value_, n_);
}

Residue Residue::operator*(const Residue& o) const {
  require_same_modulus(*this, o);
  // Both factors are below n, and n stays far below 2^31 in practice.
  return Residue(value_ * o.value_, n_);
}

Residue Residue::operator-() const { return Residue(-value_, n_); }

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

bool is_unit(const Residue& r) { return std::gcd(r.value(), r.modulus().value()) == 1; }

std::vector<Residue> units(Modulus n) {
  std::vector<Residue> out;
  for (std::int64_t x = 1; x < n.value(); ++x)
    if (std::gcd(x, n.value()) == 1) out.emplace_back(x, n);
  return out;
}

std::set<Residue> galois_orbit(const CharacterIndex& j) {
  if (j.is_trivial()) throw Error(ErrorCode::InvalidArgument, "galois_orbit requires j != 0");
  std::set<Residue> orbit;
  for (const Residue& h : units(j.modulus())) orbit.insert(h * j.j);
  return orbit;
}

Residue inverse(const Residue& r) {
  // Extended Euclid on (value, n).
  std::int64_t old_r = r.value(), cur_r = r.modulus().value();
  std::int64_t old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const std::int64_t q = old_r / cur_r;
    old_r -= q * cur_r;
    std::swap(old_r, cur_r);
    old_s -= q * cur_s;
    std::swap(old_s, cur_s);
  }
  if (old_r != 1)
    throw Error(ErrorCode::NoUnit,
                std::to_string(r.value()) + " is not a unit mod " + std::to_string(r.modulus().value()));
  return Residue(old_s, r.modulus());
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace cyclocover
