#include "cyclocover/hodge.hpp"

#include <string>

#include "cyclocover/error.hpp"

namespace cyclocover {

WeightTuple::WeightTuple(std::int64_t n, std::array<std::int64_t, 4> m) : n_(n), m_(m) {
  const std::int64_t s = sum();
  if (s % n != 0)
    throw Error(ErrorCode::InvalidArgument,
                "weights must sum to n (or a multiple of n); got sum " + std::to_string(s) + " for n=" +
                    std::to_string(n));
  std::int64_t g = n;
  for (std::int64_t mi : m_) {
    if (mi <= 0 || mi > n - 3)
      throw Error(ErrorCode::InvalidArgument,
                  "weights must satisfy 0 < m_i <= n-3; got " + std::to_string(mi) + " for n=" +
                      std::to_string(n));
    g = std::gcd(g, mi);
  }
  if (g != 1) throw Error(ErrorCode::InvalidArgument, "gcd(m0, m1, m2, m3, n) must be 1");
}

bool WeightTuple::all_units() const {
  for (std::int64_t mi : m_)
    if (std::gcd(mi, n_.value()) != 1) return false;
  return true;
}

namespace {

void require_character(const WeightTuple& w, const CharacterIndex& j) {
  if (j.modulus() != w.n()) throw Error(ErrorCode::InvalidArgument, "character modulus differs from n");
  if (j.is_trivial()) throw Error(ErrorCode::InvalidArgument, "character j must be nonzero");
  if (is_degenerate(w, j))
    throw Error(ErrorCode::DegenerateCharacter, "m_i * j = 0 mod n for j=" + std::to_string(j.value()));
}

}  // namespace

bool is_degenerate(const WeightTuple& w, const CharacterIndex& j) {
  for (std::int64_t mi : w.m())
    if (reduce(mi * j.value(), w.n()).value() == 0) return true;
  return false;
}

Rational mu(const WeightTuple& w, int i, const CharacterIndex& j) {
  require_character(w, j);
  if (i < 0 || i > 3) throw Error(ErrorCode::InvalidArgument, "branch index must be 0..3");
  Rational r(reduce(w.m(i) * j.value(), w.n()).value(), w.n().value());
  r.canonicalize();
  return r;
}

std::int64_t sigma_sum(const WeightTuple& w, const CharacterIndex& j) {
  require_character(w, j);
  std::int64_t s = 0;
  for (std::int64_t mi : w.m()) s += reduce(mi * j.value(), w.n()).value();
  return s;
}

std::pair<int, int> hodge_dims(const WeightTuple& w, const CharacterIndex& j) {
  const int h10 = static_cast<int>(sigma_sum(w, j) / w.n().value()) - 1;
  return {h10, 2 - h10};
}

Signature signature(const WeightTuple& w, const CharacterIndex& j) {
  const auto [p, q] = hodge_dims(w, j);
  return {p, q};
}

SplitClass split_class(const WeightTuple& w, const CharacterIndex& j) {
  switch (sigma_sum(w, j) / w.n().value()) {
    case 1: return SplitClass::Zero;
    case 2: return SplitClass::AmpleCandidate;
    default: return SplitClass::Flat;
  }
}

std::vector<EigenspaceReport> eigenspace_table(const WeightTuple& w) {
  std::vector<EigenspaceReport> table;
  for (std::int64_t j = 1; j < w.n().value(); ++j) {
    const CharacterIndex chi(j, w.n());
    EigenspaceReport r;
    r.j = j;
    if (is_degenerate(w, chi)) {
      r.degenerate = true;
      table.push_back(r);
      continue;
    }
    r.sigma = sigma_sum(w, chi);
    std::tie(r.dim_h10, r.dim_h01) = hodge_dims(w, chi);
    r.signature = {r.dim_h10, r.dim_h01};
    r.split_class = split_class(w, chi);
    table.push_back(r);
  }
  return table;
}

}  // namespace cyclocover
