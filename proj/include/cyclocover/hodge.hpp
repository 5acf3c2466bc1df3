#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclocover/rational.hpp"
#include "cyclocover/residue.hpp"

namespace cyclocover {

/// Covering datum (n; m0, m1, m2, m3): the curve z^n = prod (y - s_i)^(m_i)
/// branched over s = (inf, 0, 1, x).
///
/// Invariants: 0 < m_i <= n - 3, gcd(m0, ..., m3, n) = 1, and the sum of
/// the m_i is a multiple of n. The geometric families use sum = n; larger
/// multiples appear as residue data after a change of generator.
class WeightTuple {
 public:
  WeightTuple(std::int64_t n, std::array<std::int64_t, 4> m);

  Modulus n() const noexcept { return n_; }
  const std::array<std::int64_t, 4>& m() const noexcept { return m_; }
  std::int64_t m(int i) const { return m_.at(static_cast<std::size_t>(i)); }
  std::int64_t sum() const noexcept { return m_[0] + m_[1] + m_[2] + m_[3]; }
  bool sums_to_n() const noexcept { return sum() == n_.value(); }
  bool all_units() const;

  bool operator==(const WeightTuple&) const = default;

 private:
  Modulus n_;
  std::array<std::int64_t, 4> m_;
};

enum class SplitClass { Zero, AmpleCandidate, Flat };

constexpr std::string_view to_string(SplitClass c) {
  switch (c) {
    case SplitClass::Zero: return "ZERO";
    case SplitClass::AmpleCandidate: return "AMPLE_CANDIDATE";
    case SplitClass::Flat: return "FLAT";
  }
  return "?";
}

/// Index pair (positive, negative) of a Hermitian form.
struct Signature {
  int positive = 0;
  int negative = 0;

  bool definite() const { return positive == 0 || negative == 0; }
  bool operator==(const Signature&) const = default;
};

struct EigenspaceReport {
  std::int64_t j = 0;
  /// Some m_i * j is divisible by n; the numeric fields are then zero.
  bool degenerate = false;
  std::int64_t sigma = 0;
  int dim_h10 = 0;
  int dim_h01 = 0;
  Signature signature;
  SplitClass split_class = SplitClass::Zero;

  bool operator==(const EigenspaceReport&) const = default;
};

/// True when some m_i * j vanishes mod n.
bool is_degenerate(const WeightTuple& w, const CharacterIndex& j);

/// [m_i * j] / n.
Rational mu(const WeightTuple& w, int i, const CharacterIndex& j);

/// sum_i [m_i * j]; always one of n, 2n, 3n.
std::int64_t sigma_sum(const WeightTuple& w, const CharacterIndex& j);

/// (h^{1,0}, h^{0,1}) of the j-eigenspace: h^{1,0} = -1 + sum_i mu_{i,j}.
std::pair<int, int> hodge_dims(const WeightTuple& w, const CharacterIndex& j);

/// Index of the invariant Hermitian form on the j-eigenspace.
Signature signature(const WeightTuple& w, const CharacterIndex& j);

SplitClass split_class(const WeightTuple& w, const CharacterIndex& j);

/// One report per character j = 1, ..., n-1; degenerate characters are
/// flagged rather than dropped.
std::vector<EigenspaceReport> eigenspace_table(const WeightTuple& w);

}  // namespace cyclocover
