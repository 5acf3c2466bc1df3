#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclocover/hodge.hpp"
#include "cyclocover/rational.hpp"
#include "cyclocover/residue.hpp"

namespace cyclocover {

/// Weights of the fibre curve together with the base weights (n0, n1, n2)
/// of the curve B: w^n = x0^n0 x1^n1 (x1 - x0)^n2.
class FamilyData {
 public:
  FamilyData(WeightTuple w, std::array<std::int64_t, 3> base_weights);

  const WeightTuple& weights() const noexcept { return w_; }
  const std::array<std::int64_t, 3>& base_weights() const noexcept { return base_; }
  std::int64_t n() const noexcept { return w_.n().value(); }

  bool operator==(const FamilyData&) const = default;
  /// Lexicographic on (n, m, base weights).
  bool operator<(const FamilyData& o) const;

 private:
  WeightTuple w_;
  std::array<std::int64_t, 3> base_;
};

struct AdmissibilityResult {
  bool admissible = false;
  /// First violated constraint, empty when admissible.
  std::string reason;

  explicit operator bool() const { return admissible; }
};

/// Checks n >= 5, the ranges and sums, that every m_j, n_i and m_i + m_3 is
/// a unit mod n, and finally gcd(n, 6) = 1.
AdmissibilityResult is_admissible(const FamilyData& f);

/// Same constraints without the final gcd(n, 6) guard, which the unit
/// conditions already imply.
AdmissibilityResult satisfies_unit_constraints(const FamilyData& f);

/// Closed form: admissible data exist for n iff gcd(n, 6) = 1.
bool admissible_exists(std::int64_t n);

/// Exhaustive search over all (m, n') with the unit constraints; the first
/// hit in lexicographic order.
std::optional<FamilyData> find_admissible_witness(std::int64_t n);

/// m = (1, 1, 1, n-3), n' = (1, 1, n-2). Throws NotCoprimeTo6.
FamilyData standard_family(std::int64_t n);

/// Weight tuples m that occur in some admissible family for this n, sorted.
/// Empty unless gcd(n, 6) = 1; then (1, 1, n-2) completes each of them.
std::vector<WeightTuple> admissible_weights(std::int64_t n);

/// Every admissible (m, n') for this n, sorted.
std::vector<FamilyData> admissible_families(std::int64_t n);

/// Canonical representative under independent unit rescaling of m and of
/// n' (keeping the sums equal to n) and simultaneous permutation of the
/// indices 0, 1, 2 of m and n'.
FamilyData normalize(const FamilyData& f);

enum class BranchLabel { YInf, Y0, Y1, XInf, X0, X1, Delta, E0, E1, E2 };

std::string_view to_string(BranchLabel l);

struct BranchDivisor {
  BranchLabel label;
  /// Local monodromy in (Z/n)^2.
  Residue first;
  Residue second;
};

struct BranchTable {
  std::vector<BranchDivisor> divisors;
  /// Intersecting pairs on the degree-5 del Pezzo surface.
  std::vector<std::pair<BranchLabel, BranchLabel>> adjacency;

  const BranchDivisor& at(BranchLabel l) const;
};

BranchTable branch_table(const FamilyData& f);

/// Order of (u, v) in (Z/n)^2.
std::int64_t element_order(const Residue& u, const Residue& v);

struct SmoothnessReport {
  struct DivisorCheck {
    BranchLabel label;
    std::int64_t order;
    bool passed;
  };
  struct PairCheck {
    BranchLabel a, b;
    /// det of the 2x2 matrix formed by the two monodromies, mod n.
    std::int64_t determinant;
    bool passed;
  };

  bool smooth = false;
  std::vector<DivisorCheck> divisors;
  std::vector<PairCheck> pairs;
};

/// Every inertia group is cyclic of order n and every intersecting pair of
/// branch divisors generates (Z/n)^2.
SmoothnessReport smoothness_check(const FamilyData& f);

struct SurfaceInvariants {
  std::int64_t g = 0;   ///< fibre genus
  std::int64_t b = 0;   ///< base genus = irregularity
  std::int64_t e = 0;   ///< topological Euler number c_2
  std::int64_t K2 = 0;  ///< canonical self-intersection
  std::int64_t chi = 0; ///< holomorphic Euler characteristic
  Rational slope;       ///< K2 / e
  std::int64_t deg_V = 0;
  std::int64_t mu = 0;  ///< Zeuthen-Segre number
  bool ball_quotient = false;
  std::int64_t irregularity = 0;
  std::int64_t geometric_genus = 0;

  bool operator==(const SurfaceInvariants&) const = default;
};

/// Throws Inadmissible on non-admissible data.
SurfaceInvariants invariants(const FamilyData& f);

struct SingularFibreProfile {
  int count = 0;
  std::int64_t component_genus = 0;
  int components_per_fibre = 0;
  int nodes_per_fibre = 0;
  /// Arithmetic genus of the reducible fibre.
  std::int64_t fibre_genus = 0;
  std::vector<std::string> positions;
};

SingularFibreProfile singular_fibre_profile(const FamilyData& f);

}  // namespace cyclocover
