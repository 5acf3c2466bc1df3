#include "cyclocover/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclocover/error.hpp"

namespace cyclocover {

namespace {

bool unit_mod(std::int64_t x, std::int64_t n) { return std::gcd(mod_floor(x, n), n) == 1; }

AdmissibilityResult fail(std::string reason) { return {false, std::move(reason)}; }

AdmissibilityResult check_weights(const WeightTuple& w) {
  const std::int64_t n = w.n().value();
  if (n < 5) return fail("n must be >= 5");
  if (!w.sums_to_n()) return fail("m0 + m1 + m2 + m3 must equal n");
  for (int j = 0; j < 4; ++j)
    if (!unit_mod(w.m(j), n)) return fail("m_" + std::to_string(j) + " is not a unit mod n");
  for (int i = 0; i < 3; ++i)
    if (!unit_mod(w.m(i) + w.m(3), n))
      return fail("m_" + std::to_string(i) + " + m_3 is not a unit mod n");
  return {true, ""};
}

AdmissibilityResult check_base(std::int64_t n, const std::array<std::int64_t, 3>& base) {
  if (base[0] + base[1] + base[2] != n) return fail("n0 + n1 + n2 must equal n");
  for (int i = 0; i < 3; ++i) {
    if (base[static_cast<std::size_t>(i)] < 1 || base[static_cast<std::size_t>(i)] > n - 1)
      return fail("n_" + std::to_string(i) + " out of range [1, n-1]");
    if (!unit_mod(base[static_cast<std::size_t>(i)], n))
      return fail("n_" + std::to_string(i) + " is not a unit mod n");
  }
  return {true, ""};
}

// Weight tuples with sum n and each part in [1, n-3]; gcd with n not checked.
template <typename F>
void for_each_composition4(std::int64_t n, F&& f) {
  for (std::int64_t a = 1; a <= n - 3; ++a)
    for (std::int64_t b = 1; a + b <= n - 2; ++b)
      for (std::int64_t c = 1; a + b + c <= n - 1; ++c) f(std::array<std::int64_t, 4>{a, b, c, n - a - b - c});
}

template <typename F>
void for_each_composition3(std::int64_t n, F&& f) {
  for (std::int64_t a = 1; a <= n - 2; ++a)
    for (std::int64_t b = 1; a + b <= n - 1; ++b) f(std::array<std::int64_t, 3>{a, b, n - a - b});
}

bool weights_unit_ok(std::int64_t n, const std::array<std::int64_t, 4>& m) {
  for (std::int64_t x : m)
    if (!unit_mod(x, n)) return false;
  for (int i = 0; i < 3; ++i)
    if (!unit_mod(m[static_cast<std::size_t>(i)] + m[3], n)) return false;
  return true;
}

bool base_unit_ok(std::int64_t n, const std::array<std::int64_t, 3>& nw) {
  return std::all_of(nw.begin(), nw.end(), [n](std::int64_t x) { return unit_mod(x, n); });
}

}  // namespace

FamilyData::FamilyData(WeightTuple w, std::array<std::int64_t, 3> base_weights) : w_(w), base_(base_weights) {
  const std::int64_t n = w_.n().value();
  for (std::int64_t x : base_)
    if (x < 1 || x > n - 1)
      throw Error(ErrorCode::InvalidArgument, "base weights must satisfy 1 <= n_i <= n-1");
  if (base_[0] + base_[1] + base_[2] != n)
    throw Error(ErrorCode::InvalidArgument, "base weights must sum to n");
}

bool FamilyData::operator<(const FamilyData& o) const {
  if (n() != o.n()) return n() < o.n();
  if (w_.m() != o.w_.m()) return w_.m() < o.w_.m();
  return base_ < o.base_;
}

AdmissibilityResult satisfies_unit_constraints(const FamilyData& f) {
  if (auto r = check_weights(f.weights()); !r) return r;
  return check_base(f.n(), f.base_weights());
}

AdmissibilityResult is_admissible(const FamilyData& f) {
  if (auto r = satisfies_unit_constraints(f); !r) return r;
  if (std::gcd(f.n(), std::int64_t{6}) != 1) return fail("n must be coprime to 6");
  return {true, ""};
}

bool admissible_exists(std::int64_t n) { return n >= 5 && std::gcd(n, std::int64_t{6}) == 1; }

std::optional<FamilyData> find_admissible_witness(std::int64_t n) {
  if (n < 5) return std::nullopt;
  std::optional<FamilyData> found;
  for_each_composition4(n, [&](const std::array<std::int64_t, 4>& m) {
    if (found || !weights_unit_ok(n, m)) return;
    for_each_composition3(n, [&](const std::array<std::int64_t, 3>& nw) {
      if (found || !base_unit_ok(n, nw)) return;
      FamilyData f(WeightTuple(n, m), nw);
      if (satisfies_unit_constraints(f)) found = f;
    });
  });
  return found;
}

FamilyData standard_family(std::int64_t n) {
  if (!admissible_exists(n))
    throw Error(ErrorCode::NotCoprimeTo6, "the standard family needs n >= 5 coprime to 6, got " + std::to_string(n));
  return FamilyData(WeightTuple(n, {1, 1, 1, n - 3}), {1, 1, n - 2});
}

std::vector<WeightTuple> admissible_weights(std::int64_t n) {
  std::vector<WeightTuple> out;
  if (!admissible_exists(n)) return out;
  for_each_composition4(n, [&](const std::array<std::int64_t, 4>& m) {
    if (weights_unit_ok(n, m)) out.emplace_back(n, m);
  });
  return out;
}

std::vector<FamilyData> admissible_families(std::int64_t n) {
  std::vector<FamilyData> out;
  if (n < 5) return out;
  std::vector<std::array<std::int64_t, 3>> bases;
  for_each_composition3(n, [&](const std::array<std::int64_t, 3>& nw) {
    if (base_unit_ok(n, nw)) bases.push_back(nw);
  });
  for_each_composition4(n, [&](const std::array<std::int64_t, 4>& m) {
    if (!weights_unit_ok(n, m)) return;
    const WeightTuple w(n, m);
    for (const auto& nw : bases) {
      FamilyData f(w, nw);
      if (is_admissible(f)) out.push_back(f);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

FamilyData normalize(const FamilyData& f) {
  const std::int64_t n = f.n();
  std::vector<std::array<std::int64_t, 4>> ms;
  std::vector<std::array<std::int64_t, 3>> bases;
  for (std::int64_t h = 1; h < n; ++h) {
    if (std::gcd(h, n) != 1) continue;
    std::array<std::int64_t, 4> m{};
    for (std::size_t i = 0; i < 4; ++i) m[i] = mod_floor(h * f.weights().m()[i], n);
    if (m[0] + m[1] + m[2] + m[3] == n && std::find(m.begin(), m.end(), 0) == m.end()) ms.push_back(m);
    std::array<std::int64_t, 3> nw{};
    for (std::size_t i = 0; i < 3; ++i) nw[i] = mod_floor(h * f.base_weights()[i], n);
    if (nw[0] + nw[1] + nw[2] == n && std::find(nw.begin(), nw.end(), 0) == nw.end()) bases.push_back(nw);
  }
  std::optional<FamilyData> best;
  std::array<std::size_t, 3> perm{0, 1, 2};
  do {
    for (const auto& m : ms) {
      const std::array<std::int64_t, 4> pm{m[perm[0]], m[perm[1]], m[perm[2]], m[3]};
      for (const auto& nw : bases) {
        FamilyData cand(WeightTuple(n, pm), {nw[perm[0]], nw[perm[1]], nw[perm[2]]});
        if (!best || cand < *best) best = cand;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best.value_or(f);
}

std::string_view to_string(BranchLabel l) {
  switch (l) {
    case BranchLabel::YInf: return "Y_INF";
    case BranchLabel::Y0: return "Y_0";
    case BranchLabel::Y1: return "Y_1";
    case BranchLabel::XInf: return "X_INF";
    case BranchLabel::X0: return "X_0";
    case BranchLabel::X1: return "X_1";
    case BranchLabel::Delta: return "DELTA";
    case BranchLabel::E0: return "E0";
    case BranchLabel::E1: return "E1";
    case BranchLabel::E2: return "E2";
  }
  return "?";
}

const BranchDivisor& BranchTable::at(BranchLabel l) const {
  for (const auto& d : divisors)
    if (d.label == l) return d;
  throw std::out_of_range("branch label not in table");
}

BranchTable branch_table(const FamilyData& f) {
  const Modulus n(f.n());
  const auto& m = f.weights().m();
  const auto& nw = f.base_weights();
  auto div = [&](BranchLabel l, std::int64_t u, std::int64_t v) { return BranchDivisor{l, Residue(u, n), Residue(v, n)}; };
  using L = BranchLabel;
  BranchTable t;
  t.divisors = {
      div(L::YInf, m[0], 0),
      div(L::Y0, m[1], 0),
      div(L::Y1, m[2], 0),
      div(L::XInf, n - m[3], nw[0]),
      div(L::X0, 0, nw[1]),
      div(L::X1, 0, nw[2]),
      div(L::Delta, m[3], 0),
      div(L::E0, m[0], nw[0]),
      div(L::E1, m[1] + m[3], nw[1]),
      div(L::E2, m[2] + m[3], nw[2]),
  };
  // Strict transforms of the three horizontal and three vertical lines, the
  // diagonal, and the exceptional curves over P0, P1, P2.
  t.adjacency = {
      {L::X0, L::YInf}, {L::X0, L::Y1},  {L::X1, L::YInf}, {L::X1, L::Y0},  {L::XInf, L::Y0},
      {L::XInf, L::Y1}, {L::E0, L::YInf}, {L::E0, L::XInf}, {L::E0, L::Delta}, {L::E1, L::Y0},
      {L::E1, L::X0},  {L::E1, L::Delta}, {L::E2, L::Y1},  {L::E2, L::X1},  {L::E2, L::Delta},
  };
  return t;
}

std::int64_t element_order(const Residue& u, const Residue& v) {
  const std::int64_t n = u.modulus().value();
  return n / std::gcd(std::gcd(u.value(), v.value()), n);
}

SmoothnessReport smoothness_check(const FamilyData& f) {
  const BranchTable t = branch_table(f);
  const std::int64_t n = f.n();
  SmoothnessReport r;
  r.smooth = true;
  for (const auto& d : t.divisors) {
    const std::int64_t ord = element_order(d.first, d.second);
    r.divisors.push_back({d.label, ord, ord == n});
    r.smooth = r.smooth && ord == n;
  }
  for (const auto& [a, b] : t.adjacency) {
    const auto& da = t.at(a);
    const auto& db = t.at(b);
    const std::int64_t det = mod_floor(da.first.value() * db.second.value() - da.second.value() * db.first.value(), n);
    const bool ok = std::gcd(det, n) == 1;
    r.pairs.push_back({a, b, det, ok});
    r.smooth = r.smooth && ok;
  }
  return r;
}

SurfaceInvariants invariants(const FamilyData& f) {
  if (auto a = is_admissible(f); !a) throw Error(ErrorCode::Inadmissible, a.reason);
  const std::int64_t n = f.n();
  SurfaceInvariants s;
  // Hurwitz: fibres are Z/n covers of P^1 totally ramified at 4 points, B at 3.
  s.g = (-2 * n + 4 * (n - 1)) / 2 + 1;
  s.b = (-2 * n + 3 * (n - 1)) / 2 + 1;
  const SingularFibreProfile sing = singular_fibre_profile(f);
  const std::int64_t zeuthen_segre = static_cast<std::int64_t>(sing.count) * sing.nodes_per_fibre;
  s.e = 4 * (s.g - 1) * (s.b - 1) + zeuthen_segre;
  if (s.e != 2 * n * n - 10 * n + 15) throw std::logic_error("Euler number disagrees with the closed form");
  // K_S is the pull-back of -(n-2)/n K_Z under a cover of degree n^2, K_Z^2 = 5.
  s.K2 = 5 * (n - 2) * (n - 2);
  if ((s.K2 + s.e) % 12 != 0) throw std::logic_error("Noether: K^2 + e not divisible by 12");
  s.chi = (s.K2 + s.e) / 12;
  s.slope = Rational(s.K2, s.e);
  s.slope.canonicalize();
  s.deg_V = s.chi - (s.g - 1) * (s.b - 1);
  s.mu = s.e - 4 * (s.g - 1) * (s.b - 1);
  s.ball_quotient = s.slope == 3;
  s.irregularity = s.b;
  s.geometric_genus = s.chi - 1 + s.irregularity;
  return s;
}

SingularFibreProfile singular_fibre_profile(const FamilyData& f) {
  if (auto a = is_admissible(f); !a) throw Error(ErrorCode::Inadmissible, a.reason);
  SingularFibreProfile p;
  p.count = 3;
  p.component_genus = (f.n() - 1) / 2;
  p.components_per_fibre = 2;
  p.nodes_per_fibre = 1;
  // p_a = sum of component genera + nodes - components + 1.
  p.fibre_genus = p.components_per_fibre * p.component_genus + p.nodes_per_fibre - p.components_per_fibre + 1;
  p.positions = {"x=0", "x=1", "x=inf"};
  return p;
}

}  // namespace cyclocover
