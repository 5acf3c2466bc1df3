#include "cyclocover/sweep.hpp"

#include <numeric>

#include "cyclocover/parallel.hpp"

namespace cyclocover {

std::vector<WeightTuple> sweep_tuples(std::int64_t n_max) {
  std::vector<WeightTuple> out;
  for (std::int64_t n = 4; n <= n_max; ++n)
    for (std::int64_t a = 1; a <= n - 3; ++a)
      for (std::int64_t b = 1; b <= n - 3; ++b)
        for (std::int64_t c = 1; c <= n - 3; ++c) {
          const std::int64_t d = n - a - b - c;
          if (d < 1 || d > n - 3) continue;
          if (std::gcd(std::gcd(std::gcd(a, b), std::gcd(c, d)), n) != 1) continue;
          out.emplace_back(n, std::array<std::int64_t, 4>{a, b, c, d});
        }
  return out;
}

SweepInstance compare_character(const WeightTuple& w, const CharacterIndex& j, std::int64_t cap, int max_word_len) {
  SweepInstance s;
  s.n = w.n().value();
  s.m = w.m();
  s.j = j.value();
  const MonodromyTriple t = rigid_triple(params_from_weights(w, j), w.n());
  s.irreducible = is_irreducible(w, j);
  s.common_eigenvector = has_common_eigenvector(t);
  if (!s.irreducible) return s;
  s.criterion = finiteness_by_signature(w, j).kind;
  const FinitenessVerdict v = group_closure(t, cap, max_word_len);
  s.oracle = v.kind;
  s.order = v.order;
  s.witness_word = v.witness_word;
  s.expected_signature = signature(w, j);
  s.form_signature = invariant_hermitian_form(t).signature;
  return s;
}

SweepSummary criterion_sweep(std::int64_t n_max, std::int64_t cap, int max_word_len, int jobs) {
  SweepSummary r;
  r.n_max = n_max;
  r.cap = cap;
  r.max_word_len = max_word_len;
  const std::vector<WeightTuple> tuples = sweep_tuples(n_max);
  r.tuples = static_cast<std::int64_t>(tuples.size());
  std::vector<std::pair<WeightTuple, std::int64_t>> work;
  for (const WeightTuple& w : tuples)
    for (std::int64_t j = 1; j < w.n().value(); ++j) work.emplace_back(w, j);
  r.details = parallel_map(
      work,
      [&](const std::pair<WeightTuple, std::int64_t>& p) {
        return compare_character(p.first, CharacterIndex(p.second, p.first.n()), cap, max_word_len);
      },
      jobs);
  for (const SweepInstance& s : r.details) {
    if (!s.irreducibility_agrees()) ++r.irreducibility_disagreements;
    if (!s.irreducible) {
      ++r.reducible;
      continue;
    }
    ++r.instances;
    if (!s.signature_agrees()) ++r.signature_disagreements;
    if (s.inconclusive())
      ++r.inconclusive;
    else if (s.criterion == s.oracle)
      ++r.agreements;
    else
      ++r.disagreements;
    if (s.oracle == FinitenessVerdict::Kind::Finite) ++r.finite;
  }
  return r;
}

}  // namespace cyclocover
