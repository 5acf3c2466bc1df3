#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cyclocover/hodge.hpp"
#include "cyclocover/monodromy.hpp"

namespace cyclocover {

/// One (w, j) of the criterion/oracle comparison.
struct SweepInstance {
  std::int64_t n = 0;
  std::array<std::int64_t, 4> m{};
  std::int64_t j = 0;
  bool irreducible = false;
  bool common_eigenvector = false;
  /// Remaining fields are only filled for irreducible characters.
  FinitenessVerdict::Kind criterion = FinitenessVerdict::Kind::Inconclusive;
  FinitenessVerdict::Kind oracle = FinitenessVerdict::Kind::Inconclusive;
  std::optional<std::int64_t> order;
  std::optional<Word> witness_word;
  Signature expected_signature;
  Signature form_signature;

  bool irreducibility_agrees() const { return irreducible != common_eigenvector; }
  bool inconclusive() const { return irreducible && oracle == FinitenessVerdict::Kind::Inconclusive; }
  bool finiteness_agrees() const { return !irreducible || inconclusive() || criterion == oracle; }
  bool signature_agrees() const { return !irreducible || expected_signature == form_signature; }
};

struct SweepSummary {
  std::int64_t n_max = 0;
  std::int64_t cap = 0;
  int max_word_len = 0;
  std::int64_t tuples = 0;
  std::int64_t instances = 0;  ///< irreducible characters compared
  std::int64_t reducible = 0;
  std::int64_t agreements = 0;
  std::int64_t disagreements = 0;
  std::int64_t inconclusive = 0;
  std::int64_t finite = 0;
  std::int64_t irreducibility_disagreements = 0;
  std::int64_t signature_disagreements = 0;
  std::vector<SweepInstance> details;

  bool consistent() const {
    return disagreements == 0 && irreducibility_disagreements == 0 && signature_disagreements == 0;
  }
};

/// Weight tuples with sum n, 0 < m_i <= n-3 and gcd(m, n) = 1, for
/// 4 <= n <= n_max, in lexicographic order.
std::vector<WeightTuple> sweep_tuples(std::int64_t n_max);

SweepInstance compare_character(const WeightTuple& w, const CharacterIndex& j, std::int64_t cap, int max_word_len);

/// Every character of every sweep tuple; output does not depend on jobs.
SweepSummary criterion_sweep(std::int64_t n_max, std::int64_t cap = kDefaultClosureCap,
                             int max_word_len = kDefaultMaxWordLength, int jobs = 1);

}  // namespace cyclocover
