#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclocover/hodge.hpp"
#include "cyclocover/monodromy.hpp"
#include "cyclocover/surface.hpp"

namespace cyclocover {

struct SplittingEntry {
  std::int64_t j = 0;
  bool degenerate = false;
  int dim_Vj = 0;
  SplitClass split_class = SplitClass::Zero;

  bool operator==(const SplittingEntry&) const = default;
};

/// V = sum_j V_j with each V_j sorted into ZERO, AMPLE_CANDIDATE or FLAT.
struct SplittingReport {
  std::vector<SplittingEntry> entries;
  std::int64_t rank_V = 0;
  std::int64_t rank_flat = 0;             ///< 2 per FLAT character
  std::int64_t rank_ample_candidate = 0;  ///< 1 per AMPLE_CANDIDATE character
  std::int64_t degenerate_count = 0;
  /// (n^2 - 1) / 12 when the weights sum to n and gcd(n, 6) = 1.
  std::optional<std::int64_t> deg_V;
  /// rank_flat <= rank Q <= rank_flat + rank_ample_candidate.
  std::int64_t rank_Q_lower = 0;
  std::int64_t rank_Q_upper = 0;

  bool operator==(const SplittingReport&) const = default;
};

/// Requires every m_i to be a unit mod n (InvalidArgument otherwise).
SplittingReport splitting(const WeightTuple& w);

struct FlatCharacter {
  std::int64_t j = 0;
  FinitenessVerdict verdict;
};

/// FLAT characters with their criterion verdicts.
std::vector<FlatCharacter> flat_summand_census(const WeightTuple& w);

struct InfiniteWitness {
  std::int64_t j_star = 0;
  /// Unit h with [h * (n-1)] = j_star: the flat character n-1 has this
  /// indefinite Galois conjugate.
  std::int64_t unit_h = 0;
  std::int64_t sigma = 0;
  bool valid = false;

  bool operator==(const InfiniteWitness&) const = default;
};

/// Result of the optional matrix cross-check on the flat character n-1 and
/// the witness character j_star.
struct OracleCheck {
  std::int64_t flat_j = 0;
  FinitenessVerdict::Kind criterion = FinitenessVerdict::Kind::Inconclusive;
  FinitenessVerdict::Kind oracle = FinitenessVerdict::Kind::Inconclusive;
  std::optional<Word> witness_word;
  Signature expected_signature;
  Signature form_signature;
  std::int64_t cap = 0;
  int max_word_len = 0;

  bool conclusive() const { return oracle != FinitenessVerdict::Kind::Inconclusive; }
  /// Criterion and oracle agree on finiteness and the invariant form has
  /// the predicted index at j_star. An inconclusive oracle run is not a
  /// disagreement.
  bool agrees() const { return (!conclusive() || oracle == criterion) && form_signature == expected_signature; }
};

enum class Verdict { Counterexample, NotCertified };

std::string_view to_string(Verdict v);

struct Certificate {
  explicit Certificate(FamilyData f) : family(std::move(f)) {}

  FamilyData family;
  AdmissibilityResult admissibility;
  bool smooth = false;
  std::optional<SmoothnessReport> smoothness;
  std::optional<SurfaceInvariants> invariants;
  std::optional<SplittingReport> splitting;
  bool irreducible_all = false;
  std::optional<InfiniteWitness> infinite_witness;
  std::optional<OracleCheck> oracle;
  Verdict verdict = Verdict::NotCertified;
  /// Empty for COUNTEREXAMPLE.
  std::string reason;
  std::string scope;

  bool admissible() const { return admissibility.admissible; }
};

struct CertifyOptions {
  bool oracle = false;
  std::int64_t cap = kDefaultClosureCap;
  int max_word_len = kDefaultMaxWordLength;
};

/// Never throws for well-formed FamilyData; every failure becomes
/// NOT_CERTIFIED with a reason.
Certificate certify(const FamilyData& f, const CertifyOptions& opts = {});

/// Fixed text stating what the certificate does and does not establish.
std::string_view certificate_scope();

/// Number of pairs {j, n-j} with sigma_sum = 2n.
std::int64_t shimura_count(const WeightTuple& w);
bool is_shimura_candidate(const WeightTuple& w);

struct ShimuraReport {
  explicit ShimuraReport(FamilyData f) : family(std::move(f)) {}

  FamilyData family;
  std::int64_t count = 0;
  bool candidate = false;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

ShimuraReport shimura_report(const FamilyData& f);

enum class EnumerationMode { StandardOnly, All };

/// Admissible families for n in [n_min, n_max], sorted by (n, tuple). With
/// normalize, one representative per symmetry class.
std::vector<FamilyData> enumerate_family_data(std::int64_t n_min, std::int64_t n_max, EnumerationMode mode,
                                              bool normalize_tuples);

std::vector<Certificate> enumerate_families(std::int64_t n_min, std::int64_t n_max, EnumerationMode mode,
                                            bool normalize_tuples, const CertifyOptions& opts = {}, int jobs = 1);

}  // namespace cyclocover
