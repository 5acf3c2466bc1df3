#include "cyclocover/certify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cyclocover/error.hpp"
#include "cyclocover/parallel.hpp"

namespace cyclocover {

SplittingReport splitting(const WeightTuple& w) {
  if (!w.all_units()) throw Error(ErrorCode::InvalidArgument, "splitting needs every m_i to be a unit mod n");
  const std::int64_t n = w.n().value();
  SplittingReport r;
  for (const EigenspaceReport& e : eigenspace_table(w)) {
    r.entries.push_back({e.j, e.degenerate, e.dim_h10, e.split_class});
    if (e.degenerate) {
      ++r.degenerate_count;
      continue;
    }
    r.rank_V += e.dim_h10;
    if (e.split_class == SplitClass::Flat) r.rank_flat += 2;
    if (e.split_class == SplitClass::AmpleCandidate) r.rank_ample_candidate += 1;
  }
  if (w.sums_to_n() && std::gcd(n, std::int64_t{6}) == 1) r.deg_V = (n * n - 1) / 12;
  r.rank_Q_lower = r.rank_flat;
  r.rank_Q_upper = r.rank_flat + r.rank_ample_candidate;
  return r;
}

std::vector<FlatCharacter> flat_summand_census(const WeightTuple& w) {
  std::vector<FlatCharacter> out;
  for (const SplittingEntry& e : splitting(w).entries) {
    if (e.degenerate || e.split_class != SplitClass::Flat) continue;
    out.push_back({e.j, finiteness_by_signature(w, CharacterIndex(e.j, w.n()))});
  }
  return out;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::Counterexample ? "COUNTEREXAMPLE" : "NOT_CERTIFIED";
}

std::string_view certificate_scope() {
  return "This certificate is arithmetic. It checks the branch data, the smoothness conditions on the "
         "inertia groups, the numerical invariants, the eigenspace splitting of V and an indefinite Galois "
         "conjugate of the flat character n-1. By the definiteness criterion that character then has infinite "
         "monodromy, and a unitary flat summand with infinite monodromy is not semiample; that implication is "
         "recorded, not computed. The existence of S as a complex manifold, the Albanese and semiampleness "
         "statements, and rigidity of S are not established by this program.";
}

namespace {

Certificate not_certified(Certificate c, std::string reason) {
  c.verdict = Verdict::NotCertified;
  c.reason = std::move(reason);
  return c;
}

OracleCheck run_oracle(const WeightTuple& w, const InfiniteWitness& wit, const CertifyOptions& opts) {
  const Modulus n = w.n();
  OracleCheck o;
  o.flat_j = n.value() - 1;
  o.cap = opts.cap;
  o.max_word_len = opts.max_word_len;
  const CharacterIndex flat(o.flat_j, n);
  o.criterion = finiteness_by_signature(w, flat).kind;
  const FinitenessVerdict v =
      group_closure(levelt_triple(params_from_weights(w, flat), n), opts.cap, opts.max_word_len);
  o.oracle = v.kind;
  o.witness_word = v.witness_word;
  const CharacterIndex js(wit.j_star, n);
  o.expected_signature = signature(w, js);
  o.form_signature = invariant_hermitian_form(levelt_triple(params_from_weights(w, js), n)).signature;
  return o;
}

}  // namespace

Certificate certify(const FamilyData& f, const CertifyOptions& opts) {
  Certificate c(f);
  c.scope = certificate_scope();
  const WeightTuple& w = f.weights();
  const std::int64_t n = f.n();
  c.admissibility = is_admissible(f);
  try {
    c.smoothness = smoothness_check(f);
    c.smooth = c.smoothness->smooth;
    if (w.all_units()) c.splitting = splitting(w);
    if (!c.admissibility) {
      std::string reason = "inadmissible: " + c.admissibility.reason;
      if (!admissible_exists(n)) reason += "; no admissible data exist since gcd(n, 6) != 1";
      return not_certified(std::move(c), reason);
    }
    c.invariants = invariants(f);
    if (c.splitting->deg_V != c.invariants->deg_V) return not_certified(std::move(c), "deg_V mismatch");
    if (!c.smooth) return not_certified(std::move(c), "branch data fail the smoothness check");
    if (c.splitting->degenerate_count > 0) return not_certified(std::move(c), "degenerate characters present");
    c.irreducible_all = true;
    for (std::int64_t j = 1; j < n; ++j)
      c.irreducible_all = c.irreducible_all && is_irreducible(w, CharacterIndex(j, w.n()));
    if (!c.irreducible_all) return not_certified(std::move(c), "some eigenspace is reducible");
    if (c.splitting->rank_flat < 2) return not_certified(std::move(c), "no flat summand");

    InfiniteWitness wit;
    wit.j_star = find_infinite_character(w).value();
    wit.unit_h = mod_floor(-wit.j_star, n);
    wit.sigma = sigma_sum(w, CharacterIndex(wit.j_star, w.n()));
    const bool flat_top = c.splitting->entries.back().split_class == SplitClass::Flat;
    wit.valid = flat_top && wit.sigma == 2 * n && std::gcd(wit.unit_h, n) == 1 &&
                mod_floor(wit.unit_h * (n - 1), n) == wit.j_star;
    c.infinite_witness = wit;
    if (!wit.valid) return not_certified(std::move(c), "infinite-monodromy witness failed validation");

    if (opts.oracle) c.oracle = run_oracle(w, wit, opts);
  } catch (const Error& e) {
    return not_certified(std::move(c), e.what());
  }
  c.verdict = Verdict::Counterexample;
  return c;
}

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> shimura_pairs(const WeightTuple& w) {
  const std::int64_t n = w.n().value();
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t j = 1; 2 * j <= n; ++j) {
    const CharacterIndex ch(j, w.n());
    if (!is_degenerate(w, ch) && sigma_sum(w, ch) == 2 * n) pairs.emplace_back(j, n - j);
  }
  return pairs;
}

}  // namespace

std::int64_t shimura_count(const WeightTuple& w) { return static_cast<std::int64_t>(shimura_pairs(w).size()); }

bool is_shimura_candidate(const WeightTuple& w) { return shimura_count(w) == 1; }

ShimuraReport shimura_report(const FamilyData& f) {
  ShimuraReport r(f);
  r.pairs = shimura_pairs(f.weights());
  r.count = static_cast<std::int64_t>(r.pairs.size());
  r.candidate = r.count == 1;
  return r;
}

std::vector<FamilyData> enumerate_family_data(std::int64_t n_min, std::int64_t n_max, EnumerationMode mode,
                                              bool normalize_tuples) {
  std::vector<FamilyData> out;
  for (std::int64_t n = std::max<std::int64_t>(n_min, 5); n <= n_max; ++n) {
    if (!admissible_exists(n)) continue;
    if (mode == EnumerationMode::StandardOnly) {
      out.push_back(standard_family(n));
      continue;
    }
    std::vector<FamilyData> fams = admissible_families(n);
    if (normalize_tuples) {
      std::set<FamilyData> reps;
      for (const FamilyData& f : fams) reps.insert(normalize(f));
      fams.assign(reps.begin(), reps.end());
    }
    out.insert(out.end(), fams.begin(), fams.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Certificate> enumerate_families(std::int64_t n_min, std::int64_t n_max, EnumerationMode mode,
                                            bool normalize_tuples, const CertifyOptions& opts, int jobs) {
  return parallel_map(enumerate_family_data(n_min, n_max, mode, normalize_tuples),
                      [&opts](const FamilyData& f) { return certify(f, opts); }, jobs);
}

}  // namespace cyclocover
