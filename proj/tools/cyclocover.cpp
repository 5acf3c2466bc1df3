#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cyclocover/certify.hpp"
#include "cyclocover/error.hpp"
#include "cyclocover/parallel.hpp"
#include "cyclocover/serialize.hpp"
#include "cyclocover/sweep.hpp"

using namespace cyclocover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitNotCertified = 3;

constexpr std::int64_t kSweepSafeBound = 16;

struct Options {
  std::int64_t n = 0;
  std::vector<std::int64_t> m;
  std::vector<std::int64_t> nw;
  std::optional<std::int64_t> j;
  bool oracle = false;
  std::int64_t cap = kDefaultClosureCap;
  int max_word = kDefaultMaxWordLength;
  std::int64_t n_min = 5;
  std::int64_t n_max = 12;
  bool standard_only = false;
  bool all = false;
  bool normalize = false;
  int jobs = 1;
  std::string params;
  std::int64_t level = 0;
  bool flip_oracle = false;
};

void emit(const OutputRecord& r) { std::cout << serialize(r) << std::flush; }

WeightTuple parse_weights(const Options& o) {
  if (o.m.size() != 4) throw Error(ErrorCode::InvalidArgument, "expected four weights m0,m1,m2,m3");
  return WeightTuple(o.n, {o.m[0], o.m[1], o.m[2], o.m[3]});
}

FamilyData parse_family(const Options& o) {
  const WeightTuple w = parse_weights(o);
  if (!w.sums_to_n()) throw Error(ErrorCode::InvalidArgument, "weights must sum to n for a surface family");
  if (o.nw.size() != 3) throw Error(ErrorCode::InvalidArgument, "expected three base weights n0,n1,n2");
  return FamilyData(w, {o.nw[0], o.nw[1], o.nw[2]});
}

Check check(std::string name, bool passed, std::string details = "") {
  return {std::move(name), passed, std::move(details)};
}

int cmd_analyze(const Options& o) {
  const WeightTuple w = parse_weights(o);
  OutputRecord r;
  r.command = "analyze";
  r.inputs = {{"n", o.n}, {"m", o.m}, {"j", o.j ? Json(*o.j) : Json(nullptr)}};
  r.result["weights"] = w;
  if (o.j) {
    const CharacterIndex j(*o.j, w.n());
    if (j.is_trivial()) throw Error(ErrorCode::InvalidArgument, "character j must be nonzero mod n");
    const EigenspaceReport e = [&] {
      for (const EigenspaceReport& x : eigenspace_table(w))
        if (x.j == j.value()) return x;
      throw Error(ErrorCode::InvalidArgument, "character out of range");
    }();
    r.result["report"] = e;
    r.result["params"] = params_from_weights(w, j);
    const bool irr = is_irreducible(w, j);
    r.result["irreducible"] = irr;
    Json orbit = Json::array();
    for (const Residue& x : galois_orbit(j)) orbit.push_back(x.value());
    r.result["galois_orbit"] = orbit;
    r.result["finiteness"] = irr ? Json(finiteness_by_signature(w, j)) : Json(nullptr);
    if (!e.degenerate)
      r.checks.push_back(check("sigma_in_range", e.sigma == w.n() || e.sigma == 2 * w.n() || e.sigma == 3 * w.n()));
  } else {
    const std::vector<EigenspaceReport> table = eigenspace_table(w);
    r.result["table"] = table;
    Json classes = Json::array();
    std::int64_t total = 0;
    for (const auto& e : table) {
      classes.push_back(e.degenerate ? Json(nullptr) : Json(to_string(e.split_class)));
      total += e.dim_h10;
    }
    r.result["classes"] = classes;
    r.result["total_dim_h10"] = total;
    if (w.all_units() && w.sums_to_n())
      r.checks.push_back(check("total_dim_h10_is_genus", total == w.n() - 1, "sum of dim_h10 = n-1"));
  }
  emit(r);
  return kExitOk;
}

std::vector<Check> certificate_checks(const Certificate& c) {
  std::vector<Check> out;
  out.push_back(check("admissible", c.admissible(), c.admissibility.reason));
  out.push_back(check("smooth", c.smooth));
  out.push_back(check("irreducible_all", c.irreducible_all));
  out.push_back(check("rank_flat_at_least_2", c.splitting && c.splitting->rank_flat >= 2));
  out.push_back(check("infinite_witness_valid", c.infinite_witness && c.infinite_witness->valid));
  if (c.invariants) {
    const SurfaceInvariants& s = *c.invariants;
    out.push_back(check("noether", (s.K2 + s.e) % 12 == 0 && s.chi * 12 == s.K2 + s.e, "12 chi = K2 + e"));
    out.push_back(check("zeuthen_segre", s.mu == 3, "e - 4(g-1)(b-1) = 3"));
    out.push_back(check("slope_above_5_2", s.slope > Rational(5, 2)));
  }
  if (c.oracle) {
    const OracleCheck& oc = *c.oracle;
    out.push_back(check("oracle_agrees", oc.agrees(),
                        "criterion " + std::string(to_string(oc.criterion)) + ", oracle " +
                            std::string(to_string(oc.oracle))));
  }
  return out;
}

int certificate_exit(const Certificate& c) {
  if (c.oracle && !c.oracle->agrees()) return kExitInconsistent;
  return c.verdict == Verdict::Counterexample ? kExitOk : kExitNotCertified;
}

CertifyOptions certify_options(const Options& o) { return {o.oracle, o.cap, o.max_word}; }

int cmd_certify(const Options& o) {
  const FamilyData f = parse_family(o);
  Certificate c = certify(f, certify_options(o));
  if (o.flip_oracle && c.oracle) c.oracle->oracle = FinitenessVerdict::Kind::Finite;
  OutputRecord r;
  r.command = "certify";
  r.inputs = {{"n", o.n}, {"m", o.m}, {"nw", o.nw}, {"oracle", o.oracle}, {"cap", o.cap}, {"max_word", o.max_word}};
  r.result = c;
  r.checks = certificate_checks(c);
  emit(r);
  return certificate_exit(c);
}

EnumerationMode mode_of(const Options& o) {
  if (o.standard_only && o.all) throw Error(ErrorCode::InvalidArgument, "--standard-only and --all are exclusive");
  return o.all ? EnumerationMode::All : EnumerationMode::StandardOnly;
}

int cmd_enumerate(const Options& o) {
  if (o.n_min > o.n_max) throw Error(ErrorCode::InvalidArgument, "n-min must not exceed n-max");
  const EnumerationMode mode = mode_of(o);
  const Json inputs = {{"n_min", o.n_min},   {"n_max", o.n_max},          {"mode", o.all ? "ALL" : "STANDARD_ONLY"},
                       {"normalize", o.normalize}, {"oracle", o.oracle}};
  int code = kExitOk;
  for (const Certificate& c : enumerate_families(o.n_min, o.n_max, mode, o.normalize, certify_options(o), o.jobs)) {
    OutputRecord r;
    r.command = "enumerate";
    r.inputs = inputs;
    r.result = c;
    r.checks = certificate_checks(c);
    emit(r);
    if (certificate_exit(c) == kExitInconsistent) code = kExitInconsistent;
  }
  return code;
}

int cmd_sweep(const Options& o) {
  if (o.n_max > kSweepSafeBound)
    throw Error(ErrorCode::InvalidArgument, "sweep n-max above the safe bound " + std::to_string(kSweepSafeBound));
  if (o.cap < 1 || o.max_word < 1) throw Error(ErrorCode::InvalidArgument, "cap and max-word must be positive");
  const SweepSummary s = criterion_sweep(o.n_max, o.cap, o.max_word, o.jobs);
  OutputRecord r;
  r.command = "sweep";
  r.inputs = {{"n_max", o.n_max}, {"cap", o.cap}, {"max_word", o.max_word}};
  r.result = s;
  r.checks.push_back(check("criterion_oracle_agree", s.disagreements == 0,
                           std::to_string(s.disagreements) + " disagreements"));
  r.checks.push_back(check("irreducibility_agree", s.irreducibility_disagreements == 0));
  r.checks.push_back(check("signature_agree", s.signature_disagreements == 0));
  r.checks.push_back(check("no_inconclusive", s.inconclusive == 0, std::to_string(s.inconclusive) + " inconclusive"));
  emit(r);
  return s.consistent() ? kExitOk : kExitInconsistent;
}

int cmd_shimura(const Options& o) {
  const EnumerationMode mode = o.standard_only ? EnumerationMode::StandardOnly : EnumerationMode::All;
  const Json inputs = {{"n_min", o.n_min}, {"n_max", o.n_max}, {"mode", o.standard_only ? "STANDARD_ONLY" : "ALL"},
                       {"normalize", o.normalize}};
  const auto reports = parallel_map(enumerate_family_data(o.n_min, o.n_max, mode, o.normalize),
                                    [](const FamilyData& f) { return shimura_report(f); }, o.jobs);
  for (const ShimuraReport& s : reports) {
    OutputRecord r;
    r.command = "shimura";
    r.inputs = inputs;
    r.result = s;
    emit(r);
  }
  return kExitOk;
}

HypergeometricParams parse_params(const std::string& s) {
  std::vector<Rational> v;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    v.push_back(parse_fraction_string(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (v.size() != 3) throw Error(ErrorCode::InvalidArgument, "expected three parameters a,b,c");
  return {v[0], v[1], v[2]};
}

int cmd_oracle(const Options& o) {
  OutputRecord r;
  r.command = "oracle";
  std::optional<WeightTuple> w;
  std::optional<CharacterIndex> j;
  HypergeometricParams p;
  std::int64_t level = 0;
  if (!o.params.empty()) {
    p = parse_params(o.params);
    level = 1;
    for (const Rational& q : {p.a, p.b, p.c}) level = lcm(level, q.get_den().get_si());
    if (o.level != 0) {
      if (o.level % level != 0) throw Error(ErrorCode::InvalidArgument, "--level must be a multiple of every denominator");
      level = o.level;
    }
    level = std::max<std::int64_t>(level, 2);
    r.inputs = {{"params", o.params}, {"level", o.level}};
  } else {
    w = parse_weights(o);
    if (!o.j) throw Error(ErrorCode::InvalidArgument, "oracle needs -j or --params");
    j = CharacterIndex(*o.j, w->n());
    if (j->is_trivial()) throw Error(ErrorCode::InvalidArgument, "character j must be nonzero mod n");
    p = params_from_weights(*w, *j);
    level = o.n;
    r.inputs = {{"n", o.n}, {"m", o.m}, {"j", *o.j}};
  }
  r.inputs["cap"] = o.cap;
  r.inputs["max_word"] = o.max_word;
  const MonodromyTriple t = rigid_triple(p, Modulus(level));
  r.result["params"] = p;
  r.result["level"] = t.level;
  Json gens, traces, dets;
  for (Generator g : {Generator::G0, Generator::G1, Generator::GInf}) {
    gens[to_string(g)] = matrix_to_json(t.generator(g));
    traces[to_string(g)] = trace(t.generator(g)).to_string();
    dets[to_string(g)] = determinant(t.generator(g)).to_string();
  }
  r.result["generators"] = gens;
  r.result["traces"] = traces;
  r.result["determinants"] = dets;
  const bool product_ok = is_identity(mul(mul(t.g0, t.g1), t.ginf));
  r.checks.push_back(check("product_is_identity", product_ok));
  const bool irr = is_irreducible(p);
  r.result["irreducible"] = irr;
  r.result["common_eigenvector"] = has_common_eigenvector(t);
  r.checks.push_back(check("irreducibility_agrees", irr != has_common_eigenvector(t)));
  int code = product_ok && irr != has_common_eigenvector(t) ? kExitOk : kExitInconsistent;
  if (!irr) {
    r.result["form"] = nullptr;
    r.result["verdict"] = nullptr;
    emit(r);
    return code;
  }
  const HermitianForm form = invariant_hermitian_form(t);
  r.result["form"] = {{"matrix", matrix_to_json(form.matrix)}, {"signature", form.signature}};
  const FinitenessVerdict v = group_closure(t, o.cap, o.max_word);
  r.result["verdict"] = v;
  if (w) {
    const FinitenessVerdict crit = finiteness_by_signature(*w, *j);
    r.result["criterion"] = crit;
    const bool agree = v.is_inconclusive() || v.kind == crit.kind;
    r.checks.push_back(check("oracle_agrees", agree));
    const Signature expected = signature(*w, *j);
    r.checks.push_back(check("signature_agrees", expected == form.signature));
    if (!agree || expected != form.signature) code = kExitInconsistent;
  }
  emit(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic covers of P^1 branched at four points: eigenspaces, monodromy and surface certificates"};
  app.require_subcommand(0, 1);
  bool schema = false;
  app.add_flag("--schema", schema, "Print the JSON schema of the output records");
  app.add_flag("--json", "JSON output (the default and only mode)");
  Options o;

  auto add_weights = [&](CLI::App* c) {
    c->add_option("-n", o.n, "Order of the cyclic group")->required();
    c->add_option("-m", o.m, "Weights m0,m1,m2,m3")->delimiter(',')->required();
  };
  auto add_limits = [&](CLI::App* c) {
    c->add_option("--cap", o.cap, "Closure cap")->check(CLI::PositiveNumber);
    c->add_option("--max-word", o.max_word, "Maximal word length of the witness search")->check(CLI::PositiveNumber);
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Eigenspace table or a single character report");
  add_weights(analyze);
  analyze->add_option("-j", o.j, "Character index");

  CLI::App* cert = app.add_subcommand("certify", "Certificate for one family");
  add_weights(cert);
  cert->add_option("--nw", o.nw, "Base weights n0,n1,n2")->delimiter(',')->required();
  cert->add_flag("--oracle", o.oracle, "Cross-check with the matrix oracle");
  add_limits(cert);
#ifdef CYCLOCOVER_FAULT_INJECTION
  // Test builds only: pretend the oracle found a finite group.
  cert->add_flag("--flip-oracle", o.flip_oracle);
#endif

  CLI::App* en = app.add_subcommand("enumerate", "Certificates for a range of n, one per line");
  en->add_option("--n-min", o.n_min)->required();
  en->add_option("--n-max", o.n_max)->required();
  en->add_flag("--standard-only", o.standard_only, "Standard family only (default)");
  en->add_flag("--all", o.all, "Every admissible tuple");
  en->add_flag("--normalize", o.normalize, "One tuple per symmetry class");
  en->add_flag("--oracle", o.oracle, "Cross-check with the matrix oracle");
  en->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_limits(en);

  CLI::App* sw = app.add_subcommand("sweep", "Criterion against matrix oracle on all small weight tuples");
  sw->add_option("--n-max", o.n_max, "Largest n (at most 16)");
  sw->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_limits(sw);

  CLI::App* sh = app.add_subcommand("shimura", "Shimura-curve candidate counts, one family per line");
  sh->add_option("--n-min", o.n_min);
  sh->add_option("--n-max", o.n_max)->required();
  sh->add_flag("--standard-only", o.standard_only, "Standard family only");
  sh->add_flag("--normalize", o.normalize, "One tuple per symmetry class");
  sh->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI::App* orc = app.add_subcommand("oracle", "Inspect the monodromy matrices of one character");
  orc->add_option("-n", o.n, "Order of the cyclic group");
  orc->add_option("-m", o.m, "Weights m0,m1,m2,m3")->delimiter(',');
  orc->add_option("-j", o.j, "Character index");
  orc->add_option("--params", o.params, "Parameters a,b,c as fractions instead of weights");
  orc->add_option("--level", o.level, "Cyclotomic level for --params");
  add_limits(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (schema) {
      std::cout << schema_document().dump(2) << "\n";
      return kExitOk;
    }
    if (*analyze) return cmd_analyze(o);
    if (*cert) return cmd_certify(o);
    if (*en) return cmd_enumerate(o);
    if (*sw) return cmd_sweep(o);
    if (*sh) return cmd_shimura(o);
    if (*orc) return cmd_oracle(o);
    std::cerr << app.help();
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
}
