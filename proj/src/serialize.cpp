#include "cyclocover/serialize.hpp"

#include <cstdio>

#include "cyclocover/error.hpp"

namespace cyclocover {

namespace {

std::string decimal6(const Rational& q) {
  // Round half away from zero at 6 places, exactly.
  Rational scaled = q * 1000000;
  Integer num = scaled.get_num(), den = scaled.get_den();
  Integer twice = 2 * num + (num >= 0 ? den : Integer(-den));
  Integer r;
  mpz_tdiv_q(r.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
  const bool neg = r < 0;
  if (neg) r = -r;
  std::string digits = r.get_str();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  return (neg ? "-" : "") + digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
}

Json kind_json(FinitenessVerdict::Kind k) { return std::string(to_string(k)); }

FinitenessVerdict::Kind kind_from(const Json& j) {
  const auto s = j.get<std::string>();
  for (auto k : {FinitenessVerdict::Kind::Finite, FinitenessVerdict::Kind::Infinite,
                 FinitenessVerdict::Kind::Inconclusive})
    if (to_string(k) == s) return k;
  throw Error(ErrorCode::InvalidArgument, "unknown verdict kind " + s);
}

SplitClass split_from(const Json& j) {
  const auto s = j.get<std::string>();
  for (auto c : {SplitClass::Zero, SplitClass::AmpleCandidate, SplitClass::Flat})
    if (to_string(c) == s) return c;
  throw Error(ErrorCode::InvalidArgument, "unknown split class " + s);
}

template <typename T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

std::string serialize(const OutputRecord& r) { return Json(r).dump() + "\n"; }

OutputRecord parse_record(std::string_view line) { return Json::parse(line).get<OutputRecord>(); }

void to_json(Json& j, const Check& c) { j = Json{{"name", c.name}, {"passed", c.passed}, {"details", c.details}}; }

void from_json(const Json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.details = j.at("details").get<std::string>();
}

void to_json(Json& j, const OutputRecord& r) {
  j = Json{{"schema_version", r.schema_version},
           {"command", r.command},
           {"inputs", r.inputs},
           {"result", r.result},
           {"checks", r.checks}};
}

void from_json(const Json& j, OutputRecord& r) {
  r.schema_version = j.at("schema_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  r.checks = j.at("checks").get<std::vector<Check>>();
}

void to_json(Json& j, const WeightTuple& w) { j = Json{{"n", w.n().value()}, {"m", w.m()}}; }

WeightTuple weight_tuple_from_json(const Json& j) {
  return WeightTuple(j.at("n").get<std::int64_t>(), j.at("m").get<std::array<std::int64_t, 4>>());
}

void to_json(Json& j, const FamilyData& f) {
  j = Json{{"n", f.n()}, {"m", f.weights().m()}, {"nw", f.base_weights()}};
}

FamilyData family_from_json(const Json& j) {
  return FamilyData(weight_tuple_from_json(j), j.at("nw").get<std::array<std::int64_t, 3>>());
}

void to_json(Json& j, const Signature& s) { j = Json::array({s.positive, s.negative}); }

void from_json(const Json& j, Signature& s) {
  s.positive = j.at(0).get<int>();
  s.negative = j.at(1).get<int>();
}

void to_json(Json& j, const EigenspaceReport& e) {
  j = Json{{"j", e.j}, {"degenerate", e.degenerate}};
  if (e.degenerate) return;
  j["sigma"] = e.sigma;
  j["dim_h10"] = e.dim_h10;
  j["dim_h01"] = e.dim_h01;
  j["signature"] = e.signature;
  j["split_class"] = to_string(e.split_class);
}

void from_json(const Json& j, EigenspaceReport& e) {
  e = EigenspaceReport{};
  e.j = j.at("j").get<std::int64_t>();
  e.degenerate = j.at("degenerate").get<bool>();
  if (e.degenerate) return;
  e.sigma = j.at("sigma").get<std::int64_t>();
  e.dim_h10 = j.at("dim_h10").get<int>();
  e.dim_h01 = j.at("dim_h01").get<int>();
  e.signature = j.at("signature").get<Signature>();
  e.split_class = split_from(j.at("split_class"));
}

void to_json(Json& j, const HypergeometricParams& p) {
  j = Json{{"a", to_fraction_string(p.a)}, {"b", to_fraction_string(p.b)}, {"c", to_fraction_string(p.c)}};
}

void from_json(const Json& j, HypergeometricParams& p) {
  p.a = parse_fraction_string(j.at("a").get<std::string>());
  p.b = parse_fraction_string(j.at("b").get<std::string>());
  p.c = parse_fraction_string(j.at("c").get<std::string>());
}

void to_json(Json& j, const FinitenessVerdict& v) {
  j = Json{{"kind", kind_json(v.kind)}};
  switch (v.kind) {
    case FinitenessVerdict::Kind::Finite:
      j["order"] = optional_json(v.order);
      break;
    case FinitenessVerdict::Kind::Infinite:
      j["witness_word"] = v.witness_word ? Json(to_string(*v.witness_word)) : Json(nullptr);
      j["witness_unit"] = optional_json(v.witness_unit);
      j["witness_sigma"] = optional_json(v.witness_sigma);
      break;
    case FinitenessVerdict::Kind::Inconclusive:
      j["cap"] = v.cap;
      j["explored"] = v.explored;
      j["max_word_len"] = v.max_word_len;
      break;
  }
}

void from_json(const Json& j, FinitenessVerdict& v) {
  v = FinitenessVerdict{};
  v.kind = kind_from(j.at("kind"));
  switch (v.kind) {
    case FinitenessVerdict::Kind::Finite:
      v.order = optional_from<std::int64_t>(j.at("order"));
      break;
    case FinitenessVerdict::Kind::Infinite:
      if (!j.at("witness_word").is_null()) v.witness_word = parse_word(j.at("witness_word").get<std::string>());
      v.witness_unit = optional_from<std::int64_t>(j.at("witness_unit"));
      v.witness_sigma = optional_from<std::int64_t>(j.at("witness_sigma"));
      break;
    case FinitenessVerdict::Kind::Inconclusive:
      v.cap = j.at("cap").get<std::int64_t>();
      v.explored = j.at("explored").get<std::int64_t>();
      v.max_word_len = j.at("max_word_len").get<int>();
      break;
  }
}

void to_json(Json& j, const SurfaceInvariants& s) {
  j = Json{{"g", s.g},
           {"b", s.b},
           {"e", s.e},
           {"K2", s.K2},
           {"chi", s.chi},
           {"slope", to_fraction_string(s.slope)},
           {"slope_decimal", decimal6(s.slope)},
           {"deg_V", s.deg_V},
           {"mu", s.mu},
           {"ball_quotient", s.ball_quotient},
           {"irregularity", s.irregularity},
           {"geometric_genus", s.geometric_genus}};
}

void from_json(const Json& j, SurfaceInvariants& s) {
  s.g = j.at("g").get<std::int64_t>();
  s.b = j.at("b").get<std::int64_t>();
  s.e = j.at("e").get<std::int64_t>();
  s.K2 = j.at("K2").get<std::int64_t>();
  s.chi = j.at("chi").get<std::int64_t>();
  s.slope = parse_fraction_string(j.at("slope").get<std::string>());
  s.deg_V = j.at("deg_V").get<std::int64_t>();
  s.mu = j.at("mu").get<std::int64_t>();
  s.ball_quotient = j.at("ball_quotient").get<bool>();
  s.irregularity = j.at("irregularity").get<std::int64_t>();
  s.geometric_genus = j.at("geometric_genus").get<std::int64_t>();
}

void to_json(Json& j, const SmoothnessReport& s) {
  Json divisors = Json::array(), pairs = Json::array();
  for (const auto& d : s.divisors)
    divisors.push_back({{"label", to_string(d.label)}, {"order", d.order}, {"passed", d.passed}});
  for (const auto& p : s.pairs)
    pairs.push_back({{"pair", {to_string(p.a), to_string(p.b)}}, {"determinant", p.determinant}, {"passed", p.passed}});
  j = Json{{"smooth", s.smooth}, {"divisors", divisors}, {"pairs", pairs}};
}

void to_json(Json& j, const BranchTable& t) {
  Json divisors = Json::array(), adjacency = Json::array();
  for (const auto& d : t.divisors)
    divisors.push_back({{"label", to_string(d.label)}, {"monodromy", {d.first.value(), d.second.value()}}});
  for (const auto& [a, b] : t.adjacency) adjacency.push_back({to_string(a), to_string(b)});
  j = Json{{"divisors", divisors}, {"adjacency", adjacency}};
}

void to_json(Json& j, const SingularFibreProfile& p) {
  j = Json{{"count", p.count},
           {"component_genus", p.component_genus},
           {"components_per_fibre", p.components_per_fibre},
           {"nodes_per_fibre", p.nodes_per_fibre},
           {"fibre_genus", p.fibre_genus},
           {"positions", p.positions}};
}

void to_json(Json& j, const SplittingReport& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json x{{"j", e.j}, {"degenerate", e.degenerate}};
    if (!e.degenerate) {
      x["dim_Vj"] = e.dim_Vj;
      x["split_class"] = to_string(e.split_class);
    }
    entries.push_back(std::move(x));
  }
  j = Json{{"entries", entries},
           {"rank_V", s.rank_V},
           {"rank_flat", s.rank_flat},
           {"rank_ample_candidate", s.rank_ample_candidate},
           {"degenerate_count", s.degenerate_count},
           {"deg_V", optional_json(s.deg_V)},
           {"rank_Q_bounds", {s.rank_Q_lower, s.rank_Q_upper}}};
}

void from_json(const Json& j, SplittingReport& s) {
  s = SplittingReport{};
  for (const Json& x : j.at("entries")) {
    SplittingEntry e;
    e.j = x.at("j").get<std::int64_t>();
    e.degenerate = x.at("degenerate").get<bool>();
    if (!e.degenerate) {
      e.dim_Vj = x.at("dim_Vj").get<int>();
      e.split_class = split_from(x.at("split_class"));
    }
    s.entries.push_back(e);
  }
  s.rank_V = j.at("rank_V").get<std::int64_t>();
  s.rank_flat = j.at("rank_flat").get<std::int64_t>();
  s.rank_ample_candidate = j.at("rank_ample_candidate").get<std::int64_t>();
  s.degenerate_count = j.at("degenerate_count").get<std::int64_t>();
  s.deg_V = optional_from<std::int64_t>(j.at("deg_V"));
  s.rank_Q_lower = j.at("rank_Q_bounds").at(0).get<std::int64_t>();
  s.rank_Q_upper = j.at("rank_Q_bounds").at(1).get<std::int64_t>();
}

void to_json(Json& j, const FlatCharacter& f) { j = Json{{"j", f.j}, {"verdict", f.verdict}}; }

void to_json(Json& j, const InfiniteWitness& w) {
  j = Json{{"j_star", w.j_star}, {"unit_h", w.unit_h}, {"sigma", w.sigma}, {"valid", w.valid}};
}

void from_json(const Json& j, InfiniteWitness& w) {
  w.j_star = j.at("j_star").get<std::int64_t>();
  w.unit_h = j.at("unit_h").get<std::int64_t>();
  w.sigma = j.at("sigma").get<std::int64_t>();
  w.valid = j.at("valid").get<bool>();
}

void to_json(Json& j, const OracleCheck& o) {
  j = Json{{"flat_j", o.flat_j},
           {"criterion", kind_json(o.criterion)},
           {"oracle", kind_json(o.oracle)},
           {"witness_word", o.witness_word ? Json(to_string(*o.witness_word)) : Json(nullptr)},
           {"expected_signature", o.expected_signature},
           {"form_signature", o.form_signature},
           {"cap", o.cap},
           {"max_word_len", o.max_word_len},
           {"conclusive", o.conclusive()},
           {"agrees", o.agrees()}};
}

void to_json(Json& j, const Certificate& c) {
  j = Json{{"family", c.family},
           {"verdict", to_string(c.verdict)},
           {"reason", c.reason.empty() ? Json(nullptr) : Json(c.reason)},
           {"admissible", c.admissible()},
           {"admissibility_reason", c.admissibility.reason},
           {"smooth", c.smooth},
           {"invariants", optional_json(c.invariants)},
           {"splitting", optional_json(c.splitting)},
           {"irreducible_all", c.irreducible_all},
           {"infinite_witness", optional_json(c.infinite_witness)}};
  if (c.oracle) j["oracle"] = *c.oracle;
  j["smoothness"] = optional_json(c.smoothness);
  j["scope"] = c.scope;
}

void to_json(Json& j, const ShimuraReport& s) {
  Json pairs = Json::array();
  for (const auto& [a, b] : s.pairs) pairs.push_back({a, b});
  j = Json{{"family", s.family}, {"count", s.count}, {"candidate", s.candidate}, {"pairs", pairs}};
}

void to_json(Json& j, const SweepInstance& s) {
  j = Json{{"n", s.n}, {"m", s.m}, {"j", s.j}, {"irreducible", s.irreducible},
           {"common_eigenvector", s.common_eigenvector}};
  if (!s.irreducible) return;
  j["criterion"] = kind_json(s.criterion);
  j["oracle"] = kind_json(s.oracle);
  if (s.order) j["order"] = *s.order;
  if (s.witness_word) j["witness_word"] = to_string(*s.witness_word);
  j["signature"] = s.expected_signature;
  j["form_signature"] = s.form_signature;
}

void to_json(Json& j, const SweepSummary& s) {
  j = Json{{"n_max", s.n_max},
           {"cap", s.cap},
           {"max_word_len", s.max_word_len},
           {"tuples", s.tuples},
           {"instances", s.instances},
           {"reducible", s.reducible},
           {"agreements", s.agreements},
           {"disagreements", s.disagreements},
           {"inconclusive", s.inconclusive},
           {"finite", s.finite},
           {"irreducibility_disagreements", s.irreducibility_disagreements},
           {"signature_disagreements", s.signature_disagreements},
           {"details", s.details}};
}

Json matrix_to_json(const Matrix2<Integer>& m) {
  return Json::array({Json::array({m(0, 0).to_string(), m(0, 1).to_string()}),
                      Json::array({m(1, 0).to_string(), m(1, 1).to_string()})});
}

Json matrix_to_json(const Matrix2<Rational>& m) {
  return Json::array({Json::array({m(0, 0).to_string(), m(0, 1).to_string()}),
                      Json::array({m(1, 0).to_string(), m(1, 1).to_string()})});
}

}  // namespace cyclocover
