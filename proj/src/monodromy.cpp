#include "cyclocover/monodromy.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "cyclocover/error.hpp"
#include "cyclocover/exact_linalg.hpp"

namespace cyclocover {

namespace {

using Ci = CyclotomicInteger;
using Cq = CyclotomicNumber;

// e(q) = exp(2 pi i q).
Ci root_at(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return Ci::root_of_unity(r.get_num().get_si(), r.get_den().get_si());
}

Matrix2<Integer> companion(const Ci& trace_coeff, const Ci& det_coeff) {
  // Companion of x^2 - t x + d.
  Matrix2<Integer> m;
  m << Ci(0), -det_coeff, Ci(1), trace_coeff;
  return m;
}

// Inverse of a matrix whose determinant is a root of unity.
Matrix2<Integer> unimodular_inverse(const Matrix2<Integer>& m) {
  const Ci d = determinant(m);
  if (d * d.conj() != Ci(1)) throw std::logic_error("determinant is not a root of unity");
  Matrix2<Integer> inv = adjugate(m);
  const Ci dinv = d.conj();
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) inv(i, k) = inv(i, k) * dinv;
  return inv;
}

bool is_scalar(const Matrix2<Integer>& m) {
  return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1);
}

Word unwind(const std::vector<std::int64_t>& parent, const std::vector<Generator>& via, std::int64_t idx) {
  Word w;
  while (idx != 0) {
    w.push_back(via[static_cast<std::size_t>(idx)]);
    idx = parent[static_cast<std::size_t>(idx)];
  }
  return {w.rbegin(), w.rend()};
}

constexpr Generator kGenerators[] = {Generator::G0, Generator::G1, Generator::GInf};

// Generators and identity at one common level, so that hashing is sound.
struct LevelledGenerators {
  std::int64_t level;
  Matrix2<Integer> gens[3];
  Matrix2<Integer> identity;

  explicit LevelledGenerators(const MonodromyTriple& t) {
    level = std::lcm(std::lcm(matrix_level(t.g0), matrix_level(t.g1)), matrix_level(t.ginf));
    level = CyclotomicField::canonical_level(level);
    gens[0] = at_level(t.g0, level);
    gens[1] = at_level(t.g1, level);
    gens[2] = at_level(t.ginf, level);
    identity = at_level(identity2<Integer>(), level);
  }
  const Matrix2<Integer>& operator[](Generator g) const { return gens[static_cast<int>(g)]; }
};

}  // namespace

HypergeometricParams params_from_weights(const WeightTuple& w, const CharacterIndex& j) {
  if (j.is_trivial()) throw Error(ErrorCode::InvalidArgument, "character j must be nonzero");
  const std::int64_t n = w.n().value();
  const Rational jj(j.value());
  HypergeometricParams p{Rational(w.m(3), n), 1 - Rational(w.m(0), n), 2 - Rational(w.m(0) + w.m(2), n)};
  p.a.canonicalize();
  p.b.canonicalize();
  p.c.canonicalize();
  return {p.a * jj, p.b * jj, p.c * jj};
}

bool is_irreducible(const HypergeometricParams& p) {
  return !is_integral(p.a) && !is_integral(p.b) && !is_integral(Rational(p.a - p.c)) &&
         !is_integral(Rational(p.b - p.c));
}

bool is_irreducible(const WeightTuple& w, const CharacterIndex& j) {
  return is_irreducible(params_from_weights(w, j));
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::G0: return "g0";
    case Generator::G1: return "g1";
    case Generator::GInf: return "ginf";
  }
  return "?";
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += to_string(w[i]);
  }
  return s;
}

Word parse_word(std::string_view s) {
  Word w;
  if (s == "1" || s.empty()) return w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t star = s.find('*', pos);
    const std::string_view tok = s.substr(pos, star == std::string_view::npos ? s.npos : star - pos);
    if (tok == "g0") w.push_back(Generator::G0);
    else if (tok == "g1") w.push_back(Generator::G1);
    else if (tok == "ginf") w.push_back(Generator::GInf);
    else throw Error(ErrorCode::InvalidArgument, "unknown generator '" + std::string(tok) + "'");
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return w;
}

std::string_view to_string(FinitenessVerdict::Kind k) {
  switch (k) {
    case FinitenessVerdict::Kind::Finite: return "FINITE";
    case FinitenessVerdict::Kind::Infinite: return "INFINITE";
    case FinitenessVerdict::Kind::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

const Matrix2<Integer>& MonodromyTriple::generator(Generator g) const {
  switch (g) {
    case Generator::G0: return g0;
    case Generator::G1: return g1;
    case Generator::GInf: return ginf;
  }
  throw std::logic_error("bad generator");
}

Matrix2<Integer> MonodromyTriple::evaluate(const Word& w) const {
  Matrix2<Integer> m = identity2<Integer>();
  for (Generator g : w) m = mul(m, generator(g));
  return m;
}

FinitenessVerdict finiteness_by_signature(const WeightTuple& w, const CharacterIndex& j) {
  if (j.is_trivial() || !is_irreducible(w, j))
    throw Error(ErrorCode::PreconditionIrreducibility,
                "the definiteness criterion needs an irreducible local system (j=" + std::to_string(j.value()) +
                    ")");
  const std::int64_t n = w.n().value();
  for (const Residue& h : units(w.n())) {
    const std::int64_t s = sigma_sum(w, CharacterIndex(h * j.j));
    if (s == 2 * n) {
      FinitenessVerdict v;
      v.kind = FinitenessVerdict::Kind::Infinite;
      v.witness_unit = h.value();
      v.witness_sigma = s;
      return v;
    }
  }
  FinitenessVerdict v;
  v.kind = FinitenessVerdict::Kind::Finite;
  return v;
}

CharacterIndex find_infinite_character(const WeightTuple& w) {
  const Residue s = reduce(w.m(0) + w.m(3), w.n());
  if (!is_unit(s))
    throw Error(ErrorCode::NoUnit, "m0 + m3 = " + std::to_string(s.value()) + " is not a unit mod n");
  const CharacterIndex j(-inverse(s));
  if (sigma_sum(w, j) != 2 * w.n().value())
    throw std::logic_error("find_infinite_character: sigma_sum(j) != 2n");
  return j;
}

MonodromyTriple rigid_triple(const HypergeometricParams& p, Modulus n) {
  const std::int64_t level = n.value();
  const Ci alpha1 = root_at(p.a), alpha2 = root_at(p.b), beta = root_at(p.c);
  const Matrix2<Integer> a = companion(alpha1 + alpha2, alpha1 * alpha2);
  const Matrix2<Integer> b = companion(Ci(1) + beta, beta);
  MonodromyTriple t;
  t.level = CyclotomicField::canonical_level(level);
  t.ginf = a;
  t.g0 = unimodular_inverse(b);
  t.g1 = mul(b, unimodular_inverse(a));
  t.params = p;
  if (!is_identity(mul(mul(t.g0, t.g1), t.ginf))) throw std::logic_error("g0 g1 ginf != 1");
  return t;
}

MonodromyTriple levelt_triple(const HypergeometricParams& p, Modulus n) {
  if (!is_irreducible(p))
    throw Error(ErrorCode::ReducibleParameters,
                "local eigenvalues at 0 and infinity overlap; the rigid construction is reducible");
  return rigid_triple(p, n);
}

MonodromyTriple identity_triple(std::int64_t level) {
  MonodromyTriple t;
  t.level = CyclotomicField::canonical_level(level);
  t.g0 = t.g1 = t.ginf = identity2<Integer>();
  return t;
}

Integer finite_order_bound(std::int64_t level) {
  const std::int64_t target = 2 * euler_phi(level);
  // phi(k) >= sqrt(k/2), so every k with phi(k) <= target is below 2 target^2 + 2.
  const std::int64_t limit = 2 * target * target + 2;
  Integer l = 1;
  for (std::int64_t k = 1; k <= limit; ++k)
    if (euler_phi(k) <= target) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(k));
  return l;
}

bool has_finite_order(const Matrix2<Integer>& m) {
  const Ci d = determinant(m);
  const Ci dbar = d.conj();
  // An algebraic integer with |d| = 1 in every embedding is a root of unity.
  if (d * dbar != Ci(1)) return false;
  const Ci t = trace(m);
  const Ci s = t * t * dbar - Ci(2);
  if (s == Ci(2)) return is_scalar(m);
  if (s == Ci(-2)) return true;
  if (!s.is_real()) return false;
  const std::int64_t level = std::max(s.level(), t.level());
  const Ci upper = Ci(2) - s, lower = Ci(2) + s;
  for (std::int64_t h : CyclotomicField::get(level).unit_list) {
    if (upper.promote(level).real_sign(h) <= 0) return false;
    if (lower.promote(level).real_sign(h) <= 0) return false;
  }
  return true;
}

std::optional<std::int64_t> element_order(const Matrix2<Integer>& m) {
  if (!has_finite_order(m)) return std::nullopt;
  std::int64_t level = 1;
  for (int i = 0; i < 4; ++i) level = lcm(level, m(i / 2, i % 2).level());
  const Integer bound = finite_order_bound(level);
  Matrix2<Integer> p = m;
  std::int64_t k = 1;
  while (!is_identity(p)) {
    p = mul(p, m);
    ++k;
    if (Integer(k) > bound) throw std::logic_error("element_order exceeded the finite-order bound");
  }
  return k;
}

std::optional<Word> infinite_order_witness(const MonodromyTriple& t, int max_word_len) {
  if (max_word_len < 1) throw Error(ErrorCode::InvalidArgument, "max_word_len must be >= 1");
  std::unordered_map<Matrix2<Integer>, std::int64_t, Matrix2Hash<Integer>, Matrix2Equal<Integer>> seen;
  const LevelledGenerators gens(t);
  std::vector<Matrix2<Integer>> elems{gens.identity};
  std::vector<std::int64_t> parent{-1};
  std::vector<Generator> via{Generator::G0};
  seen.emplace(elems[0], 0);
  std::size_t layer_begin = 0, layer_end = 1;
  for (int len = 1; len <= max_word_len; ++len) {
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Generator g : kGenerators) {
        Matrix2<Integer> p = mul(elems[i], gens[g]);
        if (seen.contains(p)) continue;
        const auto idx = static_cast<std::int64_t>(elems.size());
        seen.emplace(p, idx);
        elems.push_back(p);
        parent.push_back(static_cast<std::int64_t>(i));
        via.push_back(g);
        if (!has_finite_order(elems.back())) return unwind(parent, via, idx);
      }
    }
    layer_begin = layer_end;
    layer_end = elems.size();
    if (layer_begin == layer_end) break;
  }
  return std::nullopt;
}

FinitenessVerdict group_closure(const MonodromyTriple& t, std::int64_t cap, int max_word_len) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "cap must be >= 1");
  std::unordered_map<Matrix2<Integer>, std::int64_t, Matrix2Hash<Integer>, Matrix2Equal<Integer>> seen;
  const LevelledGenerators gens(t);
  std::vector<Matrix2<Integer>> elems{gens.identity};
  std::vector<std::int64_t> parent{-1};
  std::vector<Generator> via{Generator::G0};
  seen.emplace(elems[0], 0);
  FinitenessVerdict v;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Generator g : kGenerators) {
      Matrix2<Integer> p = mul(elems[i], gens[g]);
      if (seen.contains(p)) continue;
      const auto idx = static_cast<std::int64_t>(elems.size());
      if (idx >= cap) {
        if (auto w = infinite_order_witness(t, max_word_len)) {
          v.kind = FinitenessVerdict::Kind::Infinite;
          v.witness_word = std::move(*w);
          return v;
        }
        v.kind = FinitenessVerdict::Kind::Inconclusive;
        v.cap = cap;
        v.explored = idx;
        v.max_word_len = max_word_len;
        return v;
      }
      seen.emplace(p, idx);
      elems.push_back(std::move(p));
      parent.push_back(static_cast<std::int64_t>(i));
      via.push_back(g);
      if (!has_finite_order(elems.back())) {
        v.kind = FinitenessVerdict::Kind::Infinite;
        v.witness_word = unwind(parent, via, idx);
        return v;
      }
    }
  }
  v.kind = FinitenessVerdict::Kind::Finite;
  v.order = static_cast<std::int64_t>(elems.size());
  return v;
}

bool has_common_eigenvector(const MonodromyTriple& t) {
  if (is_scalar(t.g0)) return true;
  std::vector<Ci> candidates;
  if (t.params) {
    candidates = {Ci(1), root_at(-t.params->c)};
  } else {
    // Eigenvalues of a finite-order g0 over Q(zeta_N) are 2N-th roots of unity.
    for (std::int64_t k = 0; k < 2 * t.level; ++k) candidates.push_back(Ci::root_of_unity(k, 2 * t.level));
  }
  for (const Ci& lambda : candidates) {
    Matrix2<Integer> shifted = t.g0;
    shifted(0, 0) -= lambda;
    shifted(1, 1) -= lambda;
    if (!determinant(shifted).is_zero()) continue;
    const int row = (shifted(0, 0).is_zero() && shifted(0, 1).is_zero()) ? 1 : 0;
    Vector2<Integer> v;
    v << shifted(row, 1), -shifted(row, 0);
    const Ci w0 = t.ginf(0, 0) * v(0) + t.ginf(0, 1) * v(1);
    const Ci w1 = t.ginf(1, 0) * v(0) + t.ginf(1, 1) * v(1);
    if ((v(0) * w1 - v(1) * w0).is_zero()) return true;
  }
  return false;
}

HermitianForm invariant_hermitian_form(const MonodromyTriple& t) {
  const Matrix2<Rational> gens[] = {
      t.g0.unaryExpr([](const Ci& x) { return x.cast<Rational>(); }),
      t.ginf.unaryExpr([](const Ci& x) { return x.cast<Rational>(); }),
  };
  // Unknowns X00, X01, X10, X11; equation conj(g)^T X g - X = 0.
  DynMatrix<Cq> system(8, 4);
  for (int gi = 0; gi < 2; ++gi) {
    const Matrix2<Rational>& g = gens[gi];
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j)
          for (int l = 0; l < 2; ++l) {
            Cq coeff = g(j, i).conj() * g(l, k);
            if (i == j && k == l) coeff -= Cq(1);
            system(gi * 4 + i * 2 + k, j * 2 + l) = coeff;
          }
  }
  const auto kernel = nullspace<Cq>(system);
  if (kernel.size() != 1)
    throw Error(ErrorCode::ReducibleNoUniqueForm,
                "invariant sesquilinear forms span dimension " + std::to_string(kernel.size()));
  Matrix2<Rational> x;
  x << kernel[0](0), kernel[0](1), kernel[0](2), kernel[0](3);
  const Matrix2<Rational> xs = adjoint(x);
  Matrix2<Rational> m = x + xs;
  if (m(0, 0).is_zero() && m(0, 1).is_zero() && m(1, 0).is_zero() && m(1, 1).is_zero()) {
    // x is anti-Hermitian; multiply by the imaginary number zeta - conj(zeta).
    const Cq z = Cq::root_of_unity(1, t.level);
    const Cq imag = z - z.conj();
    m = (x - xs).unaryExpr([&](const Cq& c) { return imag * c; });
  }

  const Cq det = determinant(m);
  const int det_sign = det.real_sign();
  // A degenerate invariant form has an invariant radical, so the system is reducible.
  if (det_sign == 0) throw Error(ErrorCode::ReducibleNoUniqueForm, "the invariant form is degenerate");
  HermitianForm form;
  if (det_sign < 0) {
    form.signature = {1, 1};
  } else {
    form.signature = m(0, 0).real_sign() > 0 ? Signature{2, 0} : Signature{0, 2};
  }

  if (t.params) {
    // Root of the reflection g1: a nonzero column of g1 - 1.
    Matrix2<Integer> r = t.g1 - identity2<Integer>();
    const int col = (r(0, 0).is_zero() && r(1, 0).is_zero()) ? 1 : 0;
    Vector2<Rational> v;
    v << r(0, col).cast<Rational>(), r(1, col).cast<Rational>();
    const Cq norm = v(0).conj() * (m(0, 0) * v(0) + m(0, 1) * v(1)) + v(1).conj() * (m(1, 0) * v(0) + m(1, 1) * v(1));
    const Rational local = frac(t.params->a) + frac(Rational(t.params->b - t.params->c)) - 1;
    const int want = sgn(local);
    const int have = norm.is_zero() ? 0 : norm.real_sign();
    if (want != 0 && have != 0 && want != have) {
      m = -m;
      std::swap(form.signature.positive, form.signature.negative);
    }
  }
  form.matrix = m;
  return form;
}

}  // namespace cyclocover
