#include "cyclocover/cyclotomic.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace cyclocover {

namespace {

using Poly = std::vector<std::int64_t>;

Poly multiply_by_xd_minus_1(const Poly& p, std::int64_t d) {
  Poly r(p.size() + static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + static_cast<std::size_t>(d)] += p[i];
    r[i] -= p[i];
  }
  return r;
}

// Exact division by x^d - 1; the caller guarantees divisibility.
Poly divide_by_xd_minus_1(const Poly& p, std::int64_t d) {
  const std::size_t du = static_cast<std::size_t>(d);
  Poly rem = p;
  Poly q(p.size() - du, 0);
  for (std::size_t i = p.size(); i-- > du;) {
    const std::int64_t c = rem[i];
    q[i - du] = c;
    rem[i] -= c;
    rem[i - du] += c;
  }
  for (std::size_t i = 0; i < du; ++i)
    if (rem[i] != 0) throw std::logic_error("non-exact cyclotomic division");
  return q;
}

int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::unique_ptr<CyclotomicField> build_field(std::int64_t level) {
  auto f = std::make_unique<CyclotomicField>();
  f->level = level;
  f->polynomial = cyclotomic_polynomial(level);
  f->degree = static_cast<std::int64_t>(f->polynomial.size()) - 1;
  const std::size_t d = static_cast<std::size_t>(f->degree);
  const std::size_t rows = std::max<std::size_t>(static_cast<std::size_t>(level), 2 * d - 1);
  f->power_table.assign(rows, Poly(d, 0));
  Poly cur(d, 0);
  cur[0] = 1;
  for (std::size_t e = 0; e < rows; ++e) {
    f->power_table[e] = cur;
    // cur *= x, then reduce x^d = -sum p_i x^i.
    const std::int64_t top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < d; ++i) cur[i] -= top * f->polynomial[i];
  }
  for (std::int64_t h = 1; h <= std::max<std::int64_t>(level - 1, 1); ++h)
    if (std::gcd(h, level) == 1) f->unit_list.push_back(h);
  return f;
}

struct FieldRegistry {
  std::mutex mutex;
  std::map<std::int64_t, std::unique_ptr<CyclotomicField>> fields;
};

FieldRegistry& registry() {
  static FieldRegistry r;
  return r;
}

// RAII holder for an mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

int sign_at_precision(const std::vector<Rational>& c, std::int64_t level, std::int64_t h, mpfr_prec_t prec,
                      bool& decided) {
  MpfrValue sum(prec), term(prec), angle(prec), bound(prec), mag(prec), pi2(prec);
  mpfr_set_zero(sum.get(), 1);
  mpfr_set_zero(mag.get(), 1);
  mpfr_const_pi(pi2.get(), MPFR_RNDN);
  mpfr_mul_ui(pi2.get(), pi2.get(), 2, MPFR_RNDN);
  std::size_t terms = 0;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    ++terms;
    const std::int64_t k = mod_floor(h * static_cast<std::int64_t>(e), level);
    mpfr_mul_si(angle.get(), pi2.get(), static_cast<long>(k), MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), static_cast<long>(level), MPFR_RNDN);
    mpfr_cos(term.get(), angle.get(), MPFR_RNDN);
    mpfr_mul_q(term.get(), term.get(), c[e].get_mpq_t(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_set_q(term.get(), c[e].get_mpq_t(), MPFR_RNDN);
    mpfr_abs(term.get(), term.get(), MPFR_RNDN);
    mpfr_add(mag.get(), mag.get(), term.get(), MPFR_RNDU);
  }
  // Each term carries a few ulps of relative error from pi, the division,
  // the cosine, the product and the running sum.
  mpfr_mul_ui(bound.get(), mag.get(), static_cast<unsigned long>(8 * (terms + 2)), MPFR_RNDU);
  mpfr_mul_2si(bound.get(), bound.get(), -static_cast<long>(prec), MPFR_RNDU);
  mpfr_abs(term.get(), sum.get(), MPFR_RNDN);
  decided = mpfr_cmp(term.get(), bound.get()) > 0;
  return mpfr_sgn(sum.get());
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic polynomial order must be >= 1");
  Poly p{1};
  std::vector<std::int64_t> divisors_down;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(n / d);
    if (mu == 1) p = multiply_by_xd_minus_1(p, d);
    else if (mu == -1) divisors_down.push_back(d);
  }
  for (std::int64_t d : divisors_down) p = divide_by_xd_minus_1(p, d);
  // For n = 1 the product is x - 1 already; otherwise the sign is positive.
  if (p.back() < 0)
    for (auto& x : p) x = -x;
  return p;
}

std::int64_t CyclotomicField::canonical_level(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclotomic level must be >= 1");
  return (n % 4 == 2) ? n / 2 : n;
}

const CyclotomicField& CyclotomicField::get(std::int64_t level) {
  level = canonical_level(level);
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto& slot = reg.fields[level];
  if (!slot) slot = build_field(level);
  return *slot;
}

namespace detail {

int real_part_sign(const std::vector<Rational>& c, std::int64_t level, std::int64_t h) {
  // Double-precision attempt with a conservative error bound.
  double sum = 0.0, mag = 0.0;
  std::size_t terms = 0;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    ++terms;
    const double v = c[e].get_d();
    const std::int64_t k = mod_floor(h * static_cast<std::int64_t>(e), level);
    sum += v * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(level));
    mag += std::fabs(v);
  }
  if (std::isfinite(sum) && std::fabs(sum) > mag * 1e-12 * static_cast<double>(terms + 2))
    return sum > 0 ? 1 : -1;

  for (mpfr_prec_t prec = 128; prec <= 1 << 16; prec *= 2) {
    bool decided = false;
    const int s = sign_at_precision(c, level, h, prec, decided);
    if (decided) return s;
  }
  throw std::runtime_error("real_part_sign: precision limit reached for a nonzero value");
}

}  // namespace detail

}  // namespace cyclocover
