#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <type_traits>
#include <ostream>
#include <string>
#include <vector>

#include "cyclocover/error.hpp"
#include "cyclocover/rational.hpp"
#include "cyclocover/residue.hpp"

namespace cyclocover {

/// Arithmetic tables for Q(zeta_N) in the power basis 1, x, ..., x^(phi-1)
/// modulo the N-th cyclotomic polynomial. Levels are canonical: N is 1 or
/// not congruent to 2 mod 4, since Q(zeta_2m) = Q(zeta_m) for odd m.
/// Instances are interned and live for the whole program.
struct CyclotomicField {
  std::int64_t level = 1;
  std::int64_t degree = 1;
  /// Coefficients of Phi_N, constant term first, monic.
  std::vector<std::int64_t> polynomial;
  /// power_table[e] = x^e mod Phi_N, for 0 <= e < max(N, 2*degree - 1).
  std::vector<std::vector<std::int64_t>> power_table;
  /// Units mod N, ascending; they index the embeddings zeta -> e^(2 pi i h / N).
  std::vector<std::int64_t> unit_list;

  static const CyclotomicField& get(std::int64_t level);
  static std::int64_t canonical_level(std::int64_t n);
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

namespace detail {
/// Sign of the real number sum_k c_k cos(2 pi h k / N), evaluated with
/// adaptive precision. Exact zero must be excluded by the caller.
int real_part_sign(const std::vector<Rational>& coefficients, std::int64_t level, std::int64_t h);
}  // namespace detail

/// Element of the cyclotomic field Q(zeta_N) (T = Rational) or of its ring
/// of integers Z[zeta_N] (T = Integer). Equality is coefficient-wise in the
/// reduced power basis, after promoting both sides to a common level.
template <typename T>
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(0) {}
  Cyclotomic(int c) : field_(rationals()), coeffs_{T(c)} {}
  explicit Cyclotomic(const T& c) : field_(rationals()), coeffs_{c} {}

  /// Zero at the given level.
  static Cyclotomic zero(std::int64_t level) {
    return zero_in(&CyclotomicField::get(CyclotomicField::canonical_level(level)));
  }

  /// zeta_N^k with zeta_N = e^(2 pi i / N).
  static Cyclotomic root_of_unity(std::int64_t k, std::int64_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "root of unity order must be >= 1");
    k = mod_floor(k, n);
    const std::int64_t level = CyclotomicField::canonical_level(n);
    Cyclotomic r = zero(level);
    if (level == n) {
      r.add_monomial(T(1), k);
    } else {
      // n = 2L with L odd: zeta_2L = -zeta_L^((L+1)/2).
      const T sign = (k % 2 == 0) ? T(1) : T(-1);
      r.add_monomial(sign, k * ((level + 1) / 2));
    }
    return r;
  }

  static Cyclotomic from_coefficients(std::int64_t level, std::vector<T> coeffs) {
    Cyclotomic r = zero(level);
    if (static_cast<std::int64_t>(r.field_->level) != level)
      throw Error(ErrorCode::InvalidArgument, "level must be canonical (not 2 mod 4)");
    for (std::size_t e = 0; e < coeffs.size(); ++e) r.add_monomial(coeffs[e], static_cast<std::int64_t>(e));
    return r;
  }

  std::int64_t level() const noexcept { return field_->level; }
  std::int64_t degree() const noexcept { return field_->degree; }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }
  const CyclotomicField& field() const noexcept { return *field_; }

  bool is_zero() const {
    for (const T& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  /// Constant coefficient; meaningful when is_rational().
  const T& rational_part() const { return coeffs_[0]; }

  /// Same element expressed at a multiple of the current level.
  Cyclotomic promote(std::int64_t target_level) const {
    target_level = CyclotomicField::canonical_level(target_level);
    if (target_level == level()) return *this;
    if (target_level % level() != 0)
      throw Error(ErrorCode::InvalidArgument, "promotion target must be a multiple of the level");
    Cyclotomic r = zero(target_level);
    const std::int64_t step = target_level / level();
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
      if (coeffs_[e] != 0) r.add_monomial(coeffs_[e], static_cast<std::int64_t>(e) * step);
    return r;
  }

  /// Galois automorphism zeta -> zeta^h, h a unit mod the level.
  Cyclotomic galois(std::int64_t h) const {
    const std::int64_t n = level();
    h = mod_floor(h, n);
    if (n > 1 && std::gcd(h, n) != 1)
      throw Error(ErrorCode::InvalidArgument, "Galois action needs a unit");
    Cyclotomic r = zero_in(field_);
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
      if (coeffs_[e] != 0) r.add_monomial(coeffs_[e], static_cast<std::int64_t>(e) * h);
    return r;
  }

  /// Complex conjugation (the automorphism zeta -> zeta^-1).
  Cyclotomic conj() const { return level() == 1 ? *this : galois(-1); }

  bool is_real() const { return *this == conj(); }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (T& c : r.coeffs_) c = -c;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    if (o.level() != level()) return *this = common(*this, o, std::plus<>{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  Cyclotomic& operator-=(const Cyclotomic& o) {
    if (o.level() != level()) return *this = common(*this, o, std::minus<>{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.level() != b.level()) {
      const std::int64_t l = lcm(a.level(), b.level());
      return a.promote(l) * b.promote(l);
    }
    if (a.level() == 1) return Cyclotomic(T(a.coeffs_[0] * b.coeffs_[0]));
    const std::size_t d = a.coeffs_.size();
    std::vector<T> conv(2 * d - 1, T(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t k = 0; k < d; ++k)
        if (b.coeffs_[k] != 0) conv[i + k] += a.coeffs_[i] * b.coeffs_[k];
    }
    Cyclotomic r = zero_in(a.field_);
    for (std::size_t e = 0; e < conv.size(); ++e)
      if (conv[e] != 0) r.add_monomial(conv[e], static_cast<std::int64_t>(e));
    return r;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.level() == b.level()) return a.coeffs_ == b.coeffs_;
    const std::int64_t l = lcm(a.level(), b.level());
    return a.promote(l).coeffs_ == b.promote(l).coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Norm to Q: the product of all Galois conjugates.
  Rational norm() const {
    Cyclotomic p = *this;
    for (std::int64_t h : field_->unit_list)
      if (h != 1) p = p * galois(h);
    if (!p.is_rational()) throw std::logic_error("cyclotomic norm is not rational");
    return to_rational(p.rational_part());
  }

  /// Multiplicative inverse via the norm; available for field coefficients.
  Cyclotomic inverse() const
    requires std::is_same_v<T, Rational>
  {
    if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in cyclotomic field");
    Cyclotomic cofactor(T(1));
    for (std::int64_t h : field_->unit_list)
      if (h != 1) cofactor = cofactor * galois(h);
    const Rational n = to_rational((*this * cofactor).rational_part());
    for (T& c : cofactor.coeffs_) c /= n;
    return cofactor;
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b)
    requires std::is_same_v<T, Rational>
  {
    return a * b.inverse();
  }

  /// Sign of sigma_h(x) for a real element x. Uses interval-checked
  /// floating evaluation; zero is decided exactly.
  int real_sign(std::int64_t h = 1) const {
    if (!is_real()) throw Error(ErrorCode::InvalidArgument, "sign of a non-real cyclotomic number");
    if (is_zero()) return 0;
    if (is_rational()) return sgn(coeffs_[0]);
    std::vector<Rational> q;
    q.reserve(coeffs_.size());
    for (const T& c : coeffs_) q.push_back(to_rational(c));
    return detail::real_part_sign(q, level(), h);
  }

  /// Approximate value in the embedding zeta -> e^(2 pi i h / N).
  std::complex<double> approx(std::int64_t h = 1) const {
    std::complex<double> v = 0.0;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      if (coeffs_[e] == 0) continue;
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(mod_floor(h * static_cast<std::int64_t>(e), level())) /
          static_cast<double>(level());
      v += to_double(coeffs_[e]) * std::polar(1.0, angle);
    }
    return v;
  }

  /// Consistent with == only for values at the same level.
  std::size_t hash() const {
    std::size_t s = static_cast<std::size_t>(level());
    for (const T& c : coeffs_) s = s * 1000003ULL ^ hash_value(c);
    return s;
  }

  template <typename U>
  Cyclotomic<U> cast() const {
    std::vector<U> out;
    out.reserve(coeffs_.size());
    for (const T& c : coeffs_) out.push_back(convert<U>(c));
    return Cyclotomic<U>::from_coefficients(level(), std::move(out));
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

  /// Polynomial in z = zeta_N, e.g. "1 + 2*z^3 - z^5 (N=12)".
  std::string to_string() const {
    std::string s;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
      const T& c = coeffs_[e];
      if (c == 0) continue;
      std::string mag = abs_string(c);
      const bool neg = c < 0;
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      if (e == 0) s += mag;
      else {
        if (mag != "1") s += mag + "*";
        s += "z";
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
    if (s.empty()) s = "0";
    return s;
  }

 private:
  static const CyclotomicField* rationals() {
    static const CyclotomicField* q = &CyclotomicField::get(1);
    return q;
  }

  static Cyclotomic zero_in(const CyclotomicField* f) {
    Cyclotomic z;
    z.field_ = f;
    z.coeffs_.assign(static_cast<std::size_t>(f->degree), T(0));
    return z;
  }

  template <typename F>
  static Cyclotomic common(const Cyclotomic& a, const Cyclotomic& b, F op) {
    const std::int64_t l = lcm(a.level(), b.level());
    Cyclotomic x = a.promote(l);
    const Cyclotomic y = b.promote(l);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] = op(x.coeffs_[i], y.coeffs_[i]);
    return x;
  }

  void add_monomial(const T& c, std::int64_t e) {
    const auto& row = field_->power_table[static_cast<std::size_t>(mod_floor(e, field_->level))];
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) coeffs_[i] += c * static_cast<long>(row[i]);
  }

  template <typename U>
  static U convert(const T& c) {
    if constexpr (std::is_same_v<U, T>) {
      return c;
    } else if constexpr (std::is_same_v<U, Integer>) {
      if (c.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "coefficient is not integral");
      return c.get_num();
    } else {
      return U(c);
    }
  }

  static std::string abs_string(const T& c) {
    if constexpr (std::is_same_v<T, Rational>) return Rational(abs(c)).get_str();
    else return Integer(abs(c)).get_str();
  }

  const CyclotomicField* field_;
  std::vector<T> coeffs_;
};

using CyclotomicNumber = Cyclotomic<Rational>;
using CyclotomicInteger = Cyclotomic<Integer>;

template <typename T>
using Matrix2 = Eigen::Matrix<Cyclotomic<T>, 2, 2>;

template <typename T>
using Vector2 = Eigen::Matrix<Cyclotomic<T>, 2, 1>;

template <typename T>
Matrix2<T> identity2() {
  Matrix2<T> m;
  m << Cyclotomic<T>(1), Cyclotomic<T>(0), Cyclotomic<T>(0), Cyclotomic<T>(1);
  return m;
}

/// Every entry promoted to the given level. Hashes agree only between
/// values stored at the same level, so hashed containers use this first.
template <typename T>
Matrix2<T> at_level(const Matrix2<T>& m, std::int64_t level) {
  return m.unaryExpr([level](const Cyclotomic<T>& x) { return x.promote(level); });
}

/// Least common multiple of the entry levels.
template <typename T>
std::int64_t matrix_level(const Matrix2<T>& m) {
  std::int64_t l = 1;
  for (int i = 0; i < 4; ++i) l = std::lcm(l, m(i / 2, i % 2).level());
  return CyclotomicField::canonical_level(l);
}

template <typename T>
Cyclotomic<T> determinant(const Matrix2<T>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <typename T>
Cyclotomic<T> trace(const Matrix2<T>& m) {
  return m(0, 0) + m(1, 1);
}

/// Entry-wise complex conjugate transpose.
template <typename T>
Matrix2<T> adjoint(const Matrix2<T>& m) {
  Matrix2<T> r;
  r << m(0, 0).conj(), m(1, 0).conj(), m(0, 1).conj(), m(1, 1).conj();
  return r;
}

/// Adjugate; equals det * inverse.
template <typename T>
Matrix2<T> adjugate(const Matrix2<T>& m) {
  Matrix2<T> r;
  r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return r;
}

template <typename T>
bool equal(const Matrix2<T>& a, const Matrix2<T>& b) {
  return a(0, 0) == b(0, 0) && a(0, 1) == b(0, 1) && a(1, 0) == b(1, 0) && a(1, 1) == b(1, 1);
}

template <typename T>
bool is_identity(const Matrix2<T>& m) {
  return equal(m, identity2<T>());
}

/// Product of fixed 2x2 matrices; avoids Eigen's lazy-product temporaries
/// for non-trivial scalars.
template <typename T>
Matrix2<T> mul(const Matrix2<T>& a, const Matrix2<T>& b) {
  Matrix2<T> r;
  r(0, 0) = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0);
  r(0, 1) = a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1);
  r(1, 0) = a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0);
  r(1, 1) = a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
  return r;
}

template <typename T>
struct Matrix2Hash {
  std::size_t operator()(const Matrix2<T>& m) const {
    std::size_t h = 0;
    for (int i = 0; i < 4; ++i) h = h * 0x100000001b3ULL ^ m(i / 2, i % 2).hash();
    return h;
  }
};

template <typename T>
struct Matrix2Equal {
  bool operator()(const Matrix2<T>& a, const Matrix2<T>& b) const { return equal(a, b); }
};

}  // namespace cyclocover

namespace Eigen {
template <typename T>
struct NumTraits<cyclocover::Cyclotomic<T>> : GenericNumTraits<cyclocover::Cyclotomic<T>> {
  using Real = cyclocover::Cyclotomic<T>;
  using NonInteger = cyclocover::Cyclotomic<T>;
  using Nested = cyclocover::Cyclotomic<T>;
  using Literal = cyclocover::Cyclotomic<T>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
};
}  // namespace Eigen
