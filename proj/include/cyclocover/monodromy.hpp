#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclocover/cyclotomic.hpp"
#include "cyclocover/hodge.hpp"
#include "cyclocover/rational.hpp"
#include "cyclocover/residue.hpp"

namespace cyclocover {

/// Gauss parameters (a, b, c) of the hypergeometric equation attached to a
/// character; the local exponents are {0, 1-c} at 0, {0, c-a-b} at 1 and
/// {a, b} at infinity.
struct HypergeometricParams {
  Rational a, b, c;

  bool operator==(const HypergeometricParams&) const = default;
};

/// j * (m3/n, 1 - m0/n, 2 - m0/n - m2/n), not reduced mod 1.
HypergeometricParams params_from_weights(const WeightTuple& w, const CharacterIndex& j);

/// None of a, b, a - c, b - c is an integer.
bool is_irreducible(const HypergeometricParams& p);

/// Irreducibility of the j-eigenspace local system: none of ja, jb, j(a-c),
/// j(b-c) is integral, which happens exactly when n divides no m_i * j.
bool is_irreducible(const WeightTuple& w, const CharacterIndex& j);

enum class Generator { G0, G1, GInf };

using Word = std::vector<Generator>;

std::string to_string(Generator g);
std::string to_string(const Word& w);
Word parse_word(std::string_view s);

/// Local monodromies around 0, 1 and infinity with g0 * g1 * ginf = 1.
/// Entries lie in Z[zeta_N].
struct MonodromyTriple {
  std::int64_t level = 1;
  Matrix2<Integer> g0, g1, ginf;
  /// Parameters the triple was built from, if any.
  std::optional<HypergeometricParams> params;

  const Matrix2<Integer>& generator(Generator g) const;
  Matrix2<Integer> evaluate(const Word& w) const;
};

/// Outcome of a finiteness decision. A FINITE verdict from the group
/// enumeration carries the exact group order; the signature criterion
/// decides finiteness without computing it.
struct FinitenessVerdict {
  enum class Kind { Finite, Infinite, Inconclusive };

  Kind kind = Kind::Inconclusive;
  std::optional<std::int64_t> order;
  /// Infinite, from the matrix oracle: a word of infinite order.
  std::optional<Word> witness_word;
  /// Infinite, from the criterion: a unit h with sigma_sum(h*j) = 2n.
  std::optional<std::int64_t> witness_unit;
  std::optional<std::int64_t> witness_sigma;
  /// Inconclusive: enumeration limits that were hit.
  std::int64_t cap = 0;
  std::int64_t explored = 0;
  int max_word_len = 0;

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  bool is_inconclusive() const { return kind == Kind::Inconclusive; }
};

std::string_view to_string(FinitenessVerdict::Kind k);

/// Finite iff every Galois conjugate of the invariant form is definite, i.e.
/// sigma_sum(h*j) is n or 3n for every unit h. Throws
/// PreconditionIrreducibility when the local system is reducible.
FinitenessVerdict finiteness_by_signature(const WeightTuple& w, const CharacterIndex& j);

/// The character j solving j * (m0 + m3) = -1 mod n; its eigenspace carries
/// an indefinite form (sigma_sum = 2n). Throws NoUnit when m0 + m3 is not
/// invertible.
CharacterIndex find_infinite_character(const WeightTuple& w);

/// Rigid rank-2 triple built from companion matrices: ginf = A, g0 = B^-1,
/// g1 = B A^-1 where A has eigenvalues e(a), e(b) and B has 1, e(c).
/// Rejects reducible parameters.
MonodromyTriple levelt_triple(const HypergeometricParams& p, Modulus n);

/// Same construction without the irreducibility guard.
MonodromyTriple rigid_triple(const HypergeometricParams& p, Modulus n);

/// Triple whose three generators are the identity.
MonodromyTriple identity_triple(std::int64_t level);

/// lcm{k : phi(k) <= 2 phi(N)}; every finite-order element of a rank-2
/// group over Q(zeta_N) has order dividing it.
Integer finite_order_bound(std::int64_t level);

/// Exact finite-order test for a 2x2 matrix over Z[zeta_N] whose determinant
/// is a root of unity. With s = tr^2 / det - 2, finite order holds iff s is
/// totally real with every conjugate in [-2, 2] (Kronecker) and, when s = 2,
/// the matrix is scalar.
bool has_finite_order(const Matrix2<Integer>& m);

/// Multiplicative order, or nullopt when the order is infinite.
std::optional<std::int64_t> element_order(const Matrix2<Integer>& m);

/// Shortest word (shortlex over g0, g1, ginf) of infinite order with length
/// at most max_word_len, or nullopt.
std::optional<Word> infinite_order_witness(const MonodromyTriple& t, int max_word_len);

inline constexpr std::int64_t kDefaultClosureCap = 20000;
inline constexpr int kDefaultMaxWordLength = 8;

/// Breadth-first enumeration of the generated group under exact equality.
/// Every new element is tested for infinite order on the way, so infinite
/// groups usually end long before the cap.
FinitenessVerdict group_closure(const MonodromyTriple& t, std::int64_t cap = kDefaultClosureCap,
                                int max_word_len = kDefaultMaxWordLength);

/// True when g0, g1, ginf share an eigenvector.
bool has_common_eigenvector(const MonodromyTriple& t);

struct HermitianForm {
  Matrix2<Rational> matrix;
  Signature signature;
};

/// The invariant Hermitian form (conj(g)^T M g = M for all generators) and
/// its index in the embedding zeta -> e^(2 pi i / N). The real scale is
/// fixed so that the root of the reflection g1 has norm of the sign of
/// mu_2 + mu_3 - 1, which matches the Hodge-theoretic normalization.
/// Throws ReducibleNoUniqueForm unless the solution space is a line.
HermitianForm invariant_hermitian_form(const MonodromyTriple& t);

}  // namespace cyclocover
