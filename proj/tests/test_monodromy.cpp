#include <doctest.h>

#include "cyclocover/error.hpp"
#include "cyclocover/monodromy.hpp"

using namespace cyclocover;

namespace {

CharacterIndex ch(std::int64_t j, std::int64_t n) { return CharacterIndex(j, Modulus(n)); }

MonodromyTriple triple(const WeightTuple& w, std::int64_t j) {
  return levelt_triple(params_from_weights(w, ch(j, w.n().value())), w.n());
}

const WeightTuple w4(4, {1, 1, 1, 1});
const WeightTuple w5(5, {1, 1, 1, 2});

}  // namespace

TEST_CASE("parameters") {
  const auto p = params_from_weights(w5, ch(1, 5));
  CHECK(p.a == Rational(2, 5));
  CHECK(p.b == Rational(4, 5));
  CHECK(p.c == Rational(8, 5));
  // A = (1-b)n, B = (b+1-c)n, C = an and n - A - B - C = m1
  CHECK((1 - p.b) * 5 == 1);
  CHECK((p.b + 1 - p.c) * 5 == 1);
  CHECK(5 - (1 - p.b) * 5 - (p.b + 1 - p.c) * 5 - p.a * 5 == w5.m(1));
  const auto q = params_from_weights(WeightTuple(7, {1, 1, 1, 4}), ch(1, 7));
  CHECK(q == HypergeometricParams{Rational(4, 7), Rational(6, 7), Rational(12, 7)});
}

TEST_CASE("irreducibility") {
  for (std::int64_t j = 1; j < 5; ++j) CHECK(is_irreducible(w5, ch(j, 5)));
  const WeightTuple w6(6, {1, 2, 2, 1});
  CHECK_FALSE(is_irreducible(w6, ch(3, 6)));
  CHECK(is_irreducible(w6, ch(1, 6)));
  CHECK_THROWS_AS(levelt_triple(params_from_weights(w6, ch(3, 6)), Modulus(6)), Error);
}

TEST_CASE("finiteness criterion") {
  const auto v = finiteness_by_signature(w5, ch(4, 5));
  REQUIRE(v.is_infinite());
  const std::int64_t hj = mod_floor(*v.witness_unit * 4, 5);
  CHECK((hj == 2 || hj == 3));
  CHECK(*v.witness_sigma == 10);
  CHECK(finiteness_by_signature(w4, ch(1, 4)).is_finite());
  CHECK(finiteness_by_signature(WeightTuple(6, {1, 1, 1, 3}), ch(1, 6)).is_finite());
  try {
    finiteness_by_signature(WeightTuple(6, {1, 2, 2, 1}), ch(3, 6));
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionIrreducibility);
  }
  for (std::int64_t j = 1; j < 5; ++j)
    for (std::int64_t h : {1, 2, 3, 4})
      CHECK(finiteness_by_signature(w5, ch(j, 5)).kind == finiteness_by_signature(w5, ch(h * j, 5)).kind);
}

TEST_CASE("infinite character") {
  CHECK(find_infinite_character(w5).value() == 3);
  CHECK(find_infinite_character(WeightTuple(7, {1, 1, 1, 4})).value() == 4);
  const WeightTuple w11(11, {1, 2, 3, 5});
  CHECK(find_infinite_character(w11).value() == 9);
  CHECK(sigma_sum(w11, ch(9, 11)) == 22);
  try {
    find_infinite_character(WeightTuple(8, {1, 1, 3, 3}));
    FAIL("expected NoUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoUnit);
  }
}

TEST_CASE("rigid triples") {
  const MonodromyTriple t = triple(w5, 1);
  CHECK(is_identity(mul(mul(t.g0, t.g1), t.ginf)));
  CHECK(determinant(t.ginf) == CyclotomicInteger::root_of_unity(6, 5));  // e(a + b) = e(6/5)
  CHECK(trace(triple(w4, 1).ginf).is_zero());
  // eigenvalue contract: g0 has 1 and e(1 - c), g1 has 1 and e(c - a - b)
  const auto p = *t.params;
  const auto e = [](const Rational& q) {
    Rational r = q;
    r.canonicalize();
    return CyclotomicInteger::root_of_unity(r.get_num().get_si(), r.get_den().get_si());
  };
  CHECK(trace(t.g0) == CyclotomicInteger(1) + e(1 - p.c));
  CHECK(trace(t.g1) == CyclotomicInteger(1) + e(p.c - p.a - p.b));
  CHECK(trace(t.ginf) == e(p.a) + e(p.b));
}

TEST_CASE("finite order test") {
  CHECK(finite_order_bound(4) == 120);
  CHECK(finite_order_bound(1) == 12);
  const MonodromyTriple t = triple(w5, 1);
  CHECK(element_order(t.g0) == 5);
  CHECK(element_order(t.ginf).has_value());
  for (const MonodromyTriple& u : {triple(w4, 1), triple(WeightTuple(6, {1, 1, 1, 3}), 1)})
    for (Generator g : {Generator::G0, Generator::G1, Generator::GInf}) {
      const auto k = element_order(u.generator(g));
      REQUIRE(k.has_value());
      Matrix2<Integer> p = identity2<Integer>();
      for (std::int64_t i = 0; i < *k; ++i) p = mul(p, u.generator(g));
      CHECK(is_identity(p));
    }
  Matrix2<Integer> unipotent;
  unipotent << CyclotomicInteger(1), CyclotomicInteger(1), CyclotomicInteger(0), CyclotomicInteger(1);
  CHECK_FALSE(has_finite_order(unipotent));
}

TEST_CASE("group closure") {
  const auto f = group_closure(triple(w4, 1));
  REQUIRE(f.is_finite());
  CHECK(f.order == 8);
  const auto i = group_closure(triple(w5, 1));
  REQUIRE(i.is_infinite());
  CHECK(to_string(*i.witness_word) == "g0*g0*g1");
  CHECK_FALSE(has_finite_order(triple(w5, 1).evaluate(*i.witness_word)));
  const auto id = group_closure(identity_triple(7));
  CHECK(id.is_finite());
  CHECK(id.order == 1);
  const auto small = group_closure(triple(WeightTuple(6, {1, 1, 1, 3}), 1), 2, 1);
  CHECK(small.is_inconclusive());
  CHECK(small.cap == 2);
}

TEST_CASE("infinite order witness") {
  const auto w = infinite_order_witness(triple(w5, 1), 8);
  REQUIRE(w.has_value());
  CHECK(w->size() <= 4);
  CHECK(to_string(*w) == "g0*g0*g1");
  CHECK_FALSE(infinite_order_witness(triple(w4, 1), 8).has_value());
  CHECK_FALSE(infinite_order_witness(identity_triple(5), 8).has_value());
}

TEST_CASE("words") {
  const Word w = parse_word("g0*ginf*g1");
  CHECK(w == Word{Generator::G0, Generator::GInf, Generator::G1});
  CHECK(to_string(w) == "g0*ginf*g1");
  CHECK(parse_word("1").empty());
  CHECK_THROWS_AS(parse_word("g2"), Error);
}

TEST_CASE("common eigenvectors") {
  CHECK_FALSE(has_common_eigenvector(triple(w5, 2)));
  const WeightTuple w6(6, {1, 2, 2, 1});
  CHECK(has_common_eigenvector(rigid_triple(params_from_weights(w6, ch(3, 6)), Modulus(6))));
}

TEST_CASE("invariant hermitian form") {
  CHECK(invariant_hermitian_form(triple(w5, 2)).signature == Signature{1, 1});
  CHECK(invariant_hermitian_form(triple(w4, 1)).signature == Signature{0, 2});
  const MonodromyTriple t = triple(w5, 4);
  const HermitianForm h = invariant_hermitian_form(t);
  CHECK(h.signature == Signature{2, 0});
  for (const auto& g : {t.g0, t.g1, t.ginf}) {
    const Matrix2<Rational> gq = g.unaryExpr([](const CyclotomicInteger& x) { return x.cast<Rational>(); });
    const Matrix2<Rational> lhs = gq.unaryExpr([](const CyclotomicNumber& x) { return x.conj(); }).transpose();
    CHECK(equal(mul(mul(lhs, h.matrix), gq), h.matrix));
    const Matrix2<Rational> twice = h.matrix.unaryExpr([](const CyclotomicNumber& x) { return x * CyclotomicNumber(2); });
    CHECK(equal(mul(mul(lhs, twice), gq), twice));
  }
  const WeightTuple w6(6, {1, 2, 2, 1});
  try {
    invariant_hermitian_form(rigid_triple(params_from_weights(w6, ch(3, 6)), Modulus(6)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleNoUniqueForm);
  }
}
