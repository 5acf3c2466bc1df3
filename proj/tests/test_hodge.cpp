#include <doctest.h>

#include "cyclocover/error.hpp"
#include "cyclocover/hodge.hpp"

using namespace cyclocover;

namespace {

CharacterIndex ch(std::int64_t j, std::int64_t n) { return CharacterIndex(j, Modulus(n)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("weight tuple validation") {
  CHECK_NOTHROW(WeightTuple(5, {1, 1, 1, 2}));
  CHECK_NOTHROW(WeightTuple(8, {4, 4, 3, 5}));
  try {
    WeightTuple(5, {1, 1, 1, 3});
    FAIL("accepted bad sum");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("weights must sum to n") != std::string::npos);
  }
  CHECK_THROWS_AS(WeightTuple(5, {0, 2, 1, 2}), Error);
  CHECK_THROWS_AS(WeightTuple(5, {3, 3, 2, 2}), Error);
  CHECK_THROWS_AS(WeightTuple(8, {2, 2, 2, 2}), Error);
  CHECK_NOTHROW(WeightTuple(6, {2, 2, 1, 1}));
}

TEST_CASE("mu") {
  const WeightTuple w(5, {1, 1, 1, 2});
  CHECK(mu(w, 3, ch(2, 5)) == Rational(4, 5));
  CHECK(mu(w, 0, ch(1, 5)) == Rational(1, 5));
  CHECK(code_of([] { mu(WeightTuple(6, {1, 2, 2, 1}), 1, ch(3, 6)); }) == ErrorCode::DegenerateCharacter);
}

TEST_CASE("sigma sums") {
  const WeightTuple w8(8, {4, 4, 3, 5});
  for (std::int64_t h : {1, 3, 5, 7}) CHECK(sigma_sum(w8, ch(h, 8)) == 16);
  const WeightTuple w(5, {1, 1, 1, 2});
  CHECK(sigma_sum(w, ch(1, 5)) == 5);
  CHECK(sigma_sum(w, ch(4, 5)) == 15);
}

TEST_CASE("hodge numbers and signature") {
  const WeightTuple w5(5, {1, 1, 1, 2});
  CHECK(hodge_dims(w5, ch(1, 5)) == std::pair{0, 2});
  CHECK(hodge_dims(w5, ch(4, 5)) == std::pair{2, 0});
  CHECK(hodge_dims(WeightTuple(7, {1, 1, 1, 4}), ch(3, 7)) == std::pair{1, 1});
  CHECK(signature(w5, ch(2, 5)) == Signature{1, 1});
  CHECK(signature(w5, ch(4, 5)) == Signature{2, 0});
  CHECK(signature(WeightTuple(4, {1, 1, 1, 1}), ch(1, 4)) == Signature{0, 2});
}

TEST_CASE("eigenspace tables") {
  const auto t5 = eigenspace_table(WeightTuple(5, {1, 1, 1, 2}));
  REQUIRE(t5.size() == 4);
  const SplitClass expected[] = {SplitClass::Zero, SplitClass::AmpleCandidate, SplitClass::AmpleCandidate,
                                 SplitClass::Flat};
  int total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(t5[i].split_class == expected[i]);
    total += t5[i].dim_h10;
  }
  CHECK(total == 4);
  const auto t7 = eigenspace_table(WeightTuple(7, {1, 1, 1, 4}));
  std::vector<int> dims;
  for (const auto& e : t7) dims.push_back(e.dim_h10);
  CHECK(dims == std::vector<int>{0, 0, 1, 1, 2, 2});
  const auto t6 = eigenspace_table(WeightTuple(6, {1, 2, 2, 1}));
  CHECK(t6[2].degenerate);
  CHECK_FALSE(t6[0].degenerate);
}

TEST_CASE("eigenspace properties over all small tuples") {
  for (std::int64_t n = 4; n <= 30; ++n)
    for (std::int64_t a = 1; a <= n - 3; ++a)
      for (std::int64_t b = 1; b <= n - 3; ++b)
        for (std::int64_t c = 1; a + b + c < n; ++c) {
          const std::int64_t d = n - a - b - c;
          if (d > n - 3 || std::gcd(std::gcd(std::gcd(a, b), std::gcd(c, d)), n) != 1) continue;
          const WeightTuple w(n, {a, b, c, d});
          const auto table = eigenspace_table(w);
          int total = 0;
          for (const auto& e : table) {
            if (e.degenerate) continue;
            const auto& f = table[static_cast<std::size_t>(n - e.j - 1)];
            CHECK(e.sigma + f.sigma == 4 * n);
            CHECK((e.sigma == n || e.sigma == 2 * n || e.sigma == 3 * n));
            CHECK(e.sigma == n * (e.dim_h10 + 1));
            CHECK((e.signature == Signature{2, 0}) == (f.signature == Signature{0, 2}));
            CHECK((e.split_class == SplitClass::Flat) == (f.split_class == SplitClass::Zero));
            total += e.dim_h10;
          }
          if (w.all_units()) CHECK(total == n - 1);
        }
}
