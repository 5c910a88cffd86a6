#include <doctest.h>

#include "numcurve/blowup.hpp"
#include "numcurve/error.hpp"
#include "numcurve/ideal.hpp"
#include "oracle.hpp"

using namespace numcurve;

TEST_CASE("ideal generators are minimalized") {
  const auto s = NumericalSemigroup::from_generators({3, 4});
  const auto e = SemigroupIdeal::from_generators(s, {8, 3, 6, 11});
  CHECK(e.generators() == std::vector<Int>{3, 8});
  CHECK_FALSE(e.is_principal());
  CHECK(SemigroupIdeal::from_generators(s, {4, 7}).is_principal());
  CHECK(e.min() == 3);
}

TEST_CASE("ideal input errors") {
  const auto s = NumericalSemigroup::from_generators({3, 4});
  auto kind = [&](std::vector<Int> raw) {
    try {
      SemigroupIdeal::from_generators(s, raw);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind({}) == ErrorKind::EmptyGenerators);
  CHECK(kind({0, 3}) == ErrorKind::ZeroInIdeal);
  CHECK(kind({3, 5}) == ErrorKind::GeneratorNotInS);
}

TEST_CASE("ideal Apery sets") {
  const auto s1 = NumericalSemigroup::from_generators({4, 5});
  CHECK(SemigroupIdeal::from_generators(s1, {5, 8}).sorted_apery() == std::vector<Int>{5, 8, 10, 15});
  CHECK(SemigroupIdeal::from_generators(s1, {5}).sorted_apery() == std::vector<Int>{5, 10, 15, 20});
  const auto s2 = NumericalSemigroup::from_generators({6, 7, 9, 11});
  CHECK(SemigroupIdeal::from_generators(s2, {7, 11, 12}).sorted_apery() == std::vector<Int>{7, 11, 12, 14, 16, 21});
  const auto s3 = NumericalSemigroup::from_generators({5, 14, 17});
  const auto e = SemigroupIdeal::from_generators(s3, {14, 20, 22});
  CHECK(e.apery(5) == std::vector<Int>{20, 31, 22, 28, 14});
  CHECK(e.apery(14) == oracle::apery(oracle::ideal_member({5, 14, 17}, {14, 20, 22}, 400), 14, 0, 400));
  CHECK_THROWS_AS(e.apery(6), Error);
}

TEST_CASE("ideal order") {
  const auto s = NumericalSemigroup::from_generators({6, 7, 9, 11});
  const auto e = SemigroupIdeal::from_generators(s, {7, 11, 12});
  CHECK(e.order(7) == 1);
  CHECK(e.order(21) == 3);  // 21 = 12 + 9 = 7 + 7 + 7
  CHECK_FALSE(e.order(8).has_value());
  CHECK(e.contains(13));
  CHECK_FALSE(e.contains(10));
}

TEST_CASE("relative ideals, sums and differences") {
  const auto s = NumericalSemigroup::from_generators({3, 4});
  const auto f = RelativeIdeal::from_generators(s, std::vector<Int>{-1, 2});
  CHECK(f.min() == -1);
  CHECK(f.contains(2));
  CHECK(f.contains(3));
  CHECK_FALSE(f.contains(0));
  const auto p = RelativeIdeal::principal(s, 0);
  CHECK(ideal_difference(f, f) == p);
  CHECK(ideal_sum(f, p) == f);
  CHECK(f.shifted(1).min() == 0);
  const auto other = RelativeIdeal::principal(NumericalSemigroup::from_generators({2, 3}), 0);
  CHECK_THROWS_AS(ideal_sum(f, other), Error);
  CHECK_THROWS_AS(ideal_difference(f, other), Error);
}

TEST_CASE("canonical ideal") {
  const auto s = NumericalSemigroup::from_generators({10, 11, 12, 13});
  const auto k = canonical_ideal(s);
  CHECK(k.min() == 0);
  CHECK(k.generators() == std::vector<Int>{0, 1, 2});
  CHECK(is_canonical(SemigroupIdeal::from_generators(s, {10, 11, 12})));
  CHECK_FALSE(is_canonical(SemigroupIdeal::from_generators(s, {10})));
  // symmetric: every principal ideal is canonical
  const auto sym = NumericalSemigroup::from_generators({3, 4});
  CHECK(is_canonical(SemigroupIdeal::from_generators(sym, {4})));
}

TEST_CASE("blowup closed form against the limit definition") {
  const auto s = NumericalSemigroup::from_generators({5, 14, 17});
  CHECK(blowup(s).generators() == std::vector<Int>{5, 9, 12});
  CHECK(blowup(s).members() == blowup_by_limit(s));
  CHECK(blowup(NumericalSemigroup::natural()).is_natural());
  CHECK(blowup(NumericalSemigroup::from_generators({3, 4})).is_natural());
  const auto e = SemigroupIdeal::from_generators(s, {14, 20, 22});
  const auto e1 = blowup_ideal(e);
  CHECK(e1.parent() == blowup(s));
  CHECK(e1.members() == blowup_ideal_by_limit(e));
  CHECK(e1.min() == 9);
}

TEST_CASE("ideal microinvariants") {
  const auto s = NumericalSemigroup::from_generators({3, 4});
  const auto mi = ab_vectors_ideal(SemigroupIdeal::from_generators(s, {3, 8}));
  CHECK(mi.a == std::vector<Int>{1, 2, 2});
  CHECK(mi.b == std::vector<Int>{1, 2, 1});
}

TEST_CASE("powers of the maximal ideal") {
  const auto s = NumericalSemigroup::from_generators({3, 4});
  CHECK(power_of_maximal_ideal(s, 1) == s.maximal_ideal());
  CHECK(power_of_maximal_ideal(s, 2).members_below(12) == std::vector<Int>{6, 7, 8, 9, 10, 11});
}
