#include <algorithm>

#include <doctest.h>

#include "numcurve/duplication.hpp"
#include "numcurve/error.hpp"
#include "numcurve/tangent_cone.hpp"
#include "oracle.hpp"

using namespace numcurve;

namespace {

DuplicationInput input(std::vector<Int> s, std::vector<Int> e, Int b) {
  return DuplicationInput(SemigroupIdeal::from_generators(NumericalSemigroup::from_generators(s), e), b);
}

std::vector<Int> brute(std::vector<Int> s, std::vector<Int> e, Int b) {
  return oracle::duplication(s, e, b, 4 * oracle::frobenius_bound(s) + 2 * b + 50);
}

}  // namespace

TEST_CASE("input validation") {
  auto kind = [](Int b) {
    try {
      input({3, 4}, {3, 8}, b);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind(4) == ErrorKind::EvenB);
  CHECK(kind(5) == ErrorKind::BNotInS);
  CHECK(kind(-1) == ErrorKind::BNotInS);
  CHECK(kind(3) == ErrorKind::ParseError);
}

TEST_CASE("duplication generators") {
  CHECK(duplicate(input({3, 4}, {3, 8}, 3)).generators() == std::vector<Int>{6, 8, 9, 19});
  CHECK(duplicate(input({5, 14, 17}, {14, 20, 22}, 17)).generators() == std::vector<Int>{10, 28, 34, 45, 57, 61});
  CHECK(duplicate(input({10, 11, 12, 13}, {10, 11, 12}, 11)).generators() ==
        std::vector<Int>{20, 22, 24, 26, 31, 33, 35});
  CHECK(duplicate(input({5, 6, 7}, {5, 13}, 5)).generators() == std::vector<Int>{10, 12, 14, 15, 31});
  CHECK(duplicate(input({6, 7, 22}, {6, 21}, 7)).generators() == std::vector<Int>{12, 14, 19, 44, 49});
  CHECK(duplicate(input({4, 5}, {5, 8}, 5)).generators() == std::vector<Int>{8, 10, 15, 21});
  CHECK(duplicate(input({4, 5}, {5}, 5)).generators() == std::vector<Int>{8, 10, 15});
  CHECK(duplicate(input({4, 5}, {5, 8}, 13)).generators() == std::vector<Int>{8, 10, 23, 29});
  CHECK(duplicate(input({4, 5}, {5}, 13)).generators() == std::vector<Int>{8, 10, 23});
  CHECK(duplicate(input({4, 5}, {5, 8}, 9)).generators() == std::vector<Int>{8, 10, 19, 25});
  CHECK(duplicate(input({6, 7, 10}, {7}, 7)).generators() == std::vector<Int>{12, 14, 20, 21});
}

TEST_CASE("duplication generators against the set definition") {
  for (auto [s, e, b] : std::vector<std::tuple<std::vector<Int>, std::vector<Int>, Int>>{
           {{3, 4}, {3, 8}, 3}, {{5, 14, 17}, {14, 20, 22}, 17}, {{6, 7, 9, 11}, {7, 11, 12}, 7},
           {{2, 3}, {2}, 3}, {{3, 5, 7}, {5, 7}, 9}}) {
    CAPTURE(b);
    auto gens = duplication_generators(input(s, e, b));
    std::sort(gens.begin(), gens.end());
    CHECK(gens == brute(s, e, b));
  }
}

TEST_CASE("duplicate Apery set") {
  const auto in = input({5, 14, 17}, {14, 20, 22}, 17);
  const auto t = duplicate(in);
  CHECK(t.apery_set(10) == std::vector<Int>{0, 61, 62, 73, 34, 45, 56, 57, 28, 79});
  CHECK(duplicate_apery_from_parts(in) == t.apery_set(10));
  const auto p = ab_vectors(t);
  CHECK(p.a == std::vector<Int>{0, 1, 2, 2, 1, 1, 2, 1, 1, 2});
  CHECK(p.b == p.a);
  const auto q = ab_vectors(duplicate(input({3, 4}, {3, 8}, 3)));
  CHECK(q.a == std::vector<Int>{0, 2, 1, 1, 2, 2});
  CHECK(q.b == std::vector<Int>{0, 1, 1, 1, 2, 2});
}

TEST_CASE("kE + b") {
  const auto s = NumericalSemigroup::from_generators({4, 5});
  const auto e = SemigroupIdeal::from_generators(s, {5, 8});
  const auto two = sumset_shift(e, 2, 5);
  CHECK(two.min() == 15);
  CHECK(two.contains(15));
  CHECK_FALSE(two.contains(16));
  CHECK(sumset_shift(e, 3, 5).min() == 20);
  CHECK(order_transfer_check(input({4, 5}, {5, 8}, 5), 80));
}

TEST_CASE("duplication theorems on worked instances") {
  CHECK(is_dup_cm(input({3, 4}, {3, 8}, 3)).criterion == false);
  CHECK(is_dup_cm(input({3, 4}, {3, 8}, 3)).agree());
  CHECK(is_dup_cm(input({5, 14, 17}, {14, 20, 22}, 17)).criterion);
  CHECK(is_dup_cm(input({5, 14, 17}, {14, 20, 22}, 17)).agree());
  const auto g = is_dup_gorenstein(input({10, 11, 12, 13}, {10, 11, 12}, 11));
  CHECK(g.criterion);
  CHECK(g.direct);
  const auto ci = is_dup_ci(input({4, 6, 9}, {6}, 9));
  CHECK(ci.criterion);
  CHECK(ci.direct);
  CHECK(gamma_rect_transfer(input({4, 6, 9}, {6}, 9)).direct);
  CHECK(beta_rect_transfer(input({4, 6, 9}, {6}, 9)).agree());
  CHECK_FALSE(is_dup_ci(input({4, 6, 9}, {6, 9}, 9)).criterion);
}
