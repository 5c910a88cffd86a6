#include <doctest.h>

#include "numcurve/error.hpp"
#include "numcurve/semigroup.hpp"
#include "oracle.hpp"

using namespace numcurve;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("minimal generating system") {
  const auto s = NumericalSemigroup::from_generators({6, 7, 10, 12, 13, 20});
  CHECK(s.generators() == std::vector<Int>{6, 7, 10});
  CHECK(NumericalSemigroup::from_generators({4, 2, 5}).generators() == std::vector<Int>{2, 5});
  CHECK(NumericalSemigroup::from_generators({7, 7, 3}).generators() == std::vector<Int>{3, 7});
  CHECK(NumericalSemigroup::from_generators({3, 1, 7}).is_natural());
}

TEST_CASE("invalid generators") {
  CHECK(kind_of([] { NumericalSemigroup::from_generators(std::vector<Int>{}); }) == ErrorKind::EmptyGenerators);
  CHECK(kind_of([] { NumericalSemigroup::from_generators({4, 6}); }) == ErrorKind::NonCoprime);
  CHECK(kind_of([] { NumericalSemigroup::from_generators({0, 3, 4}); }) == ErrorKind::ZeroGenerator);
  CHECK(kind_of([] { NumericalSemigroup::from_generators({-3, 4}); }) == ErrorKind::ZeroGenerator);
}

TEST_CASE("natural numbers") {
  const auto n = NumericalSemigroup::natural();
  CHECK(n.frobenius() == -1);
  CHECK(n.conductor() == 0);
  CHECK(n.genus() == 0);
  CHECK(n.multiplicity() == 1);
  CHECK(n.apery_set(1) == std::vector<Int>{0});
  CHECK(n.order(5) == 5);
  CHECK(n.gaps().empty());
}

TEST_CASE("Frobenius, genus, gaps") {
  const auto s = NumericalSemigroup::from_generators({6, 7, 10});
  CHECK(s.frobenius() == 15);
  CHECK(s.conductor() == 16);
  CHECK(s.gaps() == std::vector<Int>{1, 2, 3, 4, 5, 8, 9, 11, 15});
  CHECK(s.genus() == 9);
  CHECK(NumericalSemigroup::from_generators({3, 4}).frobenius() == 5);
  CHECK(NumericalSemigroup::from_generators({2, 3}).frobenius() == 1);
  CHECK(NumericalSemigroup::from_generators({10, 11, 12, 13}).genus() == 18);
}

TEST_CASE("Apery sets") {
  CHECK(NumericalSemigroup::from_generators({5, 14, 17}).apery_set(5) == std::vector<Int>{0, 31, 17, 28, 14});
  const auto s = NumericalSemigroup::from_generators({6, 7, 10});
  CHECK(s.apery_set(6) == std::vector<Int>{0, 7, 14, 21, 10, 17});
  CHECK(s.sorted_apery() == std::vector<Int>{0, 7, 10, 14, 17, 21});
  // Ap_n for a non-generator member
  CHECK(s.apery_set(12) ==
        oracle::apery([&](Int z) { return z >= 0 && s.contains(z); }, 12, 0, 200));
  CHECK_THROWS_AS(s.apery_set(8), Error);
  CHECK_THROWS_AS(s.apery_set(0), Error);
}

TEST_CASE("membership beyond the precomputed window") {
  set_window_multiplier(2);
  const auto s = NumericalSemigroup::from_generators({11, 13, 17});
  const Int far = s.window_end() * 5 + 3;
  CHECK(s.contains(far));
  CHECK(s.order(far) == static_cast<Int>(*oracle::length_set({11, 13, 17}, far).rbegin()));
  CHECK_FALSE(s.contains(-4));
  CHECK(window_multiplier() == 2);
  set_window_multiplier(0);
  CHECK(window_multiplier() == 2);
}

TEST_CASE("order, min length and factorizations") {
  const auto s = NumericalSemigroup::from_generators({4, 5});
  CHECK(s.order(20) == 5);
  CHECK(s.min_length(20) == 4);
  CHECK(s.length_set(20) == std::vector<Int>{4, 5});
  CHECK_FALSE(s.order(11).has_value());
  CHECK(s.length_set(11).empty());
  CHECK(s.factorizations(20).size() == 2);
  const auto maxi = s.maximal_factorizations(20);
  REQUIRE(maxi.size() == 1);
  CHECK(maxi[0].coeffs == std::vector<Int>{5, 0});
  CHECK(maxi[0].length == 5);
  CHECK(s.order(0) == 0);
}

TEST_CASE("maximal ideal and members") {
  const auto s = NumericalSemigroup::from_generators({3, 4});
  CHECK(s.members().members_below(9) == std::vector<Int>{0, 3, 4, 6, 7, 8});
  CHECK(s.maximal_ideal().min() == 3);
  CHECK_FALSE(s.maximal_ideal().contains(0));
}

TEST_CASE("integer list parsing") {
  CHECK(parse_int_list("6,7,10") == std::vector<Int>{6, 7, 10});
  CHECK(parse_int_list(" 3 , 4 ") == std::vector<Int>{3, 4});
  CHECK(kind_of([] { parse_int_list(""); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_int_list("3,,4"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_int_list("3;4"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_int_list("99999999999999999999999"); }) == ErrorKind::ParseError);
  CHECK(format_int_list(std::vector<Int>{1, 2, 3}) == "1,2,3");
}
