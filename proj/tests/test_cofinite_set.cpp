#include <algorithm>

#include <doctest.h>

#include "numcurve/cofinite_set.hpp"

using numcurve::CofiniteSet;
using numcurve::Int;

namespace {

CofiniteSet from_list(std::vector<Int> members, Int conductor) {
  return CofiniteSet::from_predicate(members.front(), conductor, [&](Int z) {
    return z >= conductor || std::find(members.begin(), members.end(), z) != members.end();
  });
}

}  // namespace

TEST_CASE("ray and membership") {
  const auto r = CofiniteSet::ray(3);
  CHECK(r.min() == 3);
  CHECK(r.conductor() == 3);
  CHECK_FALSE(r.contains(2));
  CHECK(r.contains(3));
  CHECK(r.contains(1000000));
  CHECK(r.members_below(6) == std::vector<Int>{3, 4, 5});
}

TEST_CASE("encoding is canonical") {
  // {0,3,4,6,...} built with a generous and a tight bound compare equal
  const auto a = from_list({0, 3, 4}, 6);
  const auto b = CofiniteSet::from_predicate(-5, 40, [](Int z) { return z == 0 || z == 3 || z == 4 || z >= 6; });
  CHECK(a == b);
  CHECK(a.min() == 0);
  CHECK(a.conductor() == 6);
  CHECK_FALSE(a.contains(5));
  CHECK_FALSE(a.contains(-1));
}

TEST_CASE("sumset of a numerical semigroup with itself is itself") {
  const auto s = from_list({0, 3, 4}, 6);
  CHECK(numcurve::sumset(s, s) == s);
  CHECK(numcurve::multiple(s, 3) == s);
}

TEST_CASE("sumset and multiple of the maximal ideal") {
  const auto m = from_list({3, 4}, 6);  // M of <3,4>
  const auto m2 = numcurve::multiple(m, 2);
  CHECK(m2.members_below(12) == std::vector<Int>{6, 7, 8, 9, 10, 11});
  CHECK(m2 == numcurve::sumset(m, m));
  CHECK(numcurve::multiple(m, 1) == m);
}

TEST_CASE("difference") {
  const auto s = from_list({0, 3, 4}, 6);
  const auto m = from_list({3, 4}, 6);
  CHECK(numcurve::difference(s, s) == s);
  // M - M for <3,4> adds the Frobenius number: <3,4,5>
  CHECK(numcurve::difference(m, m) == from_list({0, 3}, 3));
  // S - M contains the Frobenius number 5 (pseudo-Frobenius)
  const auto sm = numcurve::difference(s, m);
  CHECK(sm.contains(5));
  CHECK_FALSE(sm.contains(2));
  CHECK(sm.contains(0));
}

TEST_CASE("shifted") {
  const auto s = from_list({0, 3, 4}, 6);
  const auto t = s.shifted(-3);
  CHECK(t.min() == -3);
  CHECK(t.contains(0));
  CHECK(t.contains(1));
  CHECK_FALSE(t.contains(2));
  CHECK(t.conductor() == 3);
  CHECK(t.shifted(3) == s);
}
