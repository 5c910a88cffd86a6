#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "numcurve/blowup.hpp"
#include "numcurve/commands.hpp"
#include "numcurve/homogeneity.hpp"
#include "numcurve/tangent_cone.hpp"
#include "oracle.hpp"

using namespace numcurve;

namespace {

constexpr int kTrials = 60;

std::vector<Int> random_generators(std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> mult(2, 9);
  const Int m = mult(rng);
  std::uniform_int_distribution<Int> other(m + 1, 3 * m);
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<Int> gens{m};
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.push_back(other(rng));
  Int g = 0;
  for (Int x : gens) g = std::gcd(g, x);
  if (g != 1) gens.push_back(m + 1);
  return gens;
}

SemigroupIdeal random_ideal(std::mt19937_64& rng, const NumericalSemigroup& s) {
  std::uniform_int_distribution<Int> pick(1, s.conductor() + 2 * s.multiplicity());
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<Int> raw;
  const int k = count(rng);
  while (static_cast<int>(raw.size()) < k) {
    const Int z = pick(rng);
    if (s.contains(z)) raw.push_back(z);
  }
  return SemigroupIdeal::from_generators(s, raw);
}

Int random_b(std::mt19937_64& rng, const NumericalSemigroup& s) {
  std::uniform_int_distribution<Int> pick(1, s.conductor() + 3 * s.multiplicity());
  for (;;) {
    const Int b = pick(rng);
    if (b % 2 == 1 && s.contains(b)) return b;
  }
}

}  // namespace

TEST_CASE("invariants agree with brute force") {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < kTrials; ++t) {
    const auto gens = random_generators(rng);
    const auto s = NumericalSemigroup::from_generators(gens);
    CAPTURE(format_int_list(gens));
    CHECK(s.frobenius() == oracle::frobenius(gens));
    CHECK(s.gaps() == oracle::gaps(gens));
    const auto in = [&](Int z) { return z >= 0 && s.contains(z); };
    CHECK(s.apery_set(s.multiplicity()) == oracle::apery(in, s.multiplicity(), 0, s.conductor() + 2 * s.multiplicity()));
    for (Int z = 0; z <= s.conductor() + 2 * s.multiplicity(); ++z) {
      const auto ls = oracle::length_set(s.generators(), z);
      if (ls.empty()) {
        CHECK_FALSE(s.order(z).has_value());
        continue;
      }
      CHECK(s.order(z) == *ls.rbegin());
      CHECK(s.min_length(z) == *ls.begin());
      CHECK(s.length_set(z) == std::vector<Int>(ls.begin(), ls.end()));
    }
  }
}

TEST_CASE("symmetry tests agree and match the genus count") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < kTrials; ++t) {
    const auto s = NumericalSemigroup::from_generators(random_generators(rng));
    CAPTURE(format_int_list(s.generators()));
    const bool sym = is_symmetric(s);
    CHECK(sym == is_symmetric_by_canonical(s));
    CHECK(sym == (2 * s.genus() == s.frobenius() + 1));
  }
}

TEST_CASE("a >= b, blowups equal their limits") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < kTrials; ++t) {
    const auto s = NumericalSemigroup::from_generators(random_generators(rng));
    CAPTURE(format_int_list(s.generators()));
    const auto p = ab_vectors(s);
    for (std::size_t i = 0; i < p.a.size(); ++i) CHECK(p.a[i] >= p.b[i]);
    CHECK(blowup(s).members() == blowup_by_limit(s));
    const auto e = random_ideal(rng, s);
    CAPTURE(format_int_list(e.generators()));
    CHECK(blowup_ideal(e).members() == blowup_ideal_by_limit(e));
    const auto q = ab_vectors(e);
    for (std::size_t i = 0; i < q.a.size(); ++i) CHECK(q.a[i] >= q.b[i]);
  }
}

TEST_CASE("ideal Apery sets and duplications agree with brute force") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < kTrials; ++t) {
    const auto gens = random_generators(rng);
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto e = random_ideal(rng, s);
    const Int b = random_b(rng, s);
    CAPTURE(format_int_list(gens));
    CAPTURE(format_int_list(e.generators()));
    CAPTURE(b);
    const Int bound = 4 * oracle::frobenius_bound(gens) + 2 * b + 4 * e.generators().back();
    const auto member = oracle::ideal_member(s.generators(), e.generators(), bound);
    CHECK(e.apery(s.multiplicity()) == oracle::apery(member, s.multiplicity(), 0, bound));
    const DuplicationInput in(e, b);
    auto gens_t = duplication_generators(in);
    std::sort(gens_t.begin(), gens_t.end());
    CHECK(gens_t == oracle::duplication(s.generators(), e.generators(), b, bound));
    const auto t2 = duplicate(in);
    CHECK(duplicate_apery_from_parts(in) == t2.apery_set(2 * s.multiplicity()));
    CHECK(is_dup_cm(in).agree());
    CHECK(is_dup_gorenstein(in).agree());
    CHECK(is_dup_ci(in).agree());
    CHECK(is_homogeneous_duplication(in).agree());
    CHECK(lemma_3eb_check(e, b));
  }
}

TEST_CASE("reports round-trip through JSON") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < kTrials / 4; ++t) {
    const auto s = NumericalSemigroup::from_generators(random_generators(rng));
    const auto e = random_ideal(rng, s);
    const auto doc = cmd_dup(DuplicationInput(e, random_b(rng, s)));
    CHECK(report_from_json(nlohmann::json::parse(to_json(doc).dump())) == doc);
    CHECK(doc.properties.verdicts.at("agreement"));
  }
}
