#include "numcurve/duplication.hpp"

#include "numcurve/error.hpp"

namespace numcurve {

DuplicationInput::DuplicationInput(SemigroupIdeal ideal, Int b) : ideal_(std::move(ideal)), b_(b) {
  if (b % 2 == 0) throw Error(ErrorKind::EvenB, "b must be odd, got " + std::to_string(b));
  if (!ideal_.parent().contains(b))
    throw Error(ErrorKind::BNotInS, std::to_string(b) + " is not an element of the semigroup");
}

std::vector<Int> duplication_generators(const DuplicationInput& input) {
  std::vector<Int> gens;
  for (Int n : input.semigroup().generators()) gens.push_back(2 * n);
  for (Int e : input.ideal().generators()) gens.push_back(2 * e + input.b());
  return gens;
}

NumericalSemigroup duplicate(const DuplicationInput& input) {
  return NumericalSemigroup::from_generators(duplication_generators(input));
}

std::vector<Int> duplicate_apery_from_parts(const DuplicationInput& input) {
  const Int m = input.semigroup().multiplicity();
  std::vector<Int> out(static_cast<std::size_t>(2 * m), -1);
  for (Int d : input.semigroup().apery_set(m)) out[static_cast<std::size_t>((2 * d) % (2 * m))] = 2 * d;
  for (Int beta : input.ideal().apery(m)) {
    Int t = 2 * beta + input.b();
    out[static_cast<std::size_t>(t % (2 * m))] = t;
  }
  return out;
}

RelativeIdeal sumset_shift(const SemigroupIdeal& e, Int k, Int b) {
  auto members = multiple(e.relative().members(), static_cast<int>(k)).shifted(b);
  return RelativeIdeal(e.parent(), std::move(members));
}

bool order_transfer_check(const DuplicationInput& input, Int window) {
  const auto& s = input.semigroup();
  const auto t = duplicate(input);
  const auto& gens = t.generators();
  for (Int z = 0; z <= window; ++z) {
    auto os = s.order(z);
    if (!os) continue;
    auto ot = t.order(2 * z);
    if (!ot || *ot != *os) return false;
  }
  for (Int z = 0; z <= 2 * window; ++z) {
    for (const auto& f : t.maximal_factorizations(z)) {
      Int odd = 0;
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] % 2 != 0) odd += f.coeffs[i];
      if (odd != z % 2) return false;
    }
  }
  return true;
}

}  // namespace numcurve
