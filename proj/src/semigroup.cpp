#include "numcurve/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <mutex>
#include <numeric>
#include <queue>
#include <shared_mutex>

#include "numcurve/error.hpp"

namespace numcurve {

namespace {

std::atomic<int> g_window_multiplier{2};

}  // namespace

void set_window_multiplier(int k) { g_window_multiplier.store(std::max(k, 2)); }
int window_multiplier() { return g_window_multiplier.load(); }

struct NumericalSemigroup::Cache {
  mutable std::shared_mutex mutex;
  std::vector<Int> max_len;
  std::vector<Int> min_len;

  // Caller holds the unique lock.
  void extend_to(Int end, const std::vector<Int>& gens) {
    auto old = static_cast<Int>(max_len.size());
    if (end < old) return;
    max_len.resize(static_cast<std::size_t>(end + 1), -1);
    min_len.resize(static_cast<std::size_t>(end + 1), -1);
    for (Int z = old; z <= end; ++z) {
      if (z == 0) {
        max_len[0] = min_len[0] = 0;
        continue;
      }
      Int hi = -1;
      Int lo = -1;
      for (Int n : gens) {
        if (n > z) break;
        Int prev_hi = max_len[static_cast<std::size_t>(z - n)];
        if (prev_hi < 0) continue;
        Int prev_lo = min_len[static_cast<std::size_t>(z - n)];
        hi = std::max(hi, prev_hi + 1);
        lo = lo < 0 ? prev_lo + 1 : std::min(lo, prev_lo + 1);
      }
      max_len[static_cast<std::size_t>(z)] = hi;
      min_len[static_cast<std::size_t>(z)] = lo;
    }
  }
};

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators, Int frobenius, Int genus)
    : generators_(std::move(generators)),
      frobenius_(frobenius),
      genus_(genus),
      cache_(std::make_shared<Cache>()) {
  Int end = conductor() + static_cast<Int>(window_multiplier()) * multiplicity();
  cache_->extend_to(end, generators_);
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> raw) {
  if (raw.empty()) throw Error(ErrorKind::EmptyGenerators, "generator list is empty");
  for (Int n : raw)
    if (n < 1) throw Error(ErrorKind::ZeroGenerator, "generators must be positive, got " + std::to_string(n));

  std::vector<Int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Int g = 0;
  for (Int n : sorted) g = std::gcd(g, n);
  if (g != 1) throw Error(ErrorKind::NonCoprime, "gcd of generators is " + std::to_string(g));

  // Keep a candidate only if the smaller kept generators cannot reach it.
  const Int top = sorted.back();
  std::vector<char> reach(static_cast<std::size_t>(top + 1), 0);
  reach[0] = 1;
  std::vector<Int> minimal;
  for (Int c : sorted) {
    if (reach[static_cast<std::size_t>(c)]) continue;
    minimal.push_back(c);
    for (Int z = c; z <= top; ++z)
      if (reach[static_cast<std::size_t>(z - c)]) reach[static_cast<std::size_t>(z)] = 1;
  }

  // Ap_m(S) by shortest paths on residues mod m; f(S) = max Ap - m.
  const Int m = minimal.front();
  std::vector<Int> dist(static_cast<std::size_t>(m), -1);
  using Entry = std::pair<Int, Int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (dist[static_cast<std::size_t>(r)] >= 0) continue;
    dist[static_cast<std::size_t>(r)] = d;
    for (Int n : minimal) {
      Int next = (r + n) % m;
      if (dist[static_cast<std::size_t>(next)] < 0) queue.emplace(d + n, next);
    }
  }
  Int frobenius = *std::max_element(dist.begin(), dist.end()) - m;
  // Each Apéry element w contributes w / m gaps in its residue class.
  Int genus = 0;
  for (Int w : dist) genus += w / m;
  return NumericalSemigroup(std::move(minimal), frobenius, genus);
}

Int NumericalSemigroup::window_end() const {
  std::shared_lock lock(cache_->mutex);
  return static_cast<Int>(cache_->max_len.size()) - 1;
}

std::pair<Int, Int> NumericalSemigroup::lengths(Int z) const {
  {
    std::shared_lock lock(cache_->mutex);
    if (z < static_cast<Int>(cache_->max_len.size()))
      return {cache_->max_len[static_cast<std::size_t>(z)], cache_->min_len[static_cast<std::size_t>(z)]};
  }
  std::unique_lock lock(cache_->mutex);
  Int current = static_cast<Int>(cache_->max_len.size()) - 1;
  cache_->extend_to(std::max(z, 2 * current), generators_);
  return {cache_->max_len[static_cast<std::size_t>(z)], cache_->min_len[static_cast<std::size_t>(z)]};
}

bool NumericalSemigroup::contains(Int z) const {
  if (z < 0) return false;
  if (z > frobenius_) return true;
  return lengths(z).first >= 0;
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
  if (n <= 0 || !contains(n))
    throw Error(ErrorKind::NotAMember, std::to_string(n) + " is not a positive element of the semigroup");
  std::vector<Int> out(static_cast<std::size_t>(n), -1);
  Int found = 0;
  for (Int z = 0; found < n; ++z) {
    auto& slot = out[static_cast<std::size_t>(z % n)];
    if (slot < 0 && contains(z)) {
      slot = z;
      ++found;
    }
  }
  return out;
}

std::vector<Int> NumericalSemigroup::sorted_apery() const {
  auto ap = apery_set(multiplicity());
  std::sort(ap.begin(), ap.end());
  return ap;
}

std::optional<Int> NumericalSemigroup::order(Int s) const {
  if (s < 0) return std::nullopt;
  Int v = lengths(s).first;
  if (v < 0) return std::nullopt;
  return v;
}

std::optional<Int> NumericalSemigroup::min_length(Int s) const {
  if (s < 0) return std::nullopt;
  Int v = lengths(s).second;
  if (v < 0) return std::nullopt;
  return v;
}

std::vector<Factorization> NumericalSemigroup::factorizations(Int z) const {
  std::vector<Factorization> out;
  if (!contains(z)) return out;
  const auto k = generators_.size();
  std::vector<Int> coeffs(k, 0);
  // Fix coefficients from the largest generator down; the multiplicity
  // absorbs whatever remains.
  std::function<void(std::size_t, Int)> walk = [&](std::size_t i, Int rest) {
    if (i == 0) {
      if (rest % generators_[0] != 0) return;
      coeffs[0] = rest / generators_[0];
      Int len = 0;
      for (Int c : coeffs) len += c;
      out.push_back({coeffs, z, len});
      return;
    }
    for (Int c = 0; c * generators_[i] <= rest; ++c) {
      coeffs[i] = c;
      walk(i - 1, rest - c * generators_[i]);
    }
    coeffs[i] = 0;
  };
  walk(k - 1, z);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Factorization> NumericalSemigroup::maximal_factorizations(Int z) const {
  std::vector<Factorization> out;
  auto target = order(z);
  if (!target) return out;
  const auto k = generators_.size();
  std::vector<Int> coeffs(k, 0);
  std::function<void(std::size_t, Int, Int)> walk = [&](std::size_t i, Int rest, Int needed) {
    auto best = order(rest);
    if (!best || *best < needed) return;
    if (i == 0) {
      if (rest % generators_[0] != 0 || rest / generators_[0] != needed) return;
      coeffs[0] = needed;
      out.push_back({coeffs, z, *target});
      coeffs[0] = 0;
      return;
    }
    for (Int c = 0; c * generators_[i] <= rest && c <= needed; ++c) {
      coeffs[i] = c;
      walk(i - 1, rest - c * generators_[i], needed - c);
    }
    coeffs[i] = 0;
  };
  walk(k - 1, z, *target);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> NumericalSemigroup::length_set(Int z) const {
  if (!contains(z)) return {};
  // sets[v] = lengths of factorizations of v, as a bitmap over [0, z/m].
  const Int width = z / multiplicity() + 1;
  std::vector<std::vector<char>> sets(static_cast<std::size_t>(z + 1),
                                      std::vector<char>(static_cast<std::size_t>(width), 0));
  sets[0][0] = 1;
  for (Int v = 1; v <= z; ++v) {
    if (!contains(v)) continue;
    auto& row = sets[static_cast<std::size_t>(v)];
    for (Int n : generators_) {
      if (n > v) break;
      const auto& prev = sets[static_cast<std::size_t>(v - n)];
      for (Int l = 0; l + 1 < width; ++l)
        if (prev[static_cast<std::size_t>(l)]) row[static_cast<std::size_t>(l + 1)] = 1;
    }
  }
  std::vector<Int> out;
  const auto& row = sets[static_cast<std::size_t>(z)];
  for (Int l = 0; l < width; ++l)
    if (row[static_cast<std::size_t>(l)]) out.push_back(l);
  return out;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int z = 1; z <= frobenius_; ++z)
    if (!contains(z)) out.push_back(z);
  return out;
}

CofiniteSet NumericalSemigroup::members() const {
  return CofiniteSet::from_predicate(0, conductor(), [this](Int z) { return contains(z); });
}

CofiniteSet NumericalSemigroup::maximal_ideal() const {
  return CofiniteSet::from_predicate(1, std::max<Int>(conductor(), 1), [this](Int z) { return contains(z); });
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "cannot parse '" + std::string(text) + "': " + why);
  };
  while (true) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) fail("expected an integer");
    Int value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    if (*begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("expected an integer");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  return out;
}

std::string format_int_list(std::span<const Int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace numcurve
