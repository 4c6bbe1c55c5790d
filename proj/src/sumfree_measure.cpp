#include "sumint/sumfree_measure.hpp"

#include <algorithm>

#include "sumint/error.hpp"

namespace sumint {

namespace {

struct Event {
  mpz_class position;  // numerator over the common denominator 3 * lcm(S)
  int delta;           // +1 entering an inclusion region, -1 leaving it
};

mpz_class lcm_of(const IntSet& s) {
  mpz_class l = 1;
  for (auto x : s) {
    const mpz_class v(static_cast<unsigned long>(x));
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
  }
  return l;
}

}  // namespace

IntervalSet inclusion_region(std::uint64_t x) {
  if (x == 0) fail(ErrorCode::InvalidArgument, "inclusion region needs x >= 1");
  std::vector<Interval> parts;
  parts.reserve(x);
  const mpz_class den = mpz_class(static_cast<unsigned long>(x)) * 3;
  for (std::uint64_t j = 0; j < x; ++j) {
    const mpz_class base = mpz_class(static_cast<unsigned long>(j)) * 3;
    parts.push_back({Rational(base + 1, den), Rational(base + 2, den)});
  }
  return IntervalSet::from_intervals(std::move(parts));
}

LevelDistribution level_distribution(const IntSet& s) {
  LevelDistribution out{s, std::vector<Rational>(s.size() + 1)};
  if (s.empty()) {
    out.probs[0] = Rational(1);
    return out;
  }

  const mpz_class lcm = lcm_of(s);
  const mpz_class total = lcm * 3;

  std::vector<Event> events;
  std::size_t n_events = 0;
  for (auto x : s) n_events += 2 * x;
  events.reserve(n_events);
  for (auto x : s) {
    const mpz_class step = lcm / static_cast<unsigned long>(x);
    mpz_class pos = step;  // (3j + 1) * step for j = 0
    for (std::uint64_t j = 0; j < x; ++j) {
      events.push_back({pos, +1});
      pos += step;
      events.push_back({pos, -1});
      pos += 2 * step;
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.position < b.position; });

  std::vector<mpz_class> length(s.size() + 1);
  mpz_class prev = 0;
  long inside = 0;
  for (std::size_t i = 0; i < events.size();) {
    const mpz_class& here = events[i].position;
    length[static_cast<std::size_t>(inside)] += here - prev;
    for (; i < events.size() && events[i].position == here; ++i) inside += events[i].delta;
    prev = here;
  }
  length[static_cast<std::size_t>(inside)] += total - prev;

  for (std::size_t j = 0; j < length.size(); ++j) out.probs[j] = Rational(length[j], total);
  return out;
}

Rational joint_inclusion_prob(const IntSet& t) {
  if (t.empty()) fail(ErrorCode::InvalidArgument, "joint inclusion probability needs a nonempty set");
  IntervalSet region = IntervalSet::full();
  for (auto x : t) region = region.intersect(inclusion_region(x));
  return region.measure();
}

IntSet sample_slice(const IntSet& s, const Rational& alpha) {
  if (alpha < Rational(0) || alpha >= Rational(1))
    fail(ErrorCode::InvalidArgument, "alpha must lie in [0, 1), got " + alpha.str());
  const Rational third(1, 3), two_thirds(2, 3);
  std::vector<IntSet::value_type> out;
  for (auto x : s) {
    const Rational frac = (alpha * Rational(mpz_class(static_cast<unsigned long>(x)), mpz_class(1))).fractional_part();
    if (third <= frac && frac < two_thirds) out.push_back(x);
  }
  return IntSet(std::move(out));
}

IntSet primitive_form(const IntSet& s) {
  const auto g = s.gcd();
  if (g <= 1) return s;
  std::vector<IntSet::value_type> out(s.elements());
  for (auto& x : out) x /= g;
  return IntSet(std::move(out));
}

bool is_sum_free(const IntSet& s) {
  for (auto x : s)
    for (auto y : s) {
      if (y > x) break;
      if (s.contains(x + y)) return false;
    }
  return true;
}

}  // namespace sumint
