#include "sumint/arith_bounds.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sumint/error.hpp"
#include "sumint/parallel.hpp"
#include "sumint/sumfree_measure.hpp"

namespace sumint {

namespace {

ScanReport make_report(std::string check, std::uint64_t max, std::uint64_t size) {
  ScanReport r;
  r.check = std::move(check);
  r.max_element = max;
  r.set_size = size;
  return r;
}

// Tracks the best value seen and every set attaining it.
class Extremum {
 public:
  explicit Extremum(bool maximize) : maximize_(maximize) {}

  void offer(const Rational& value, const IntSet& s) {
    if (!best_ || (maximize_ ? value > *best_ : value < *best_)) {
      best_ = value;
      witnesses_.clear();
    }
    if (value == *best_) witnesses_.push_back(s);
  }

  void write_to(ScanReport& r) {
    if (best_) r.extremum = *best_;
    std::sort(witnesses_.begin(), witnesses_.end());
    r.witnesses = std::move(witnesses_);
  }

 private:
  bool maximize_;
  std::optional<Rational> best_;
  std::vector<IntSet> witnesses_;
};

std::vector<IntSet> all_pairs(std::uint64_t max) {
  std::vector<IntSet> out;
  for_each_subset(max, 2, [&](IntSet s) { out.push_back(std::move(s)); });
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace

int chi(std::uint64_t k) {
  switch (k % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

Rational error_fn(std::uint64_t x, std::uint64_t y) {
  require(x >= 1 && y >= 1, "error function needs positive arguments");
  require(x != y, "error function is defined for x != y");
  const std::uint64_t g = std::gcd(x, y);
  const std::uint64_t a = x / g, b = y / g;
  // Evaluated on the reduced pair so that E stays gcd-invariant when 3 divides g.
  const int c = chi((a % 3) * (b % 3));
  if (c == 0) return Rational(0);
  const mpz_class prod = mpz_class(static_cast<unsigned long>(a)) * static_cast<unsigned long>(b);
  return Rational(mpz_class(c), prod);
}

Rational two_point_prob(std::uint64_t x, std::uint64_t y) {
  return Rational(1, 9) + Rational(2, 9) * error_fn(x, y);
}

ScanReport verify_two_point_formula(std::uint64_t max) {
  require(max >= 2, "two-point check needs max >= 2");
  ScanReport r = make_report("two-point", max, 2);
  const std::vector<IntSet> pairs = all_pairs(max);
  struct Row {
    Rational formula;
    bool agrees = false;
  };
  const auto rows = parallel_map<Row>(pairs.size(), [&](std::size_t i) {
    const auto& e = pairs[i].elements();
    Row row{two_point_prob(e[0], e[1])};
    row.agrees = row.formula == joint_inclusion_prob(pairs[i]);
    return row;
  });
  Extremum best(true);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    best.offer(rows[i].formula, pairs[i]);
    if (!rows[i].agrees) r.violations.push_back(pairs[i]);
  }
  best.write_to(r);
  r.checked = pairs.size();
  return r;
}

ScanReport observation_checks(std::uint64_t max) {
  require(max >= 2, "observation check needs max >= 2");
  ScanReport r = make_report("observation", max, 2);
  r.threshold = Rational(1, 4);
  const std::vector<IntSet> pairs = all_pairs(max);
  Extremum best(true);
  std::set<Rational> positive, negative;
  for (const IntSet& p : pairs) {
    const Rational e = error_fn(p.elements()[0], p.elements()[1]);
    best.offer(e, p);
    bool ok = e <= *r.threshold;
    if (e.sign() > 0) {
      positive.insert(e);
      // 1/E must be an integer 3k + 1 with k >= 1
      const Rational inv = e.reciprocal();
      ok = ok && inv.is_integer() && inv.numerator() % 3 == 1 && inv.numerator() >= 4;
    } else if (e.sign() < 0) {
      negative.insert(e);
    }
    if (!ok) r.violations.push_back(p);
  }
  best.write_to(r);
  r.checked = pairs.size();
  r.positive_values.assign(positive.begin(), positive.end());
  r.negative_values.assign(negative.begin(), negative.end());
  return r;
}

ScanReport scan_triple_bound(std::uint64_t max) {
  require(max >= 3, "triple scan needs max >= 3");
  ScanReport r = make_report("triple", max, 3);
  r.threshold = Rational(9, 16);
  const std::vector<IntSet> triples = primitive_subsets(max, 3);
  const auto sums = parallel_map<Rational>(triples.size(), [&](std::size_t i) {
    const auto& e = triples[i].elements();
    return error_fn(e[0], e[1]) + error_fn(e[1], e[2]) + error_fn(e[0], e[2]);
  });
  Extremum best(true);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    best.offer(sums[i], triples[i]);
    if (sums[i] > *r.threshold) r.violations.push_back(triples[i]);
  }
  best.write_to(r);
  r.checked = triples.size();
  return r;
}

ScanReport scan_pzero_bounds(std::uint64_t max, std::uint64_t size) {
  require(size >= 2 && max >= size, "p_empty scan needs max >= size >= 2");
  ScanReport r = make_report("pzero", max, size);
  r.threshold = size == 2 ? Rational(1, 2) : Rational(11, 24);
  const std::vector<IntSet> sets = primitive_subsets(max, size);
  const auto pz = parallel_map<Rational>(sets.size(), [&](std::size_t i) { return level_distribution(sets[i]).p_empty(); });
  Extremum best(true);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    best.offer(pz[i], sets[i]);
    if (pz[i] > *r.threshold) r.violations.push_back(sets[i]);
  }
  best.write_to(r);
  r.checked = sets.size();
  return r;
}

Rational bohr_lower_bound(std::uint64_t k, std::uint64_t t) {
  require(k >= 1 && t >= 2, "Bohr bound needs k >= 1 and t >= 2");
  require(k <= 1'000'000, "Bohr bound exponent too large");
  mpz_class tk, twok;
  mpz_ui_pow_ui(tk.get_mpz_t(), t, k);
  mpz_ui_pow_ui(twok.get_mpz_t(), 2, k);
  return Rational(mpz_class(2), tk - twok + 2);
}

ScanReport scan_bohr(std::uint64_t max, std::uint64_t max_size) {
  require(max >= 1 && max_size >= 1, "Bohr scan needs max >= 1 and size >= 1");
  ScanReport r = make_report("bohr", max, max_size);
  std::vector<IntSet> sets;
  for (std::uint64_t k = 1; k <= std::min(max_size, max); ++k) {
    auto more = primitive_subsets(max, k);
    sets.insert(sets.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  const auto pz = parallel_map<Rational>(sets.size(), [&](std::size_t i) { return level_distribution(sets[i]).p_empty(); });
  Extremum slack(false), lowest(false);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Rational gap = pz[i] - bohr_lower_bound(sets[i].size(), 3);
    slack.offer(gap, sets[i]);
    lowest.offer(pz[i], sets[i]);
    if (gap.sign() < 0) r.violations.push_back(sets[i]);
  }
  slack.write_to(r);
  ScanReport tmp;
  lowest.write_to(tmp);
  r.min_pzero = tmp.extremum;
  r.min_pzero_witnesses = std::move(tmp.witnesses);
  r.checked = sets.size();
  return r;
}

}  // namespace sumint
