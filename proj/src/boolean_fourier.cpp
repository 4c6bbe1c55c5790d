#include "sumint/boolean_fourier.hpp"

#include <algorithm>
#include <bit>

#include "sumint/error.hpp"
#include "sumint/extremal_search.hpp"
#include "sumint/parallel.hpp"
#include "sumint/sumfree_measure.hpp"

namespace sumint {

namespace {

void check_dimension(unsigned n) {
  if (n > kMaxFourierDimension)
    fail(ErrorCode::CapExceeded,
         "dimension " + std::to_string(n) + " exceeds the cap " + std::to_string(kMaxFourierDimension));
}

// Unnormalised butterfly: g(l) = sum_x (-1)^<l,x> f(x).
void butterfly(std::vector<Rational>& v) {
  for (std::size_t len = 1; len < v.size(); len <<= 1)
    for (std::size_t i = 0; i < v.size(); i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        Rational a = v[j];
        v[j] += v[j + len];
        v[j + len] = a - v[j + len];
      }
}

Rational pow2(unsigned n) { return Rational(mpz_class(1) << n, mpz_class(1)); }

std::uint64_t full_mask(unsigned n) { return (std::uint64_t{1} << n) - 1; }

}  // namespace

BooleanFunction BooleanFunction::zeros(unsigned n) {
  check_dimension(n);
  return {n, std::vector<Rational>(std::size_t{1} << n)};
}

SetFamily SetFamily::from_masks(unsigned n, std::vector<std::uint64_t> masks) {
  if (n > 63) fail(ErrorCode::CapExceeded, "family dimension exceeds 63");
  for (auto m : masks)
    if (m & ~full_mask(n))
      fail(ErrorCode::InvalidArgument, "member {" + IntSet::from_mask(m).str() + "} is not inside [" + std::to_string(n) + "]");
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return {n, std::move(masks)};
}

SetFamily SetFamily::from_sets(unsigned n, const std::vector<IntSet>& sets) {
  std::vector<std::uint64_t> masks;
  masks.reserve(sets.size());
  for (const IntSet& s : sets) {
    if (s.max() > n) fail(ErrorCode::InvalidArgument, "member {" + s.str() + "} is not inside [" + std::to_string(n) + "]");
    masks.push_back(s.to_mask());
  }
  return from_masks(n, std::move(masks));
}

SetFamily SetFamily::parse(unsigned n, std::string_view spec) {
  check_dimension(n);
  if (spec == "all") {
    std::vector<std::uint64_t> masks(std::size_t{1} << n);
    for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = i;
    return from_masks(n, std::move(masks));
  }
  if (spec.starts_with("superset:")) {
    const IntSet base = IntSet::parse(spec.substr(9));
    if (base.max() > n) fail(ErrorCode::InvalidArgument, "base {" + base.str() + "} is not inside [" + std::to_string(n) + "]");
    const std::uint64_t b = base.to_mask();
    std::vector<std::uint64_t> masks;
    for (std::uint64_t a = 0; a <= full_mask(n); ++a)
      if ((a & b) == b) masks.push_back(a);
    return from_masks(n, std::move(masks));
  }
  if (spec.starts_with("explicit:")) {
    std::string_view rest = spec.substr(9);
    std::vector<IntSet> sets;
    if (!rest.empty()) {
      std::size_t pos = 0;
      while (true) {
        const std::size_t semi = rest.find(';', pos);
        sets.push_back(IntSet::parse(rest.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos)));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
      }
    }
    return from_sets(n, sets);
  }
  fail(ErrorCode::InvalidArgument, "unknown family '" + std::string(spec) + "' (superset:A, explicit:A;B;..., all)");
}

std::vector<IntSet> SetFamily::sets() const {
  std::vector<IntSet> out;
  out.reserve(members.size());
  for (auto m : members) out.push_back(IntSet::from_mask(m));
  return out;
}

BooleanFunction SetFamily::indicator() const {
  BooleanFunction f = BooleanFunction::zeros(n);
  for (auto m : members) f[m] = Rational(1);
  return f;
}

BooleanFunction wht(const BooleanFunction& f) {
  check_dimension(f.n);
  BooleanFunction out = f;
  butterfly(out.values);
  const Rational scale = pow2(f.n).reciprocal();
  for (Rational& v : out.values) v *= scale;
  return out;
}

BooleanFunction inverse_wht(const BooleanFunction& g) {
  check_dimension(g.n);
  BooleanFunction out = g;
  butterfly(out.values);
  return out;
}

BooleanFunction convolve(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.n != g.n) fail(ErrorCode::DimensionMismatch, "convolution of functions on different cubes");
  BooleanFunction fh = wht(f);
  const BooleanFunction gh = wht(g);
  for (std::size_t i = 0; i < fh.values.size(); ++i) fh.values[i] *= gh.values[i];
  return inverse_wht(fh);
}

NuConstruction build_nu(unsigned n, const Certificate& cert) {
  check_dimension(n);
  if (cert.coeffs.empty()) fail(ErrorCode::InvalidArgument, "certificate has no coefficients");
  NuConstruction out;
  out.nu_hat = BooleanFunction::zeros(n);
  out.nu_hat.values = parallel_map<Rational>(std::size_t{1} << n, [&](std::size_t lambda) {
    return mu(level_distribution(IntSet::from_mask(lambda)), cert);
  });
  out.nu = inverse_wht(out.nu_hat);
  return out;
}

Rational verify_intersecting_identity(const SetFamily& family, const BooleanFunction& nu) {
  if (family.n != nu.n) fail(ErrorCode::DimensionMismatch, "family and nu live on different cubes");
  if (!is_valid_family(family, IntersectionPredicate::sum()))
    fail(ErrorCode::NotSumIntersecting, "family not sum-intersecting");
  Rational total;
  for (auto a : family.members)
    for (auto b : family.members) total += nu[a ^ b];
  return total / (pow2(family.n) * pow2(family.n));
}

FourierBoundReport fourier_bound_check(const SetFamily& family, const Certificate& cert) {
  if (!is_valid_family(family, IntersectionPredicate::sum()))
    fail(ErrorCode::NotSumIntersecting, "family not sum-intersecting");
  const NuConstruction nu = build_nu(family.n, cert);
  FourierBoundReport r;
  r.min_nu_hat = *std::min_element(nu.nu_hat.values.begin(), nu.nu_hat.values.end());
  if (r.min_nu_hat < Rational(-1))
    fail(ErrorCode::Precondition, "certificate violates mu >= -1 on some subset of [" + std::to_string(family.n) +
                                      "] (min mu = " + r.min_nu_hat.str() + ")");
  r.family_size = family.size();
  r.density = Rational(static_cast<std::int64_t>(family.size())) / pow2(family.n);
  r.bound = bound_from_certificate(cert);
  r.holds = r.density <= r.bound;
  r.identity = verify_intersecting_identity(family, nu.nu);

  const BooleanFunction fh = wht(family.indicator());
  for (std::size_t l = 0; l < fh.values.size(); ++l) r.identity_spectral += fh.values[l] * fh.values[l] * nu.nu_hat.values[l];
  const Rational& f0 = fh.values[0];
  r.chain_value = f0 * f0 * nu.nu_hat.values[0] - (f0 - f0 * f0);
  return r;
}

PointMassReport pointmass_check(unsigned n, const IntSet& t, const SetFamily& family) {
  check_dimension(n);
  if (family.n != n) fail(ErrorCode::DimensionMismatch, "family lives on a different cube");
  if (t.max() > n) fail(ErrorCode::InvalidArgument, "T = {" + t.str() + "} is not inside [" + std::to_string(n) + "]");
  const std::uint64_t tm = t.to_mask();
  if (!is_sum_free(IntSet::from_mask(full_mask(n) & ~tm))) fail(ErrorCode::ComplementNotSumFree, "complement not sum-free");
  if (!is_valid_family(family, IntersectionPredicate::sum()))
    fail(ErrorCode::NotSumIntersecting, "family not sum-intersecting");
  PointMassReport r;
  for (auto a : family.members)
    for (auto b : family.members) {
      ++r.pairs_checked;
      if ((a ^ b) == tm) r.offending.emplace_back(a, b);
    }
  r.pass = r.offending.empty();
  return r;
}

}  // namespace sumint
