#include "sumint/sumint.h"

#include <exception>
#include <functional>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "report_json.hpp"
#include "sumint/error.hpp"
#include "sumint/parallel.hpp"

struct sumint_report {
  std::string json;
  std::optional<std::string> csv;
  bool passed = true;
};

namespace {

using namespace sumint;
using report::ordered_json;

thread_local std::string g_last_error;

sumint_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SUMINT_ERR_INVALID_ARGUMENT;
    case ErrorCode::Unbounded: return SUMINT_ERR_UNBOUNDED;
    case ErrorCode::NotSumIntersecting: return SUMINT_ERR_NOT_SUM_INTERSECTING;
    case ErrorCode::ComplementNotSumFree: return SUMINT_ERR_COMPLEMENT_NOT_SUM_FREE;
    case ErrorCode::CapExceeded: return SUMINT_ERR_CAP_EXCEEDED;
    case ErrorCode::DimensionMismatch: return SUMINT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::Precondition: return SUMINT_ERR_PRECONDITION;
    case ErrorCode::Internal: return SUMINT_ERR_INTERNAL;
  }
  return SUMINT_ERR_INTERNAL;
}

// Runs body, which fills a fresh report; converts exceptions to status codes.
sumint_status guarded(sumint_report** out, const std::function<void(sumint_report&)>& body) {
  if (out == nullptr) {
    g_last_error = "output pointer is null";
    return SUMINT_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    auto rep = std::make_unique<sumint_report>();
    body(*rep);
    *out = rep.release();
    g_last_error.clear();
    return SUMINT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SUMINT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SUMINT_ERR_INTERNAL;
  }
}

IntSet read_set(const uint64_t* set, size_t len) {
  if (len > 0 && set == nullptr) fail(ErrorCode::InvalidArgument, "set pointer is null");
  return IntSet::from_unsorted(std::vector<IntSet::value_type>(set, set + len));
}

Certificate read_cert(const char* const* coeffs, size_t n) {
  if (n == 0 || coeffs == nullptr) fail(ErrorCode::InvalidArgument, "certificate needs at least one coefficient");
  Certificate cert;
  for (size_t i = 0; i < n; ++i) {
    if (coeffs[i] == nullptr) fail(ErrorCode::InvalidArgument, "null certificate coefficient");
    cert.coeffs.push_back(Rational::parse(coeffs[i]));
  }
  return cert;
}

std::string read_text(const char* s, const char* what) {
  if (s == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return s;
}

void emit(sumint_report& rep, const ordered_json& j, bool passed) {
  rep.json = j.dump(2);
  rep.passed = passed;
}

void emit_scan(sumint_report& rep, const ScanReport& r) {
  emit(rep, report::scan_json(r), r.holds());
  rep.csv = report::scan_csv(r);
}

}  // namespace

extern "C" {

const char* sumint_version(void) { return "1.0.0"; }

const char* sumint_status_name(sumint_status status) {
  switch (status) {
    case SUMINT_OK: return "ok";
    case SUMINT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SUMINT_ERR_UNBOUNDED: return "unbounded";
    case SUMINT_ERR_NOT_SUM_INTERSECTING: return "family not sum-intersecting";
    case SUMINT_ERR_COMPLEMENT_NOT_SUM_FREE: return "complement not sum-free";
    case SUMINT_ERR_CAP_EXCEEDED: return "cap exceeded";
    case SUMINT_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case SUMINT_ERR_PRECONDITION: return "precondition failed";
    case SUMINT_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* sumint_last_error(void) { return g_last_error.c_str(); }

void sumint_set_threads(unsigned threads) { set_thread_count(threads); }

sumint_status sumint_dist(const uint64_t* set, size_t len, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) { emit(rep, report::dist_json(level_distribution(read_set(set, len))), true); });
}

sumint_status sumint_joint(const uint64_t* set, size_t len, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const IntSet s = read_set(set, len);
    const Rational p = joint_inclusion_prob(s);
    ordered_json j;
    j["status"] = "OK";
    j["set"] = report::to_json(s);
    j["probability"] = p.str();
    j["approx"] = {{"probability", p.approx()}};
    emit(rep, j, true);
  });
}

sumint_status sumint_slice(const uint64_t* set, size_t len, const char* alpha, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const IntSet s = read_set(set, len);
    const Rational a = Rational::parse(read_text(alpha, "alpha"));
    const IntSet slice = sample_slice(s, a);
    ordered_json j;
    j["status"] = "OK";
    j["set"] = report::to_json(s);
    j["alpha"] = a.str();
    j["slice"] = report::to_json(slice);
    j["sum_free"] = is_sum_free(slice);
    emit(rep, j, true);
  });
}

sumint_status sumint_two_point_check(uint64_t max, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) { emit_scan(rep, verify_two_point_formula(max)); });
}

sumint_status sumint_obs_check(uint64_t max, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) { emit_scan(rep, observation_checks(max)); });
}

sumint_status sumint_triple_scan(uint64_t max, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) { emit_scan(rep, scan_triple_bound(max)); });
}

sumint_status sumint_pzero_scan(uint64_t max, uint64_t size, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) { emit_scan(rep, scan_pzero_bounds(max, size)); });
}

sumint_status sumint_bohr_scan(uint64_t max, uint64_t size, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) { emit_scan(rep, scan_bohr(max, size)); });
}

sumint_status sumint_mu(const uint64_t* set, size_t len, const char* const* cert, size_t ncoeffs, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const IntSet s = read_set(set, len);
    const Certificate c = read_cert(cert, ncoeffs);
    const Rational value = mu(s, c);
    ordered_json j;
    j["status"] = value >= Rational(-1) ? "OK" : "VIOLATED";
    j["set"] = report::to_json(s);
    j["coeffs"] = c.strs();
    j["mu"] = value.str();
    j["approx"] = {{"mu", value.approx()}};
    emit(rep, j, value >= Rational(-1));
  });
}

sumint_status sumint_verify_cert(const char* const* cert, size_t ncoeffs, uint64_t pool_max, uint64_t pool_size,
                                 sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const Certificate c = read_cert(cert, ncoeffs);
    const Verdict v = verify_certificate_finite(c, build_pool(pool_max, pool_size));
    emit(rep, report::verdict_json(c, v), v.status == VerdictStatus::Valid);
  });
}

sumint_status sumint_tail_verify(const char* const* cert, size_t ncoeffs, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const Certificate c = read_cert(cert, ncoeffs);
    const Verdict v = tail_verify(c);
    emit(rep, report::verdict_json(c, v), v.status == VerdictStatus::Valid);
  });
}

sumint_status sumint_lp_search(uint64_t pool_max, uint64_t pool_size, unsigned m, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const LpSearchResult r = lp_search(build_pool(pool_max, pool_size), m);
    emit(rep, report::lp_search_json(r, m), r.recheck.status == VerdictStatus::Valid);
  });
}

sumint_status sumint_build_nu(unsigned n, const char* const* cert, size_t ncoeffs, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const Certificate c = read_cert(cert, ncoeffs);
    emit(rep, report::nu_json(n, c, build_nu(n, c)), true);
  });
}

sumint_status sumint_fourier_check(unsigned n, const char* family, const char* const* cert, size_t ncoeffs,
                                   sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const SetFamily f = SetFamily::parse(n, read_text(family, "family"));
    const Certificate c = read_cert(cert, ncoeffs);
    const FourierBoundReport r = fourier_bound_check(f, c);
    emit(rep, report::fourier_json(n, c, r), report::fourier_passed(r));
  });
}

sumint_status sumint_pointmass_check(unsigned n, const uint64_t* subset, size_t len, const char* family,
                                     sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const IntSet t = read_set(subset, len);
    const SetFamily f = SetFamily::parse(n, read_text(family, "family"));
    const PointMassReport r = pointmass_check(n, t, f);
    emit(rep, report::pointmass_json(n, t, r), r.pass);
  });
}

sumint_status sumint_extremal(unsigned n, const char* predicate, unsigned cap, sumint_report** out) {
  return guarded(out, [&](sumint_report& rep) {
    const IntersectionPredicate pred = IntersectionPredicate::parse(read_text(predicate, "predicate"));
    const SearchResult r = max_family(n, pred, cap == 0 ? kDefaultSearchCap : cap);
    emit(rep, report::search_json(r), report::search_consistent_with_conjecture(r));
  });
}

const char* sumint_report_json(const sumint_report* report) { return report ? report->json.c_str() : nullptr; }

const char* sumint_report_csv(const sumint_report* report) {
  return report && report->csv ? report->csv->c_str() : nullptr;
}

int sumint_report_passed(const sumint_report* report) { return report && report->passed ? 1 : 0; }

void sumint_report_free(sumint_report* report) { delete report; }

}  // extern "C"
