#include "report_json.hpp"

#include <sstream>

namespace sumint::report {

namespace {

std::string space_separated(const IntSet& s) {
  std::string out;
  for (auto x : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

ordered_json masks_json(const std::vector<std::uint64_t>& masks) {
  ordered_json arr = ordered_json::array();
  for (auto m : masks) arr.push_back(to_json(IntSet::from_mask(m)));
  return arr;
}

}  // namespace

ordered_json to_json(const IntSet& s) {
  ordered_json arr = ordered_json::array();
  for (auto x : s) arr.push_back(x);
  return arr;
}

ordered_json to_json(const std::vector<IntSet>& sets) {
  ordered_json arr = ordered_json::array();
  for (const IntSet& s : sets) arr.push_back(to_json(s));
  return arr;
}

ordered_json to_json(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const Rational& v : values) arr.push_back(v.str());
  return arr;
}

ordered_json dist_json(const LevelDistribution& d) {
  ordered_json j;
  j["status"] = "OK";
  j["set"] = to_json(d.set);
  j["primitive"] = to_json(primitive_form(d.set));
  j["probs"] = to_json(d.probs);
  j["p_empty"] = d.p_empty().str();
  j["approx"] = {{"p_empty", d.p_empty().approx()}};
  return j;
}

ordered_json scan_json(const ScanReport& r) {
  ordered_json j;
  j["status"] = r.holds() ? "HOLDS" : "VIOLATED";
  j["check"] = r.check;
  j["max"] = r.max_element;
  j["size"] = r.set_size;
  j["checked"] = r.checked;
  j["extremum"] = r.extremum.str();
  if (r.threshold) j["threshold"] = r.threshold->str();
  j["witnesses"] = to_json(r.witnesses);
  j["violations"] = to_json(r.violations);
  if (r.check == "observation") {
    j["positive_values"] = to_json(r.positive_values);
    j["negative_values"] = to_json(r.negative_values);
  }
  if (r.min_pzero) {
    j["min_pzero"] = r.min_pzero->str();
    j["min_pzero_witnesses"] = to_json(r.min_pzero_witnesses);
  }
  j["approx"] = {{"extremum", r.extremum.approx()}};
  return j;
}

std::string scan_csv(const ScanReport& r) {
  std::ostringstream os;
  os << "role,set,value\n";
  os << "extremum,," << r.extremum.str() << '\n';
  if (r.threshold) os << "threshold,," << r.threshold->str() << '\n';
  for (const IntSet& s : r.witnesses) os << "witness," << space_separated(s) << ',' << r.extremum.str() << '\n';
  for (const IntSet& s : r.violations) os << "violation," << space_separated(s) << ",\n";
  if (r.min_pzero)
    for (const IntSet& s : r.min_pzero_witnesses) os << "min_pzero," << space_separated(s) << ',' << r.min_pzero->str() << '\n';
  for (const Rational& v : r.positive_values) os << "positive_value,," << v.str() << '\n';
  for (const Rational& v : r.negative_values) os << "negative_value,," << v.str() << '\n';
  return os.str();
}

ordered_json verdict_json(const Certificate& cert, const Verdict& v) {
  ordered_json j;
  j["status"] = std::string(to_string(v.status));
  j["coeffs"] = cert.strs();
  j["bound"] = v.bound ? ordered_json(v.bound->str()) : ordered_json(nullptr);
  if (!v.stage.empty()) j["stage"] = v.stage;
  j["caveat"] = v.caveat;
  if (v.checked) j["checked"] = v.checked;
  j["witnesses"] = to_json(v.witnesses);
  j["violations"] = to_json(v.witness_values);
  if (!v.stages.empty()) {
    ordered_json stages = ordered_json::array();
    for (const TailStage& s : v.stages)
      stages.push_back({{"name", s.name}, {"description", s.description}, {"value", s.value.str()},
                        {"limit", s.limit.str()}, {"passed", s.passed}});
    j["stages"] = std::move(stages);
  }
  if (v.bound) j["approx"] = {{"bound", v.bound->approx()}};
  return j;
}

ordered_json lp_search_json(const LpSearchResult& r, std::size_t m) {
  ordered_json j;
  j["status"] = std::string(to_string(r.recheck.status));
  j["m"] = m;
  j["coeffs"] = r.certificate.strs();
  j["bound"] = r.bound.str();
  j["caveat"] = r.caveat;
  j["constraints"] = r.constraints;
  j["pivots"] = r.pivots;
  j["approx"] = {{"c0", r.certificate.c0().approx()}, {"bound", r.bound.approx()}};
  return j;
}

ordered_json nu_json(unsigned n, const Certificate& cert, const NuConstruction& nu) {
  ordered_json j;
  j["status"] = "OK";
  j["n"] = n;
  j["coeffs"] = cert.strs();
  j["nu_hat"] = to_json(nu.nu_hat.values);
  j["nu"] = to_json(nu.nu.values);
  j["min_nu_hat"] = std::min_element(nu.nu_hat.values.begin(), nu.nu_hat.values.end())->str();
  return j;
}

bool fourier_passed(const FourierBoundReport& r) {
  return r.holds && r.identity.is_zero() && r.identity == r.identity_spectral && r.chain_value.sign() <= 0;
}

ordered_json fourier_json(unsigned n, const Certificate& cert, const FourierBoundReport& r) {
  ordered_json j;
  j["status"] = fourier_passed(r) ? "HOLDS" : "FAILS";
  j["n"] = n;
  j["coeffs"] = cert.strs();
  j["family_size"] = r.family_size;
  j["density"] = r.density.str();
  j["bound"] = r.bound.str();
  j["holds"] = r.holds;
  j["identity"] = r.identity.str();
  j["identity_spectral"] = r.identity_spectral.str();
  j["min_nu_hat"] = r.min_nu_hat.str();
  j["chain_value"] = r.chain_value.str();
  j["approx"] = {{"density", r.density.approx()}, {"bound", r.bound.approx()}};
  return j;
}

ordered_json pointmass_json(unsigned n, const IntSet& t, const PointMassReport& r) {
  ordered_json j;
  j["status"] = r.pass ? "PASS" : "FAIL";
  j["n"] = n;
  j["T"] = to_json(t);
  j["pairs_checked"] = r.pairs_checked;
  ordered_json bad = ordered_json::array();
  for (auto [a, b] : r.offending) bad.push_back({to_json(IntSet::from_mask(a)), to_json(IntSet::from_mask(b))});
  j["violations"] = std::move(bad);
  return j;
}

bool search_consistent_with_conjecture(const SearchResult& r) {
  // max_size <= conjectured * 2^n
  return Rational(static_cast<std::int64_t>(r.max_size)) <= r.conjectured * Rational(std::int64_t{1} << r.n);
}

ordered_json search_json(const SearchResult& r) {
  ordered_json j;
  const bool ok = search_consistent_with_conjecture(r);
  j["status"] = ok ? "CONSISTENT" : "COUNTEREXAMPLE";
  j["n"] = r.n;
  j["predicate"] = r.predicate.name();
  j["max_size"] = r.max_size;
  j["witness"] = masks_json(r.witness.members);
  j["conjectured_fraction"] = r.conjectured.str();
  j["construction_size"] = r.construction_size;
  j["vertex_count"] = r.vertex_count;
  j["node_count"] = r.node_count;
  const Rational frac = Rational(static_cast<std::int64_t>(r.max_size)) / Rational(std::int64_t{1} << r.n);
  j["fraction"] = frac.str();
  j["approx"] = {{"fraction", frac.approx()}};
  return j;
}

}  // namespace sumint::report
