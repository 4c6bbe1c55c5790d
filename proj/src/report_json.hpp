#pragma once

#include <string>

#include <json.hpp>

#include "sumint/arith_bounds.hpp"
#include "sumint/boolean_fourier.hpp"
#include "sumint/extremal_search.hpp"
#include "sumint/lp_certificate.hpp"
#include "sumint/sumfree_measure.hpp"

namespace sumint::report {

using nlohmann::ordered_json;

ordered_json to_json(const IntSet& s);
ordered_json to_json(const std::vector<IntSet>& sets);
ordered_json to_json(const std::vector<Rational>& values);

ordered_json dist_json(const LevelDistribution& d);
ordered_json scan_json(const ScanReport& r);
std::string scan_csv(const ScanReport& r);
ordered_json verdict_json(const Certificate& cert, const Verdict& v);
ordered_json lp_search_json(const LpSearchResult& r, std::size_t m);
ordered_json nu_json(unsigned n, const Certificate& cert, const NuConstruction& nu);
ordered_json fourier_json(unsigned n, const Certificate& cert, const FourierBoundReport& r);
ordered_json pointmass_json(unsigned n, const IntSet& t, const PointMassReport& r);
ordered_json search_json(const SearchResult& r);
bool search_consistent_with_conjecture(const SearchResult& r);
bool fourier_passed(const FourierBoundReport& r);

}  // namespace sumint::report
