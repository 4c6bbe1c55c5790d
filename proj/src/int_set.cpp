#include "sumint/int_set.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sumint/error.hpp"

namespace sumint {

IntSet::IntSet(std::initializer_list<value_type> elems) : IntSet(std::vector<value_type>(elems)) {}

IntSet::IntSet(std::vector<value_type> elems) : elems_(std::move(elems)) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] == 0) fail(ErrorCode::InvalidArgument, "set elements must be positive integers");
    if (i > 0 && elems_[i] <= elems_[i - 1])
      fail(ErrorCode::InvalidArgument, "set elements must be strictly increasing");
  }
}

IntSet IntSet::from_unsorted(std::vector<value_type> elems) {
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
    fail(ErrorCode::InvalidArgument, "duplicate set element");
  return IntSet(std::move(elems));
}

IntSet IntSet::parse(std::string_view text) {
  std::vector<value_type> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) {
      if (comma == text.size() && out.empty() && pos == 0) break;  // "" is the empty set
      fail(ErrorCode::InvalidArgument, "empty element in set '" + std::string(text) + "'");
    }
    value_type v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail(ErrorCode::InvalidArgument, "malformed set element '" + std::string(tok) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return from_unsorted(std::move(out));
}

IntSet IntSet::from_mask(std::uint64_t mask) {
  std::vector<value_type> out;
  for (unsigned i = 0; i < 64; ++i)
    if (mask >> i & 1U) out.push_back(i + 1);
  return IntSet(std::move(out));
}

bool IntSet::contains(value_type x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

std::uint64_t IntSet::to_mask() const {
  std::uint64_t mask = 0;
  for (value_type x : elems_) {
    if (x > 64) fail(ErrorCode::InvalidArgument, "element " + std::to_string(x) + " does not fit a 64-bit mask");
    mask |= std::uint64_t{1} << (x - 1);
  }
  return mask;
}

IntSet::value_type IntSet::gcd() const {
  value_type g = 0;
  for (value_type x : elems_) g = std::gcd(g, x);
  return g;
}

IntSet IntSet::scaled(value_type c) const {
  if (c == 0) fail(ErrorCode::InvalidArgument, "scale factor must be positive");
  std::vector<value_type> out(elems_);
  for (value_type& x : out) x *= c;
  return IntSet(std::move(out));
}

IntSet IntSet::with(value_type x) const {
  std::vector<value_type> out(elems_);
  out.push_back(x);
  return from_unsorted(std::move(out));
}

std::string IntSet::str() const {
  std::string s;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elems_[i]);
  }
  return s;
}

std::vector<IntSet> primitive_subsets(std::uint64_t max_element, std::size_t k) {
  std::vector<IntSet> out;
  for_each_subset(max_element, k, [&](IntSet s) {
    if (s.is_primitive()) out.push_back(std::move(s));
  });
  return out;
}

}  // namespace sumint
