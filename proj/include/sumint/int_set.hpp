#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sumint {

/// Finite set of positive integers stored strictly increasing.
class IntSet {
 public:
  using value_type = std::uint64_t;

  IntSet() = default;
  /// Throws unless the elements are positive and strictly increasing.
  IntSet(std::initializer_list<value_type> elems);
  explicit IntSet(std::vector<value_type> elems);

  /// Sorts; rejects zero and duplicates.
  static IntSet from_unsorted(std::vector<value_type> elems);
  /// Parses "1,3,4" (whitespace tolerated). The empty string is the empty set.
  static IntSet parse(std::string_view text);
  /// Bit i-1 of mask represents element i.
  static IntSet from_mask(std::uint64_t mask);

  const std::vector<value_type>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  value_type max() const { return elems_.empty() ? 0 : elems_.back(); }
  bool contains(value_type x) const;
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  /// Inverse of from_mask; throws if an element exceeds 64.
  std::uint64_t to_mask() const;
  /// gcd of the elements (0 for the empty set).
  value_type gcd() const;
  bool is_primitive() const { return gcd() == 1; }
  /// Every element multiplied by c (c >= 1).
  IntSet scaled(value_type c) const;
  IntSet with(value_type x) const;

  /// "1,3,4"
  std::string str() const;

  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) { return a.elems_ <=> b.elems_; }

 private:
  std::vector<value_type> elems_;
};

/// Calls fn(IntSet) for every k-subset of {1..max_element} in lexicographic order.
template <class Fn>
void for_each_subset(std::uint64_t max_element, std::size_t k, Fn&& fn) {
  if (k > max_element) return;
  std::vector<std::uint64_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    fn(IntSet(cur));
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == max_element - (k - i)) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

/// All primitive (gcd 1) subsets of {1..max_element} of exactly k elements, lexicographic.
std::vector<IntSet> primitive_subsets(std::uint64_t max_element, std::size_t k);

}  // namespace sumint
