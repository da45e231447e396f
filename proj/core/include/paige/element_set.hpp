#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ranges>
#include <vector>

#include "paige/flat_index.hpp"

namespace paige {

/// An element kind usable in closures and tables: it multiplies, and key() is
/// an injective 64-bit encoding.
template <class T>
concept LoopElement = std::copyable<T> && requires(const T& a, const T& b) {
  { a * b } -> std::convertible_to<T>;
  { a.key() } -> std::convertible_to<std::uint64_t>;
};

/// Insertion-ordered set of elements, deduplicated by key().
template <LoopElement T>
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t expected) : index_(expected) { elements_.reserve(expected); }

  template <std::ranges::input_range R>
  static ElementSet from(const R& range) {
    ElementSet set;
    for (const auto& x : range) set.insert(x);
    return set;
  }

  /// True iff x was not present.
  bool insert(const T& x) {
    const auto [slot, inserted] =
        index_.insert(x.key(), static_cast<std::uint32_t>(elements_.size()));
    if (inserted) elements_.push_back(x);
    return inserted;
  }

  bool contains(const T& x) const noexcept { return index_.contains(x.key()); }
  bool contains_key(std::uint64_t key) const noexcept { return index_.contains(key); }
  void prefetch_key(std::uint64_t key) const noexcept { index_.prefetch(key); }
  std::optional<std::uint32_t> index_of(const T& x) const noexcept { return index_.find(x.key()); }
  std::optional<std::uint32_t> index_of_key(std::uint64_t key) const noexcept {
    return index_.find(key);
  }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const T& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<T>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  void reserve(std::size_t n) {
    elements_.reserve(n);
    index_.reserve(n);
  }

  std::vector<std::uint64_t> sorted_keys() const {
    std::vector<std::uint64_t> keys;
    keys.reserve(elements_.size());
    for (const auto& x : elements_) keys.push_back(x.key());
    std::sort(keys.begin(), keys.end());
    return keys;
  }

  bool is_subset_of(const ElementSet& other) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const T& x) { return other.contains(x); });
  }

  /// Set equality; insertion order is ignored.
  friend bool operator==(const ElementSet& lhs, const ElementSet& rhs) {
    return lhs.size() == rhs.size() && lhs.is_subset_of(rhs);
  }

 private:
  std::vector<T> elements_;
  FlatIndex index_;
};

}  // namespace paige
