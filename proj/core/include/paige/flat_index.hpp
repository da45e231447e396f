#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace paige {

/// Open-addressing map from 64-bit keys to 32-bit slots, linear probing,
/// power-of-two capacity kept at most half full. Every 64-bit key is valid;
/// occupancy is tracked through the value sentinel.
class FlatIndex {
 public:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  explicit FlatIndex(std::size_t expected = 16) { rehash(capacity_for(expected)); }

  std::size_t size() const noexcept { return size_; }

  std::optional<std::uint32_t> find(std::uint64_t key) const noexcept {
    for (std::size_t i = hash(key) & mask_;; i = (i + 1) & mask_) {
      const Slot& slot = slots_[i];
      if (slot.value == kEmpty) return std::nullopt;
      if (slot.key == key) return slot.value;
    }
  }

  bool contains(std::uint64_t key) const noexcept { return find(key).has_value(); }

  /// Hints that key is about to be looked up.
  void prefetch(std::uint64_t key) const noexcept {
    __builtin_prefetch(&slots_[hash(key) & mask_]);
  }

  /// Inserts key -> value unless key is present. Returns the stored value and
  /// whether an insertion happened.
  std::pair<std::uint32_t, bool> insert(std::uint64_t key, std::uint32_t value) {
    if (2 * (size_ + 1) > slots_.size()) rehash(slots_.size() * 2);
    for (std::size_t i = hash(key) & mask_;; i = (i + 1) & mask_) {
      Slot& slot = slots_[i];
      if (slot.value == kEmpty) {
        slot = {key, value};
        ++size_;
        return {value, true};
      }
      if (slot.key == key) return {slot.value, false};
    }
  }

  void reserve(std::size_t expected) {
    const std::size_t want = capacity_for(expected);
    if (want > slots_.size()) rehash(want);
  }

 private:
  static std::size_t capacity_for(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap *= 2;
    return cap;
  }

  // splitmix64 finalizer
  static std::size_t hash(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= UINT64_C(0xbf58476d1ce4e5b9);
    x ^= x >> 27;
    x *= UINT64_C(0x94d049bb133111eb);
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }

  void rehash(std::size_t capacity) {
    std::vector<Slot> old(capacity);
    old.swap(slots_);
    mask_ = capacity - 1;
    size_ = 0;
    for (const Slot& slot : old) {
      if (slot.value != kEmpty) insert(slot.key, slot.value);
    }
  }

  struct Slot {
    std::uint64_t key = 0;
    std::uint32_t value = kEmpty;
  };

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace paige
