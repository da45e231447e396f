#pragma once

// Multiplicative closure by frontier expansion.
//
// Each round multiplies the frontier (elements discovered in the previous
// round) against everything known so far, on both sides, so every ordered
// pair is multiplied exactly once over the whole run. Closure under the
// product alone yields the generated subloop of a finite Moufang loop: every
// element has finite order, so the identity and inverses appear as positive
// powers.
//
// Rounds may be split across threads. Each worker scans a contiguous slice of
// the frontier against the frozen set, collecting unseen products into a
// private set; the slices are merged in slice order after the join. The
// resulting element order is therefore independent of the thread count.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "paige/element_set.hpp"
#include "paige/error.hpp"

namespace paige {

struct ClosureOptions {
  std::size_t cap = 20'000'000;
  unsigned threads = 1;
};

/// Optional batched kernels, found by argument-dependent lookup. When present
/// they replace element-by-element products in closures under operator*.
template <class T>
concept BatchedProducts = requires(const T& x, const T* ys, std::size_t n, std::uint64_t* keys) {
  left_product_keys(x, ys, n, keys);
  right_product_keys(x, ys, n, keys);
};

namespace detail {

inline constexpr std::size_t kPrefetchDistance = 8;

template <LoopElement T, class Mul>
void collect_unseen(const ElementSet<T>& all, const std::vector<std::uint64_t>& keys,
                    std::size_t count, const Mul& product, ElementSet<T>& fresh) {
  for (std::size_t a = 0; a < count; ++a) {
    if (a + kPrefetchDistance < count) all.prefetch_key(keys[a + kPrefetchDistance]);
    if (!all.contains_key(keys[a])) fresh.insert(product(a));
  }
}

template <LoopElement T, class Mul>
void expand_slice(const ElementSet<T>& all, std::size_t old_end, std::size_t frontier_end,
                  std::size_t slice_begin, std::size_t slice_end, const Mul& mul,
                  ElementSet<T>& fresh) {
  if constexpr (std::same_as<Mul, std::multiplies<>> && BatchedProducts<T>) {
    std::vector<std::uint64_t> keys(frontier_end);
    const T* data = all.elements().data();
    for (std::size_t f = slice_begin; f < slice_end; ++f) {
      const T& x = all[f];
      left_product_keys(x, data, frontier_end, keys.data());
      collect_unseen(all, keys, frontier_end, [&](std::size_t a) { return x * all[a]; }, fresh);
      right_product_keys(x, data, old_end, keys.data());
      collect_unseen(all, keys, old_end, [&](std::size_t a) { return all[a] * x; }, fresh);
    }
    return;
  }
  for (std::size_t f = slice_begin; f < slice_end; ++f) {
    const T& x = all[f];
    for (std::size_t a = 0; a < frontier_end; ++a) {
      T prod = mul(x, all[a]);
      if (!all.contains(prod)) fresh.insert(prod);
    }
    for (std::size_t a = 0; a < old_end; ++a) {
      T prod = mul(all[a], x);
      if (!all.contains(prod)) fresh.insert(prod);
    }
  }
}

}  // namespace detail

/// Smallest superset of `generators` closed under `mul`. Throws CapExceeded if
/// the set would grow past options.cap.
template <LoopElement T, class Mul = std::multiplies<>>
ElementSet<T> closure(const ElementSet<T>& generators, const ClosureOptions& options = {},
                      const Mul& mul = {}) {
  if (generators.size() > options.cap) {
    throw AlgebraError(ErrorKind::CapExceeded, "more generators than the cap allows");
  }
  ElementSet<T> all = generators;
  std::size_t old_end = 0;
  const unsigned threads = std::max(1U, options.threads);

  while (old_end < all.size()) {
    const std::size_t frontier_end = all.size();
    const std::size_t frontier = frontier_end - old_end;
    const std::size_t workers = std::min<std::size_t>(threads, frontier);

    std::vector<ElementSet<T>> fresh(workers);
    auto slice = [&](std::size_t w) {
      return old_end + frontier * w / workers;
    };
    if (workers == 1) {
      detail::expand_slice(all, old_end, frontier_end, old_end, frontier_end, mul, fresh[0]);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          detail::expand_slice(all, old_end, frontier_end, slice(w), slice(w + 1), mul, fresh[w]);
        });
      }
    }

    for (const auto& part : fresh) {
      for (const T& x : part) {
        if (all.insert(x) && all.size() > options.cap) {
          throw AlgebraError(ErrorKind::CapExceeded,
                             "closure exceeded " + std::to_string(options.cap) + " elements");
        }
      }
    }
    old_end = frontier_end;
  }
  return all;
}

template <LoopElement T, class Mul = std::multiplies<>>
ElementSet<T> closure(std::initializer_list<T> generators, const ClosureOptions& options = {},
                      const Mul& mul = {}) {
  return closure(ElementSet<T>::from(generators), options, mul);
}

}  // namespace paige
