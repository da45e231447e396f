#pragma once

// Finite loops as Cayley tables, and the structural checks run on them:
// Moufang identities, (non)associativity, diassociativity, center, and
// simplicity through normal closures.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "paige/element_set.hpp"
#include "paige/error.hpp"

namespace paige {

using Triple = std::array<std::uint32_t, 3>;

/// Multiplication table of a finite loop on indices 0..n-1, index 0 the
/// identity. Construction verifies the Latin-square property.
class LoopTable {
 public:
  /// `products` is row-major, products[i*n + j] = i*j. Throws NotALoop if row 0
  /// or column 0 is not the identity map or any row/column is not a permutation.
  LoopTable(std::size_t n, std::vector<std::uint32_t> products);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const noexcept { return table_[i * n_ + j]; }
  /// The z with x*z = y.
  std::uint32_t left_div(std::uint32_t x, std::uint32_t y) const noexcept { return ldiv_[x * n_ + y]; }
  /// The z with z*x = y.
  std::uint32_t right_div(std::uint32_t y, std::uint32_t x) const noexcept { return rdiv_[x * n_ + y]; }
  /// Two-sided inverse if it exists, else the right inverse x\1.
  std::uint32_t inverse(std::uint32_t x) const noexcept { return left_div(x, 0); }

  const std::vector<std::uint32_t>& products() const noexcept { return table_; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> ldiv_;
  std::vector<std::uint32_t> rdiv_;
};

/// A table together with the elements its indices name.
template <LoopElement T>
struct IndexedLoop {
  std::vector<T> elements;
  LoopTable table;
};

/// Builds the Cayley table of a finite set closed under `mul`. The identity
/// (the unique idempotent) gets index 0; the rest follow in ascending key
/// order. Throws NotClosed if a product leaves the set, NotALoop if there is no
/// idempotent or cancellation fails.
template <LoopElement T, class Mul = std::multiplies<>>
IndexedLoop<T> build_table(const ElementSet<T>& set, const Mul& mul = {}) {
  std::vector<T> order(set.begin(), set.end());
  const auto identity = std::find_if(order.begin(), order.end(),
                                     [&](const T& x) { return mul(x, x).key() == x.key(); });
  if (identity == order.end()) {
    throw AlgebraError(ErrorKind::NotALoop, "no idempotent, hence no identity element");
  }
  std::iter_swap(order.begin(), identity);
  std::sort(order.begin() + 1, order.end(),
            [](const T& a, const T& b) { return a.key() < b.key(); });

  const ElementSet<T> indexed = ElementSet<T>::from(order);
  const std::size_t n = order.size();
  std::vector<std::uint32_t> products(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto k = indexed.index_of(mul(order[i], order[j]));
      if (!k) {
        throw AlgebraError(ErrorKind::NotClosed, "product of elements " + std::to_string(i) +
                                                     " and " + std::to_string(j) +
                                                     " lies outside the set");
      }
      products[i * n + j] = *k;
    }
  }
  return IndexedLoop<T>{std::move(order), LoopTable(n, std::move(products))};
}

/// The four classical Moufang identities; any one implies the others.
enum class MoufangVariant {
  LeftNested,   // ((x y) x) z = x (y (x z))
  RightNested,  // ((z x) y) x = z (x (y x))
  MiddleLeft,   // (x y)(z x) = (x (y z)) x
  MiddleRight,  // (x y)(z x) = x ((y z) x)
};

inline constexpr std::array<MoufangVariant, 4> kAllMoufangVariants = {
    MoufangVariant::LeftNested, MoufangVariant::RightNested, MoufangVariant::MiddleLeft,
    MoufangVariant::MiddleRight};

std::string_view to_string(MoufangVariant v) noexcept;

bool moufang_holds(const LoopTable& t, MoufangVariant v, std::uint32_t x, std::uint32_t y,
                   std::uint32_t z) noexcept;

/// Exhaustive over all triples when n^3 <= 3e6, else `samples` uniform random
/// triples from `seed`. Returns the first violating (x, y, z).
std::optional<Triple> check_moufang(const LoopTable& t,
                                    MoufangVariant v = MoufangVariant::LeftNested,
                                    std::uint64_t seed = 0, std::size_t samples = 1'000'000);

/// First (x, y, z) in index order with (xy)z != x(yz), or nullopt if associative.
std::optional<Triple> check_nonassociative(const LoopTable& t);

/// Associativity restricted to a subset (exhaustive over its triples).
std::optional<Triple> find_nonassociative_triple(const LoopTable& t,
                                                 const std::vector<std::uint32_t>& subset);

/// Sorted indices of the subloop generated by `generators`.
std::vector<std::uint32_t> subloop_closure(const LoopTable& t,
                                           const std::vector<std::uint32_t>& generators);

/// For each pair, the subloop generated by it must be associative. Returns the
/// first pair whose subloop is not.
std::optional<std::array<std::uint32_t, 2>> check_diassociativity(
    const LoopTable& t, const std::vector<std::array<std::uint32_t, 2>>& pairs);

/// `count` random pairs drawn from `seed`.
std::vector<std::array<std::uint32_t, 2>> sample_pairs(std::size_t n, std::size_t count,
                                                       std::uint64_t seed);

/// All z with zx = xz, (zx)y = z(xy), (xz)y = x(zy), (xy)z = x(yz) for all x, y.
std::vector<std::uint32_t> center(const LoopTable& t);

/// Smallest subloop containing g closed under the inner mappings
/// T_x: a -> x\(ax), L_{x,y}: a -> (yx)\(y(xa)), R_{x,y}: a -> ((ax)y)/(xy).
std::vector<std::uint32_t> normal_closure(const LoopTable& t, std::uint32_t g);

/// Identity class of the smallest congruence identifying g with the identity.
/// Equals normal_closure(t, g); computed by union-find.
std::vector<std::uint32_t> normal_closure_congruence(const LoopTable& t, std::uint32_t g);

enum class NormalClosureMethod { InnerMappings, Congruence };

struct SimplicityOptions {
  NormalClosureMethod method = NormalClosureMethod::InnerMappings;
  /// Skip g once some T_x(g) with the same normal closure has been checked.
  bool skip_conjugates = false;
};

struct SimplicityReport {
  bool simple = true;
  /// Non-identity elements whose normal closure is known to be the whole loop.
  std::size_t elements_covered = 0;
  /// Normal closures actually computed.
  std::size_t closures_computed = 0;
  std::uint32_t witness_generator = 0;
  /// A proper nontrivial normal subloop when !simple.
  std::vector<std::uint32_t> witness_subloop;
};

inline constexpr std::size_t kSimplicityBound = 1500;

/// Throws TooLarge above kSimplicityBound elements.
SimplicityReport simplicity_check(const LoopTable& t, const SimplicityOptions& options = {});

/// CSV export: header "n=<count>,p=<prime>" then one "i,j,k" line per product.
void write_table_csv(std::ostream& os, const LoopTable& t, unsigned p);

/// Swaps the two values of a 2x2 Latin subsquare avoiding row/column 0, giving
/// a different loop on the same indices. Returns nullopt if none exists.
std::optional<LoopTable> swap_intercalate(const LoopTable& t);

}  // namespace paige
