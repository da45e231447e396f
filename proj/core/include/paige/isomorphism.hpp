#pragma once

// The isomorphism J'/{1, -1} -> M(2) determined by
//   i -> [[0, e3], [e3, 0]],  j -> [[0, e2], [e2, 0]],
//   h -> [[1, (0,1,0)], [(1,0,1), 1]].
//
// The map is built without choosing normal forms for words: the relation
// seeded with these three pairs is closed under componentwise multiplication.
// If the closure never pairs one side with two different partners and covers
// both loops, it is the graph of a bijective homomorphism.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "paige/octonion.hpp"
#include "paige/zorn.hpp"

namespace paige {

class PairMap {
 public:
  struct Entry {
    UnitClass source;
    CanonicalElement image;
  };

  /// Throws NotSurjective if either side is missed.
  const CanonicalElement& image(const UnitClass& x) const;
  const UnitClass& preimage(const CanonicalElement& y) const;
  bool contains(const UnitClass& x) const { return by_source_.contains(x.key()); }

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Sorted (source key, image key) pairs; independent of construction order.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> graph() const;

 private:
  friend PairMap close_pair_relation(const std::vector<Entry>& seeds);
  std::vector<Entry> entries_;
  FlatIndex by_source_;
  FlatIndex by_image_;
};

/// The three seed pairs (i, j, h with their images).
std::vector<PairMap::Entry> isomorphism_seeds();

/// Closure of the seeded relation. Throws IsomorphismFailure on a collision.
PairMap close_pair_relation(const std::vector<PairMap::Entry>& seeds);

/// close_pair_relation(isomorphism_seeds()) checked to cover all 120 classes
/// on both sides. Throws IsomorphismFailure, NotSurjective.
PairMap build_isomorphism();

struct HomViolation {
  UnitClass x;
  UnitClass y;
};

/// phi(xy) = phi(x)phi(y) for all pairs of source classes.
std::optional<HomViolation> verify_hom(const PairMap& map);

/// phi^-1(ab) = phi^-1(a)phi^-1(b) for all pairs of image elements.
std::optional<std::array<CanonicalElement, 2>> verify_inverse_hom(const PairMap& map);

/// phi(class(conj a)) = class(zorn_inv(phi(class a))) for every class. Returns
/// the first offending source class.
std::optional<UnitClass> verify_inverse_classes(const PairMap& map);

struct LemmaCheck {
  std::string name;
  bool pass;
};

/// e = -(jh . hi) . kh in octonion arithmetic, phi(e) = [[0,(1,1,1)],[(1,1,1),0]],
/// and the intermediate identities hi = -1 - ih, jh.kh = -i + h - kh,
/// k.kh = -h, h.kh = k - h, ih.kh = j - h - kh, -i - j - k + 2h = e.
std::vector<LemmaCheck> verify_lemma7(const PairMap& map);

/// Rows "octonion_class,zorn_matrix" (both quoted), sorted by the octonion
/// rendering, after a header line.
void write_map_csv(std::ostream& os, const PairMap& map);

}  // namespace paige
