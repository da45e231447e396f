#pragma once

// Brute-force enumeration of the unit-determinant Zorn loop, the oracle that
// generator closures are compared against.

#include <vector>

#include "paige/element_set.hpp"
#include "paige/zorn.hpp"

namespace paige {

/// Largest prime for which exhaustive enumeration (p^8 tuples) is offered.
inline constexpr unsigned kOraclePrimeBound = 7;

/// All det-1 matrices over F_p, in ascending packed order. Throws
/// UnsupportedPrime for p outside [2, 7].
ElementSet<ZornMatrix> enumerate_unit_matrices(unsigned p);

/// All classes of det-1 matrices modulo {I, -I}, in ascending order of their
/// canonical representatives. Throws UnsupportedPrime for p outside [2, 7].
ElementSet<CanonicalElement> enumerate_unit_loop(unsigned p);

struct UnitLoopCenter {
  std::vector<ZornMatrix> center;
  /// Elements commuting with every element.
  std::size_t commuting = 0;
  /// Commuting elements settled by the scalar test rather than an associator scan.
  std::size_t scalar = 0;
};

/// Exact center of the det-1 matrices over F_p (un-quotiented). The commutant
/// is computed exhaustively. A commuting z with z x = lambda x for every x
/// associates with everything because the product is bilinear; any other
/// commuting z gets an exhaustive associator scan. Throws UnsupportedPrime for
/// p outside [2, 7].
UnitLoopCenter unit_loop_center(unsigned p);

}  // namespace paige
