#pragma once

// Exact real octonions with dyadic rational coordinates in the Dickson basis
// 1, i, j, k, e, ie, je, ke, and the unit loop J' of the integral Cayley
// numbers.
//
// An octonion is a pair of quaternions (q, Q) standing for q + Qe, with
//   (q, Q)(r, R) = (qr - conj(R) Q, R q + Q conj(r))
// and Hamilton's convention ij = k, jk = i, ki = j, i^2 = j^2 = k^2 = -1.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paige/element_set.hpp"

namespace paige {

/// num / 2^exp, normalized so that num is odd unless exp = 0.
class Dyadic {
 public:
  constexpr Dyadic() = default;
  Dyadic(std::int64_t num, int exp = 0);

  std::int64_t numerator() const noexcept { return num_; }
  int exponent() const noexcept { return exp_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return exp_ == 0; }

  Dyadic operator+(const Dyadic& rhs) const;
  Dyadic operator-(const Dyadic& rhs) const;
  Dyadic operator*(const Dyadic& rhs) const;
  Dyadic operator-() const { return Dyadic(-num_, exp_); }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

/// "0", "-3", "1/2", "-3/4"
std::string to_string(const Dyadic& d);
std::ostream& operator<<(std::ostream& os, const Dyadic& d);

/// Quaternion with coordinates (1, i, j, k) stored as integer numerators over
/// a shared 2^scale, normalized.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(std::array<std::int64_t, 4> numerators, int scale);

  Dyadic coord(std::size_t i) const { return Dyadic(num_[i], scale_); }
  const std::array<std::int64_t, 4>& numerators() const noexcept { return num_; }
  int scale() const noexcept { return scale_; }

  Quaternion operator*(const Quaternion& rhs) const;
  Quaternion operator+(const Quaternion& rhs) const;
  Quaternion operator-(const Quaternion& rhs) const;
  Quaternion operator-() const;
  Quaternion conj() const;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

 private:
  std::array<std::int64_t, 4> num_{};
  int scale_ = 0;
};

/// Names of the Dickson basis, index 0..7.
inline constexpr std::array<std::string_view, 8> kDicksonBasis = {"1",  "i",  "j",  "k",
                                                                  "e", "ie", "je", "ke"};

class Octonion {
 public:
  Octonion() = default;
  Octonion(const Quaternion& q, const Quaternion& Q) : q_(q), big_q_(Q) {}
  explicit Octonion(const std::array<Dyadic, 8>& coords);

  /// Coordinates given as multiples of 1/2.
  static Octonion from_halves(const std::array<std::int64_t, 8>& halves);
  static Octonion from_integers(const std::array<std::int64_t, 8>& coords);
  /// The Dickson basis element with index 0..7.
  static Octonion basis(std::size_t index);
  static Octonion one() { return basis(0); }

  Dyadic coord(std::size_t i) const { return i < 4 ? q_.coord(i) : big_q_.coord(i - 4); }
  std::array<Dyadic, 8> coords() const;
  const Quaternion& first() const noexcept { return q_; }
  const Quaternion& second() const noexcept { return big_q_; }

  Octonion operator*(const Octonion& rhs) const;
  Octonion operator+(const Octonion& rhs) const;
  Octonion operator-(const Octonion& rhs) const;
  Octonion operator-() const;

  /// Injective on octonions whose coordinates are multiples of 1/2 with
  /// magnitude below 64 (one signed byte per doubled coordinate). Throws
  /// std::domain_error otherwise.
  std::uint64_t key() const;

  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  Quaternion q_;
  Quaternion big_q_;
};

Octonion oct_mul(const Octonion& x, const Octonion& y);
/// conj(q + Qe) = conj(q) - Qe: negates the seven imaginary coordinates.
Octonion oct_conj(const Octonion& a);
/// a conj(a); throws std::logic_error if the product has an imaginary part.
Dyadic norm(const Octonion& a);
/// a + conj(a)
Dyadic trace(const Octonion& a);

/// h = (i + j + k + e) / 2
Octonion make_h();

/// Half-integer coordinates, integer norm and integer trace.
bool satisfies_integrality(const Octonion& a);

/// "a0 + a1 i + a2 j + a3 k + a4 e + a5 ie + a6 je + a7 ke"
std::string to_string(const Octonion& a);
std::ostream& operator<<(std::ostream& os, const Octonion& a);

/// Sums of terms "[coef] unit" with coef an integer or a fraction with a
/// power-of-two denominator and unit one of 1 (omitted), i, j, k, e, ie, je,
/// ke, or h. Accepts everything to_string produces. Throws ParseError.
Octonion parse_octonion(std::string_view text);

/// An element of J'/{1, -1}: representative with positive first nonzero coordinate.
class UnitClass {
 public:
  const Octonion& rep() const noexcept { return rep_; }
  std::uint64_t key() const { return rep_.key(); }
  UnitClass operator*(const UnitClass& rhs) const;
  friend bool operator==(const UnitClass&, const UnitClass&) = default;

 private:
  explicit UnitClass(const Octonion& rep) : rep_(rep) {}
  friend UnitClass canonical_unit(const Octonion&);

  Octonion rep_;
};

/// Throws NotUnit unless norm(a) = 1.
UnitClass canonical_unit(const Octonion& a);

inline constexpr std::size_t kJPrimeCap = 10'000;

/// Closure of {i, j, h} under multiplication; 240 elements. Throws
/// CapExceeded past kJPrimeCap.
ElementSet<Octonion> jprime_enumerate();

/// J' modulo {1, -1}.
ElementSet<UnitClass> jprime_classes(const ElementSet<Octonion>& jprime);

/// The 16 signed units and the 1120 vectors with four coordinates +-1/2 and
/// four zero: every half-integer octonion of norm 1.
std::vector<Octonion> half_integer_unit_candidates();

struct BasisTripleReport {
  std::size_t triples_checked = 0;
  std::size_t largest_closure = 0;
  /// A triple whose closure reaches all of J', if any.
  std::optional<std::array<Octonion, 3>> generating_triple;
};

/// Closes every 3-subset of the eight Dickson basis elements (or of the 16
/// signed ones when `signed_units`) and reports any that generates J'.
BasisTripleReport check_basis_triples(bool signed_units = false);

}  // namespace paige
