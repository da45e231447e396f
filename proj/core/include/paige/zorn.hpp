#pragma once

// Zorn vector matrices over F_p.
//
// A Zorn matrix [[a, alpha], [beta, b]] has scalar diagonal and vector
// antidiagonal. Multiplication is the ordinary 2x2 product corrected by the
// antidiagonal cross-product terms:
//
//   [[a, al], [be, b]] [[c, ga], [de, d]] =
//       [[ac + al.de,          a ga + d al - be x de],
//        [c be + b de + al x ga, be.ga + bd         ]]
//
// The unit-determinant matrices form a Moufang loop; modulo its center {I, -I}
// it is the simple Paige loop. CanonicalElement represents that quotient.

#include <array>
#include <bit>
#include <cstring>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "paige/gf.hpp"

namespace paige {

class ZornMatrix {
 public:
  /// Throws ModulusMismatch unless all entries share a modulus.
  ZornMatrix(Fp a, const Vec3& alpha, const Vec3& beta, Fp b);

  static ZornMatrix identity(unsigned p);
  /// Inverse of packed(). Throws UnsupportedPrime, or ParseError if an entry is not below p.
  static ZornMatrix from_packed(std::uint64_t packed, unsigned p);
  /// Caller guarantees p is supported and every entry is below p.
  static ZornMatrix from_packed_unchecked(std::uint64_t packed, unsigned p) noexcept {
    if constexpr (std::endian::native == std::endian::little) packed = __builtin_bswap64(packed);
    std::array<std::uint8_t, 8> c;
    std::memcpy(c.data(), &packed, sizeof packed);
    return ZornMatrix(c, static_cast<std::uint8_t>(p));
  }

  unsigned modulus() const noexcept { return p_; }
  Fp a() const { return Fp::raw(c_[0], p_); }
  Vec3 alpha() const { return Vec3({c_[1], c_[2], c_[3]}, p_); }
  Vec3 beta() const { return Vec3({c_[4], c_[5], c_[6]}, p_); }
  Fp b() const { return Fp::raw(c_[7], p_); }

  /// Entries in the fixed order (a, alpha1, alpha2, alpha3, beta1, beta2, beta3, b).
  const std::array<std::uint8_t, 8>& entries() const noexcept { return c_; }

  /// One byte per entry, a in the most significant byte, so that integer order
  /// on packed values is lexicographic order on entries().
  std::uint64_t packed() const noexcept {
    std::uint64_t out;
    std::memcpy(&out, c_.data(), sizeof out);
    if constexpr (std::endian::native == std::endian::little) out = __builtin_bswap64(out);
    return out;
  }
  std::uint64_t key() const noexcept { return packed(); }

  ZornMatrix operator*(const ZornMatrix& rhs) const;
  ZornMatrix operator-() const;

  friend bool operator==(const ZornMatrix&, const ZornMatrix&) = default;

 private:
  ZornMatrix(std::array<std::uint8_t, 8> c, std::uint8_t p) : c_(c), p_(p) {}
  friend ZornMatrix zorn_mul_unchecked(const ZornMatrix&, const ZornMatrix&) noexcept;
  friend ZornMatrix basis_matrix(std::size_t, unsigned) noexcept;

  std::array<std::uint8_t, 8> c_;
  std::uint8_t p_;
};

/// Zorn product. Throws ModulusMismatch.
ZornMatrix zorn_mul(const ZornMatrix& m, const ZornMatrix& n);
/// Zorn product without the modulus check.
ZornMatrix zorn_mul_unchecked(const ZornMatrix& m, const ZornMatrix& n) noexcept;

/// ab - alpha.beta
Fp zorn_det(const ZornMatrix& m);

/// [[b, -alpha], [-beta, a]]. Throws NotUnitDeterminant unless det(m) = 1.
ZornMatrix zorn_inv(const ZornMatrix& m);

/// Swaps the two vector entries.
ZornMatrix transpose(const ZornMatrix& m);

/// The first-nonzero-coordinate map: (-x1^-1, 0, 0) if x1 != 0, else
/// (0, -x2^-1, 0) if x2 != 0, else (0, 0, -x3^-1). Satisfies alpha.t(alpha) = -1.
/// Throws ZeroVector.
Vec3 map_t(const Vec3& alpha);

/// [[1, alpha], [0, 1]]
ZornMatrix make_u(const Vec3& alpha);
/// [[1, 0], [alpha, 1]]
ZornMatrix make_l(const Vec3& alpha);
/// [[0, alpha], [t(alpha), 0]]. Throws ZeroVector.
ZornMatrix make_s(const Vec3& alpha);

/// Integer power by repeated multiplication; n may be negative (uses zorn_inv).
/// Powers of a single element are bracketing-free by diassociativity.
ZornMatrix zorn_pow(const ZornMatrix& m, std::int64_t n);

/// An element of M/Z(M): a unit-determinant Zorn matrix identified with its
/// negative. The representative is the lexicographically least of M and -M.
class CanonicalElement {
 public:
  const ZornMatrix& matrix() const noexcept { return rep_; }
  unsigned modulus() const noexcept { return rep_.modulus(); }
  std::uint64_t key() const noexcept { return rep_.packed(); }

  /// Product in the quotient loop.
  CanonicalElement operator*(const CanonicalElement& rhs) const;

  friend bool operator==(const CanonicalElement&, const CanonicalElement&) = default;

 private:
  explicit CanonicalElement(const ZornMatrix& rep) : rep_(rep) {}
  friend CanonicalElement canonicalize(const ZornMatrix&);
  friend CanonicalElement canonicalize_unit(const ZornMatrix&) noexcept;

  ZornMatrix rep_;
};

/// Throws NotUnitDeterminant unless det(m) = 1.
CanonicalElement canonicalize(const ZornMatrix& m);

/// keys[i] = (x * ys[i]).key() for i < n. Caller guarantees a common modulus.
void left_product_keys(const CanonicalElement& x, const CanonicalElement* ys, std::size_t n,
                       std::uint64_t* keys) noexcept;
/// keys[i] = (ys[i] * x).key() for i < n. Caller guarantees a common modulus.
void right_product_keys(const CanonicalElement& x, const CanonicalElement* ys, std::size_t n,
                        std::uint64_t* keys) noexcept;
/// Caller guarantees det(m) = 1.
CanonicalElement canonicalize_unit(const ZornMatrix& m) noexcept;

/// u(e1), u(e2) and x = [[0, e3], [-e3, 1]], canonicalized. Throws UnsupportedPrime.
std::array<CanonicalElement, 3> theorem_generators(unsigned p);

/// The matrix x = [[0, e3], [-e3, 1]].
ZornMatrix theorem_x(unsigned p);

/// "[[a,(a1,a2,a3)],[(b1,b2,b3),b]]"
std::string to_string(const ZornMatrix& m);
std::ostream& operator<<(std::ostream& os, const ZornMatrix& m);
std::ostream& operator<<(std::ostream& os, const CanonicalElement& m);

/// Parses the to_string grammar with arbitrary whitespace; integer entries
/// (possibly negative) are reduced mod p. Throws ParseError, UnsupportedPrime.
ZornMatrix parse_zorn(std::string_view text, unsigned p);

}  // namespace paige
