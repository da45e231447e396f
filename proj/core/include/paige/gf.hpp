#pragma once

// Exact arithmetic in the prime field F_p and in F_p^3.
//
// Supported moduli are the primes 2 <= p <= 251, so every residue fits in one
// byte. Values carry their modulus; combining values of different moduli is an
// error (ModulusMismatch), never a silent coercion.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "paige/error.hpp"

namespace paige {

inline constexpr unsigned kMaxPrime = 251;

namespace detail {
__extension__ typedef unsigned __int128 uint128;

constexpr bool trial_division_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Lemire's fastmod multipliers, one per supported modulus.
constexpr std::array<std::uint64_t, kMaxPrime + 1> make_fastmod_table() {
  std::array<std::uint64_t, kMaxPrime + 1> table{};
  for (unsigned p = 2; p <= kMaxPrime; ++p) {
    table[p] = UINT64_C(0xFFFFFFFFFFFFFFFF) / p + 1;
  }
  return table;
}

inline constexpr auto kFastmod = make_fastmod_table();

// 32-bit multipliers; exact for numerators below 2^24 since p < 2^8.
constexpr std::array<std::uint32_t, kMaxPrime + 1> make_fastmod32_table() {
  std::array<std::uint32_t, kMaxPrime + 1> table{};
  for (unsigned p = 2; p <= kMaxPrime; ++p) {
    table[p] = static_cast<std::uint32_t>(UINT32_C(0xFFFFFFFF) / p + 1);
  }
  return table;
}

inline constexpr auto kFastmod32 = make_fastmod32_table();

}  // namespace detail

/// True iff p is a prime in the supported range [2, 251].
constexpr bool is_supported_prime(unsigned p) {
  return p <= kMaxPrime && detail::trial_division_prime(p);
}

/// Throws UnsupportedPrime unless is_supported_prime(p).
void require_supported_prime(unsigned p);

/// x mod p for any 32-bit x; p must be a supported modulus.
inline std::uint32_t reduce(std::uint32_t x, unsigned p) {
  const std::uint64_t low = detail::kFastmod[p] * x;
  return static_cast<std::uint32_t>(
      (static_cast<detail::uint128>(low) * p) >> 64);
}

/// x mod p for x < 2^24; p must be a supported modulus.
inline std::uint32_t reduce_small(std::uint32_t x, unsigned p) {
  const std::uint32_t low = detail::kFastmod32[p] * x;
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(low) * p) >> 32);
}

/// A residue modulo a supported prime.
class Fp {
 public:
  /// Reduces `value` (which may be negative) modulo p. Throws UnsupportedPrime.
  Fp(std::int64_t value, unsigned p);

  /// No validation; caller guarantees p supported and value < p.
  static constexpr Fp raw(std::uint8_t value, std::uint8_t p) {
    return Fp(value, p, RawTag{});
  }

  unsigned value() const noexcept { return value_; }
  unsigned modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp operator+(Fp rhs) const;
  Fp operator-(Fp rhs) const;
  Fp operator*(Fp rhs) const;
  Fp operator-() const;
  Fp pow(std::uint64_t exponent) const;

  friend bool operator==(Fp, Fp) = default;

 private:
  struct RawTag {};
  constexpr Fp(std::uint8_t value, std::uint8_t p, RawTag)
      : value_(value), p_(p) {}

  std::uint8_t value_;
  std::uint8_t p_;
};

/// Multiplicative inverse via x^(p-2). Throws InversionOfZero.
Fp fp_inv(Fp x);

std::ostream& operator<<(std::ostream& os, Fp x);

/// A vector in F_p^3.
class Vec3 {
 public:
  /// Coordinates reduced modulo p. Throws UnsupportedPrime.
  Vec3(std::int64_t x1, std::int64_t x2, std::int64_t x3, unsigned p);
  /// Throws ModulusMismatch unless all three share a modulus.
  Vec3(Fp x1, Fp x2, Fp x3);

  static Vec3 zero(unsigned p) { return Vec3(0, 0, 0, p); }
  /// The standard unit vector e_i, i in {1, 2, 3}.
  static Vec3 unit(int i, unsigned p);

  unsigned modulus() const noexcept { return p_; }
  /// Coordinate i in {0, 1, 2}.
  Fp operator[](std::size_t i) const { return Fp::raw(c_[i], p_); }
  const std::array<std::uint8_t, 3>& raw() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

  Vec3 operator+(const Vec3& rhs) const;
  Vec3 operator-(const Vec3& rhs) const;
  Vec3 operator-() const;
  Vec3 scaled(Fp k) const;

  friend bool operator==(const Vec3&, const Vec3&) = default;

 private:
  friend class ZornMatrix;
  Vec3(std::array<std::uint8_t, 3> c, std::uint8_t p) : c_(c), p_(p) {}

  std::array<std::uint8_t, 3> c_;
  std::uint8_t p_;
};

Fp dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);

std::ostream& operator<<(std::ostream& os, const Vec3& v);

}  // namespace paige
