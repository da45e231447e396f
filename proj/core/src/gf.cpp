#include "paige/gf.hpp"

#include <ostream>

namespace paige {

namespace {

std::uint8_t reduce_signed(std::int64_t value, unsigned p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint8_t>(r);
}

void require_same(unsigned p, unsigned q) {
  if (p != q) {
    throw AlgebraError(ErrorKind::ModulusMismatch,
                       "moduli " + std::to_string(p) + " and " + std::to_string(q));
  }
}

}  // namespace

void require_supported_prime(unsigned p) {
  if (!is_supported_prime(p)) {
    std::string why = p > kMaxPrime ? " exceeds the supported bound 251"
                                    : " is not prime";
    throw AlgebraError(ErrorKind::UnsupportedPrime, std::to_string(p) + why);
  }
}

Fp::Fp(std::int64_t value, unsigned p) {
  require_supported_prime(p);
  value_ = reduce_signed(value, p);
  p_ = static_cast<std::uint8_t>(p);
}

Fp Fp::operator+(Fp rhs) const {
  require_same(p_, rhs.p_);
  return raw(static_cast<std::uint8_t>(reduce(value_ + rhs.value_, p_)), p_);
}

Fp Fp::operator-(Fp rhs) const {
  require_same(p_, rhs.p_);
  return raw(static_cast<std::uint8_t>(reduce(value_ + p_ - rhs.value_, p_)), p_);
}

Fp Fp::operator*(Fp rhs) const {
  require_same(p_, rhs.p_);
  return raw(static_cast<std::uint8_t>(reduce(unsigned{value_} * rhs.value_, p_)), p_);
}

Fp Fp::operator-() const {
  return raw(static_cast<std::uint8_t>(reduce(p_ - value_, p_)), p_);
}

Fp Fp::pow(std::uint64_t exponent) const {
  Fp result = raw(static_cast<std::uint8_t>(reduce(1, p_)), p_);
  Fp base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

Fp fp_inv(Fp x) {
  if (x.is_zero()) {
    throw AlgebraError(ErrorKind::InversionOfZero,
                       "0 has no inverse mod " + std::to_string(x.modulus()));
  }
  return x.pow(x.modulus() - 2);
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

Vec3::Vec3(std::int64_t x1, std::int64_t x2, std::int64_t x3, unsigned p) {
  require_supported_prime(p);
  c_ = {reduce_signed(x1, p), reduce_signed(x2, p), reduce_signed(x3, p)};
  p_ = static_cast<std::uint8_t>(p);
}

Vec3::Vec3(Fp x1, Fp x2, Fp x3) {
  require_same(x1.modulus(), x2.modulus());
  require_same(x1.modulus(), x3.modulus());
  c_ = {static_cast<std::uint8_t>(x1.value()), static_cast<std::uint8_t>(x2.value()),
        static_cast<std::uint8_t>(x3.value())};
  p_ = static_cast<std::uint8_t>(x1.modulus());
}

Vec3 Vec3::unit(int i, unsigned p) {
  if (i < 1 || i > 3) {
    throw std::out_of_range("unit vector index must be 1, 2 or 3");
  }
  return Vec3(i == 1, i == 2, i == 3, p);
}

Vec3 Vec3::operator+(const Vec3& rhs) const {
  return Vec3((*this)[0] + rhs[0], (*this)[1] + rhs[1], (*this)[2] + rhs[2]);
}

Vec3 Vec3::operator-(const Vec3& rhs) const {
  return Vec3((*this)[0] - rhs[0], (*this)[1] - rhs[1], (*this)[2] - rhs[2]);
}

Vec3 Vec3::operator-() const { return Vec3(-(*this)[0], -(*this)[1], -(*this)[2]); }

Vec3 Vec3::scaled(Fp k) const {
  return Vec3(k * (*this)[0], k * (*this)[1], k * (*this)[2]);
}

Fp dot(const Vec3& u, const Vec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  return Vec3(u[1] * v[2] - u[2] * v[1],
              u[2] * v[0] - u[0] * v[2],
              u[0] * v[1] - u[1] * v[0]);
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ')';
}

}  // namespace paige
