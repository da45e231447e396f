#include "paige/zorn.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>

namespace paige {

ZornMatrix::ZornMatrix(Fp a, const Vec3& alpha, const Vec3& beta, Fp b) {
  const unsigned p = a.modulus();
  if (alpha.modulus() != p || beta.modulus() != p || b.modulus() != p) {
    throw AlgebraError(ErrorKind::ModulusMismatch, "Zorn matrix entries disagree on modulus");
  }
  const auto& al = alpha.raw();
  const auto& be = beta.raw();
  c_ = {static_cast<std::uint8_t>(a.value()), al[0], al[1], al[2],
        be[0], be[1], be[2], static_cast<std::uint8_t>(b.value())};
  p_ = static_cast<std::uint8_t>(p);
}

ZornMatrix ZornMatrix::identity(unsigned p) {
  return ZornMatrix(Fp(1, p), Vec3::zero(p), Vec3::zero(p), Fp(1, p));
}

ZornMatrix ZornMatrix::from_packed(std::uint64_t packed, unsigned p) {
  require_supported_prime(p);
  std::array<std::uint8_t, 8> c{};
  for (int i = 7; i >= 0; --i) {
    c[i] = static_cast<std::uint8_t>(packed & 0xFFU);
    packed >>= 8;
  }
  for (auto v : c) {
    if (v >= p) throw AlgebraError(ErrorKind::ParseError, "packed entry out of range");
  }
  return ZornMatrix(c, static_cast<std::uint8_t>(p));
}


ZornMatrix ZornMatrix::operator*(const ZornMatrix& rhs) const { return zorn_mul(*this, rhs); }

ZornMatrix ZornMatrix::operator-() const {
  std::array<std::uint8_t, 8> c{};
  for (std::size_t i = 0; i < 8; ++i) {
    c[i] = static_cast<std::uint8_t>(c_[i] == 0 ? 0 : p_ - c_[i]);
  }
  return ZornMatrix(c, p_);
}

ZornMatrix zorn_mul(const ZornMatrix& m, const ZornMatrix& n) {
  if (m.modulus() != n.modulus()) {
    throw AlgebraError(ErrorKind::ModulusMismatch,
                       "Zorn product of matrices mod " + std::to_string(m.modulus()) +
                           " and " + std::to_string(n.modulus()));
  }
  return zorn_mul_unchecked(m, n);
}

ZornMatrix zorn_mul_unchecked(const ZornMatrix& m, const ZornMatrix& n) noexcept {
  const unsigned p = m.p_;
  const std::uint32_t pp = p * p;
  const auto& x = m.c_;
  const auto& y = n.c_;
  const std::uint32_t a = x[0], al1 = x[1], al2 = x[2], al3 = x[3];
  const std::uint32_t be1 = x[4], be2 = x[5], be3 = x[6], b = x[7];
  const std::uint32_t c = y[0], ga1 = y[1], ga2 = y[2], ga3 = y[3];
  const std::uint32_t de1 = y[4], de2 = y[5], de3 = y[6], d = y[7];

  std::array<std::uint32_t, 8> r{
      a * c + al1 * de1 + al2 * de2 + al3 * de3,
      // a gamma + d alpha - beta x delta
      a * ga1 + d * al1 + pp - (be2 * de3) + be3 * de2,
      a * ga2 + d * al2 + pp - (be3 * de1) + be1 * de3,
      a * ga3 + d * al3 + pp - (be1 * de2) + be2 * de1,
      // c beta + b delta + alpha x gamma
      c * be1 + b * de1 + pp - (al3 * ga2) + al2 * ga3,
      c * be2 + b * de2 + pp - (al1 * ga3) + al3 * ga1,
      c * be3 + b * de3 + pp - (al2 * ga1) + al1 * ga2,
      be1 * ga1 + be2 * ga2 + be3 * ga3 + b * d,
  };
  std::array<std::uint8_t, 8> out{};
  for (std::size_t i = 0; i < 8; ++i) out[i] = static_cast<std::uint8_t>(reduce_small(r[i], p));
  return ZornMatrix(out, m.p_);
}

Fp zorn_det(const ZornMatrix& m) { return m.a() * m.b() - dot(m.alpha(), m.beta()); }

ZornMatrix zorn_inv(const ZornMatrix& m) {
  if (zorn_det(m).value() != 1) {
    throw AlgebraError(ErrorKind::NotUnitDeterminant,
                       "inverse formula needs det 1, got det " +
                           std::to_string(zorn_det(m).value()) + " for " + to_string(m));
  }
  return ZornMatrix(m.b(), -m.alpha(), -m.beta(), m.a());
}

ZornMatrix transpose(const ZornMatrix& m) { return ZornMatrix(m.a(), m.beta(), m.alpha(), m.b()); }

Vec3 map_t(const Vec3& alpha) {
  const unsigned p = alpha.modulus();
  for (std::size_t i = 0; i < 3; ++i) {
    if (!alpha[i].is_zero()) {
      const Fp v = -fp_inv(alpha[i]);
      const Fp z(0, p);
      return Vec3(i == 0 ? v : z, i == 1 ? v : z, i == 2 ? v : z);
    }
  }
  throw AlgebraError(ErrorKind::ZeroVector, "t is undefined at the zero vector");
}

ZornMatrix make_u(const Vec3& alpha) {
  const unsigned p = alpha.modulus();
  return ZornMatrix(Fp(1, p), alpha, Vec3::zero(p), Fp(1, p));
}

ZornMatrix make_l(const Vec3& alpha) {
  const unsigned p = alpha.modulus();
  return ZornMatrix(Fp(1, p), Vec3::zero(p), alpha, Fp(1, p));
}

ZornMatrix make_s(const Vec3& alpha) {
  const unsigned p = alpha.modulus();
  return ZornMatrix(Fp(0, p), alpha, map_t(alpha), Fp(0, p));
}

ZornMatrix zorn_pow(const ZornMatrix& m, std::int64_t n) {
  ZornMatrix base = n < 0 ? zorn_inv(m) : m;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  ZornMatrix result = ZornMatrix::identity(m.modulus());
  while (e != 0) {
    if (e & 1U) result = zorn_mul_unchecked(result, base);
    base = zorn_mul_unchecked(base, base);
    e >>= 1U;
  }
  return result;
}

CanonicalElement CanonicalElement::operator*(const CanonicalElement& rhs) const {
  return canonicalize_unit(zorn_mul(rep_, rhs.rep_));
}

CanonicalElement canonicalize(const ZornMatrix& m) {
  if (zorn_det(m).value() != 1) {
    throw AlgebraError(ErrorKind::NotUnitDeterminant,
                       "only det-1 matrices have a class mod {I,-I}: " + to_string(m));
  }
  return canonicalize_unit(m);
}

CanonicalElement canonicalize_unit(const ZornMatrix& m) noexcept {
  // M and -M first differ at their first nonzero entry, so the least packed
  // value is the representative. Negation is bytewise p - v on nonzero bytes;
  // p - v never borrows since v < p.
  constexpr std::uint64_t kLow7 = UINT64_C(0x7F7F7F7F7F7F7F7F);
  constexpr std::uint64_t kOnes = UINT64_C(0x0101010101010101);
  const std::uint64_t x = m.packed();
  const std::uint64_t nonzero_high = (((x & kLow7) + kLow7) | x) & ~kLow7;
  const std::uint64_t nonzero = (nonzero_high >> 7) * 0xFF;
  const std::uint64_t neg = (kOnes * m.modulus() - x) & nonzero;
  return CanonicalElement(ZornMatrix::from_packed_unchecked(std::min(neg, x), m.modulus()));
}

namespace {

constexpr std::size_t kBlock = 64;
using Coefficients = std::array<std::array<std::uint32_t, 8>, 8>;

}  // namespace

// The matrix with a single entry 1 at position j of entries().
ZornMatrix basis_matrix(std::size_t j, unsigned p) noexcept {
  std::array<std::uint8_t, 8> c{};
  c[j] = 1;
  return ZornMatrix(c, static_cast<std::uint8_t>(p));
}

namespace {

// The product is bilinear, so a fixed factor acts on the other by an 8x8
// matrix over F_p whose columns are its products with the basis matrices.
Coefficients coefficients(const ZornMatrix& x, bool x_on_left) {
  Coefficients a{};
  for (std::size_t j = 0; j < 8; ++j) {
    const ZornMatrix e = basis_matrix(j, x.modulus());
    const auto column = (x_on_left ? zorn_mul_unchecked(x, e) : zorn_mul_unchecked(e, x)).entries();
    for (std::size_t k = 0; k < 8; ++k) a[k][j] = column[k];
  }
  return a;
}

#if defined(__x86_64__) && defined(__GNUC__) && defined(__linux__)
#define PAIGE_VECTOR_CLONES __attribute__((target_clones("avx2", "sse4.1", "default")))
#else
#define PAIGE_VECTOR_CLONES
#endif

// Entries stay below 8 (p-1)^2 < 2^24 before reduction. The representative
// of +-M is decided by the first nonzero entry v: M is kept iff 2v < p.
PAIGE_VECTOR_CLONES void product_keys(const Coefficients& a, unsigned p, const CanonicalElement* ys, std::size_t n,
                  std::uint64_t* keys) noexcept {
  alignas(64) std::uint32_t y[8][kBlock];
  alignas(64) std::uint32_t r[8][kBlock];
  for (std::size_t base = 0; base < n; base += kBlock) {
    const std::size_t len = std::min(kBlock, n - base);
    for (std::size_t i = 0; i < len; ++i) {
      const auto& e = ys[base + i].matrix().entries();
      for (std::size_t j = 0; j < 8; ++j) y[j][i] = e[j];
    }
    for (std::size_t j = 0; j < 8; ++j) std::fill(y[j] + len, y[j] + kBlock, 0U);
    for (std::size_t k = 0; k < 8; ++k) {
      std::uint32_t acc[kBlock] = {};
      for (std::size_t j = 0; j < 8; ++j) {
        const std::uint32_t c = a[k][j];
        for (std::size_t i = 0; i < kBlock; ++i) acc[i] += c * y[j][i];
      }
      for (std::size_t i = 0; i < kBlock; ++i) r[k][i] = reduce_small(acc[i], p);
    }
    std::uint32_t hi[kBlock];
    std::uint32_t lo[kBlock];
    for (std::size_t i = 0; i < kBlock; ++i) {
      std::uint32_t first = 0;
      for (std::size_t k = 8; k-- > 0;) {
        const std::uint32_t nonzero = 0U - static_cast<std::uint32_t>(r[k][i] != 0);
        first = (r[k][i] & nonzero) | (first & ~nonzero);
      }
      const std::uint32_t flip = 0U - static_cast<std::uint32_t>(2 * first > p);
      std::uint32_t h = 0;
      std::uint32_t l = 0;
      for (std::size_t k = 0; k < 8; ++k) {
        const std::uint32_t v = r[k][i];
        const std::uint32_t nonzero = 0U - static_cast<std::uint32_t>(v != 0);
        const std::uint32_t out = (((p - v) & nonzero & flip) | (v & ~flip));
        if (k < 4) h = (h << 8) | out;
        else l = (l << 8) | out;
      }
      hi[i] = h;
      lo[i] = l;
    }
    for (std::size_t i = 0; i < len; ++i) {
      keys[base + i] = (static_cast<std::uint64_t>(hi[i]) << 32) | lo[i];
    }
  }
}

}  // namespace

void left_product_keys(const CanonicalElement& x, const CanonicalElement* ys, std::size_t n,
                       std::uint64_t* keys) noexcept {
  product_keys(coefficients(x.matrix(), true), x.modulus(), ys, n, keys);
}

void right_product_keys(const CanonicalElement& x, const CanonicalElement* ys, std::size_t n,
                        std::uint64_t* keys) noexcept {
  product_keys(coefficients(x.matrix(), false), x.modulus(), ys, n, keys);
}

ZornMatrix theorem_x(unsigned p) {
  return ZornMatrix(Fp(0, p), Vec3::unit(3, p), -Vec3::unit(3, p), Fp(1, p));
}

std::array<CanonicalElement, 3> theorem_generators(unsigned p) {
  require_supported_prime(p);
  return {canonicalize(make_u(Vec3::unit(1, p))), canonicalize(make_u(Vec3::unit(2, p))),
          canonicalize(theorem_x(p))};
}

std::string to_string(const ZornMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ZornMatrix& m) {
  return os << "[[" << m.a() << ',' << m.alpha() << "],[" << m.beta() << ',' << m.b() << "]]";
}

std::ostream& operator<<(std::ostream& os, const CanonicalElement& m) { return os << m.matrix(); }

namespace {

class ZornParser {
 public:
  ZornParser(std::string_view text, unsigned p) : text_(text), p_(p) {}

  ZornMatrix parse() {
    expect('[');
    expect('[');
    const std::int64_t a = integer();
    expect(',');
    const Vec3 alpha = vector();
    expect(']');
    expect(',');
    expect('[');
    const Vec3 beta = vector();
    expect(',');
    const std::int64_t b = integer();
    expect(']');
    expect(']');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return ZornMatrix(Fp(a, p_), alpha, beta, Fp(b, p_));
  }

 private:
  Vec3 vector() {
    expect('(');
    const std::int64_t x1 = integer();
    expect(',');
    const std::int64_t x2 = integer();
    expect(',');
    const std::int64_t x3 = integer();
    expect(')');
    return Vec3(x1, x2, x3, p_);
  }

  std::int64_t integer() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError(ErrorKind::ParseError,
                       what + " at offset " + std::to_string(pos_) + " in \"" +
                           std::string(text_) + "\"");
  }

  std::string_view text_;
  unsigned p_;
  std::size_t pos_ = 0;
};

}  // namespace

ZornMatrix parse_zorn(std::string_view text, unsigned p) {
  require_supported_prime(p);
  return ZornParser(text, p).parse();
}

}  // namespace paige
