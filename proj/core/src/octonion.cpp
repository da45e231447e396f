#include "paige/octonion.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "paige/closure.hpp"
#include "paige/error.hpp"

namespace paige {

namespace {

// Brings numerators over 2^from to 2^to, to >= from.
std::int64_t rescale(std::int64_t num, int from, int to) { return num * (std::int64_t{1} << (to - from)); }

}  // namespace

Dyadic::Dyadic(std::int64_t num, int exp) : num_(num), exp_(exp) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
  while (exp_ < 0) {
    num_ *= 2;
    ++exp_;
  }
}

Dyadic Dyadic::operator+(const Dyadic& rhs) const {
  const int e = std::max(exp_, rhs.exp_);
  return Dyadic(rescale(num_, exp_, e) + rescale(rhs.num_, rhs.exp_, e), e);
}

Dyadic Dyadic::operator-(const Dyadic& rhs) const { return *this + (-rhs); }

Dyadic Dyadic::operator*(const Dyadic& rhs) const { return Dyadic(num_ * rhs.num_, exp_ + rhs.exp_); }

std::string to_string(const Dyadic& d) {
  std::string out = std::to_string(d.numerator());
  if (d.exponent() > 0) out += "/" + std::to_string(std::int64_t{1} << d.exponent());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << to_string(d); }

Quaternion::Quaternion(std::array<std::int64_t, 4> numerators, int scale)
    : num_(numerators), scale_(scale) {
  if (num_ == std::array<std::int64_t, 4>{}) {
    scale_ = 0;
    return;
  }
  auto all_even = [&] {
    for (auto v : num_)
      if (v % 2 != 0) return false;
    return true;
  };
  while (scale_ > 0 && all_even()) {
    for (auto& v : num_) v /= 2;
    --scale_;
  }
}

Quaternion Quaternion::operator*(const Quaternion& rhs) const {
  const auto& [a1, b1, c1, d1] = num_;
  const auto& [a2, b2, c2, d2] = rhs.num_;
  return Quaternion({a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                     a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                     a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                     a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2},
                    scale_ + rhs.scale_);
}

Quaternion Quaternion::operator+(const Quaternion& rhs) const {
  const int s = std::max(scale_, rhs.scale_);
  std::array<std::int64_t, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = rescale(num_[i], scale_, s) + rescale(rhs.num_[i], rhs.scale_, s);
  return Quaternion(out, s);
}

Quaternion Quaternion::operator-(const Quaternion& rhs) const { return *this + (-rhs); }

Quaternion Quaternion::operator-() const {
  return Quaternion({-num_[0], -num_[1], -num_[2], -num_[3]}, scale_);
}

Quaternion Quaternion::conj() const { return Quaternion({num_[0], -num_[1], -num_[2], -num_[3]}, scale_); }

Octonion::Octonion(const std::array<Dyadic, 8>& coords) {
  int s = 0;
  for (const auto& c : coords) s = std::max(s, c.exponent());
  std::array<std::int64_t, 4> lo{}, hi{};
  for (std::size_t i = 0; i < 4; ++i) {
    lo[i] = rescale(coords[i].numerator(), coords[i].exponent(), s);
    hi[i] = rescale(coords[i + 4].numerator(), coords[i + 4].exponent(), s);
  }
  q_ = Quaternion(lo, s);
  big_q_ = Quaternion(hi, s);
}

Octonion Octonion::from_halves(const std::array<std::int64_t, 8>& halves) {
  return Octonion(Quaternion({halves[0], halves[1], halves[2], halves[3]}, 1),
                  Quaternion({halves[4], halves[5], halves[6], halves[7]}, 1));
}

Octonion Octonion::from_integers(const std::array<std::int64_t, 8>& coords) {
  return Octonion(Quaternion({coords[0], coords[1], coords[2], coords[3]}, 0),
                  Quaternion({coords[4], coords[5], coords[6], coords[7]}, 0));
}

Octonion Octonion::basis(std::size_t index) {
  if (index >= 8) throw std::out_of_range("Dickson basis index must be 0..7");
  std::array<std::int64_t, 8> c{};
  c[index] = 1;
  return from_integers(c);
}

std::array<Dyadic, 8> Octonion::coords() const {
  std::array<Dyadic, 8> out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = coord(i);
  return out;
}

Octonion Octonion::operator*(const Octonion& rhs) const { return oct_mul(*this, rhs); }
Octonion Octonion::operator+(const Octonion& rhs) const { return {q_ + rhs.q_, big_q_ + rhs.big_q_}; }
Octonion Octonion::operator-(const Octonion& rhs) const { return {q_ - rhs.q_, big_q_ - rhs.big_q_}; }
Octonion Octonion::operator-() const { return {-q_, -big_q_}; }

std::uint64_t Octonion::key() const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    const Dyadic c = coord(i);
    if (c.exponent() > 1) throw std::domain_error("octonion key needs half-integer coordinates");
    const std::int64_t doubled = c.numerator() * (c.exponent() == 0 ? 2 : 1);
    if (doubled < -127 || doubled > 127) throw std::domain_error("octonion key coordinate too large");
    out = (out << 8) | static_cast<std::uint8_t>(static_cast<std::int8_t>(doubled));
  }
  return out;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
  const Quaternion& q = x.first();
  const Quaternion& Q = x.second();
  const Quaternion& r = y.first();
  const Quaternion& R = y.second();
  return Octonion(q * r - R.conj() * Q, R * q + Q * r.conj());
}

Octonion oct_conj(const Octonion& a) { return Octonion(a.first().conj(), -a.second()); }

Dyadic norm(const Octonion& a) {
  const Octonion n = oct_mul(a, oct_conj(a));
  for (std::size_t i = 1; i < 8; ++i) {
    if (!n.coord(i).is_zero()) throw std::logic_error("a conj(a) has an imaginary part");
  }
  return n.coord(0);
}

Dyadic trace(const Octonion& a) { return (a + oct_conj(a)).coord(0); }

Octonion make_h() { return Octonion::from_halves({0, 1, 1, 1, 1, 0, 0, 0}); }

bool satisfies_integrality(const Octonion& a) {
  for (std::size_t i = 0; i < 8; ++i)
    if (a.coord(i).exponent() > 1) return false;
  return norm(a).is_integer() && trace(a).is_integer();
}

std::string to_string(const Octonion& a) {
  std::string out = to_string(a.coord(0));
  for (std::size_t i = 1; i < 8; ++i) {
    out += " + ";
    out += to_string(a.coord(i));
    out += ' ';
    out += kDicksonBasis[i];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Octonion& a) { return os << to_string(a); }

namespace {

class OctonionParser {
 public:
  explicit OctonionParser(std::string_view text) : text_(text) {}

  Octonion parse() {
    Octonion sum;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      bool negative = false;
      bool had_sign = false;
      while (!at_end() && (peek() == '+' || peek() == '-')) {
        negative ^= peek() == '-';
        had_sign = true;
        ++pos_;
        skip_space();
      }
      if (!first && !had_sign) fail("expected '+' or '-' between terms");
      const Octonion t = term();
      sum = negative ? sum - t : sum + t;
      first = false;
    }
    if (first) fail("empty expression");
    return sum;
  }

 private:
  Octonion term() {
    Dyadic coef(1);
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = coefficient();
      has_coef = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view unit = text_.substr(start, pos_ - start);
    if (unit.empty()) {
      if (!has_coef) fail("expected a term");
      return scale(Octonion::one(), coef);
    }
    if (unit == "h") return scale(make_h(), coef);
    for (std::size_t i = 1; i < 8; ++i)
      if (unit == kDicksonBasis[i]) return scale(Octonion::basis(i), coef);
    fail("unknown unit \"" + std::string(unit) + "\"");
  }

  static Octonion scale(const Octonion& a, const Dyadic& c) {
    std::array<Dyadic, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = a.coord(i) * c;
    return Octonion(out);
  }

  Dyadic coefficient() {
    const std::int64_t num = integer();
    skip_space();
    if (at_end() || peek() != '/') return Dyadic(num);
    ++pos_;
    skip_space();
    const std::int64_t den = integer();
    if (den <= 0 || (den & (den - 1)) != 0) fail("denominator must be a power of two");
    int exp = 0;
    while ((std::int64_t{1} << exp) < den) ++exp;
    return Dyadic(num, exp);
  }

  std::int64_t integer() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || value < 0) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError(ErrorKind::ParseError, what + " at offset " + std::to_string(pos_) +
                                                  " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Octonion parse_octonion(std::string_view text) { return OctonionParser(text).parse(); }

UnitClass UnitClass::operator*(const UnitClass& rhs) const { return canonical_unit(oct_mul(rep_, rhs.rep_)); }

UnitClass canonical_unit(const Octonion& a) {
  if (norm(a) != Dyadic(1)) {
    throw AlgebraError(ErrorKind::NotUnit, "norm of " + to_string(a) + " is " + to_string(norm(a)));
  }
  for (std::size_t i = 0; i < 8; ++i) {
    const Dyadic c = a.coord(i);
    if (!c.is_zero()) return UnitClass(c.numerator() > 0 ? a : -a);
  }
  throw std::logic_error("unit octonion with all coordinates zero");
}

ElementSet<Octonion> jprime_enumerate() {
  return closure({Octonion::basis(1), Octonion::basis(2), make_h()}, ClosureOptions{kJPrimeCap, 1});
}

ElementSet<UnitClass> jprime_classes(const ElementSet<Octonion>& jprime) {
  ElementSet<UnitClass> classes;
  for (const auto& a : jprime) classes.insert(canonical_unit(a));
  return classes;
}

std::vector<Octonion> half_integer_unit_candidates() {
  std::vector<Octonion> out;
  for (std::size_t i = 0; i < 8; ++i) {
    out.push_back(Octonion::basis(i));
    out.push_back(-Octonion::basis(i));
  }
  // Four nonzero coordinates of +-1/2: choose the support, then the signs.
  for (unsigned support = 0; support < 256; ++support) {
    if (__builtin_popcount(support) != 4) continue;
    for (unsigned signs = 0; signs < 16; ++signs) {
      std::array<std::int64_t, 8> halves{};
      unsigned bit = 0;
      for (std::size_t i = 0; i < 8; ++i) {
        if (support & (1U << i)) halves[i] = (signs & (1U << bit++)) ? -1 : 1;
      }
      out.push_back(Octonion::from_halves(halves));
    }
  }
  return out;
}

BasisTripleReport check_basis_triples(bool signed_units) {
  std::vector<Octonion> units;
  for (std::size_t i = 0; i < 8; ++i) {
    units.push_back(Octonion::basis(i));
    if (signed_units) units.push_back(-Octonion::basis(i));
  }
  BasisTripleReport report;
  const std::size_t n = units.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const auto closed = closure({units[a], units[b], units[c]}, ClosureOptions{kJPrimeCap, 1});
        ++report.triples_checked;
        report.largest_closure = std::max(report.largest_closure, closed.size());
        if (closed.size() >= 240 && !report.generating_triple) {
          report.generating_triple = std::array<Octonion, 3>{units[a], units[b], units[c]};
        }
      }
  return report;
}

}  // namespace paige
