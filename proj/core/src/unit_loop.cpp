#include "paige/unit_loop.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace paige {

namespace {

void require_oracle_prime(unsigned p) {
  require_supported_prime(p);
  if (p > kOraclePrimeBound) {
    throw AlgebraError(ErrorKind::UnsupportedPrime,
                       "exhaustive enumeration is limited to p <= 7, got " + std::to_string(p));
  }
}

// Visits every entry tuple in lexicographic order, which is ascending packed
// order.
template <class Visit>
void for_each_unit_matrix(unsigned p, Visit&& visit) {
  std::uint64_t total = 1;
  for (int i = 0; i < 8; ++i) total *= p;
  std::array<std::uint32_t, 8> c{};
  for (std::uint64_t n = 0; n < total; ++n) {
    // det = ab - alpha.beta with a = c[0], b = c[7]
    const std::uint32_t ab = c[0] * c[7];
    const std::uint32_t dot = c[1] * c[4] + c[2] * c[5] + c[3] * c[6];
    if (reduce_small(ab + 3 * p * p - dot, p) == 1) {
      std::uint64_t packed = 0;
      for (auto v : c) packed = (packed << 8) | v;
      visit(ZornMatrix::from_packed(packed, p));
    }
    for (int i = 7; i >= 0; --i) {
      if (++c[i] < p) break;
      c[i] = 0;
    }
  }
}

}  // namespace

ElementSet<ZornMatrix> enumerate_unit_matrices(unsigned p) {
  require_oracle_prime(p);
  ElementSet<ZornMatrix> set;
  for_each_unit_matrix(p, [&](const ZornMatrix& m) { set.insert(m); });
  return set;
}

ElementSet<CanonicalElement> enumerate_unit_loop(unsigned p) {
  require_oracle_prime(p);
  ElementSet<CanonicalElement> set;
  // Every class is met first at its least representative, so insertion order
  // is ascending canonical order.
  for_each_unit_matrix(p, [&](const ZornMatrix& m) { set.insert(canonicalize_unit(m)); });
  return set;
}

UnitLoopCenter unit_loop_center(unsigned p) {
  const auto set = enumerate_unit_matrices(p);
  const std::size_t n = set.size();
  auto commutes = [](const ZornMatrix& z, const ZornMatrix& x) {
    return zorn_mul_unchecked(z, x) == zorn_mul_unchecked(x, z);
  };
  auto scale = [p](const ZornMatrix& x, std::uint32_t lambda) {
    auto c = x.entries();
    std::uint64_t packed = 0;
    for (auto v : c) packed = (packed << 8) | reduce_small(v * lambda, p);
    return ZornMatrix::from_packed_unchecked(packed, p);
  };
  auto associates = [&](const ZornMatrix& z) {
    for (const auto& x : set) {
      for (const auto& y : set) {
        const ZornMatrix xy = zorn_mul_unchecked(x, y);
        if (zorn_mul_unchecked(zorn_mul_unchecked(z, x), y) != zorn_mul_unchecked(z, xy) ||
            zorn_mul_unchecked(zorn_mul_unchecked(x, z), y) != zorn_mul_unchecked(x, zorn_mul_unchecked(z, y)) ||
            zorn_mul_unchecked(xy, z) != zorn_mul_unchecked(x, zorn_mul_unchecked(y, z))) {
          return false;
        }
      }
    }
    return true;
  };

  std::mt19937_64 rng(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> probes(std::min<std::size_t>(n, 64));
  for (auto& i : probes) i = pick(rng);

  UnitLoopCenter result;
  for (const ZornMatrix& z : set) {
    bool ok = std::all_of(probes.begin(), probes.end(), [&](std::size_t i) { return commutes(z, set[i]); });
    for (std::size_t i = 0; i < n && ok; ++i) ok = commutes(z, set[i]);
    if (!ok) continue;
    ++result.commuting;
    const std::uint32_t lambda = z.a().value();
    const bool scalar = std::all_of(set.begin(), set.end(), [&](const ZornMatrix& x) {
      return zorn_mul_unchecked(z, x) == scale(x, lambda);
    });
    if (scalar) ++result.scalar;
    if (scalar || associates(z)) result.center.push_back(z);
  }
  return result;
}

}  // namespace paige
