#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "paige/unit_loop.hpp"
#include "paige/zorn.hpp"
#include "test_support.hpp"

using namespace paige;

namespace {

ZornMatrix Z(const char* text, unsigned p) { return parse_zorn(text, p); }

oracle::Zorn to_oracle(const ZornMatrix& m) {
  oracle::Zorn r{};
  for (int i = 0; i < 8; ++i) r[i] = m.entries()[i];
  return r;
}

ZornMatrix random_matrix(std::mt19937_64& rng, unsigned p) {
  std::uint64_t packed = 0;
  for (int i = 0; i < 8; ++i) packed = (packed << 8) | (rng() % p);
  return ZornMatrix::from_packed(packed, p);
}

ZornMatrix random_unit(std::mt19937_64& rng, unsigned p) {
  for (;;) {
    const ZornMatrix m = random_matrix(rng, p);
    if (zorn_det(m).value() == 1) return m;
  }
}

TEST(ZornMul, MatchesOracleOnRandomMatrices) {
  std::mt19937_64 rng(7);
  for (unsigned p : {2U, 3U, 5U, 7U, 13U, 251U}) {
    for (int trial = 0; trial < 2000; ++trial) {
      const ZornMatrix m = random_matrix(rng, p), n = random_matrix(rng, p);
      ASSERT_EQ(to_oracle(zorn_mul(m, n)), oracle::zorn_mul(to_oracle(m), to_oracle(n), p));
    }
  }
}

TEST(ZornMul, IdentityAndExamples) {
  const unsigned p = 5;
  const ZornMatrix m = Z("[[2,(1,3,4)],[(0,2,1),3]]", p);
  EXPECT_EQ(ZornMatrix::identity(p) * m, m);
  EXPECT_EQ(m * ZornMatrix::identity(p), m);
  const Vec3 e1 = Vec3::unit(1, p);
  EXPECT_EQ(make_u(e1) * make_u(e1.scaled(Fp(2, p))), make_u(e1.scaled(Fp(3, p))));
}

TEST(ZornMul, ProductOfTwoSWithEqualT) {
  const unsigned p = 3;
  const Vec3 alpha(1, 0, 0, p), beta(1, 1, 0, p);
  ASSERT_EQ(map_t(alpha), map_t(beta));
  const ZornMatrix expected(Fp(-1, p), Vec3::zero(p), cross(alpha, beta), Fp(-1, p));
  EXPECT_EQ(make_s(alpha) * make_s(beta), expected);
}

TEST(ZornMul, ModulusMismatch) {
  EXPECT_ALGEBRA_ERROR(zorn_mul(ZornMatrix::identity(3), ZornMatrix::identity(5)),
                       ErrorKind::ModulusMismatch);
  EXPECT_ALGEBRA_ERROR(ZornMatrix(Fp(1, 3), Vec3::zero(5), Vec3::zero(3), Fp(1, 3)),
                       ErrorKind::ModulusMismatch);
}

TEST(ZornDet, Examples) {
  for (unsigned p : {2U, 3U, 7U}) {
    EXPECT_EQ(zorn_det(ZornMatrix::identity(p)).value(), 1U);
    for (const Vec3& a : {Vec3(1, 0, 0, p), Vec3(0, 1, 1, p), Vec3(1, 1, 1, p)}) {
      EXPECT_EQ(zorn_det(make_u(a)).value(), 1U);
      EXPECT_EQ(zorn_det(make_l(a)).value(), 1U);
      EXPECT_EQ(zorn_det(make_s(a)).value(), 1U);
    }
  }
}

TEST(ZornInv, Examples) {
  const unsigned p = 5;
  EXPECT_EQ(zorn_inv(ZornMatrix::identity(p)), ZornMatrix::identity(p));
  const Vec3 a(1, 2, 3, p);
  EXPECT_EQ(zorn_inv(make_u(a)), make_u(-a));
  EXPECT_EQ(zorn_inv(make_l(a)), make_l(-a));
  const ZornMatrix x = theorem_x(p);
  EXPECT_EQ(zorn_inv(x) * x, ZornMatrix::identity(p));
  EXPECT_EQ(x * zorn_inv(x), ZornMatrix::identity(p));
  EXPECT_ALGEBRA_ERROR(zorn_inv(Z("[[2,(0,0,0)],[(0,0,0),1]]", p)), ErrorKind::NotUnitDeterminant);
}

TEST(ZornInv, TwoSidedOnRandomUnits) {
  std::mt19937_64 rng(11);
  for (unsigned p : {3U, 5U, 7U, 251U}) {
    for (int trial = 0; trial < 500; ++trial) {
      const ZornMatrix m = random_unit(rng, p);
      EXPECT_EQ(m * zorn_inv(m), ZornMatrix::identity(p));
      EXPECT_EQ(zorn_inv(m) * m, ZornMatrix::identity(p));
    }
  }
}

TEST(Transpose, Examples) {
  for (unsigned p : {2U, 3U, 5U}) {
    const Vec3 a(1, 1, 0, p);
    EXPECT_EQ(transpose(make_u(a)), make_l(a));
    EXPECT_EQ(make_l(Vec3::unit(1, p)), transpose(make_u(Vec3::unit(1, p))));
    for (int i = 1; i <= 3; ++i) {
      const ZornMatrix s = make_s(Vec3::unit(i, p));
      EXPECT_EQ(transpose(s), -s);
      EXPECT_EQ(transpose(transpose(s)), s);
    }
  }
}

TEST(MapT, Examples) {
  EXPECT_EQ(map_t(Vec3(1, 2, 3, 5)), Vec3(4, 0, 0, 5));
  EXPECT_EQ(map_t(Vec3(0, 1, 4, 5)), Vec3(0, 4, 0, 5));
  for (unsigned p : {2U, 3U, 11U}) EXPECT_EQ(map_t(Vec3::unit(3, p)), Vec3(0, 0, p - 1, p));
  EXPECT_ALGEBRA_ERROR(map_t(Vec3::zero(5)), ErrorKind::ZeroVector);
  EXPECT_ALGEBRA_ERROR(make_s(Vec3::zero(5)), ErrorKind::ZeroVector);
}

TEST(MapT, DotIsMinusOneExhaustive) {
  for (unsigned p : {2U, 3U, 5U, 7U}) {
    for (unsigned x = 0; x < p; ++x)
      for (unsigned y = 0; y < p; ++y)
        for (unsigned z = 0; z < p; ++z) {
          const Vec3 a(x, y, z, p);
          if (a.is_zero()) continue;
          EXPECT_EQ(dot(a, map_t(a)), Fp(-1, p));
        }
  }
}

TEST(MakeMaps, Examples) {
  EXPECT_EQ(make_u(Vec3::zero(7)), ZornMatrix::identity(7));
  EXPECT_EQ(make_s(Vec3::unit(2, 3)), Z("[[0,(0,1,0)],[(0,2,0),0]]", 3));
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(ZornMatrix::identity(2)).matrix(), ZornMatrix::identity(2));
  EXPECT_EQ(canonicalize(-ZornMatrix::identity(5)).matrix(), ZornMatrix::identity(5));
  EXPECT_ALGEBRA_ERROR(canonicalize(Z("[[0,(0,0,0)],[(0,0,0),0]]", 3)),
                       ErrorKind::NotUnitDeterminant);
}

TEST(Canonicalize, MatchesOracleAndIsConstantOnSigns) {
  std::mt19937_64 rng(3);
  for (unsigned p : {2U, 3U, 5U, 7U, 251U}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const ZornMatrix m = random_unit(rng, p);
      const CanonicalElement c = canonicalize(m);
      EXPECT_EQ(c, canonicalize(-m));
      EXPECT_EQ(canonicalize(c.matrix()), c);
      EXPECT_EQ(to_oracle(c.matrix()), oracle::canonical(to_oracle(m), p));
    }
  }
}

TEST(TheoremGenerators, Examples) {
  const auto g2 = theorem_generators(2);
  EXPECT_EQ(g2[0].matrix(), make_u(Vec3::unit(1, 2)));
  EXPECT_EQ(g2[1].matrix(), make_u(Vec3::unit(2, 2)));
  EXPECT_EQ(g2[2].matrix(), Z("[[0,(0,0,1)],[(0,0,1),1]]", 2));
  EXPECT_EQ(theorem_x(5), Z("[[0,(0,0,1)],[(0,0,4),1]]", 5));
  for (unsigned p : {2U, 3U, 5U, 7U, 251U}) {
    for (const auto& g : theorem_generators(p)) EXPECT_EQ(zorn_det(g.matrix()).value(), 1U);
  }
  EXPECT_ALGEBRA_ERROR(theorem_generators(4), ErrorKind::UnsupportedPrime);
}

TEST(ZornPow, AgreesWithRepeatedProduct) {
  const ZornMatrix x = theorem_x(5);
  EXPECT_EQ(zorn_pow(x, 0), ZornMatrix::identity(5));
  EXPECT_EQ(zorn_pow(x, 2), x * x);
  EXPECT_EQ(zorn_pow(x, 3), (x * x) * x);
  EXPECT_EQ(zorn_pow(x, -1), zorn_inv(x));
}

TEST(TextFormat, RoundTrip) {
  const ZornMatrix m = Z("[[2,(1,3,4)],[(0,2,1),3]]", 5);
  EXPECT_EQ(to_string(m), "[[2,(1,3,4)],[(0,2,1),3]]");
  EXPECT_EQ(Z(" [ [ 2 , ( 1,3 , -1 ) ] ,\n [ (0,2,1),3 ] ] ", 5), Z("[[2,(1,3,4)],[(0,2,1),3]]", 5));
  EXPECT_ALGEBRA_ERROR(Z("[[2,(1,3)],[(0,2,1),3]]", 5), ErrorKind::ParseError);
  EXPECT_ALGEBRA_ERROR(Z("[[2,(1,3,4)],[(0,2,1),3]] x", 5), ErrorKind::ParseError);
  EXPECT_ALGEBRA_ERROR(Z("", 5), ErrorKind::ParseError);
}

TEST(Packed, OrderIsLexicographic) {
  const ZornMatrix a = Z("[[0,(0,0,1)],[(0,0,0),0]]", 3), b = Z("[[1,(0,0,0)],[(0,0,0),0]]", 3);
  EXPECT_LT(a.packed(), b.packed());
  EXPECT_EQ(ZornMatrix::from_packed(a.packed(), 3), a);
  EXPECT_ALGEBRA_ERROR(ZornMatrix::from_packed(UINT64_C(0x0300000000000000), 3), ErrorKind::ParseError);
}

TEST(BatchedProducts, MatchScalarProducts) {
  for (unsigned p : {2U, 3U, 5U}) {
    const auto loop = enumerate_unit_loop(p);
    std::vector<std::uint64_t> keys(loop.size());
    for (std::size_t i = 0; i < loop.size(); i += loop.size() / 17 + 1) {
      left_product_keys(loop[i], loop.elements().data(), loop.size(), keys.data());
      for (std::size_t j = 0; j < loop.size(); ++j) ASSERT_EQ(keys[j], (loop[i] * loop[j]).key());
      right_product_keys(loop[i], loop.elements().data(), loop.size(), keys.data());
      for (std::size_t j = 0; j < loop.size(); ++j) ASSERT_EQ(keys[j], (loop[j] * loop[i]).key());
    }
  }
}

TEST(UnitLoop, CountsMatchOracle) {
  for (unsigned p : {2U, 3U}) {
    const auto raw = enumerate_unit_matrices(p);
    EXPECT_EQ(static_cast<long>(raw.size()), oracle::count_det_one(static_cast<int>(p)));
    EXPECT_EQ(enumerate_unit_loop(p).size(), p == 2 ? raw.size() : raw.size() / 2);
    for (const auto& m : raw) ASSERT_EQ(zorn_det(m).value(), 1U);
  }
  EXPECT_EQ(enumerate_unit_loop(2).size(), 120U);
  EXPECT_ALGEBRA_ERROR(enumerate_unit_loop(11), ErrorKind::UnsupportedPrime);
  EXPECT_ALGEBRA_ERROR(enumerate_unit_loop(4), ErrorKind::UnsupportedPrime);
}

TEST(UnitLoop, ClosedUnderProductAtP5) {
  const auto loop = enumerate_unit_loop(5);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, loop.size() - 1);
  for (int trial = 0; trial < 100'000; ++trial) {
    ASSERT_TRUE(loop.contains(loop[pick(rng)] * loop[pick(rng)]));
  }
}

TEST(UnitLoop, CenterOfUnquotientedLoop) {
  EXPECT_EQ(unit_loop_center(2).center.size(), 1U);
  const auto c3 = unit_loop_center(3);
  ASSERT_EQ(c3.center.size(), 2U);
  EXPECT_EQ(c3.center[0], ZornMatrix::identity(3));
  EXPECT_EQ(c3.center[1], -ZornMatrix::identity(3));
  EXPECT_EQ(unit_loop_center(5).center.size(), 2U);
}

}  // namespace
