#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "paige/closure.hpp"
#include "paige/loop_table.hpp"
#include "paige/octonion.hpp"
#include "test_support.hpp"

using namespace paige;

namespace {

Octonion O(const char* text) { return parse_octonion(text); }

std::vector<double> to_doubles(const Octonion& a) {
  std::vector<double> r(8);
  for (std::size_t i = 0; i < 8; ++i) {
    r[i] = std::ldexp(static_cast<double>(a.coord(i).numerator()), -a.coord(i).exponent());
  }
  return r;
}

Octonion random_dyadic(std::mt19937_64& rng) {
  std::array<Dyadic, 8> c;
  for (auto& x : c) x = Dyadic(static_cast<std::int64_t>(rng() % 41) - 20, static_cast<int>(rng() % 3));
  return Octonion(c);
}

const ElementSet<Octonion>& jprime() {
  static const auto set = jprime_enumerate();
  return set;
}

TEST(Dyadic, NormalizedArithmetic) {
  EXPECT_EQ(Dyadic(2, 2), Dyadic(1, 1));
  EXPECT_EQ(Dyadic(1, 1) + Dyadic(1, 1), Dyadic(1));
  EXPECT_EQ(Dyadic(1, 1) * Dyadic(1, 1), Dyadic(1, 2));
  EXPECT_EQ(to_string(Dyadic(-1, 1)), "-1/2");
  EXPECT_EQ(to_string(Dyadic(3)), "3");
  EXPECT_TRUE(Dyadic(4, 2).is_integer());
}

TEST(OctMul, MatchesCayleyDicksonOracle) {
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const auto x = Octonion::basis(a), y = Octonion::basis(b);
      EXPECT_EQ(to_doubles(x * y), oracle::cd_mul(to_doubles(x), to_doubles(y))) << a << "," << b;
    }
  }
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = random_dyadic(rng), y = random_dyadic(rng);
    ASSERT_EQ(to_doubles(oct_mul(x, y)), oracle::cd_mul(to_doubles(x), to_doubles(y)));
  }
}

TEST(OctMul, Examples) {
  const Octonion h = make_h();
  EXPECT_EQ(Octonion::one() * h, h);
  EXPECT_EQ(O("i") * O("j"), O("k"));
  EXPECT_EQ(O("j") * O("k"), O("i"));
  EXPECT_EQ(O("k") * O("i"), O("j"));
  EXPECT_EQ(O("i") * O("i"), O("-1"));
  EXPECT_EQ(h * O("i"), O("-1") - O("i") * h);
  EXPECT_EQ(-(((O("j") * h) * (h * O("i"))) * (O("k") * h)), O("e"));
}

TEST(OctConj, Examples) {
  EXPECT_EQ(oct_conj(Octonion::one()), Octonion::one());
  EXPECT_EQ(oct_conj(O("i")), O("-i"));
  EXPECT_EQ(oct_conj(make_h()), -make_h());
  EXPECT_EQ(oct_conj(O("2 + 3 ie - je")), O("2 - 3 ie + je"));
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm(Octonion::one()), Dyadic(1));
  EXPECT_EQ(norm(make_h()), Dyadic(1));
  EXPECT_EQ(norm(O("i + j")), Dyadic(2));
  EXPECT_EQ(trace(make_h()), Dyadic(0));
  EXPECT_EQ(trace(O("3 + i")), Dyadic(6));
}

TEST(MakeH, Coordinates) {
  const Octonion h = make_h();
  const std::array<Dyadic, 8> expected = {Dyadic(0), Dyadic(1, 1), Dyadic(1, 1), Dyadic(1, 1),
                                          Dyadic(1, 1), Dyadic(0), Dyadic(0), Dyadic(0)};
  EXPECT_EQ(h.coords(), expected);
  EXPECT_TRUE(satisfies_integrality(h));
  EXPECT_FALSE(satisfies_integrality(O("1/4 i")));
  EXPECT_EQ(O("h"), h);
}

TEST(TextFormat, RoundTripAndErrors) {
  EXPECT_EQ(to_string(make_h()), "0 + 1/2 i + 1/2 j + 1/2 k + 1/2 e + 0 ie + 0 je + 0 ke");
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_dyadic(rng);
    EXPECT_EQ(parse_octonion(to_string(x)), x);
  }
  EXPECT_EQ(O("-1/2 + ke"), Octonion(std::array<Dyadic, 8>{Dyadic(-1, 1), Dyadic(0), Dyadic(0), Dyadic(0),
                                                            Dyadic(0), Dyadic(0), Dyadic(0), Dyadic(1)}));
  EXPECT_ALGEBRA_ERROR(O("i +"), ErrorKind::ParseError);
  EXPECT_ALGEBRA_ERROR(O("1/3 i"), ErrorKind::ParseError);
  EXPECT_ALGEBRA_ERROR(O("q"), ErrorKind::ParseError);
  EXPECT_ALGEBRA_ERROR(O(""), ErrorKind::ParseError);
}

TEST(CanonicalUnit, Examples) {
  EXPECT_EQ(canonical_unit(O("-1")).rep(), Octonion::one());
  EXPECT_EQ(canonical_unit(-make_h()).rep(), make_h());
  EXPECT_EQ(canonical_unit(make_h()), canonical_unit(-make_h()));
  EXPECT_ALGEBRA_ERROR(canonical_unit(O("i + j")), ErrorKind::NotUnit);
  EXPECT_EQ(jprime_classes(jprime()).size(), 120U);
}

TEST(JPrime, SizeNormAndIntegrality) {
  const auto& jp = jprime();
  EXPECT_EQ(jp.size(), 240U);
  for (const auto& a : jp) {
    EXPECT_EQ(norm(a), Dyadic(1));
    EXPECT_TRUE(trace(a).is_integer());
    EXPECT_TRUE(satisfies_integrality(a));
    EXPECT_TRUE(jp.contains(oct_conj(a)));
    EXPECT_EQ(a * oct_conj(a), Octonion::one());
  }
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_TRUE(jp.contains(Octonion::basis(i)));
    EXPECT_TRUE(jp.contains(-Octonion::basis(i)));
  }
}

TEST(JPrime, ProperSubsetOfHalfIntegerGrid) {
  const auto candidates = half_integer_unit_candidates();
  EXPECT_EQ(candidates.size(), 1136U);
  const auto grid = ElementSet<Octonion>::from(candidates);
  EXPECT_EQ(grid.size(), 1136U);
  EXPECT_TRUE(jprime().is_subset_of(grid));
  for (const auto& c : candidates) EXPECT_EQ(norm(c), Dyadic(1));
}

TEST(JPrime, QuaternionSubloop) {
  EXPECT_EQ(closure({O("i"), O("j")}).size(), 8U);
  EXPECT_EQ(closure({O("i"), O("j"), O("k")}).size(), 8U);
  EXPECT_EQ(closure({O("1"), O("i"), O("j")}).size(), 8U);
}

TEST(JPrime, BasisTriplesNeverGenerate) {
  const auto r = check_basis_triples();
  EXPECT_EQ(r.triples_checked, 56U);
  EXPECT_FALSE(r.generating_triple.has_value());
  EXPECT_LT(r.largest_closure, 240U);
  const auto s = check_basis_triples(true);
  EXPECT_EQ(s.triples_checked, 560U);
  EXPECT_FALSE(s.generating_triple.has_value());
}

TEST(JPrime, QuotientIsMoufangAndDiassociative) {
  const auto t = build_table(jprime_classes(jprime()));
  EXPECT_EQ(t.table.size(), 120U);
  EXPECT_FALSE(check_moufang(t.table));
  EXPECT_FALSE(check_diassociativity(t.table, sample_pairs(120, 200, 8)));
  EXPECT_TRUE(check_nonassociative(t.table).has_value());
}

TEST(Properties, NormMultiplicativeAndConjugationAntiautomorphismOnJPrime) {
  const auto& jp = jprime();
  for (const auto& x : jp) {
    for (const auto& y : jp) {
      const Octonion xy = x * y;
      ASSERT_EQ(norm(xy), norm(x) * norm(y));
      ASSERT_EQ(oct_conj(xy), oct_conj(y) * oct_conj(x));
    }
  }
}

TEST(Properties, RandomDyadicOctonions) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10'000; ++trial) {
    const auto x = random_dyadic(rng), y = random_dyadic(rng);
    ASSERT_EQ(norm(x * y), norm(x) * norm(y));
    ASSERT_EQ(oct_conj(x * y), oct_conj(y) * oct_conj(x));
    ASSERT_EQ((x * x) * y, x * (x * y));
    ASSERT_EQ((y * x) * x, y * (x * x));
  }
}

TEST(Octonion, KeyRejectsUnrepresentable) {
  EXPECT_THROW(O("1/4").key(), std::domain_error);
  EXPECT_THROW(O("100").key(), std::domain_error);
  EXPECT_NE(O("i").key(), O("-i").key());
}

}  // namespace
