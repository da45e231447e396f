#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "paige/isomorphism.hpp"
#include "paige/unit_loop.hpp"
#include "test_support.hpp"

using namespace paige;

namespace {

const PairMap& phi() {
  static const PairMap map = build_isomorphism();
  return map;
}

CanonicalElement Z2(const char* text) { return canonicalize(parse_zorn(text, 2)); }
UnitClass U(const char* text) { return canonical_unit(parse_octonion(text)); }

TEST(Isomorphism, IsBijection) {
  const auto& map = phi();
  EXPECT_EQ(map.size(), 120U);
  for (const auto& c : jprime_classes(jprime_enumerate())) EXPECT_TRUE(map.contains(c));
  for (const auto& m : enumerate_unit_loop(2)) EXPECT_EQ(map.image(map.preimage(m)), m);
}

TEST(Isomorphism, SeedImagesAndLemma) {
  const auto& map = phi();
  EXPECT_EQ(map.image(U("i")), Z2("[[0,(0,0,1)],[(0,0,1),0]]"));
  EXPECT_EQ(map.image(U("j")), Z2("[[0,(0,1,0)],[(0,1,0),0]]"));
  EXPECT_EQ(map.image(U("h")), Z2("[[1,(0,1,0)],[(1,0,1),1]]"));
  EXPECT_EQ(map.image(U("1")), Z2("[[1,(0,0,0)],[(0,0,0),1]]"));
  EXPECT_EQ(map.image(U("e")), Z2("[[0,(1,1,1)],[(1,1,1),0]]"));
}

TEST(Isomorphism, HomomorphismBothWays) {
  EXPECT_FALSE(verify_hom(phi()));
  EXPECT_FALSE(verify_inverse_hom(phi()));
  EXPECT_FALSE(verify_inverse_classes(phi()));
  const auto i = U("i");
  EXPECT_EQ(phi().image(i * i), phi().image(U("1")));
  EXPECT_EQ(phi().image(i) * phi().image(i), Z2("[[1,(0,0,0)],[(0,0,0),1]]"));
  EXPECT_EQ(phi().image(U("j") * U("h")), phi().image(U("j")) * phi().image(U("h")));
}

TEST(Isomorphism, Lemma7AllChecksPass) {
  const auto checks = verify_lemma7(phi());
  EXPECT_EQ(checks.size(), 8U);
  for (const auto& c : checks) EXPECT_TRUE(c.pass) << c.name;
}

TEST(Isomorphism, GraphIndependentOfSeedOrder) {
  auto seeds = isomorphism_seeds();
  std::reverse(seeds.begin(), seeds.end());
  EXPECT_EQ(close_pair_relation(seeds).graph(), phi().graph());
}

TEST(Isomorphism, WrongSeedCollides) {
  auto seeds = isomorphism_seeds();
  seeds[2].image = Z2("[[1,(1,0,0)],[(0,0,0),1]]");
  EXPECT_ALGEBRA_ERROR(close_pair_relation(seeds), ErrorKind::IsomorphismFailure);
}

TEST(Isomorphism, PartialMapIsNotSurjective) {
  auto seeds = isomorphism_seeds();
  seeds.pop_back();
  const PairMap partial = close_pair_relation(seeds);
  EXPECT_LT(partial.size(), 120U);
  EXPECT_ALGEBRA_ERROR(partial.image(U("h")), ErrorKind::NotSurjective);
}

TEST(Isomorphism, CsvExport) {
  std::ostringstream os;
  write_map_csv(os, phi());
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "octonion_class,zorn_matrix");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  EXPECT_EQ(rows.size(), 120U);
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end()));
}

}  // namespace
