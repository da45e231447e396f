#pragma once

// The generator-reduction chain for the Paige loop M/Z(M) over F_p: the named
// generating sets, their closures compared against the brute-force oracle,
// and the algebraic identities that drive each reduction step.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paige/closure.hpp"
#include "paige/zorn.hpp"

namespace paige {

enum class GeneratorSet {
  /// u(alpha), l(alpha) for every nonzero alpha.
  Prop1,
  /// u(alpha), l(alpha) for projective alpha (first nonzero coordinate 1).
  Prop2,
  /// u(e1), u(e2), u(e3), and s(alpha), s(alpha)' for projective alpha.
  Prop3,
  /// u(e_i), s(e_i), i = 1, 2, 3.
  Prop5,
  /// u(e1), u(e2), x = [[0, e3], [-e3, 1]].
  Theorem,
};

inline constexpr std::array<GeneratorSet, 5> kAllGeneratorSets = {
    GeneratorSet::Prop1, GeneratorSet::Prop2, GeneratorSet::Prop3, GeneratorSet::Prop5,
    GeneratorSet::Theorem};

std::string_view to_string(GeneratorSet tag) noexcept;
/// Accepts "prop1", "prop2", "prop3", "prop5", "theorem". Throws ParseError.
GeneratorSet parse_generator_set(std::string_view name);

/// Nonzero vectors of F_p^3 whose first nonzero coordinate is 1; p^2 + p + 1 of them.
std::vector<Vec3> projective_points(unsigned p);

/// The generators as written, before identification mod {I, -I}. Sizes:
/// Prop1 2(p^3 - 1), Prop2 2(p^2 + p + 1), Prop3 3 + 2(p^2 + p + 1), Prop5 6,
/// Theorem 3.
std::vector<ZornMatrix> generator_words(GeneratorSet tag, unsigned p);

/// Distinct classes of generator_words. Prop3 loses three words here since
/// s(e_i)' = -s(e_i). Throws UnsupportedPrime; Prop1 requires p <= 5.
ElementSet<CanonicalElement> materialize(GeneratorSet tag, unsigned p);

struct GenerationReport {
  GeneratorSet tag;
  unsigned p;
  std::size_t generators = 0;
  std::size_t closure_size = 0;
  std::size_t oracle_size = 0;
  bool closure_within_oracle = false;
  bool pass = false;
};

/// Closes materialize(tag, p) and compares it with enumerate_unit_loop(p) as
/// sets. p must be 2, 3 or 5 (Prop1: 2 or 3); throws UnsupportedPrime otherwise.
GenerationReport verify_generating_set(GeneratorSet tag, unsigned p,
                                       const ClosureOptions& options = {});

/// Same, against an oracle the caller already holds.
GenerationReport verify_generating_set(GeneratorSet tag, unsigned p,
                                       const ElementSet<CanonicalElement>& oracle,
                                       const ClosureOptions& options = {});

struct IdentityResult {
  std::string name;
  unsigned p;
  bool pass;
  /// Number of instances checked (one for a single identity, one per vector
  /// or pair for the quantified ones).
  std::size_t instances;
  /// First failing instance, rendered; empty on pass.
  std::string detail;
};

/// Reduction identities with their printed bracketing, as equalities of
/// classes mod {I, -I}:
///   s(e1) = s(e3) s(e2)
///   s(e2) = [u(e1)u(e3) . u(e2)u(e1)][u(e3)^-1 . u(e2)s(e3)]
///   u(e3) = x^-1 s(e3)
///   s(e3) = [u(e2)u(e1) . x][x u(e1)] . [x^2 u(e2) . u(e1)x^2 u(e1)]
/// plus l(a) = s(a)' u(t(a)) (-s(a)') and u(a) = s(a) l(t(a)) (-s(a)) for every
/// projective a, and s(b) = s(a) l(-a x b), s(b)' = s(a)' u(a x b) for every
/// pair of nonzero a, b with t(a) = t(b). Unbracketed runs associate left to right.
std::vector<IdentityResult> verify_reduction_identities(unsigned p);

/// The four single identities above, each with its left and right side.
struct NamedIdentity {
  std::string name;
  ZornMatrix lhs;
  ZornMatrix rhs;
};
std::vector<NamedIdentity> reduction_identities(unsigned p);

/// The matrices u(e_i), s(e_i) expressed through the three theorem generators
/// by the reduction identities, i.e. words in u(e1), u(e2), x only.
std::vector<NamedIdentity> prop5_from_theorem(unsigned p);

/// "IDENTITY <name> p=<p> PASS|FAIL"
std::string report_line(const IdentityResult& r);

}  // namespace paige
