#include "paige/generators.hpp"

#include <sstream>

#include "paige/unit_loop.hpp"

namespace paige {

namespace {

bool same_class(const ZornMatrix& a, const ZornMatrix& b) { return a == b || a == -b; }

ZornMatrix u(int i, unsigned p) { return make_u(Vec3::unit(i, p)); }
ZornMatrix s(int i, unsigned p) { return make_s(Vec3::unit(i, p)); }

std::string render_vec(const Vec3& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// Checks a quantified identity, recording the first counterexample.
class QuantifiedCheck {
 public:
  QuantifiedCheck(std::string name, unsigned p) : result_{std::move(name), p, true, 0, {}} {}

  void check(const ZornMatrix& lhs, const ZornMatrix& rhs, const std::string& instance) {
    ++result_.instances;
    if (result_.pass && !same_class(lhs, rhs)) {
      result_.pass = false;
      result_.detail = instance + ": " + to_string(lhs) + " vs " + to_string(rhs);
    }
  }

  IdentityResult take() { return std::move(result_); }

 private:
  IdentityResult result_;
};

std::vector<Vec3> nonzero_vectors(unsigned p) {
  std::vector<Vec3> out;
  for (unsigned x = 0; x < p; ++x)
    for (unsigned y = 0; y < p; ++y)
      for (unsigned z = 0; z < p; ++z)
        if (x != 0 || y != 0 || z != 0) out.emplace_back(x, y, z, p);
  return out;
}

}  // namespace

std::string_view to_string(GeneratorSet tag) noexcept {
  switch (tag) {
    case GeneratorSet::Prop1: return "prop1";
    case GeneratorSet::Prop2: return "prop2";
    case GeneratorSet::Prop3: return "prop3";
    case GeneratorSet::Prop5: return "prop5";
    case GeneratorSet::Theorem: return "theorem";
  }
  return "?";
}

GeneratorSet parse_generator_set(std::string_view name) {
  for (auto tag : kAllGeneratorSets)
    if (to_string(tag) == name) return tag;
  throw AlgebraError(ErrorKind::ParseError, "unknown generator set \"" + std::string(name) + "\"");
}

std::vector<Vec3> projective_points(unsigned p) {
  require_supported_prime(p);
  std::vector<Vec3> out;
  out.reserve(p * p + p + 1);
  for (unsigned y = 0; y < p; ++y)
    for (unsigned z = 0; z < p; ++z) out.emplace_back(1, y, z, p);
  for (unsigned z = 0; z < p; ++z) out.emplace_back(0, 1, z, p);
  out.emplace_back(0, 0, 1, p);
  return out;
}

std::vector<ZornMatrix> generator_words(GeneratorSet tag, unsigned p) {
  require_supported_prime(p);
  std::vector<ZornMatrix> words;
  switch (tag) {
    case GeneratorSet::Prop1:
      for (const auto& a : nonzero_vectors(p)) {
        words.push_back(make_u(a));
        words.push_back(make_l(a));
      }
      break;
    case GeneratorSet::Prop2:
      for (const auto& a : projective_points(p)) {
        words.push_back(make_u(a));
        words.push_back(make_l(a));
      }
      break;
    case GeneratorSet::Prop3:
      for (int i = 1; i <= 3; ++i) words.push_back(u(i, p));
      for (const auto& a : projective_points(p)) {
        words.push_back(make_s(a));
        words.push_back(transpose(make_s(a)));
      }
      break;
    case GeneratorSet::Prop5:
      for (int i = 1; i <= 3; ++i) words.push_back(u(i, p));
      for (int i = 1; i <= 3; ++i) words.push_back(s(i, p));
      break;
    case GeneratorSet::Theorem:
      words = {u(1, p), u(2, p), theorem_x(p)};
      break;
  }
  return words;
}

ElementSet<CanonicalElement> materialize(GeneratorSet tag, unsigned p) {
  require_supported_prime(p);
  if (tag == GeneratorSet::Prop1 && p > 5) {
    throw AlgebraError(ErrorKind::UnsupportedPrime,
                       "prop1 is materialized only for p <= 5, got " + std::to_string(p));
  }
  ElementSet<CanonicalElement> set;
  for (const auto& w : generator_words(tag, p)) set.insert(canonicalize(w));
  return set;
}

GenerationReport verify_generating_set(GeneratorSet tag, unsigned p,
                                       const ClosureOptions& options) {
  require_supported_prime(p);
  if (p > 5 || (tag == GeneratorSet::Prop1 && p > 3)) {
    throw AlgebraError(ErrorKind::UnsupportedPrime,
                       std::string(to_string(tag)) + " is verified only for p in {2, 3" +
                           (tag == GeneratorSet::Prop1 ? "}" : ", 5}") + ", got " +
                           std::to_string(p));
  }
  return verify_generating_set(tag, p, enumerate_unit_loop(p), options);
}

GenerationReport verify_generating_set(GeneratorSet tag, unsigned p,
                                       const ElementSet<CanonicalElement>& oracle,
                                       const ClosureOptions& options) {
  GenerationReport report{tag, p};
  const auto gens = materialize(tag, p);
  const auto closed = closure(gens, options);
  report.generators = gens.size();
  report.closure_size = closed.size();
  report.oracle_size = oracle.size();
  report.closure_within_oracle = closed.is_subset_of(oracle);
  report.pass = report.closure_within_oracle && closed.size() == oracle.size();
  return report;
}

std::vector<NamedIdentity> reduction_identities(unsigned p) {
  require_supported_prime(p);
  const ZornMatrix u1 = u(1, p), u2 = u(2, p), u3 = u(3, p);
  const ZornMatrix s1 = s(1, p), s2 = s(2, p), s3 = s(3, p);
  const ZornMatrix x = theorem_x(p);
  const ZornMatrix x2 = x * x;

  return {
      {"s(e1)=s(e3)s(e2)", s1, s3 * s2},
      {"s(e2)=[u(e1)u(e3).u(e2)u(e1)][u(e3)^-1.u(e2)s(e3)]", s2,
       ((u1 * u3) * (u2 * u1)) * (zorn_inv(u3) * (u2 * s3))},
      {"u(e3)=x^-1s(e3)", u3, zorn_inv(x) * s3},
      {"s(e3)=[u(e2)u(e1).x][xu(e1)].[x^2u(e2).u(e1)x^2u(e1)]", s3,
       (((u2 * u1) * x) * (x * u1)) * ((x2 * u2) * ((u1 * x2) * u1))},
  };
}

std::vector<NamedIdentity> prop5_from_theorem(unsigned p) {
  require_supported_prime(p);
  const ZornMatrix u1 = u(1, p), u2 = u(2, p);
  const ZornMatrix x = theorem_x(p);
  const ZornMatrix x2 = x * x;
  const ZornMatrix s3 = (((u2 * u1) * x) * (x * u1)) * ((x2 * u2) * ((u1 * x2) * u1));
  const ZornMatrix u3 = zorn_inv(x) * s3;
  const ZornMatrix s2 = ((u1 * u3) * (u2 * u1)) * (zorn_inv(u3) * (u2 * s3));
  const ZornMatrix s1 = s3 * s2;
  return {{"u(e1)", u1, u(1, p)}, {"u(e2)", u2, u(2, p)}, {"u(e3)", u3, u(3, p)},
          {"s(e1)", s1, s(1, p)}, {"s(e2)", s2, s(2, p)}, {"s(e3)", s3, s(3, p)}};
}

std::vector<IdentityResult> verify_reduction_identities(unsigned p) {
  std::vector<IdentityResult> results;
  for (const auto& id : reduction_identities(p)) {
    QuantifiedCheck check(id.name, p);
    check.check(id.lhs, id.rhs, "");
    results.push_back(check.take());
  }

  QuantifiedCheck eq_l("l(a)=s(a)'u(t(a))(-s(a)')", p);
  QuantifiedCheck eq_u("u(a)=s(a)l(t(a))(-s(a))", p);
  for (const auto& a : projective_points(p)) {
    const ZornMatrix sa = make_s(a);
    const ZornMatrix sat = transpose(sa);
    const Vec3 ta = map_t(a);
    eq_l.check(make_l(a), (sat * make_u(ta)) * (-sat), "a=" + render_vec(a));
    eq_u.check(make_u(a), (sa * make_l(ta)) * (-sa), "a=" + render_vec(a));
  }
  results.push_back(eq_l.take());
  results.push_back(eq_u.take());

  // Group nonzero vectors by t(a); the lemma quantifies over pairs within a group.
  QuantifiedCheck lemma_s("s(b)=s(a)l(-axb)", p);
  QuantifiedCheck lemma_st("s(b)'=s(a)'u(axb)", p);
  const auto vectors = nonzero_vectors(p);
  std::vector<std::vector<Vec3>> groups(3 * p);
  for (const auto& a : vectors) {
    const Vec3 t = map_t(a);
    for (std::size_t i = 0; i < 3; ++i)
      if (!t[i].is_zero()) groups[i * p + t[i].value()].push_back(a);
  }
  for (const auto& group : groups) {
    for (const auto& a : group) {
      const ZornMatrix sa = make_s(a);
      const ZornMatrix sat = transpose(sa);
      for (const auto& b : group) {
        const Vec3 axb = cross(a, b);
        const std::string instance = "a=" + render_vec(a) + " b=" + render_vec(b);
        lemma_s.check(make_s(b), sa * make_l(-axb), instance);
        lemma_st.check(transpose(make_s(b)), sat * make_u(axb), instance);
      }
    }
  }
  results.push_back(lemma_s.take());
  results.push_back(lemma_st.take());
  return results;
}

std::string report_line(const IdentityResult& r) {
  return "IDENTITY " + r.name + " p=" + std::to_string(r.p) + (r.pass ? " PASS" : " FAIL");
}

}  // namespace paige
