#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paige/closure.hpp"
#include "paige/generators.hpp"
#include "paige/isomorphism.hpp"
#include "paige/loop_table.hpp"
#include "paige/octonion.hpp"
#include "paige/unit_loop.hpp"

namespace paige::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Collects PASS/FAIL lines and remembers whether anything failed.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& line, bool pass) {
    out_ << line << (pass ? " PASS" : " FAIL") << '\n';
    failed_ = failed_ || !pass;
  }
  void skip(const std::string& what, unsigned p, const std::string& why) {
    out_ << "SKIP " << what << " p=" << p << " (" << why << ")\n";
  }
  void detail(const std::string& text) { out_ << "  " << text << '\n'; }
  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

unsigned validated_prime(unsigned p) {
  if (!is_supported_prime(p)) {
    if (p > kMaxPrime) throw UsageError(std::to_string(p) + " exceeds the supported bound 251");
    throw UsageError(std::to_string(p) + " is not prime");
  }
  return p;
}

std::string triple_string(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

struct VerifySettings {
  unsigned p = 2;
  bool deep = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

constexpr std::size_t kDiassocPairs = 200;

void verify_reductions(const VerifySettings& s, Report& report) {
  if (s.p > 5) return report.skip("reductions", s.p, "generator closures are compared with the oracle only for p <= 5");
  if (s.p == 5 && !s.deep) return report.skip("reductions", s.p, "requires --deep");
  const auto oracle = enumerate_unit_loop(s.p);
  const ClosureOptions options{ClosureOptions{}.cap, s.threads};
  for (auto tag : kAllGeneratorSets) {
    if (tag == GeneratorSet::Prop1 && s.p > 3) continue;
    const auto r = verify_generating_set(tag, s.p, oracle, options);
    report.check("GENERATORS " + std::string(to_string(tag)) + " p=" + std::to_string(s.p) +
                     " generators=" + std::to_string(r.generators) +
                     " closure=" + std::to_string(r.closure_size) +
                     " oracle=" + std::to_string(r.oracle_size),
                 r.pass);
  }
  const auto theorem_closure = closure(materialize(GeneratorSet::Theorem, s.p), options);
  bool nested = true;
  for (const auto& g : materialize(GeneratorSet::Prop5, s.p)) nested = nested && theorem_closure.contains(g);
  for (const auto& w : prop5_from_theorem(s.p)) nested = nested && canonicalize(w.lhs) == canonicalize(w.rhs);
  report.check("NESTED prop5-within-theorem p=" + std::to_string(s.p), nested);
}

void verify_identities(const VerifySettings& s, Report& report) {
  for (const auto& r : verify_reduction_identities(s.p)) {
    report.check(report_line(r).substr(0, report_line(r).rfind(' ')), r.pass);
    report.detail("instances=" + std::to_string(r.instances) + (r.pass ? "" : " witness: " + r.detail));
  }
}

IndexedLoop<CanonicalElement> paige_table(unsigned p) { return build_table(enumerate_unit_loop(p)); }

void verify_moufang(const VerifySettings& s, Report& report) {
  if (s.p > 3) return report.skip("moufang", s.p, "Cayley tables are built only for p <= 3");
  const auto loop = paige_table(s.p);
  const std::size_t n = loop.table.size();
  const bool exhaustive = static_cast<double>(n) * n * n <= 3e6;
  const auto witness = check_moufang(loop.table, MoufangVariant::LeftNested, s.seed);
  report.check("MOUFANG p=" + std::to_string(s.p) + " n=" + std::to_string(n) +
                   (exhaustive ? " exhaustive triples=" + std::to_string(n * n * n)
                               : " sampled triples=1000000 seed=" + std::to_string(s.seed)),
               !witness);
  if (witness) report.detail("violated at " + triple_string(*witness));
  const auto nonassoc = check_nonassociative(loop.table);
  report.check("NONASSOCIATIVE p=" + std::to_string(s.p) +
                   (nonassoc ? " witness=" + triple_string(*nonassoc) : " no witness"),
               nonassoc.has_value());
  if (nonassoc) {
    for (auto i : *nonassoc) report.detail(std::to_string(i) + " = " + to_string(loop.elements[i].matrix()));
  }
}

void verify_diassociativity(const VerifySettings& s, Report& report) {
  if (s.p > 3) return report.skip("diassoc", s.p, "Cayley tables are built only for p <= 3");
  const auto loop = paige_table(s.p);
  const auto pairs = sample_pairs(loop.table.size(), kDiassocPairs, s.seed);
  const auto witness = check_diassociativity(loop.table, pairs);
  report.check("DIASSOCIATIVE p=" + std::to_string(s.p) + " pairs=" + std::to_string(pairs.size()) +
                   " seed=" + std::to_string(s.seed),
               !witness);
  if (witness) report.detail("pair (" + std::to_string((*witness)[0]) + "," + std::to_string((*witness)[1]) + ")");
}

void verify_center(const VerifySettings& s, Report& report) {
  const std::size_t expected = s.p == 2 ? 1 : 2;
  const std::string ps = " p=" + std::to_string(s.p);
  if (s.p <= 3) {
    const auto raw = build_table(enumerate_unit_matrices(s.p));
    const auto z = center(raw.table);
    report.check("CENTER unquotiented" + ps + " n=" + std::to_string(raw.table.size()) +
                     " size=" + std::to_string(z.size()) + " expected=" + std::to_string(expected),
                 z.size() == expected);
    for (auto i : z) report.detail(to_string(raw.elements[i]));
    const auto quotient = center(paige_table(s.p).table);
    report.check("CENTER quotient" + ps + " size=" + std::to_string(quotient.size()) + " expected=1",
                 quotient.size() == 1);
    return;
  }
  if (s.p > kOraclePrimeBound) return report.skip("center", s.p, "enumeration is limited to p <= 7");
  if (s.p == 7 && !s.deep) return report.skip("center", s.p, "requires --deep");
  const auto z = unit_loop_center(s.p);
  report.check("CENTER unquotiented" + ps + " size=" + std::to_string(z.center.size()) +
                   " expected=" + std::to_string(expected) + " commuting=" + std::to_string(z.commuting) +
                   " scalar=" + std::to_string(z.scalar),
               z.center.size() == expected);
  for (const auto& m : z.center) report.detail(to_string(m));
}

void verify_simplicity(const VerifySettings& s, Report& report) {
  if (s.p > 3) return report.skip("simplicity", s.p, "normal closures are computed only for p <= 3");
  if (s.p == 3 && !s.deep) return report.skip("simplicity", s.p, "requires --deep");
  const auto loop = paige_table(s.p);
  SimplicityOptions options;
  if (s.p == 3) options = {NormalClosureMethod::Congruence, true};
  const auto r = simplicity_check(loop.table, options);
  report.check("SIMPLE p=" + std::to_string(s.p) + " n=" + std::to_string(loop.table.size()) +
                   " method=" + (options.method == NormalClosureMethod::InnerMappings ? "inner-mappings" : "congruence") +
                   " closures=" + std::to_string(r.closures_computed) +
                   " covered=" + std::to_string(r.elements_covered),
               r.simple);
  if (!r.simple) {
    report.detail("normal closure of " + std::to_string(r.witness_generator) + " has " +
                  std::to_string(r.witness_subloop.size()) + " elements");
  }
}

void verify_jprime(const VerifySettings& s, Report& report, bool signed_units) {
  const auto jp = jprime_enumerate();
  bool integral = true;
  for (const auto& a : jp) integral = integral && norm(a) == Dyadic(1) && trace(a).is_integer();
  report.check("JPRIME size=" + std::to_string(jp.size()) + " expected=240", jp.size() == 240);
  report.check("JPRIME norm-1-integral-trace", integral);
  const auto triples = check_basis_triples(signed_units);
  report.check(std::string("JPRIME basis-triples") + (signed_units ? " signed" : "") +
                   " checked=" + std::to_string(triples.triples_checked) +
                   " largest-closure=" + std::to_string(triples.largest_closure),
               !triples.generating_triple);
  const auto classes = jprime_classes(jp);
  const auto table = build_table(classes);
  report.check("JPRIME quotient-moufang n=" + std::to_string(classes.size()),
               classes.size() == 120 && !check_moufang(table.table, MoufangVariant::LeftNested, s.seed));
  report.check("JPRIME quotient-diassociative pairs=" + std::to_string(kDiassocPairs),
               !check_diassociativity(table.table, sample_pairs(classes.size(), kDiassocPairs, s.seed)));
}

void verify_isomorphism(Report& report) {
  const PairMap map = build_isomorphism();
  report.check("ISOMORPHISM pairs=" + std::to_string(map.size()), map.size() == 120);
  const auto hom = verify_hom(map);
  report.check("ISOMORPHISM homomorphism pairs=" + std::to_string(map.size() * map.size()), !hom);
  if (hom) report.detail("x=" + to_string(hom->x.rep()) + " y=" + to_string(hom->y.rep()));
  report.check("ISOMORPHISM inverse-homomorphism", !verify_inverse_hom(map));
  report.check("ISOMORPHISM inverses", !verify_inverse_classes(map));
  for (const auto& c : verify_lemma7(map)) report.check("LEMMA " + c.name, c.pass);
}

const std::vector<std::string> kVerifyChecks = {"reductions", "identities", "moufang", "diassoc",
                                                 "center",     "simplicity"};

int run_verify(const VerifySettings& s, std::vector<std::string> what, bool all, std::ostream& out) {
  if (all || std::find(what.begin(), what.end(), "all") != what.end() || what.empty()) {
    what = kVerifyChecks;
    all = true;
  }
  for (const auto& w : what) {
    if (std::find(kVerifyChecks.begin(), kVerifyChecks.end(), w) == kVerifyChecks.end()) {
      throw UsageError("unknown check \"" + w + "\"");
    }
  }
  Report report(out);
  for (const auto& w : kVerifyChecks) {
    if (std::find(what.begin(), what.end(), w) == what.end()) continue;
    if (w == "reductions") verify_reductions(s, report);
    if (w == "identities") verify_identities(s, report);
    if (w == "moufang") verify_moufang(s, report);
    if (w == "diassoc") verify_diassociativity(s, report);
    if (w == "center") verify_center(s, report);
    if (w == "simplicity") verify_simplicity(s, report);
  }
  if (all && s.p == 2) {
    verify_jprime(s, report, false);
    verify_isomorphism(report);
  }
  return report.failed() ? kExitFailure : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paige loops, their three-element generation, and the integral octonion units", "paige"};
  app.require_subcommand(1);

  unsigned p = 2;
  unsigned threads = 1;
  std::size_t cap = ClosureOptions{}.cap;
  std::string gens;
  std::vector<std::string> what;
  bool all = false, deep = false;
  std::uint64_t seed = 1;
  std::string out_path;
  std::vector<std::string> oct_args;
  bool enumerate = false, basis_triples = false, signed_units = false;
  bool iso_verify = false;
  std::string export_path;

  auto* order = app.add_subcommand("order", "count M/Z(M) by exhaustive enumeration (p <= 7)");
  order->add_option("--p", p, "prime modulus")->required();

  auto* closure_cmd = app.add_subcommand("closure", "close a named generating set");
  closure_cmd->add_option("--p", p, "prime modulus")->required();
  closure_cmd->add_option("--gens", gens, "theorem|prop5|prop3|prop2|prop1")->required();
  closure_cmd->add_option("--cap", cap, "abort past this many elements");
  closure_cmd->add_option("--threads", threads, "worker threads");

  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--p", p, "prime modulus")->required();
  verify->add_option("--what", what, "reductions,identities,moufang,diassoc,center,simplicity,all")
      ->delimiter(',');
  verify->add_flag("--all", all, "every check (plus J' and the isomorphism at p = 2)");
  verify->add_flag("--deep", deep, "allow long-running checks");
  verify->add_option("--seed", seed, "seed for sampled checks");
  verify->add_option("--threads", threads, "worker threads for closures");

  auto* table = app.add_subcommand("table", "export the Cayley table of M/Z(M) as CSV");
  table->add_option("--p", p, "prime modulus (2 or 3)")->required();
  table->add_option("--out", out_path, "output path")->required();

  auto* oct = app.add_subcommand("oct", "octonion arithmetic");
  auto* oct_mul_cmd = oct->add_subcommand("mul", "multiply two octonions");
  oct_mul_cmd->add_option("operands", oct_args, "two octonion expressions")->expected(2)->required();
  oct->require_subcommand(1);

  auto* jprime = app.add_subcommand("jprime", "unit integral Cayley numbers");
  jprime->add_flag("--enumerate", enumerate, "list all elements");
  jprime->add_flag("--check-basis-triples", basis_triples, "close every triple of basis elements");
  jprime->add_flag("--signed", signed_units, "use the 16 signed basis elements");

  auto* iso = app.add_subcommand("iso", "the isomorphism J'/{1,-1} -> M(2)");
  iso->add_flag("--verify", iso_verify, "check homomorphism and the e-image lemma");
  iso->add_option("--export", export_path, "write the map as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*order) {
      validated_prime(p);
      if (p > kOraclePrimeBound) throw UsageError("order enumerates exhaustively and needs p <= 7");
      const auto loop = enumerate_unit_loop(p);
      out << "order p=" << p << " elements=" << loop.size() << '\n';
      return kExitOk;
    }
    if (*closure_cmd) {
      validated_prime(p);
      const GeneratorSet tag = parse_generator_set(gens);
      const auto start = std::chrono::steady_clock::now();
      const auto g = materialize(tag, p);
      const auto c = closure(g, ClosureOptions{cap, threads});
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      out << "closure gens=" << gens << " p=" << p << " generators=" << g.size() << " size=" << c.size()
          << " seconds=" << secs << '\n';
      return kExitOk;
    }
    if (*verify) {
      validated_prime(p);
      return run_verify(VerifySettings{p, deep, seed, threads}, what, all, out);
    }
    if (*table) {
      validated_prime(p);
      if (p > 3) throw UsageError("table export is limited to p <= 3");
      std::ofstream file(out_path);
      if (!file) throw UsageError("cannot open " + out_path);
      const auto loop = paige_table(p);
      write_table_csv(file, loop.table, p);
      out << "wrote " << loop.table.size() << "x" << loop.table.size() << " table to " << out_path << '\n';
      return kExitOk;
    }
    if (*oct_mul_cmd) {
      out << to_string(oct_mul(parse_octonion(oct_args[0]), parse_octonion(oct_args[1]))) << '\n';
      return kExitOk;
    }
    if (*jprime) {
      const auto jp = jprime_enumerate();
      Report report(out);
      report.check("JPRIME size=" + std::to_string(jp.size()) + " expected=240", jp.size() == 240);
      if (enumerate) {
        std::vector<std::string> rows;
        for (const auto& a : jp) rows.push_back(to_string(a));
        std::sort(rows.begin(), rows.end());
        for (const auto& r : rows) out << r << '\n';
      }
      if (basis_triples) {
        const auto r = check_basis_triples(signed_units);
        report.check(std::string("JPRIME basis-triples") + (signed_units ? " signed" : "") +
                         " checked=" + std::to_string(r.triples_checked) +
                         " largest-closure=" + std::to_string(r.largest_closure),
                     !r.generating_triple);
      }
      return report.failed() ? kExitFailure : kExitOk;
    }
    if (*iso) {
      Report report(out);
      if (iso_verify) {
        verify_isomorphism(report);
      } else {
        const PairMap map = build_isomorphism();
        out << "ISOMORPHISM pairs=" << map.size() << '\n';
      }
      if (!export_path.empty()) {
        std::ofstream file(export_path);
        if (!file) throw UsageError("cannot open " + export_path);
        write_map_csv(file, build_isomorphism());
        out << "wrote map to " << export_path << '\n';
      }
      return report.failed() ? kExitFailure : kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    const bool usage = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::UnsupportedPrime;
    return usage ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

}  // namespace paige::cli
