// Command-line front end: build, export, verify, and probe the two-generator
// presentations.  Exit codes: 0 = pass, 1 = verification failure, 2 = usage
// or input error.

#include "slnpres/slnpres.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace slnpres;

/// Parsed flag set for one invocation.
struct RunConfig {
  int n = 0;
  int n_max = 0;
  std::string scheme = "balanced";
  std::string flavor = "base";
  std::string format = "text";
  std::string out_path;
  std::string in_path;
  bool no_dedup = false;
  bool redundant_torsion = false;
  int jobs = 0;
  long long m = 0;
  long long p = 0;
  int k = 1;
  std::uint64_t budget = 2'000'000;
  bool json_out = false;
};

BuildOptions build_options(const RunConfig& cfg) {
  BuildOptions opt;
  opt.dedup = !cfg.no_dedup;
  opt.redundant_torsion = cfg.redundant_torsion;
  return opt;
}

/// Machine-readable twin of print_report; failure list is capped nowhere
/// (reports are small, failures rarer still).
nlohmann::json report_json(const VerificationReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : report.failures)
    failures.push_back({{"index", f.index},
                        {"kind", to_string(f.kind.tag)},
                        {"indices", f.kind.indices},
                        {"description", f.description}});
  return {{"scope", report.scope},
          {"checks", report.total_checks},
          {"failures", std::move(failures)},
          {"wall_ms", report.wall_ms},
          {"passed", report.passed()}};
}

void print_report(const VerificationReport& report) {
  std::cout << (report.passed() ? "[pass] " : "[FAIL] ") << report.scope << ": "
            << report.total_checks << " checks, " << report.failures.size() << " failures, "
            << std::fixed << std::setprecision(1) << report.wall_ms << " ms\n";
  std::size_t shown = 0;
  for (const Failure& f : report.failures) {
    if (++shown > 10) {
      std::cout << "  ... " << (report.failures.size() - 10) << " more\n";
      break;
    }
    std::cout << "  " << f.description << "\n";
  }
}

int run_gen(const RunConfig& cfg) {
  const WordScheme scheme = word_scheme_from_string(cfg.scheme);
  const Flavor flavor = flavor_from_string(cfg.flavor);
  const ExportFormat format = export_format_from_string(cfg.format);
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
    export_stream(cfg.n, scheme, flavor, build_options(cfg), format, out);
    if (!out) throw std::invalid_argument("write failed: " + cfg.out_path);
  } else {
    export_stream(cfg.n, scheme, flavor, build_options(cfg), format, std::cout);
  }
  return 0;
}

int run_verify(const RunConfig& cfg) {
  Presentation p = [&] {
    if (cfg.in_path.empty())
      return build_flavor(flavor_from_string(cfg.flavor), cfg.n, word_scheme_from_string(cfg.scheme),
                          build_options(cfg));
    std::ifstream in(cfg.in_path);
    if (!in) throw std::invalid_argument("cannot open input file: " + cfg.in_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation_json(buffer.str());
  }();
  VerificationReport relators = verify_presentation(p, cfg.jobs);
  VerificationReport shifts = verify_shift_lemmas(p.rank);
  const bool ok = relators.passed() && shifts.passed();
  if (cfg.json_out) {
    nlohmann::json doc = {{"reports", {report_json(relators), report_json(shifts)}}, {"passed", ok}};
    std::cout << doc.dump(2) << "\n";
  } else {
    print_report(relators);
    print_report(shifts);
  }
  return ok ? 0 : 1;
}

int run_congruence(const RunConfig& cfg) {
  VerificationReport report = verify_congruence(cfg.n, cfg.m);
  if (cfg.json_out)
    std::cout << report_json(report).dump(2) << "\n";
  else
    print_report(report);
  return report.passed() ? 0 : 1;
}

/// |SL_n(Z/p^k)| if it fits in 64 bits.
bool try_group_order(int n, long long p, int k, unsigned long long& out) {
  unsigned long long r = 1;
  auto mul = [&](unsigned long long f) { return !__builtin_mul_overflow(r, f, &r); };
  for (int t = 0; t < n * (n - 1) / 2; ++t)
    if (!mul(static_cast<unsigned long long>(p))) return false;
  for (int i = 2; i <= n; ++i) {
    unsigned long long pi = 1;
    for (int t = 0; t < i; ++t)
      if (__builtin_mul_overflow(pi, static_cast<unsigned long long>(p), &pi)) return false;
    if (!mul(pi - 1)) return false;
  }
  for (int t = 0; t < (k - 1) * (n * n - 1); ++t)
    if (!mul(static_cast<unsigned long long>(p))) return false;
  out = r;
  return true;
}

int run_girth(const RunConfig& cfg) {
  GirthProbeResult r = girth_probe(cfg.n, cfg.p, cfg.k, cfg.budget);
  unsigned long long expected = 0;
  const bool have_expected = try_group_order(r.n, r.p, r.k, expected);
  const bool reached_whole_group = !have_expected || r.group_order_found == expected;
  // A partial probe can only assert the relator-derived bound ord(a) <= 2n.
  const bool ok = r.complete ? (r.bound_satisfied() && reached_whole_group) : r.a_order <= r.bound;
  if (cfg.json_out) {
    nlohmann::json doc = {{"n", r.n},
                          {"p", r.p},
                          {"k", r.k},
                          {"modulus", r.modulus},
                          {"elements_reached", r.group_order_found},
                          {"complete", r.complete},
                          {"group_order", have_expected ? nlohmann::json(expected) : nlohmann::json()},
                          {"a_order", r.a_order},
                          {"shortest_cycle", r.shortest_cycle},
                          {"bound", r.bound},
                          {"passed", ok}};
    std::cout << doc.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  std::cout << "girth probe n=" << r.n << " p=" << r.p << " k=" << r.k
            << " modulus=" << r.modulus << "\n";
  std::cout << "  elements reached: " << r.group_order_found
            << (r.complete ? " (complete enumeration)" : " (partial: budget reached)") << "\n";
  if (have_expected) std::cout << "  group order:      " << expected << "\n";
  std::cout << "  ord(a mod m):     " << r.a_order << "\n";
  std::cout << "  shortest cycle:   " << r.shortest_cycle << " (bound 2n = " << r.bound << ")\n";
  if (!r.complete) std::cout << "  partial probe: only the relator-derived bound is asserted\n";
  if (r.complete && !reached_whole_group)
    std::cout << "  [FAIL] enumeration did not reach the whole group\n";
  return ok ? 0 : 1;
}

int run_survey(const RunConfig& cfg) {
  const WordScheme scheme = word_scheme_from_string(cfg.scheme);
  std::vector<SurveyRow> rows = length_survey(cfg.n_max, scheme);
  double worst_tau_ratio = 0.0, worst_col_ratio = 0.0, worst_count = 0.0, worst_len = 0.0;
  for (const SurveyRow& row : rows) {
    worst_tau_ratio = std::max(worst_tau_ratio, row.max_tau_ratio);
    worst_col_ratio = std::max(worst_col_ratio, row.max_first_column_ratio);
    worst_count = std::max(worst_count, row.count_over_n4);
    worst_len = std::max(worst_len, row.length_over_n6);
  }
  if (cfg.json_out) {
    nlohmann::json out_rows = nlohmann::json::array();
    for (const SurveyRow& row : rows) {
      nlohmann::json r = {{"n", row.n},
                          {"max_tau_length", row.max_tau_length.convert_to<long long>()},
                          {"mean_tau_length", row.mean_tau_length},
                          {"max_first_column_length", row.max_first_column_length.convert_to<long long>()},
                          {"max_first_column_ratio", row.max_first_column_ratio},
                          {"max_tau_ratio", row.max_tau_ratio}};
      if (row.has_presentation_stats) {
        r["relator_count"] = row.relator_count;
        r["total_relator_length"] = row.total_relator_length.convert_to<long long>();
        r["count_over_n4"] = row.count_over_n4;
        r["length_over_n6"] = row.length_over_n6;
      }
      out_rows.push_back(std::move(r));
    }
    nlohmann::json doc = {{"scheme", to_string(scheme)},
                          {"rows", std::move(out_rows)},
                          {"observed", {{"max_tau_over_n2", worst_tau_ratio},
                                        {"max_Lr_over_r2", worst_col_ratio},
                                        {"count_over_n4", worst_count},
                                        {"length_over_n6", worst_len}}}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "  n  max|tau|  mean|tau|   max L_r  max L_r/r^2  max|tau|/n^2"
               "   relators  total length  count/n^4  length/n^6\n";
  for (const SurveyRow& row : rows) {
    std::cout << std::setw(3) << row.n << "  " << std::setw(8) << row.max_tau_length << "  "
              << std::setw(9) << std::fixed << std::setprecision(1) << row.mean_tau_length << "  "
              << std::setw(8) << row.max_first_column_length << "  " << std::setw(11)
              << std::setprecision(3) << row.max_first_column_ratio << "  " << std::setw(12)
              << row.max_tau_ratio;
    if (row.has_presentation_stats)
      std::cout << "  " << std::setw(9) << row.relator_count << "  " << std::setw(12)
                << row.total_relator_length << "  " << std::setw(9) << std::setprecision(3)
                << row.count_over_n4 << "  " << std::setw(10) << row.length_over_n6;
    std::cout << "\n";
  }
  std::cout << "observed constants: max|tau|/n^2 <= " << std::setprecision(6) << worst_tau_ratio
            << ", max L_r/r^2 <= " << worst_col_ratio << ", relators/n^4 <= " << worst_count
            << ", total length/n^6 <= " << worst_len << "\n";
  return 0;
}

int run_count(const RunConfig& cfg) {
  RelatorCount c = relator_count_formula(cfg.n);
  CommutingPairCount pairs = commuting_pair_count(cfg.n);
  std::cout << "n = " << cfg.n << "\n"
            << "relators = " << c.total << " (" << c.commutativity << " commutativity + "
            << c.steinberg << " steinberg + " << c.singletons << " singletons)\n"
            << "commuting partners per transvection = " << pairs.per_transvection
            << ", ordered pairs = " << pairs.total_ordered << " (deduplicated: "
            << c.commutativity << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-generator presentations of SL_n(Z): build, export, verify, probe"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_scheme = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", cfg.scheme, "word scheme: recursive | balanced")
        ->check(CLI::IsMember({"recursive", "balanced"}));
  };
  auto add_flavor = [&](CLI::App* cmd) {
    cmd->add_option("--flavor", cfg.flavor,
                    "presentation flavor: base | infinite-infinite | finite-finite | psl")
        ->check(CLI::IsMember({"base", "infinite-infinite", "infinite", "finite-finite", "finite", "psl"}));
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", cfg.json_out, "emit a machine-readable summary instead of text");
  };

  CLI::App* gen = app.add_subcommand("gen", "build a presentation and export it");
  gen->add_option("--n", cfg.n, "rank (>= 3)")->required();
  add_scheme(gen);
  add_flavor(gen);
  gen->add_option("--format", cfg.format, "output format: text | gap | magma | json")
      ->check(CLI::IsMember({"text", "gap", "magma", "json"}));
  gen->add_option("--out", cfg.out_path, "output file (default: stdout)");
  gen->add_flag("--no-dedup", cfg.no_dedup, "keep both orientations of commutativity relators");
  gen->add_flag("--redundant-torsion", cfg.redundant_torsion,
                "finite-finite flavor: adjoin the redundant torsion relators");

  CLI::App* verify = app.add_subcommand("verify", "evaluate every relator and the shift identities");
  auto* verify_n = verify->add_option("--n", cfg.n, "rank (>= 3)");
  add_scheme(verify);
  add_flavor(verify);
  verify->add_option("--jobs", cfg.jobs, "worker threads (default: hardware)");
  auto* verify_in = verify->add_option("--in", cfg.in_path, "verify a presentation from a json export");
  verify_in->excludes(verify_n);
  add_json(verify);

  CLI::App* congruence = app.add_subcommand("congruence", "check the mod-m quotient identities");
  congruence->add_option("--n", cfg.n, "rank (>= 3)")->required();
  congruence->add_option("--m", cfg.m, "modulus (>= 2)")->required();
  add_json(congruence);

  CLI::App* girth = app.add_subcommand("girth", "BFS the Cayley graph of SL_n(Z/p^k)");
  girth->add_option("--n", cfg.n, "rank (>= 3)")->required();
  girth->add_option("--p", cfg.p, "prime")->required();
  girth->add_option("--k", cfg.k, "prime power exponent (default 1)");
  girth->add_option("--budget", cfg.budget, "max elements to enumerate (default 2000000)");
  add_json(girth);

  CLI::App* survey = app.add_subcommand("survey", "word-length growth table");
  survey->add_option("--n-max", cfg.n_max, "largest rank to survey")->required();
  add_scheme(survey);
  add_json(survey);

  CLI::App* count = app.add_subcommand("count", "print the relator count formula breakdown");
  count->add_option("--n", cfg.n, "rank (>= 3)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return run_gen(cfg);
    if (verify->parsed()) {
      if (cfg.in_path.empty() && verify_n->count() == 0)
        throw std::invalid_argument("verify needs --n (or --in FILE.json)");
      return run_verify(cfg);
    }
    if (congruence->parsed()) return run_congruence(cfg);
    if (girth->parsed()) return run_girth(cfg);
    if (survey->parsed()) return run_survey(cfg);
    if (count->parsed()) return run_count(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
