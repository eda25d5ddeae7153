// Command-line front end. Exit codes: 0 INJECTIVE / success, 1 FAIL,
// 2 INDETERMINATE, 3 usage or IO error.

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "lowrank/certify.hpp"
#include "lowrank/errors.hpp"
#include "lowrank/io.hpp"
#include "lowrank/projections.hpp"
#include "lowrank/realroots.hpp"
#include "lowrank/search.hpp"
#include "lowrank/variety.hpp"

using namespace lowrank;

namespace {

constexpr int kExitInjective = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitUsage = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> n;
  int r = 1;
  bool symmetric = false;
  std::size_t m = 0;
  std::string range;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::optional<double> timeout_seconds;
  std::size_t max_pairs = ResourceLimits{}.max_pairs;
  unsigned max_degree = ResourceLimits{}.max_degree;
  std::string keep_vars;
  std::string out;
  std::string input;
  std::string theorem;
};

std::pair<long, long> parse_range(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*:\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("--range expects LO:HI, got '" + text + "'");
  const long lo = std::stol(m[1]);
  const long hi = std::stol(m[2]);
  if (lo > hi) throw UsageError("--range has LO > HI in '" + text + "'");
  return {lo, hi};
}

ResourceLimits limits_from(const Options& o) {
  ResourceLimits l;
  l.max_pairs = o.max_pairs;
  l.max_degree = o.max_degree;
  if (o.timeout_seconds) {
    if (*o.timeout_seconds <= 0) throw UsageError("--timeout-seconds must be positive");
    l.time_limit = std::chrono::milliseconds(static_cast<long long>(*o.timeout_seconds * 1000.0));
  }
  return l;
}

CertifyConfig certify_config(const Options& o) {
  CertifyConfig c;
  c.limits = limits_from(o);
  if (!o.keep_vars.empty()) {
    const auto comma = o.keep_vars.find(',');
    if (comma == std::string::npos || o.keep_vars.find(',', comma + 1) != std::string::npos) {
      throw UsageError("--keep-vars expects A,B, got '" + o.keep_vars + "'");
    }
    c.keep = std::array<std::string, 2>{o.keep_vars.substr(0, comma), o.keep_vars.substr(comma + 1)};
  }
  return c;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Injective: return kExitInjective;
    case Verdict::Fail: return kExitFail;
    case Verdict::Indeterminate: return kExitIndeterminate;
  }
  return kExitUsage;
}

void print_certificate(const Certificate& c) {
  std::cout << "verdict: " << to_string(c.verdict) << "\n";
  if (!c.reason.empty()) std::cout << "reason: " << c.reason << "\n";
  std::cout << "kept: " << c.kept[0] << ", " << c.kept[1] << "\n";
  if (c.f0) {
    std::cout << "f0 degree: " << c.f0->degree() << "\n";
    if (c.real_root_count) std::cout << "real roots of f0(a,1): " << *c.real_root_count << "\n";
  }
  std::size_t ok = 0;
  for (const auto& s : c.slices) ok += s.contains_one.value_or(false) ? 1 : 0;
  if (!c.slices.empty()) std::cout << "slices containing 1: " << ok << "/" << c.slices.size() << "\n";
}

void maybe_write(const Options& o, const Json& j) {
  if (!o.out.empty()) write_text_file(o.out, to_text(j));
}

// ---------------------------------------------------------------------------

int run_bounds(const Options& o) {
  std::vector<int> ns;
  if (!o.range.empty()) {
    const auto [lo, hi] = parse_range(o.range);
    for (long n = lo; n <= hi; ++n) ns.push_back(static_cast<int>(n));
  } else if (o.n) {
    ns.push_back(*o.n);
  } else {
    throw UsageError("bounds needs --n or --range");
  }
  if (o.range.empty() && (o.r < 1 || 2 * o.r > *o.n)) {
    throw UsageError("--r " + std::to_string(o.r) + " is out of range for --n " + std::to_string(*o.n) +
                     " (need 1 <= r <= n/2)");
  }
  Json rows = Json::array();
  std::cout << std::left << std::setw(4) << "n" << std::setw(4) << "r" << std::setw(15) << "variant" << std::setw(6)
            << "dim" << std::setw(14) << "d(n,2r)" << std::setw(7) << "parity" << std::setw(7) << "bound"
            << std::setw(11) << "tightness" << "citation\n";
  for (int n : ns) {
    std::vector<int> rs;
    if (!o.range.empty()) {
      for (int r = 1; 2 * r <= n; ++r) rs.push_back(r);
    } else {
      rs.push_back(o.r);
    }
    for (int r : rs) {
      for (Variant v : {Variant::General, Variant::Symmetric, Variant::WeakRecovery}) {
        const ProblemSpec spec{n, r, v, Field::Real};
        try {
          validate(spec);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string(e.what()) + " (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
        }
        const long dim = dim_lowrank(n, r, v == Variant::Symmetric ? Variant::Symmetric : Variant::General);
        const BigInt deg = degree_determinantal(n, 2 * r);
        const bool odd = is_odd_degree(n, 2 * r);
        const long bound = min_measurement_bound(spec);
        const TightnessVerdict t = tightness_classify(spec);
        std::cout << std::left << std::setw(4) << n << std::setw(4) << r << std::setw(15) << to_string(v)
                  << std::setw(6) << dim << std::setw(14) << to_string(deg) << std::setw(7) << (odd ? "odd" : "even")
                  << std::setw(7) << bound << std::setw(11) << to_string(t.value) << t.citation << "\n";
        rows.push_back(Json{{"n", n},
                            {"r", r},
                            {"variant", to_string(v)},
                            {"dim", dim},
                            {"degree", to_string(deg)},
                            {"parity", odd ? "odd" : "even"},
                            {"bound", bound},
                            {"tightness", to_string(t.value)},
                            {"citation", t.citation}});
      }
    }
  }
  maybe_write(o, rows);
  return 0;
}

int run_certify(const Options& o) {
  const MeasurementEnsemble e = ensemble_from_json(parse_json(read_text_file(o.input)));
  try {
    e.validate();
    if (2 * e.r > e.n) throw std::invalid_argument("certification needs r <= n/2");
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), o.input);
  }
  const Certificate c = vinzant_certify(e, certify_config(o));
  print_certificate(c);
  maybe_write(o, certificate_to_json(c));
  return exit_code(c.verdict);
}

int run_phase_retrieval(const Options& o) {
  const SubspaceFile f = subspaces_from_json(parse_json(read_text_file(o.input)));
  if (f.subspaces.empty()) throw ParseError("no subspaces", o.input);
  if (f.n < 2) throw ParseError("phase retrieval needs n >= 2", o.input);
  const Certificate c = certify_phase_retrieval(f.subspaces, certify_config(o));
  print_certificate(c);
  maybe_write(o, certificate_to_json(c));
  return exit_code(c.verdict);
}

int run_search(const Options& o) {
  SearchConfig cfg;
  if (!o.n) throw UsageError("search needs --n");
  cfg.n = *o.n;
  cfg.r = o.r;
  cfg.symmetric = o.symmetric;
  cfg.m = o.m;
  if (!o.range.empty()) std::tie(cfg.lo, cfg.hi) = parse_range(o.range);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.limits = limits_from(o);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SearchReport report = search_minimal(cfg);
  std::cout << "INJECTIVE: " << report.injective << "\nFAIL: " << report.fail
            << "\nINDETERMINATE: " << report.indeterminate << "\n";
  for (const auto& h : report.hits) std::cout << "found: trial " << h.trial << "\n";
  maybe_write(o, search_report_to_json(report));
  return 0;
}

int run_sturm(const Options& o) {
  const std::string text = read_text_file(o.input);
  static const std::regex ident(R"([A-Za-z_][A-Za-z0-9_]*)");
  std::vector<std::string> names;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
    if (std::find(names.begin(), names.end(), it->str()) == names.end()) names.push_back(it->str());
  }
  if (names.size() > 2) throw ParseError("sturm expects at most two variables", names[2]);
  const Polynomial f = parse_polynomial(text, make_variables(names));
  if (f.is_zero()) throw ParseError("zero polynomial has infinitely many roots", "0");
  if (names.size() == 2) {
    if (!f.is_homogeneous()) throw ParseError("bivariate input must be homogeneous", to_string(f));
    const Polynomial g = dehomogenize(f);
    std::cout << "degree: " << f.degree() << "\n";
    std::cout << "real roots of f(" << names[0] << ",1): " << (g.is_constant() ? 0 : count_real_roots(g)) << "\n";
    std::cout << "nonzero real root: " << (homogeneous_has_nonzero_real_root(f) ? "yes" : "no") << "\n";
    return 0;
  }
  std::cout << "degree: " << f.degree() << "\n";
  std::cout << "real roots: " << (f.is_constant() ? 0 : count_real_roots(f)) << "\n";
  return 0;
}

int run_verify_paper(const Options& o) {
  const std::filesystem::path dir = data_dir();
  Certificate c;
  std::string golden_file;
  int expected_degree = 0;
  CertifyConfig config = certify_config(o);
  const auto start = std::chrono::steady_clock::now();
  if (o.theorem == "thm43") {
    const SubspaceFile f = subspaces_from_json(parse_json(read_text_file(dir / "thm43_subspaces.json")));
    c = certify_phase_retrieval(f.subspaces, config);
    golden_file = "golden_thm43_f0.txt";
    expected_degree = 10;
  } else if (o.theorem == "thm33") {
    const MeasurementEnsemble e = ensemble_from_json(parse_json(read_text_file(dir / "thm33_ensemble.json")));
    c = vinzant_certify(e, config);
    golden_file = "golden_thm33_f0.txt";
    expected_degree = 20;
  } else {
    throw UsageError("verify-paper expects thm33 or thm43, got '" + o.theorem + "'");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  print_certificate(c);
  maybe_write(o, certificate_to_json(c));
  if (c.verdict != Verdict::Injective) return exit_code(c.verdict);

  const Polynomial golden = parse_polynomial(read_text_file(dir / golden_file), c.f0->variables());
  const bool degree_ok = c.f0->degree() == expected_degree;
  const bool proportional_ok = proportional(*c.f0, golden);
  std::cout << "f0 degree " << c.f0->degree() << (degree_ok ? "" : " (expected " + std::to_string(expected_degree) + ")")
            << ", " << (proportional_ok ? "proportional to golden" : "NOT proportional to golden") << "\n";
  std::cout << std::fixed << std::setprecision(1) << "elapsed: " << seconds << " s\n";
  return degree_ok && proportional_ok ? kExitInjective : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of low-rank recovery measurement ensembles"};
  app.require_subcommand(1);
  Options o;

  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--timeout-seconds", o.timeout_seconds, "Wall-clock cap per Groebner computation");
    sub->add_option("--max-pairs", o.max_pairs, "Cap on processed S-pairs per computation");
    sub->add_option("--max-degree", o.max_degree, "Cap on S-pair degree");
    sub->add_option("--keep-vars", o.keep_vars, "Kept variable pair A,B (default: last two)");
    sub->add_option("--out", o.out, "Write the JSON certificate here");
  };

  auto* bounds = app.add_subcommand("bounds", "Measurement-number bounds and determinantal degrees");
  bounds->add_option("--n", o.n, "Matrix size");
  bounds->add_option("--r", o.r, "Rank bound");
  bounds->add_option("--range", o.range, "Sweep n over LO:HI and every r <= n/2");
  bounds->add_option("--out", o.out, "Write JSON rows here");

  auto* certify = app.add_subcommand("certify", "Certify an ensemble file");
  certify->add_option("input", o.input, "Ensemble JSON")->required();
  add_limits(certify);

  auto* phase = app.add_subcommand("phase-retrieval", "Certify a subspace file for phase retrieval");
  phase->add_option("input", o.input, "Subspace JSON")->required();
  add_limits(phase);

  auto* search = app.add_subcommand("search", "Random search for injective ensembles");
  search->add_option("--n", o.n, "Matrix size")->required();
  search->add_option("--r", o.r, "Rank bound");
  search->add_flag("--symmetric", o.symmetric, "Symmetric unknown");
  search->add_option("--m", o.m, "Ensemble size")->required();
  search->add_option("--range", o.range, "Entry range LO:HI (default -4:4)");
  search->add_option("--trials", o.trials, "Number of trials");
  search->add_option("--seed", o.seed, "Seed");
  search->add_option("--timeout-seconds", o.timeout_seconds, "Wall-clock cap per Groebner computation");
  search->add_option("--max-pairs", o.max_pairs, "Cap on processed S-pairs per computation");
  search->add_option("--max-degree", o.max_degree, "Cap on S-pair degree");
  search->add_option("--out", o.out, "Write the JSON report here");

  auto* sturm = app.add_subcommand("sturm", "Count real roots of a polynomial file");
  sturm->add_option("input", o.input, "Polynomial text file")->required();

  auto* verify = app.add_subcommand("verify-paper", "Reproduce a bundled certification");
  verify->add_option("theorem", o.theorem, "thm33 or thm43")->required();
  add_limits(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bounds) return run_bounds(o);
    if (*certify) return run_certify(o);
    if (*phase) return run_phase_retrieval(o);
    if (*search) return run_search(o);
    if (*sturm) return run_sturm(o);
    if (*verify) return run_verify_paper(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << (o.input.empty() ? "" : o.input + ": ") << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
