#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "qumetrics/error.hpp"
#include "qumetrics/measures.hpp"
#include "qumetrics/random.hpp"
#include "qumetrics/state_file.hpp"

namespace qumetrics::cli {

namespace {

using nlohmann::json;

// Values printed alongside Hansen's example.
constexpr double kPrintedS = 0.60319;
constexpr double kPrintedL = 1.5385;
constexpr double kPrintedQQuarter = 1.2213;
constexpr double kPrintedQStar = 1.0748;
constexpr double kHansenTolerance = 5e-4;

constexpr double kWernerHalfFixture = 0.26795;

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path.string() + "' for writing");
  return f;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  auto f = open_output(path);
  f << text;
  if (!f) throw Error("write to '" + path.string() + "' failed");
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) v[i] = lo + (hi - lo) * i / (steps - 1);
  v.back() = hi;
  return v;
}

std::string row(const std::string& name, double value) {
  std::ostringstream os;
  os << "  " << std::left << std::setw(22) << name << std::right << std::setw(22)
     << format_real(value) << "\n";
  return os.str();
}

std::string alpha_label(const char* prefix, double alpha) {
  std::ostringstream os;
  os << prefix << "(" << alpha << ")";
  return os.str();
}

json report_json(const MeasureReport& r) {
  json j;
  j["dim"] = r.n;
  j["entropy"] = {{"von_neumann", r.entropy.von_neumann},
                  {"renyi", r.entropy.renyi},
                  {"tsallis", r.entropy.tsallis},
                  {"q", r.q},
                  {"brukner_zeilinger", r.entropy.brukner_zeilinger},
                  {"purity", r.entropy.purity}};
  j["luo"] = r.luo;
  j["q_star"] = r.q_star;
  j["q_alpha"] = json::array();
  for (const auto& [a, v] : r.q_alpha) j["q_alpha"].push_back({{"alpha", a}, {"value", v}});
  if (r.observable) {
    json o;
    o["variance"] = r.observable->variance;
    o["wyd"] = json::array();
    for (const auto& [a, v] : r.observable->wyd) o["wyd"].push_back({{"alpha", a}, {"value", v}});
    j["observable"] = o;
  }
  return j;
}

void check_alphas(const std::vector<double>& alphas) {
  if (alphas.empty()) throw InvalidArgument("--alpha: at least one value required");
  for (double a : alphas) AlphaParameter{a};
}

const char* kFig1Script = R"(set datafile separator ','
set key off
set xlabel 'alpha'
set ylabel 'lambda'
set zlabel 'Q_alpha'
set xrange [0:1]
set yrange [0.25:1]
set zrange [0:3]
set hidden3d
set dgrid3d 51,99
splot 'fig1.csv' using 2:1:3 every ::1 with lines
)";

const char* kFig2Script = R"(set datafile separator ','
set xlabel 'lambda'
set ylabel 'normalized measure'
set xrange [0.25:1]
set yrange [0:1]
set key top left
plot 'fig2.csv' using 1:2 every ::1 with lines title '(a) I_BZ', \
     '' using 1:3 every ::1 with lines title '(b) Q_{1/2}/3', \
     '' using 1:4 every ::1 with lines title '(c) Q_{1/3}/3', \
     '' using 1:5 every ::1 with lines title '(d) Q*/3'
)";

const char* kFig3Script = R"(set datafile separator ','
set datafile missing 'degenerate'
set key off
set xlabel 'lambda'
set ylabel 'alpha_c'
set xrange [0.25:1]
set yrange [0:0.5]
plot 'fig3.csv' using 1:2 every ::1 with linespoints
)";

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int cmd_measure(const MeasureConfig& config, std::ostream& out) {
  check_alphas(config.alphas);
  const DensityMatrix rho = load_state(config.state);
  std::optional<Observable> x;
  if (config.observable) x = load_observable(*config.observable);

  const MeasureReport r = measure_report(rho, config.alphas, config.q, x ? &*x : nullptr);

  out << "state " << config.state.filename().string() << " (n = " << r.n << ")\n";
  out << row("S", r.entropy.von_neumann);
  out << row(alpha_label("S_renyi", r.q), r.entropy.renyi);
  out << row(alpha_label("S_tsallis", r.q), r.entropy.tsallis);
  out << row("I_BZ", r.entropy.brukner_zeilinger);
  out << row("purity", r.entropy.purity);
  out << row("L", r.luo);
  out << row("Q*", r.q_star);
  for (const auto& [a, v] : r.q_alpha) out << row(alpha_label("Q", a), v);
  if (r.observable) {
    out << row("V", r.observable->variance);
    for (const auto& [a, v] : r.observable->wyd) out << row(alpha_label("I", a), v);
  }

  json j = report_json(r);
  j["state"] = config.state.filename().string();
  if (config.observable) j["observable_file"] = config.observable->filename().string();
  const auto path = config.out_dir / (config.state.stem().string() + ".measure.json");
  write_text(path, j.dump(2) + "\n");
  out << "wrote " << path.string() << "\n";
  return kOk;
}

int cmd_hansen(std::ostream& out) {
  const DensityMatrix rho = hansen();
  const double s = entropies(rho).von_neumann;
  const double l = luo_uncertainty(rho);
  const double q = q_alpha(rho, 0.25);
  const double qs = q_star(rho);

  out << "Hansen state rho*/26, eigenvalues";
  for (Eigen::Index i = 0; i < rho.dim(); ++i) out << " " << format_real(rho.eigenvalues()(i));
  out << "\n\n";
  out << "  " << std::left << std::setw(10) << "measure" << std::right << std::setw(22) << "computed"
      << std::setw(10) << "printed" << std::setw(14) << "|diff|" << "  status\n";

  bool ok = true;
  const auto line = [&](const char* name, double computed, double printed, bool gated) {
    const double diff = std::abs(computed - printed);
    const char* status = "info";
    if (gated) {
      status = diff <= kHansenTolerance ? "ok" : "MISMATCH";
      ok = ok && diff <= kHansenTolerance;
    }
    std::ostringstream p;
    p << printed;
    char d[32];
    std::snprintf(d, sizeof d, "%.3e", diff);
    out << "  " << std::left << std::setw(10) << name << std::right << std::setw(22)
        << format_real(computed) << std::setw(10) << p.str() << std::setw(14) << d << "  " << status
        << "\n";
  };
  line("L", l, kPrintedL, true);
  line("Q_1/4", q, kPrintedQQuarter, true);
  line("Q*", qs, kPrintedQStar, true);
  line("S", s, kPrintedS, false);
  out << "\nnote: S is -sum l ln l over the eigenvalues above; the printed 0.60319 does not\n"
         "follow from them in any common log base and is not used as a target.\n";
  return ok ? kOk : kCheckFailed;
}

int cmd_werner_scan(const ScanConfig& c, std::ostream& out) {
  if (c.lambda_steps < 2 || c.alpha_steps < 2) throw InvalidArgument("grid resolutions must be >= 2");
  if (!(0.0 <= c.lambda_min && c.lambda_min < c.lambda_max && c.lambda_max <= 1.0))
    throw InvalidArgument("lambda range must satisfy 0 <= min < max <= 1");
  if (!(0.0 < c.alpha_min && c.alpha_min < c.alpha_max && c.alpha_max < 1.0))
    throw InvalidArgument("alpha range must satisfy 0 < min < max < 1");
  if (!(c.tol > 0.0)) throw InvalidArgument("tolerance must be positive");

  const std::vector<double> lambdas = linspace(c.lambda_min, c.lambda_max, c.lambda_steps);
  const std::vector<double> alphas = linspace(c.alpha_min, c.alpha_max, c.alpha_steps);
  const double norm = 3.0;  // n - 1 for two qubits

  std::ostringstream f1, f2, f3;
  f1 << "lambda,alpha,Q_alpha\n";
  f2 << "lambda,I_BZ,Q_half_norm,Q_third_norm,Q_star_norm\n";
  f3 << "lambda,alpha_c\n";

  int degenerate = 0;
  double lo = 1.0, hi = 0.0;
  for (double lambda : lambdas) {
    const DensityMatrix rho = werner(lambda);
    const RealVector& l = rho.eigenvalues();
    for (double a : alphas) {
      f1 << format_real(lambda) << ',' << format_real(a) << ',' << format_real(q_alpha(l, a)) << '\n';
    }
    f2 << format_real(lambda) << ',' << format_real(entropies(rho).brukner_zeilinger) << ','
       << format_real(q_alpha(l, 0.5) / norm) << ',' << format_real(q_alpha(l, 1.0 / 3.0) / norm) << ','
       << format_real(q_star(l) / norm) << '\n';

    const CriticalAlpha ca = critical_alpha(rho, c.tol);
    f3 << format_real(lambda) << ',';
    if (ca.degenerate()) {
      f3 << "degenerate\n";
      ++degenerate;
    } else {
      f3 << format_real(*ca.alpha) << '\n';
      lo = std::min(lo, *ca.alpha);
      hi = std::max(hi, *ca.alpha);
    }
  }

  write_text(c.out_dir / "fig1.csv", f1.str());
  write_text(c.out_dir / "fig2.csv", f2.str());
  write_text(c.out_dir / "fig3.csv", f3.str());
  write_text(c.out_dir / "fig1.gp", kFig1Script);
  write_text(c.out_dir / "fig2.gp", kFig2Script);
  write_text(c.out_dir / "fig3.gp", kFig3Script);

  out << "werner scan: " << lambdas.size() << " lambda x " << alphas.size() << " alpha\n";
  out << "  degenerate alpha_c: " << degenerate << "\n";
  if (hi >= lo) out << "  alpha_c range: [" << format_real(lo) << ", " << format_real(hi) << "]\n";
  out << "wrote fig1.csv fig2.csv fig3.csv and plot scripts to " << c.out_dir.string() << "\n";
  return kOk;
}

VerifyInputs build_verify_inputs(const VerifyConfig& c) {
  VerifyInputs in;
  for (int n : c.dims) {
    std::seed_seq seq{c.seed, static_cast<std::uint64_t>(n)};
    Rng rng(seq);
    for (int s = 0; s < c.samples; ++s) {
      if (n > 1 && s % 10 == 9) {
        const Eigen::Index rank = 1 + (s / 10) % (n - 1);
        in.states.push_back(random_density_of_rank(n, rank, rng));
        in.labels.push_back("rank" + std::to_string(rank) + "_n" + std::to_string(n));
      } else {
        in.states.push_back(random_ginibre_density(n, rng));
        in.labels.push_back("ginibre_n" + std::to_string(n));
      }
      in.observables.push_back(random_observable(n, rng));
    }
  }
  for (int k = 0; k <= 20; ++k) {
    in.states.push_back(werner(k / 20.0));
    in.labels.push_back("werner_" + format_real(k / 20.0));
  }
  in.states.push_back(hansen());
  in.labels.push_back("hansen");
  std::seed_seq seq{c.seed, std::uint64_t{0}};
  Rng rng(seq);
  for (int n : c.dims) {
    in.states.push_back(pure(random_state_vector(n, rng)));
    in.labels.push_back("pure_n" + std::to_string(n));
    in.states.push_back(maximally_mixed(n));
    in.labels.push_back("mixed_n" + std::to_string(n));
  }
  return in;
}

int cmd_verify(const VerifyConfig& c, std::ostream& out) {
  if (c.samples < 1) throw InvalidArgument("--samples must be >= 1");
  if (c.dims.empty()) throw InvalidArgument("--dims: at least one dimension required");
  for (int n : c.dims)
    if (n < 1) throw InvalidArgument("--dims: dimensions must be >= 1");
  if (!(c.tol > 0.0)) throw InvalidArgument("--tol must be positive");
  check_alphas(c.alphas);

  const VerifyInputs in = build_verify_inputs(c);
  PropertyConfig pc;
  pc.tol = c.tol;
  pc.seed = c.seed;
  const PropertyLedger ledger = check_properties(in.states, in.observables, c.alphas, pc);

  // fixtures
  const double werner_half = q_alpha(werner(0.5), 0.5);
  const bool werner_ok = std::abs(werner_half - kWernerHalfFixture) <= 5e-6;
  double worst_luo = 0.0;
  for (const DensityMatrix& rho : in.states)
    worst_luo = std::max(worst_luo, std::abs(q_alpha(rho, 0.5) - luo_uncertainty(rho)));
  const bool luo_ok = worst_luo <= 1e-10;

  out << "verify: seed " << c.seed << ", " << in.states.size() << " states, " << c.alphas.size()
      << " alphas, tol " << c.tol << "\n\n";
  out << "  " << std::left << std::setw(40) << "property" << std::right << std::setw(9) << "checks"
      << std::setw(9) << "failed" << std::setw(14) << "worst slack" << "\n";
  json props = json::array();
  for (const PropertyTally& t : ledger.tallies()) {
    char slack[32];
    std::snprintf(slack, sizeof slack, "%.3e", t.worst_slack);
    out << "  " << std::left << std::setw(40) << t.name << std::right << std::setw(9) << t.checks
        << std::setw(9) << t.failures << std::setw(14) << slack << "\n";
    props.push_back({{"name", t.name},
                     {"description", t.description},
                     {"checks", t.checks},
                     {"failures", t.failures},
                     {"worst_slack", t.worst_slack},
                     {"worst_value", t.worst_value},
                     {"worst_sample", t.worst_sample},
                     {"worst_label", in.labels.at(t.worst_sample)}});
  }
  out << "\n  fixture werner(1/2) Q_1/2 = " << format_real(werner_half) << " (expect "
      << kWernerHalfFixture << ")  " << (werner_ok ? "ok" : "FAIL") << "\n";
  char d[32];
  std::snprintf(d, sizeof d, "%.3e", worst_luo);
  out << "  fixture max |Q_1/2 - L| = " << d << "  " << (luo_ok ? "ok" : "FAIL") << "\n";

  json failures = json::array();
  for (const PropertyFailure& f : ledger.failures()) {
    failures.push_back({{"property", f.property},
                        {"sample", f.sample},
                        {"label", in.labels.at(f.sample)},
                        {"alpha", f.alpha},
                        {"slack", f.slack}});
    out << "  FAIL " << f.property << " [" << in.labels.at(f.sample) << " #" << f.sample
        << "] alpha " << f.alpha << " slack " << f.slack << "\n";
  }

  json j;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["dims"] = c.dims;
  j["alphas"] = c.alphas;
  j["tol"] = c.tol;
  j["states"] = in.states.size();
  j["total_checks"] = ledger.total_checks();
  j["total_failures"] = ledger.total_failures();
  j["properties"] = props;
  j["fixtures"] = {{{"name", "werner_half_q_half"}, {"value", werner_half}, {"passed", werner_ok}},
                   {{"name", "q_half_equals_luo"}, {"value", worst_luo}, {"passed", luo_ok}}};
  j["failures"] = failures;
  const auto path = c.out_dir / "verify.json";
  write_text(path, j.dump(2) + "\n");

  const bool ok = ledger.all_passed() && werner_ok && luo_ok;
  out << "\n" << ledger.total_checks() << " checks, " << ledger.total_failures() << " failures: "
      << (ok ? "PASS" : "FAIL") << "\nwrote " << path.string() << "\n";
  return ok ? kOk : kCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum uncertainty measures for finite-dimensional density matrices", "qumetrics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qumetrics 1.0.0");

  std::string out_dir;
  MeasureConfig mc;
  std::string state, observable;
  auto* measure = app.add_subcommand("measure", "Compute every measure for a state file");
  measure->add_option("--state", state, "State JSON file")->required();
  measure->add_option("--observable", observable, "Observable JSON file");
  measure->add_option("--alpha", mc.alphas, "Comma-separated alpha values in (0,1)")->delimiter(',');
  measure->add_option("--q", mc.q, "Renyi/Tsallis order");
  auto* measure_out = measure->add_option("--out", out_dir, "Output directory");

  auto* hansen_cmd = app.add_subcommand("hansen", "Reproduce Hansen's example");

  ScanConfig sc;
  auto* scan = app.add_subcommand("werner-scan", "Sweep the Werner family into CSV datasets");
  scan->add_option("--lambda-steps", sc.lambda_steps, "Number of lambda grid points");
  scan->add_option("--alpha-steps", sc.alpha_steps, "Number of alpha grid points");
  scan->add_option("--lambda-min", sc.lambda_min);
  scan->add_option("--lambda-max", sc.lambda_max);
  scan->add_option("--alpha-min", sc.alpha_min);
  scan->add_option("--alpha-max", sc.alpha_max);
  scan->add_option("--tol", sc.tol, "Critical-alpha residual tolerance");
  auto* scan_out = scan->add_option("--out", out_dir, "Output directory");

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--seed", vc.seed);
  verify->add_option("--samples", vc.samples, "Random states per dimension");
  verify->add_option("--dims", vc.dims, "Comma-separated dimensions")->delimiter(',');
  verify->add_option("--alpha", vc.alphas, "Comma-separated alpha values in (0,1)")->delimiter(',');
  verify->add_option("--tol", vc.tol);
  auto* verify_out = verify->add_option("--out", out_dir, "Output directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto resolve_out = [&](const CLI::Option* opt) -> std::filesystem::path {
    if (opt->count() > 0) return out_dir;
    if (const char* env = std::getenv("QUMETRICS_OUT"); env != nullptr && *env != '\0') return env;
    return "out";
  };

  try {
    if (measure->parsed()) {
      mc.state = state;
      if (!observable.empty()) mc.observable = observable;
      mc.out_dir = resolve_out(measure_out);
      return cmd_measure(mc, out);
    }
    if (hansen_cmd->parsed()) return cmd_hansen(out);
    if (scan->parsed()) {
      sc.out_dir = resolve_out(scan_out);
      return cmd_werner_scan(sc, out);
    }
    vc.out_dir = resolve_out(verify_out);
    return cmd_verify(vc, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace qumetrics::cli
