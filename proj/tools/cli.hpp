#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qumetrics/observables.hpp"
#include "qumetrics/properties.hpp"
#include "qumetrics/states.hpp"

namespace qumetrics::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kCheckFailed = 3,
};

struct MeasureConfig {
  std::filesystem::path state;
  std::optional<std::filesystem::path> observable;
  std::vector<double> alphas = {0.25, 0.5, 0.75};
  double q = 2.0;
  std::filesystem::path out_dir = "out";
};

struct ScanConfig {
  int lambda_steps = 51;
  int alpha_steps = 99;
  double lambda_min = 0.25;
  double lambda_max = 1.0;
  double alpha_min = 0.01;
  double alpha_max = 0.99;
  double tol = 1e-10;  // critical-alpha residual
  std::filesystem::path out_dir = "out";
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int samples = 200;
  std::vector<int> dims = {2, 3, 4, 6};
  std::vector<double> alphas = {0.01, 0.1, 0.25, 1.0 / 3.0, 0.5, 0.75, 0.9, 0.99};
  double tol = 1e-8;
  std::filesystem::path out_dir = "out";
};

/// Seeded inputs for the property suite: `samples` random states and observables per
/// dimension, followed by the named states (Werner grid, Hansen, pure, maximally mixed).
struct VerifyInputs {
  std::vector<DensityMatrix> states;
  std::vector<std::string> labels;
  std::vector<Observable> observables;
};

VerifyInputs build_verify_inputs(const VerifyConfig& config);

int cmd_measure(const MeasureConfig& config, std::ostream& out);
int cmd_hansen(std::ostream& out);
int cmd_werner_scan(const ScanConfig& config, std::ostream& out);
int cmd_verify(const VerifyConfig& config, std::ostream& out);

/// Parses `args` (without the program name) and dispatches. Never throws; library
/// errors are reported on `err` and mapped to an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, enough to read back the same double.
std::string format_real(double x);

}  // namespace qumetrics::cli
