#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qumetrics/matrix.hpp"
#include "qumetrics/observables.hpp"
#include "qumetrics/states.hpp"

namespace qumetrics {

/// On-disk matrix description shared by states and observables:
///
///   {"dim": 2, "entries": [[0.5, 0], [0, 0], [0, 0], [0.5, 0]], "label": "..."}
///
/// `entries` holds dim * dim [re, im] pairs in row-major order. Doubles are written with
/// round-trip precision.
struct StateFile {
  Eigen::Index dim = 0;
  std::vector<Complex> entries;
  std::string label;

  ComplexMatrix to_matrix() const;
  static StateFile from_matrix(const ComplexMatrix& m, std::string label = {});
};

/// Throws ValidationError(kMalformed) naming the offending field.
StateFile parse_state_file(const std::string& json_text);
std::string serialize_state_file(const StateFile& file);

StateFile read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const StateFile& file);

/// Full density-matrix validation.
DensityMatrix load_state(const std::filesystem::path& path);
/// Hermiticity only.
Observable load_observable(const std::filesystem::path& path);

}  // namespace qumetrics
