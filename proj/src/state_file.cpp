#include "qumetrics/state_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qumetrics/error.hpp"

namespace qumetrics {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& detail) {
  throw ValidationError(Violation::kMalformed, 0.0, detail);
}

}  // namespace

ComplexMatrix StateFile::to_matrix() const {
  if (dim < 1) malformed("field 'dim' must be a positive integer");
  if (static_cast<Eigen::Index>(entries.size()) != dim * dim) {
    std::ostringstream os;
    os << "field 'entries' has " << entries.size() << " values, expected " << dim * dim;
    malformed(os.str());
  }
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index k = 0; k < dim; ++k) m(i, k) = entries[static_cast<std::size_t>(i * dim + k)];
  return m;
}

StateFile StateFile::from_matrix(const ComplexMatrix& m, std::string label) {
  if (m.rows() != m.cols()) throw DimensionMismatch("StateFile: matrix must be square");
  StateFile f;
  f.dim = m.rows();
  f.label = std::move(label);
  f.entries.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) f.entries.push_back(m(i, k));
  return f;
}

StateFile parse_state_file(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");

  StateFile f;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    malformed("field 'dim' must be a positive integer");
  }
  f.dim = doc["dim"].get<Eigen::Index>();
  if (f.dim < 1) malformed("field 'dim' must be a positive integer");

  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    malformed("field 'entries' must be an array of [re, im] pairs");
  }
  const auto& entries = doc["entries"];
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const auto& e = entries[j];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      malformed("entries[" + std::to_string(j) + "] must be a [re, im] pair of numbers");
    }
    f.entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  if (static_cast<Eigen::Index>(f.entries.size()) != f.dim * f.dim) {
    std::ostringstream os;
    os << "field 'entries' has " << f.entries.size() << " values, expected " << f.dim * f.dim;
    malformed(os.str());
  }

  if (doc.contains("label")) {
    if (!doc["label"].is_string()) malformed("field 'label' must be a string");
    f.label = doc["label"].get<std::string>();
  }
  return f;
}

std::string serialize_state_file(const StateFile& file) {
  json entries = json::array();
  for (const auto& z : file.entries) entries.push_back({z.real(), z.imag()});
  json doc = {{"dim", file.dim}, {"entries", std::move(entries)}, {"label", file.label}};
  return doc.dump(2) + "\n";
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_file(buffer.str());
}

void write_state_file(const std::filesystem::path& path, const StateFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << serialize_state_file(file);
}

DensityMatrix load_state(const std::filesystem::path& path) {
  return validate(HermitianMatrix::from_matrix(read_state_file(path).to_matrix()));
}

Observable load_observable(const std::filesystem::path& path) {
  return Observable(HermitianMatrix::from_matrix(read_state_file(path).to_matrix()));
}

}  // namespace qumetrics
