// Copyright 2026 The qobjectivity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <fstream>

#include "qobj/harness.hpp"

namespace qobj::harness {

json state_to_json(const StateFile& file) {
  const CMatrix& m = file.state.matrix();
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
  json doc;
  doc["dims"] = file.state.dims();
  doc["entries"] = std::move(entries);
  doc["system_index"] = file.system_index;
  doc["provenance"] = file.provenance;
  if (!file.declared_checks.empty()) doc["declared_checks"] = file.declared_checks;
  return doc;
}

StateFile state_from_json(const json& doc) {
  if (!doc.is_object()) throw ValidationError("state file: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dims" && key != "entries" && key != "system_index" && key != "provenance" && key != "declared_checks")
      throw ValidationError("state file: unknown key '" + key + "'");
  }
  if (!doc.contains("dims") || !doc.contains("entries")) throw ValidationError("state file: 'dims' and 'entries' are required");

  Dims dims;
  try {
    dims = doc.at("dims").get<Dims>();
  } catch (const json::exception&) {
    throw ValidationError("state file: 'dims' must be a list of positive integers");
  }
  if (dims.empty()) throw ValidationError("state file: 'dims' is empty");
  std::size_t d = 0;
  try {
    d = total_dimension(dims);
  } catch (const Error& e) {
    throw ValidationError(std::string("state file: ") + e.what());
  }
  if (d > kMaxTotalDim) throw DimensionGuardError(d, kMaxTotalDim, "state file");

  const json& entries = doc.at("entries");
  if (!entries.is_array() || entries.size() != d * d)
    throw ValidationError("state file: 'entries' must hold product(dims)^2 = " + std::to_string(d * d) + " [re, im] pairs");
  CMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d * d; ++i) {
    const json& e = entries[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ValidationError("state file: entry " + std::to_string(i) + " is not a [re, im] pair");
    m(static_cast<Eigen::Index>(i / d), static_cast<Eigen::Index>(i % d)) = cplx(e[0].get<double>(), e[1].get<double>());
  }

  std::size_t system_index = 0;
  if (doc.contains("system_index")) {
    if (!doc.at("system_index").is_number_unsigned()) throw ValidationError("state file: bad 'system_index'");
    system_index = doc.at("system_index").get<std::size_t>();
  }
  if (system_index >= dims.size()) throw ValidationError("state file: 'system_index' out of range");

  StateFile file{DensityMatrix(std::move(m), std::move(dims)), system_index, json::object(), json::object()};
  if (doc.contains("provenance")) file.provenance = doc.at("provenance");
  if (doc.contains("declared_checks")) file.declared_checks = doc.at("declared_checks");
  return file;
}

StateFile read_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open state file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("state file " + path.string() + " is not valid JSON: " + e.what());
  }
  return state_from_json(doc);
}

void write_state(const std::filesystem::path& path, const StateFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << state_to_json(file).dump() << "\n";
}

}  // namespace qobj::harness
