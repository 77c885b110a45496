#include "qent/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qent {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::json state_to_json(const DensityOperator& rho) {
  nlohmann::json j;
  j["dims"] = nlohmann::json::array();
  for (Index d : rho.dims()) j["dims"].push_back(d);
  nlohmann::json rows = nlohmann::json::array();
  const Matrix& m = rho.matrix().mat();
  for (Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

DensityOperator state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    throw InvalidInput("state JSON must carry 'dims' and 'matrix'");
  }
  std::vector<Index> dims;
  for (const auto& d : j.at("dims")) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      throw InvalidInput("state JSON: dims must be positive integers");
    }
    dims.push_back(d.get<Index>());
  }
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || rows.empty()) {
    throw InvalidInput("state JSON: matrix must be a nonempty array");
  }
  const Index n = static_cast<Index>(rows.size());
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const auto& row = rows.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw InvalidInput("state JSON: matrix must be square");
    }
    for (Index c = 0; c < n; ++c) {
      const auto& e = row.at(static_cast<std::size_t>(c));
      if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() ||
          !e.at(1).is_number()) {
        throw InvalidInput("state JSON: entries must be [re, im] pairs");
      }
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return DensityOperator(HermitianMatrix(m), std::move(dims));
}

DensityOperator read_state_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("state JSON parse error: ") + e.what());
  }
  return state_from_json(j);
}

void write_state_json(const std::string& path, const DensityOperator& rho) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write state file: " + path);
  out << state_to_json(rho).dump(2) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

void write_aep_csv(std::ostream& os, const std::vector<AepBoundRow>& rows) {
  os << "n,epsilon,eta,h_vn,bound,gap,valid\n";
  for (const AepBoundRow& r : rows) {
    os << r.n << ',' << format_real(r.epsilon) << ',' << format_real(r.eta)
       << ',' << format_real(r.h_vn) << ',' << format_real(r.bound) << ','
       << format_real(r.gap) << ',' << (r.valid ? 1 : 0) << "\n";
  }
}

}  // namespace qent
