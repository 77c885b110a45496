#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qent/aep.hpp"
#include "qent/state.hpp"

namespace qent {

// State schema: {"dims":[dA,dB,...],
//                "matrix":[[[re,im],...],...]}  (row-major).
nlohmann::json state_to_json(const DensityOperator& rho);
DensityOperator state_from_json(const nlohmann::json& j);

DensityOperator read_state_json(const std::string& path);
void write_state_json(const std::string& path, const DensityOperator& rho);

// CSV schema: header n,epsilon,eta,h_vn,bound,gap,valid with '.' decimals
// regardless of locale.
void write_aep_csv(std::ostream& os, const std::vector<AepBoundRow>& rows);

// Locale-free shortest-round-trip decimal rendering of a double
// (inf/-inf/nan spelled out).
std::string format_real(double v);

}  // namespace qent
