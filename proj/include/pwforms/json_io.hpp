#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pwforms/lie_algebra.hpp"
#include "pwforms/mayer_vietoris.hpp"
#include "pwforms/simplicial.hpp"

namespace pwf {

using Json = nlohmann::json;

// {"top_simplices": [[0,1,2], ...]}
SimplicialComplex complex_from_json(const Json& j);
SimplicialComplex load_complex(const std::string& path);

// {"dim": m, "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}, ...]},
// pairs omitted => zero bracket, scalars as "p/q" strings.
LieAlgebra lie_algebra_from_json(const Json& j);
LieAlgebra load_lie_algebra(const std::string& path);

// {"K1": [[...], ...], "K2": [[...], ...]} listing top simplices per piece.
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> cover_from_json(const Json& j);
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> load_cover(const std::string& path);

Json betti_to_json(const BettiTable& b);
Json mv_report_to_json(const MVReport& r);
std::string mv_report_to_table(const MVReport& r);

} // namespace pwf
