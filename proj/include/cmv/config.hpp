#pragma once

#include <string>
#include <vector>

#include "cmv/cm_fields.hpp"

namespace cmv {

/// Batch run description. Parsed from a flat `key = value` file with `#`
/// comments; see README for the schema.
struct RunConfig {
    TowerConfig tower;
    std::vector<std::pair<long long, long long>> alphas;  // explicit coordinates
    long long alpha_bound = 0;                            // or a grid bound
    std::vector<double> y{1.0};
    double tolerance = 1e-9;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Expands the alpha grid for the tower: the explicit list, or for
/// alpha_bound B all a in +-1..+-B (degree 1) resp. all a + b*omega with
/// |a|,|b| <= B, nonzero (degree 2).
std::vector<ElementF> expand_alphas(const FieldTower& tower, const RunConfig& cfg);

} // namespace cmv
