#pragma once

#include <string>
#include <vector>

#include "analysis.hpp"
#include "isotropy.hpp"
#include "kinetostatics.hpp"

namespace prr::io {

/// Shortest text keeping 17 significant digits; "nan" for NaN.
std::string fmt(double v);

std::string config_json(const Configuration& config);
std::string matrices_json(const KinetostaticMatrices& mat);
std::string isotropy_json(const Configuration& config, const IsotropyReport& rep);

/// ScalarField CSV: one '#' comment line with JSON metadata, a header row,
/// then "x,y,kappa,theta_star" rows in row-major order (y outer).
std::string field_to_csv(const ScalarField& field);
ScalarField field_from_csv(const std::string& text);

std::string contours_to_csv(const ContourSet& contours);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string mask_to_csv(const GridSpec& grid, const std::vector<std::uint8_t>& mask);

}  // namespace prr::io
