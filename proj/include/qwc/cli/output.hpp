#pragma once

#include <ostream>
#include <string>

#include "qwc/cli/config.hpp"
#include "qwc/observables.hpp"
#include "qwc/thermo.hpp"

namespace qwc::cli {

/// 17 significant digits; `inf` / `-inf` / `nan` for non-finite values.
std::string format_real(double x);

/// Header `v,pi_v`, N rows. Re-validates the distribution before writing.
void write_distribution(std::ostream& os, const Distribution& d, OutputFormat fmt);

/// Header `row,col,re,im`, 4 rows.
void write_reduced_density(std::ostream& os, const ReducedDensity& rho, OutputFormat fmt);

/// Header `lambda1,lambda2,temperature`, 1 row.
void write_temperature(std::ostream& os, const thermo::TemperatureResult& t, OutputFormat fmt);

/// Header `<axis1>,<axis2>,ratio`, row-major.
void write_scan(std::ostream& os, const thermo::ScanGrid& g, OutputFormat fmt);

}  // namespace qwc::cli
