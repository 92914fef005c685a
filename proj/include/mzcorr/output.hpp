#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "mzcorr/audit.hpp"
#include "mzcorr/config.hpp"
#include "mzcorr/correlation.hpp"

namespace mzcorr {

/// Header phi,i_a_mean,i_b_mean,r_mean,g2; undefined g2 is an empty cell.
void write_curve_csv(std::ostream& out, const CorrelationCurve& curve);

nlohmann::ordered_json curve_to_json(const CorrelationCurve& curve, const RunConfig& cfg);

/// Two columns "phi g2"; undefined points are written as '?'.
void write_curve_gnuplot(std::ostream& out, const CorrelationCurve& curve);

/// One object per check: {name, max_abs_discrepancy, at: {phi, zeta}}.
nlohmann::ordered_json audit_to_json(const AuditReport& report);

/// Sidecar path holding the TOML config echo of a CSV output.
std::string metadata_path(const std::string& output_path);

}  // namespace mzcorr
