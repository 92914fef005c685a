#include "mzcorr/output.hpp"

#include <ostream>

#include "mzcorr/numeric.hpp"

namespace mzcorr {

void write_curve_csv(std::ostream& out, const CorrelationCurve& curve) {
  out << "phi,i_a_mean,i_b_mean,r_mean,g2\n";
  for (const CurvePoint& p : curve.points) {
    out << format_number(p.phi) << ',' << format_number(p.i_a_mean) << ',' << format_number(p.i_b_mean) << ','
        << format_number(p.r_mean) << ',';
    if (p.g2) out << format_number(*p.g2);
    out << '\n';
  }
}

nlohmann::ordered_json curve_to_json(const CorrelationCurve& curve, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["config"] = to_json(cfg);
  j["provenance"] = to_string(curve.provenance);
  j["normalization"] = to_string(curve.mode);
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const CurvePoint& p : curve.points) {
    nlohmann::ordered_json row;
    row["phi"] = p.phi;
    row["i_a_mean"] = p.i_a_mean;
    row["i_b_mean"] = p.i_b_mean;
    row["r_mean"] = p.r_mean;
    row["g2"] = p.g2 ? nlohmann::ordered_json(*p.g2) : nlohmann::ordered_json(nullptr);
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  return j;
}

void write_curve_gnuplot(std::ostream& out, const CorrelationCurve& curve) {
  out << "# phi g2 (" << to_string(curve.mode) << ", " << to_string(curve.provenance) << ")\n";
  out << "# set datafile missing \"?\"\n";
  for (const CurvePoint& p : curve.points) {
    out << format_number(p.phi) << ' ' << (p.g2 ? format_number(*p.g2) : std::string("?")) << '\n';
  }
}

nlohmann::ordered_json audit_to_json(const AuditReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const AuditRecord& r : report.records) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["max_abs_discrepancy"] = r.max_abs_discrepancy;
    c["at"] = {{"phi", r.phi}, {"zeta", r.zeta}};
    if (r.ratio) c["ratio"] = *r.ratio;
    checks.push_back(std::move(c));
  }
  return checks;
}

std::string metadata_path(const std::string& output_path) { return output_path + ".meta.toml"; }

}  // namespace mzcorr
