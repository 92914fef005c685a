#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzcorr/numeric.hpp"

namespace mzcorr {

/// Evaluation grid for the cross-layer checks: phi outer, zeta inner.
struct AuditGrid {
  double phi_min = -kPi;
  double phi_max = kPi;
  std::size_t phi_steps = 101;
  double zeta_min = 0.0;
  double zeta_max = kPi;
  std::size_t zeta_steps = 101;
};

struct AuditRecord {
  std::string name;
  double max_abs_discrepancy = 0.0;
  double phi = 0.0;
  double zeta = 0.0;
  std::optional<double> ratio;  // only for the normalization ratio check
};

struct AuditReport {
  std::vector<AuditRecord> records;

  /// nullptr when absent.
  const AuditRecord* find(std::string_view name) const;
};

namespace audit_check {
/// |E_A|^2 from the field relation with zeta' = -zeta vs I_A from the intensity relation.
inline constexpr std::string_view kFieldVsIntensity = "field_vs_intensity";
/// Hadamard matrix engine (basis phase on port 1) vs the closed-form intensities.
inline constexpr std::string_view kMatrixVsClosed = "matrix_engine_vs_closed_intensity";
/// |I1 + I2 - I0| of the first-stage cosine relations.
inline constexpr std::string_view kStage1Energy = "stage1_energy_defect";
/// |g2_paper / g2_derived - 1/2| at quadrature, over points where both are defined.
inline constexpr std::string_view kNormalizationRatio = "g2_paper_to_derived_ratio";
/// |I_A|^2 + |I_B|^2 - I0 from the field relations with independent zeta, zeta'.
inline constexpr std::string_view kFieldEnergy = "field_relation_energy";
/// Two-segment <I_A>: matrix engine with alternating ports vs closed form.
inline constexpr std::string_view kPortLayout = "ensemble_mean_port_layout";
}  // namespace audit_check

/// Runs every check once over the grid. Discrepancies are findings, not errors.
AuditReport audit_consistency(const AuditGrid& grid = {});

}  // namespace mzcorr
