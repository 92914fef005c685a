#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mzcorr/modulation.hpp"

namespace mzcorr {

/// Output intensities (I_A, I_B) in units of I0.
struct IntensityPair {
  double i_a = 0.0;
  double i_b = 0.0;
};

/// paper:   g2 with the extra 1/2 prefactor of the published closed form.
/// derived: <I_A I_B> / (<I_A><I_B>) straight from the ensemble definition.
enum class NormalizationMode { paper, derived };

enum class Provenance { closed, ensemble, dephased };

enum class Engine { closed_form, matrix };

std::string_view to_string(NormalizationMode mode);
std::string_view to_string(Provenance p);
std::string_view to_string(Engine engine);
NormalizationMode parse_normalization(std::string_view text);
Engine parse_engine(std::string_view text);

/// Denominators <I_A><I_B> at or below this (in I0^2) leave g2 undefined.
inline constexpr double kUndefinedDenominator = 1e-20;

struct CurvePoint {
  double phi = 0.0;
  double i_a_mean = 0.0;
  double i_b_mean = 0.0;
  double r_mean = 0.0;          // normalized intensity product 4<I_A I_B>/I0^2
  std::optional<double> g2;     // empty where <I_A><I_B> vanishes
};

struct CorrelationCurve {
  std::vector<CurvePoint> points;
  NormalizationMode mode = NormalizationMode::paper;
  Provenance provenance = Provenance::closed;

  std::vector<double> phi() const;
  /// max - min over defined g2 values; 0 when fewer than one is defined.
  double modulation_depth() const;
};

class EmptyGridError : public std::invalid_argument {
 public:
  EmptyGridError() : std::invalid_argument("phi grid is empty") {}
};

/// I_A = (I0/2)[1 - sin(phi) sin(branch.phase)], I_B = (I0/2)[1 + sin(phi) sin(branch.phase)].
/// The branch carries the sign: zeta' = -zeta flips the modulation.
IntensityPair intensities_closed(double phi, const BasisBranch& branch, double i0 = 1.0);

/// Normalized product R = 1 - sin^2(phi) sin^2(branch.phase); identical for both branches.
double intensity_product(double phi, const BasisBranch& branch);

/// Intensities at the two output ports of the hadamard MZI for one segment.
IntensityPair intensities_matrix(double phi, const PulseSegment& segment, double i0 = 1.0);

/// Quadrature-condition curve. paper: 1/2 (1 - sin^2 phi); derived: 1 - sin^2 phi.
CorrelationCurve g2_closed(std::span<const double> phi_grid, NormalizationMode mode);

/// Segment-averaged curve: each of <I_A>, <I_B>, <I_A I_B> is the arithmetic
/// mean over segments at every phi.
CorrelationCurve g2_ensemble(const PulseSequence& seq, std::span<const double> phi_grid, Engine engine,
                             NormalizationMode mode);

/// g2 from the three ensemble means, per normalization. Empty when undefined.
std::optional<double> g2_from_means(double i_a_mean, double i_b_mean, double product_mean, NormalizationMode mode);

}  // namespace mzcorr
