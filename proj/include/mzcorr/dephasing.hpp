#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mzcorr/correlation.hpp"
#include "mzcorr/numeric.hpp"

namespace mzcorr {

enum class SpectrumKind { delta, gaussian };

/// Source spectrum: detuning delta ~ N(0, sigma^2) (rad/s) or a single line.
struct SpectrumModel {
  SpectrumKind kind = SpectrumKind::delta;
  double sigma = 0.0;
  std::size_t quadrature_points = 61;

  static SpectrumModel line() { return {}; }
  static SpectrumModel gaussian(double sigma, std::size_t points = 61) { return {SpectrumKind::gaussian, sigma, points}; }

  /// Throws SpectrumConfigError for a malformed model.
  void validate() const;
};

class SpectrumConfigError : public std::invalid_argument {
 public:
  explicit SpectrumConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Gauss-Hermite rule for integrals of f(t) e^{-t^2} over the real line.
/// Nodes are sorted ascending; weights sum to sqrt(pi).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(std::size_t n);

struct DephasingSetup {
  double zeta = kPi / 2.0;  // nominal basis phase Delta*T/2
  double period = 1.0;      // T; the basis phase moves by delta*T/2
  double path_delay = 0.0;  // arm imbalance dL/c (s); phi moves by delta*path_delay
};

/// <sin(zeta + delta T/2)> over the spectrum. Equals e^{-(sigma T/2)^2/2} sin(zeta)
/// for a Gaussian line.
double mean_sin_basis(const DephasingSetup& setup, const SpectrumModel& spectrum);

/// <sin(phi + delta tau) sin(zeta + delta T/2)> over the spectrum.
double mean_modulation(double phi, const DephasingSetup& setup, const SpectrumModel& spectrum);

/// Correlation curve with the sin(zeta) modulation replaced by its spectral
/// average, over the equal-weight {zeta, zeta'} pair. A delta spectrum
/// reproduces the ideal curve.
CorrelationCurve dephase(const DephasingSetup& setup, std::span<const double> phi_grid, const SpectrumModel& spectrum,
                         NormalizationMode mode);

std::string_view to_string(SpectrumKind kind);

}  // namespace mzcorr
