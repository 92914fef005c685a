#include "mzcorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mzcorr/numeric.hpp"
#include "mzcorr/optics.hpp"

namespace mzcorr {

std::string_view to_string(NormalizationMode mode) { return mode == NormalizationMode::paper ? "paper" : "derived"; }

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::closed:
      return "closed";
    case Provenance::ensemble:
      return "ensemble";
    case Provenance::dephased:
      return "dephased";
  }
  return "closed";
}

std::string_view to_string(Engine engine) { return engine == Engine::closed_form ? "closed" : "matrix"; }

NormalizationMode parse_normalization(std::string_view text) {
  if (text == "paper") return NormalizationMode::paper;
  if (text == "derived") return NormalizationMode::derived;
  throw std::invalid_argument("unknown normalization '" + std::string(text) + "'");
}

Engine parse_engine(std::string_view text) {
  if (text == "closed" || text == "closed_form") return Engine::closed_form;
  if (text == "matrix") return Engine::matrix;
  throw std::invalid_argument("unknown engine '" + std::string(text) + "'");
}

std::vector<double> CorrelationCurve::phi() const {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.phi);
  return out;
}

double CorrelationCurve::modulation_depth() const {
  bool any = false;
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& p : points) {
    if (!p.g2) continue;
    if (!any) {
      lo = hi = *p.g2;
      any = true;
    } else {
      lo = std::min(lo, *p.g2);
      hi = std::max(hi, *p.g2);
    }
  }
  return hi - lo;
}

IntensityPair intensities_closed(double phi, const BasisBranch& branch, double i0) {
  const double m = std::sin(phi) * std::sin(branch.phase);
  return {0.5 * i0 * (1.0 - m), 0.5 * i0 * (1.0 + m)};
}

double intensity_product(double phi, const BasisBranch& branch) {
  const double s_phi = std::sin(phi);
  const double s_basis = std::sin(branch.phase);
  return 1.0 - s_phi * s_phi * s_basis * s_basis;
}

IntensityPair intensities_matrix(double phi, const PulseSegment& segment, double i0) {
  const Amplitude e0{std::sqrt(i0), 0.0};
  const TwoPortField out =
      apply(mzi_transfer(phi, BsConvention::hadamard), segment_input(e0, segment.branch.phase, segment.active_port));
  return {out.intensity1(), out.intensity2()};
}

std::optional<double> g2_from_means(double i_a_mean, double i_b_mean, double product_mean, NormalizationMode mode) {
  const double denom = i_a_mean * i_b_mean;
  if (!(denom > kUndefinedDenominator)) return std::nullopt;
  const double ratio = product_mean / denom;
  return mode == NormalizationMode::paper ? 0.5 * ratio : ratio;
}

CorrelationCurve g2_closed(std::span<const double> phi_grid, NormalizationMode mode) {
  if (phi_grid.empty()) throw EmptyGridError{};
  CorrelationCurve curve;
  curve.mode = mode;
  curve.provenance = Provenance::closed;
  curve.points.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    const double s = std::sin(phi);
    const double r = 1.0 - s * s;
    CurvePoint p;
    p.phi = phi;
    p.i_a_mean = 0.5;
    p.i_b_mean = 0.5;
    p.r_mean = r;
    p.g2 = mode == NormalizationMode::paper ? 0.5 * (1.0 - s * s) : r;
    curve.points.push_back(p);
  }
  return curve;
}

CorrelationCurve g2_ensemble(const PulseSequence& seq, std::span<const double> phi_grid, Engine engine,
                             NormalizationMode mode) {
  if (seq.empty()) throw EmptySequenceError{};
  if (phi_grid.empty()) throw EmptyGridError{};

  CorrelationCurve curve;
  curve.mode = mode;
  curve.provenance = Provenance::ensemble;
  curve.points.reserve(phi_grid.size());

  const std::size_t n = seq.size();
  std::vector<double> ia(n);
  std::vector<double> ib(n);
  std::vector<double> prod(n);
  for (double phi : phi_grid) {
    for (std::size_t k = 0; k < n; ++k) {
      const PulseSegment& seg = seq.segments[k];
      const IntensityPair pair =
          engine == Engine::closed_form ? intensities_closed(phi, seg.branch) : intensities_matrix(phi, seg);
      ia[k] = pair.i_a;
      ib[k] = pair.i_b;
      prod[k] = pair.i_a * pair.i_b;
    }
    CurvePoint p;
    p.phi = phi;
    p.i_a_mean = mean(ia);
    p.i_b_mean = mean(ib);
    const double product_mean = mean(prod);
    p.r_mean = 4.0 * product_mean;
    p.g2 = g2_from_means(p.i_a_mean, p.i_b_mean, product_mean, mode);
    curve.points.push_back(p);
  }
  return curve;
}

}  // namespace mzcorr
