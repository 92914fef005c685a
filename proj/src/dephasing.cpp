#include "mzcorr/dephasing.hpp"

#include <array>
#include <cmath>

namespace mzcorr {

void SpectrumModel::validate() const {
  if (kind == SpectrumKind::delta) {
    if (sigma != 0.0) throw SpectrumConfigError("delta spectrum requires sigma = 0");
    return;
  }
  if (!std::isfinite(sigma) || sigma <= 0.0) throw SpectrumConfigError("gaussian spectrum requires sigma > 0");
  if (quadrature_points < 11 || quadrature_points % 2 == 0) {
    throw SpectrumConfigError("quadrature_points must be odd and >= 11, got " + std::to_string(quadrature_points));
  }
}

std::string_view to_string(SpectrumKind kind) { return kind == SpectrumKind::delta ? "delta" : "gaussian"; }

// Newton iteration on the orthonormal Hermite recurrence, with the usual
// asymptotic initial guesses for the largest roots.
GaussHermiteRule gauss_hermite(std::size_t n) {
  if (n == 0) throw SpectrumConfigError("Gauss-Hermite rule needs at least one node");

  constexpr double kPiM4 = 0.7511255444649425;  // pi^{-1/4}
  constexpr int kMaxIter = 100;
  constexpr double kEps = 1e-15;

  const double nd = static_cast<double>(n);
  std::vector<double> x(n);
  std::vector<double> w(n);
  const std::size_t m = (n + 1) / 2;
  double z = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * nd + 1.0) - 1.85575 * std::pow(2.0 * nd + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(nd, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * x[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * x[1];
    } else {
      z = 2.0 * z - x[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < kMaxIter; ++it) {
      double p1 = kPiM4;
      double p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        const double jd = static_cast<double>(j);
        p1 = z * std::sqrt(2.0 / (jd + 1.0)) * p2 - std::sqrt(jd / (jd + 1.0)) * p3;
      }
      pp = std::sqrt(2.0 * nd) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kEps * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }
  if (n % 2 == 1) x[m - 1] = 0.0;

  GaussHermiteRule rule;
  rule.nodes.assign(x.rbegin(), x.rend());
  rule.weights.assign(w.rbegin(), w.rend());
  return rule;
}

namespace {

// <f(delta)> for delta ~ N(0, sigma^2).
template <typename F>
double spectral_average(const SpectrumModel& spectrum, F&& f) {
  if (spectrum.kind == SpectrumKind::delta) return f(0.0);
  const GaussHermiteRule rule = gauss_hermite(spectrum.quadrature_points);
  const double scale = std::sqrt(2.0) * spectrum.sigma;
  std::vector<double> terms(rule.nodes.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = rule.weights[i] * f(scale * rule.nodes[i]);
  }
  return pairwise_sum(terms) / std::sqrt(kPi);
}

}  // namespace

double mean_sin_basis(const DephasingSetup& setup, const SpectrumModel& spectrum) {
  spectrum.validate();
  return spectral_average(spectrum,
                          [&](double delta) { return std::sin(setup.zeta + 0.5 * delta * setup.period); });
}

double mean_modulation(double phi, const DephasingSetup& setup, const SpectrumModel& spectrum) {
  spectrum.validate();
  return spectral_average(spectrum, [&](double delta) {
    return std::sin(phi + delta * setup.path_delay) * std::sin(setup.zeta + 0.5 * delta * setup.period);
  });
}

CorrelationCurve dephase(const DephasingSetup& setup, std::span<const double> phi_grid, const SpectrumModel& spectrum,
                         NormalizationMode mode) {
  spectrum.validate();
  if (phi_grid.empty()) throw EmptyGridError{};

  CorrelationCurve curve;
  curve.mode = mode;
  curve.provenance = Provenance::dephased;
  curve.points.reserve(phi_grid.size());

  // Without an arm imbalance the average factorizes: sin(phi) <sin zeta(delta)>.
  const bool factorizes = setup.path_delay == 0.0 || spectrum.kind == SpectrumKind::delta;
  const double basis_mean = factorizes ? mean_sin_basis(setup, spectrum) : 0.0;

  for (double phi : phi_grid) {
    const double m = factorizes ? std::sin(phi) * basis_mean : mean_modulation(phi, setup, spectrum);
    // zeta branch carries +m, zeta' branch -m
    const std::array<double, 2> ia{0.5 * (1.0 - m), 0.5 * (1.0 + m)};
    const std::array<double, 2> ib{0.5 * (1.0 + m), 0.5 * (1.0 - m)};
    const std::array<double, 2> prod{ia[0] * ib[0], ia[1] * ib[1]};
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
