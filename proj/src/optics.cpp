#include "mzcorr/optics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mzcorr {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

bool TwoPortField::is_finite() const {
  return std::isfinite(port1.real()) && std::isfinite(port1.imag()) && std::isfinite(port2.real()) &&
         std::isfinite(port2.imag());
}

TwoPortMatrix TwoPortMatrix::adjoint() const {
  return {std::conj(m_[0][0]), std::conj(m_[1][0]), std::conj(m_[0][1]), std::conj(m_[1][1])};
}

double TwoPortMatrix::unitarity_defect() const {
  const TwoPortMatrix p = adjoint() * *this;
  return max_abs_diff(p, identity());
}

double max_abs_diff(const TwoPortMatrix& a, const TwoPortMatrix& b) {
  double worst = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      worst = std::max(worst, std::abs(a.m_[r][c] - b.m_[r][c]));
    }
  }
  return worst;
}

TwoPortMatrix operator*(const TwoPortMatrix& l, const TwoPortMatrix& r) {
  const auto& a = l.m_;
  const auto& b = r.m_;
  return {a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1],
          a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]};
}

TwoPortMatrix operator*(Amplitude s, const TwoPortMatrix& m) {
  return {s * m.m_[0][0], s * m.m_[0][1], s * m.m_[1][0], s * m.m_[1][1]};
}

std::string_view to_string(BsConvention conv) {
  switch (conv) {
    case BsConvention::symmetric:
      return "symmetric";
    case BsConvention::hadamard:
      return "hadamard";
  }
  return "hadamard";
}

BsConvention parse_bs_convention(std::string_view text) {
  if (text == "symmetric") return BsConvention::symmetric;
  if (text == "hadamard") return BsConvention::hadamard;
  throw std::invalid_argument("unknown beam splitter convention '" + std::string(text) + "'");
}

TwoPortMatrix make_bs(BsConvention conv) {
  const double s = kInvSqrt2;
  if (conv == BsConvention::symmetric) {
    return {Amplitude{s, 0.0}, Amplitude{0.0, s}, Amplitude{0.0, s}, Amplitude{s, 0.0}};
  }
  return {Amplitude{s, 0.0}, Amplitude{s, 0.0}, Amplitude{s, 0.0}, Amplitude{-s, 0.0}};
}

TwoPortMatrix phase_arm(double phi) {
  return {Amplitude{1.0, 0.0}, Amplitude{}, Amplitude{}, std::polar(1.0, phi)};
}

TwoPortMatrix mzi_transfer(double phi, BsConvention conv) {
  const TwoPortMatrix bs = make_bs(conv);
  return bs * phase_arm(phi) * bs;
}

TwoPortField apply(const TwoPortMatrix& m, const TwoPortField& f) {
  return {m(0, 0) * f.port1 + m(0, 1) * f.port2, m(1, 0) * f.port1 + m(1, 1) * f.port2};
}

TwoPortField eq_fields_closed(Amplitude e0, double zeta, double zeta_p, double phi) {
  const Amplitude one{1.0, 0.0};
  const Amplitude basis = std::polar(1.0, zeta);
  const Amplitude basis_p = std::polar(1.0, -zeta_p);
  const Amplitude arm = std::polar(1.0, phi);
  const double scale = 1.0 / (2.0 * std::sqrt(2.0));

  const Amplitude e_a = (e0 * scale) * (basis * (one - arm) - basis_p * (one + arm));
  const Amplitude e_b = (kI * e0 * scale) * (basis * (one + arm) - basis_p * (one - arm));
  return {e_a, e_b};
}

TwoPortField stage1_fields(Amplitude e0, double basis_phase) {
  const double c = std::cos(basis_phase);
  return {e0 * kInvSqrt2 * (1.0 - c), e0 * kInvSqrt2 * (1.0 + c)};
}

TwoPortField segment_input(Amplitude e0, double phase, int active_port) {
  if (active_port != 1 && active_port != 2) {
    throw std::invalid_argument("active_port must be 1 or 2, got " + std::to_string(active_port));
  }
  const Amplitude shifted = e0 * std::polar(kInvSqrt2, phase);
  const Amplitude plain = e0 * kInvSqrt2;
  return active_port == 1 ? TwoPortField{shifted, plain} : TwoPortField{plain, shifted};
}

}  // namespace mzcorr
