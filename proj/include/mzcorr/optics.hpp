#pragma once

#include <array>
#include <complex>
#include <string_view>

namespace mzcorr {

/// Optical field amplitude in units of sqrt(I0).
using Amplitude = std::complex<double>;

inline constexpr Amplitude kI{0.0, 1.0};

inline double intensity(Amplitude a) { return std::norm(a); }

/// Amplitude pair at the two ports (or arms) of a stage.
struct TwoPortField {
  Amplitude port1{};
  Amplitude port2{};

  double intensity1() const { return std::norm(port1); }
  double intensity2() const { return std::norm(port2); }
  double total_intensity() const { return intensity1() + intensity2(); }
  bool is_finite() const;
};

/// 2x2 complex transfer matrix acting on a TwoPortField.
class TwoPortMatrix {
 public:
  using Rows = std::array<std::array<Amplitude, 2>, 2>;

  constexpr TwoPortMatrix() : m_{{{1.0, 0.0}, {0.0, 1.0}}} {}
  constexpr explicit TwoPortMatrix(const Rows& rows) : m_(rows) {}
  constexpr TwoPortMatrix(Amplitude a, Amplitude b, Amplitude c, Amplitude d) : m_{{{a, b}, {c, d}}} {}

  static constexpr TwoPortMatrix identity() { return TwoPortMatrix{}; }

  Amplitude operator()(int row, int col) const { return m_[row][col]; }
  const Rows& rows() const { return m_; }

  TwoPortMatrix adjoint() const;

  /// Largest elementwise deviation of M^dagger M from the identity.
  double unitarity_defect() const;
  bool is_unitary(double tol = 1e-12) const { return unitarity_defect() <= tol; }

  /// Largest elementwise |a_ij - b_ij|.
  friend double max_abs_diff(const TwoPortMatrix& a, const TwoPortMatrix& b);
  friend TwoPortMatrix operator*(const TwoPortMatrix& lhs, const TwoPortMatrix& rhs);
  friend TwoPortMatrix operator*(Amplitude s, const TwoPortMatrix& m);

 private:
  Rows m_;
};

double max_abs_diff(const TwoPortMatrix& a, const TwoPortMatrix& b);
TwoPortMatrix operator*(const TwoPortMatrix& lhs, const TwoPortMatrix& rhs);
TwoPortMatrix operator*(Amplitude s, const TwoPortMatrix& m);

/// 50/50 beam splitter phase convention.
///   symmetric: rows (1, i)/sqrt2, (i, 1)/sqrt2  (pi/2 between transmitted and reflected)
///   hadamard:  rows (1, 1)/sqrt2, (1, -1)/sqrt2
enum class BsConvention { symmetric, hadamard };

std::string_view to_string(BsConvention conv);
BsConvention parse_bs_convention(std::string_view text);

TwoPortMatrix make_bs(BsConvention conv);

/// Relative phase phi between the interferometer arms: diag(1, e^{i phi}).
///
/// The phase sits on arm 2. With the hadamard splitter and the basis phase
/// injected on port 1, this placement makes output port 1 carry
/// (I0/2)(1 - sin(phi) sin(zeta)), matching the closed-form intensity layer.
TwoPortMatrix phase_arm(double phi);

/// make_bs(conv) * phase_arm(phi) * make_bs(conv).
TwoPortMatrix mzi_transfer(double phi, BsConvention conv = BsConvention::hadamard);

TwoPortField apply(const TwoPortMatrix& m, const TwoPortField& f);

/// Output fields (E_A, E_B) of the closed-form field relations, evaluated
/// literally for arbitrary zeta and zeta_p (no zeta_p = -zeta substitution):
///   E_A = E0/(2 sqrt2) [e^{i zeta}(1 - e^{i phi}) - e^{-i zeta_p}(1 + e^{i phi})]
///   E_B = i E0/(2 sqrt2) [e^{i zeta}(1 + e^{i phi}) - e^{-i zeta_p}(1 - e^{i phi})]
TwoPortField eq_fields_closed(Amplitude e0, double zeta, double zeta_p, double phi);

/// First-stage field pair (E1, E2) from the cosine relations:
///   E1 = E0/sqrt2 [1 - cos(basis_phase)],  E2 = E0/sqrt2 [1 + cos(basis_phase)]
/// These do not conserve energy: I1 + I2 - I0 = I0 cos^2(basis_phase).
TwoPortField stage1_fields(Amplitude e0, double basis_phase);

/// Input pair for one pulse segment: E0 e^{i phase}/sqrt2 on the active port
/// (1 or 2) and E0/sqrt2 on the other.
TwoPortField segment_input(Amplitude e0, double phase, int active_port);

}  // namespace mzcorr
