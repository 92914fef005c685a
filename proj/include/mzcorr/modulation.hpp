#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace mzcorr {

/// Acousto-optic detuning setup. delta is the rf shift (rad/s), period the
/// full toggle cycle T (s; each pulse lasts T/2), f0 the carrier (bookkeeping).
struct DetuningConfig {
  double delta = 0.0;
  double period = 1.0;
  double f0 = 0.0;

  double f_plus() const { return f0 + delta; }
  double f_minus() const { return f0 - delta; }
  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

enum class BranchTag { zeta, zeta_prime };

struct BasisBranch {
  BranchTag tag = BranchTag::zeta;
  double phase = 0.0;

  static BasisBranch zeta(double z) { return {BranchTag::zeta, z}; }
  static BasisBranch zeta_prime(double z) { return {BranchTag::zeta_prime, -z}; }
  friend bool operator==(const BasisBranch&, const BasisBranch&) = default;
};

std::string_view to_string(BranchTag tag);

/// Which input port carries the shifted pulse of each branch.
///   alternating: zeta on port 1, zeta' on port 2 (pulse diagram layout)
///   swapped:     zeta on port 2, zeta' on port 1
///   shared:      both branches on port 1
enum class PortLayout { alternating, swapped, shared };

std::string_view to_string(PortLayout layout);
PortLayout parse_port_layout(std::string_view text);

struct PulseSegment {
  BasisBranch branch;
  double duration = 0.0;
  double freq_offset = 0.0;
  int active_port = 1;
  friend bool operator==(const PulseSegment&, const PulseSegment&) = default;
};

enum class SequencePolicy { alternate, random };

std::string_view to_string(SequencePolicy policy);
SequencePolicy parse_sequence_policy(std::string_view text);

struct PulseSequence {
  std::vector<PulseSegment> segments;
  SequencePolicy policy = SequencePolicy::alternate;
  std::uint64_t seed = 0;

  std::size_t count(BranchTag tag) const;
  bool empty() const { return segments.empty(); }
  std::size_t size() const { return segments.size(); }
};

class EmptySequenceError : public std::invalid_argument {
 public:
  EmptySequenceError() : std::invalid_argument("pulse sequence needs at least one segment") {}
};

/// zeta = delta * period / 2.
double zeta_of(const DetuningConfig& cfg);

struct QuadratureCheck {
  bool is_quadrature = false;
  long long nearest_n = 0;
  double deviation = 0.0;  // zeta - (2n+1) pi/2
};

inline constexpr double kQuadratureTolerance = 1e-9;

/// Nearest odd multiple (2n+1) pi/2 with n >= 0.
QuadratureCheck quadrature_check(const DetuningConfig& cfg);

/// Branch chosen for segment `index` under `policy`. Pure in (seed, index).
BranchTag branch_at(SequencePolicy policy, std::uint64_t seed, std::size_t index);

PulseSequence make_sequence(const DetuningConfig& cfg, std::size_t n_segments,
                            SequencePolicy policy = SequencePolicy::alternate, std::uint64_t seed = 0,
                            PortLayout layout = PortLayout::alternating);

/// CSV with header index,branch,phase_rad,freq_offset_rad_per_s,duration_s,active_port.
void write_sequence_csv(std::ostream& out, const PulseSequence& seq);

}  // namespace mzcorr
