#include "mzcorr/modulation.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "mzcorr/numeric.hpp"

namespace mzcorr {

void DetuningConfig::validate() const {
  if (!std::isfinite(delta) || delta < 0.0) throw std::invalid_argument("delta: must be finite and >= 0");
  if (!std::isfinite(period) || period <= 0.0) throw std::invalid_argument("period: must be finite and > 0");
  if (!std::isfinite(f0)) throw std::invalid_argument("f0: must be finite");
}

std::string_view to_string(BranchTag tag) { return tag == BranchTag::zeta ? "zeta" : "zeta_prime"; }

std::string_view to_string(PortLayout layout) {
  switch (layout) {
    case PortLayout::alternating:
      return "alternating";
    case PortLayout::swapped:
      return "swapped";
    case PortLayout::shared:
      return "shared";
  }
  return "alternating";
}

PortLayout parse_port_layout(std::string_view text) {
  if (text == "alternating") return PortLayout::alternating;
  if (text == "swapped") return PortLayout::swapped;
  if (text == "shared") return PortLayout::shared;
  throw std::invalid_argument("unknown port layout '" + std::string(text) + "'");
}

std::string_view to_string(SequencePolicy policy) {
  return policy == SequencePolicy::alternate ? "alternate" : "random";
}

SequencePolicy parse_sequence_policy(std::string_view text) {
  if (text == "alternate") return SequencePolicy::alternate;
  if (text == "random") return SequencePolicy::random;
  throw std::invalid_argument("unknown sequence policy '" + std::string(text) + "'");
}

std::size_t PulseSequence::count(BranchTag tag) const {
  return static_cast<std::size_t>(
      std::count_if(segments.begin(), segments.end(), [tag](const PulseSegment& s) { return s.branch.tag == tag; }));
}

double zeta_of(const DetuningConfig& cfg) { return cfg.delta * cfg.period / 2.0; }

QuadratureCheck quadrature_check(const DetuningConfig& cfg) {
  const double zeta = zeta_of(cfg);
  const double half_pi = kPi / 2.0;
  const double guess = std::round((zeta / half_pi - 1.0) / 2.0);
  long long best_n = static_cast<long long>(std::max(0.0, guess));
  double best_dev = zeta - static_cast<double>(2 * best_n + 1) * half_pi;
  // the rounded guess can be off by one near the midpoints
  for (long long n : {best_n - 1, best_n + 1}) {
    if (n < 0) continue;
    const double dev = zeta - static_cast<double>(2 * n + 1) * half_pi;
    if (std::abs(dev) < std::abs(best_dev)) {
      best_n = n;
      best_dev = dev;
    }
  }
  return {std::abs(best_dev) <= kQuadratureTolerance, best_n, best_dev};
}

BranchTag branch_at(SequencePolicy policy, std::uint64_t seed, std::size_t index) {
  if (policy == SequencePolicy::alternate) {
    return index % 2 == 0 ? BranchTag::zeta : BranchTag::zeta_prime;
  }
  return (counter_random(seed, index) >> 63) == 0 ? BranchTag::zeta : BranchTag::zeta_prime;
}

namespace {

int port_for(BranchTag tag, PortLayout layout) {
  switch (layout) {
    case PortLayout::alternating:
      return tag == BranchTag::zeta ? 1 : 2;
    case PortLayout::swapped:
      return tag == BranchTag::zeta ? 2 : 1;
    case PortLayout::shared:
      return 1;
  }
  return 1;
}

}  // namespace

PulseSequence make_sequence(const DetuningConfig& cfg, std::size_t n_segments, SequencePolicy policy,
                            std::uint64_t seed, PortLayout layout) {
  cfg.validate();
  if (n_segments == 0) throw EmptySequenceError{};

  const double zeta = zeta_of(cfg);
  const double duration = cfg.period / 2.0;

  PulseSequence seq;
  seq.policy = policy;
  seq.seed = seed;
  seq.segments.reserve(n_segments);
  for (std::size_t k = 0; k < n_segments; ++k) {
    const BranchTag tag = branch_at(policy, seed, k);
    PulseSegment seg;
    seg.branch = tag == BranchTag::zeta ? BasisBranch::zeta(zeta) : BasisBranch::zeta_prime(zeta);
    seg.duration = duration;
    seg.freq_offset = tag == BranchTag::zeta ? cfg.delta : -cfg.delta;
    seg.active_port = port_for(tag, layout);
    seq.segments.push_back(seg);
  }
  return seq;
}

void write_sequence_csv(std::ostream& out, const PulseSequence& seq) {
  out << "index,branch,phase_rad,freq_offset_rad_per_s,duration_s,active_port\n";
  for (std::size_t k = 0; k < seq.segments.size(); ++k) {
    const PulseSegment& s = seq.segments[k];
    out << k << ',' << to_string(s.branch.tag) << ',' << format_number(s.branch.phase) << ','
        << format_number(s.freq_offset) << ',' << format_number(s.duration) << ',' << s.active_port << '\n';
  }
}

}  // namespace mzcorr
