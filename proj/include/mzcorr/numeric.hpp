#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mzcorr {

inline constexpr double kPi = 3.14159265358979323846;

/// Pairwise (cascade) summation with a fixed split order, so results do not
/// depend on how callers chunk the data.
double pairwise_sum(std::span<const double> values);

inline double mean(std::span<const double> values) {
  return values.empty() ? 0.0 : pairwise_sum(values) / static_cast<double>(values.size());
}

/// n evenly spaced points, first == lo, last == hi exactly. Requires n >= 2.
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Shortest-safe round-trip text form: 17 significant digits.
std::string format_number(double x);

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based random word: a pure function of (seed, index).
constexpr std::uint64_t counter_random(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ (index * 0xD1B54A32D192ED03ULL));
}

}  // namespace mzcorr
