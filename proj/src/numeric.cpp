#include "mzcorr/numeric.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace mzcorr {

namespace {

constexpr std::size_t kLeaf = 8;

double sum_range(std::span<const double> v) {
  if (v.size() <= kLeaf) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return sum_range(v.first(half)) + sum_range(v.subspan(half));
}

}  // namespace

std::string format_number(double x) { return fmt::format("{:.17g}", x); }

double pairwise_sum(std::span<const double> values) { return sum_range(values); }

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("linspace needs at least 2 points");
  std::vector<double> out(n);
  const double span = hi - lo;
  const double denom = static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = lo + span * static_cast<double>(k) / denom;
  }
  out.back() = hi;
  return out;
}

}  // namespace mzcorr
