#include <doctest.h>

#include <cmath>
#include <random>

#include "mzcorr/correlation.hpp"
#include "mzcorr/modulation.hpp"
#include "mzcorr/numeric.hpp"
#include "oracles.hpp"

using namespace mzcorr;

namespace {

const BasisBranch kZeta = BasisBranch::zeta(kPi / 2);
const BasisBranch kZetaPrime = BasisBranch::zeta_prime(kPi / 2);

PulseSequence alternate(double zeta, std::size_t n, PortLayout layout = PortLayout::alternating) {
  return make_sequence({2 * zeta, 1.0, 0.0}, n, SequencePolicy::alternate, 0, layout);
}

}  // namespace

TEST_CASE("intensities_closed worked examples") {
  for (const BasisBranch& b : {kZeta, kZetaPrime, BasisBranch::zeta(0.4)}) {
    const IntensityPair p = intensities_closed(0.0, b);
    CHECK(p.i_a == 0.5);
    CHECK(p.i_b == 0.5);
  }
  const IntensityPair q = intensities_closed(kPi / 2, kZeta);
  CHECK(q.i_a == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(q.i_b == doctest::Approx(1.0).epsilon(1e-15));
  const IntensityPair qp = intensities_closed(kPi / 2, kZetaPrime);
  CHECK(qp.i_a == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(qp.i_b == doctest::Approx(0.0).epsilon(1e-15));
  const IntensityPair scaled = intensities_closed(kPi / 2, kZeta, 3.0);
  CHECK(scaled.i_b == doctest::Approx(3.0));
}

TEST_CASE("intensity_product worked examples") {
  CHECK(intensity_product(kPi / 2, kZeta) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(intensity_product(0.0, BasisBranch::zeta(1.1)) == 1.0);
  CHECK(intensity_product(kPi / 4, kZeta) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("intensity properties over random inputs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double phi = angle(rng);
    const double z = angle(rng);
    const IntensityPair p = intensities_closed(phi, BasisBranch::zeta(z));
    CHECK(std::abs(p.i_a + p.i_b - 1.0) <= 1e-12);
    CHECK(p.i_a >= 0.0);
    CHECK(p.i_b >= 0.0);
    // branch independence of R
    CHECK(intensity_product(phi, BasisBranch::zeta(z)) == intensity_product(phi, BasisBranch::zeta_prime(z)));
    // product identity at quadrature
    const double zq = (2 * (trial % 4) + 1) * kPi / 2;
    const IntensityPair pq = intensities_closed(phi, BasisBranch::zeta(zq));
    CHECK(std::abs(intensity_product(phi, BasisBranch::zeta(zq)) - 4 * pq.i_a * pq.i_b) <= 1e-12);
  }
}

TEST_CASE("g2_closed paper and derived") {
  const std::vector<double> grid{0.0, kPi / 2, -kPi / 2, kPi / 4};
  const CorrelationCurve paper = g2_closed(grid, NormalizationMode::paper);
  CHECK(paper.provenance == Provenance::closed);
  CHECK(*paper.points[0].g2 == 0.5);
  CHECK(*paper.points[1].g2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(*paper.points[2].g2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(*paper.points[3].g2 == doctest::Approx(0.25).epsilon(1e-15));

  const CorrelationCurve derived = g2_closed(grid, NormalizationMode::derived);
  // brute-force ensemble oracle over {zeta, zeta'}
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto m = oracle::two_branch_means(grid[k], kPi / 2);
    CHECK(*derived.points[k].g2 == doctest::Approx(m.prod / (m.ia * m.ib)).epsilon(1e-12));
    CHECK(derived.points[k].r_mean == doctest::Approx(4 * m.prod).epsilon(1e-12));
  }
  CHECK(*derived.points[0].g2 == 1.0);

  CHECK_THROWS_AS(g2_closed({}, NormalizationMode::paper), EmptyGridError);
}

TEST_CASE("closed curves: symmetry, periodicity and the classical boundary") {
  const auto grid = linspace(-kPi, kPi, 1001);
  std::vector<double> shifted(grid.size());
  std::vector<double> mirrored(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    shifted[k] = grid[k] + kPi;
    mirrored[k] = -grid[k];
  }
  for (NormalizationMode mode : {NormalizationMode::paper, NormalizationMode::derived}) {
    const CorrelationCurve base = g2_closed(grid, mode);
    const CorrelationCurve plus_pi = g2_closed(shifted, mode);
    const CorrelationCurve neg = g2_closed(mirrored, mode);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(std::abs(*base.points[k].g2 - *plus_pi.points[k].g2) <= 1e-12);
      CHECK(std::abs(*base.points[k].g2 - *neg.points[k].g2) <= 1e-12);
      CHECK(*base.points[k].g2 >= 0.0);
    }
  }
  const CorrelationCurve paper = g2_closed(grid, NormalizationMode::paper);
  for (const CurvePoint& p : paper.points) {
    const double s = std::sin(p.phi);
    // phi = 0, +-pi are the only grid points with sin^2 phi below rounding of 1 - sin^2 phi
    const bool at_node = std::abs(p.phi) < 1e-12 || std::abs(std::abs(p.phi) - kPi) < 1e-12;
    if (at_node) {
      CHECK(*p.g2 == 0.5);
    } else {
      CHECK(s * s > 0.0);
      CHECK(*p.g2 < 0.5);
    }
    CHECK(*p.g2 == 0.5 * (1.0 - s * s));
  }
}

TEST_CASE("g2_ensemble two-segment hand computations") {
  const PulseSequence seq = alternate(kPi / 2, 2);
  const std::vector<double> grid{kPi / 2, 0.0};
  const CorrelationCurve c = g2_ensemble(seq, grid, Engine::closed_form, NormalizationMode::derived);
  CHECK(c.provenance == Provenance::ensemble);
  CHECK(*c.points[0].g2 == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(*c.points[1].g2 == 1.0);
  CHECK(c.points[1].r_mean == 1.0);
  const CorrelationCurve p = g2_ensemble(seq, grid, Engine::closed_form, NormalizationMode::paper);
  CHECK(*p.points[1].g2 == 0.5);
}

TEST_CASE("alternate ensemble equals the derived closed form and has uniform means") {
  const auto grid = linspace(-kPi, kPi, 101);
  for (std::size_t n : {2u, 4u, 10u, 1000u}) {
    for (double zq : {kPi / 2, 3 * kPi / 2, 5 * kPi / 2}) {
      const CorrelationCurve e = g2_ensemble(alternate(zq, n), grid, Engine::closed_form, NormalizationMode::derived);
      const CorrelationCurve c = g2_closed(grid, NormalizationMode::derived);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(std::abs(*e.points[k].g2 - *c.points[k].g2) <= 1e-12);
        CHECK(std::abs(e.points[k].i_a_mean - 0.5) <= 1e-12);
        CHECK(std::abs(e.points[k].i_b_mean - 0.5) <= 1e-12);
      }
    }
  }
}

TEST_CASE("g2_ensemble at general zeta matches the brute-force ensemble") {
  const auto grid = linspace(-kPi, kPi, 41);
  for (double z : {0.0, 0.3, 1.0, 2.5}) {
    const CorrelationCurve e = g2_ensemble(alternate(z, 2), grid, Engine::closed_form, NormalizationMode::derived);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const auto m = oracle::two_branch_means(grid[k], z);
      CHECK(e.points[k].i_a_mean == doctest::Approx(m.ia).epsilon(1e-13));
      CHECK(*e.points[k].g2 == doctest::Approx(m.prod / (m.ia * m.ib)).epsilon(1e-12));
    }
  }
}

TEST_CASE("single-branch sequence leaves g2 undefined where <I_A> vanishes") {
  const PulseSequence one = alternate(kPi / 2, 1);
  const std::vector<double> grid{kPi / 2, 0.0, -kPi / 2};
  const CorrelationCurve c = g2_ensemble(one, grid, Engine::closed_form, NormalizationMode::derived);
  CHECK_FALSE(c.points[0].g2.has_value());
  CHECK(c.points[0].i_a_mean == 0.0);
  REQUIRE(c.points[1].g2.has_value());
  CHECK(*c.points[1].g2 == 1.0);
  CHECK_FALSE(c.points[2].g2.has_value());  // I_B vanishes instead
  for (const CurvePoint& p : c.points) {
    if (p.g2) CHECK(std::isfinite(*p.g2));
  }
}

TEST_CASE("g2_ensemble rejects empty inputs") {
  const std::vector<double> grid{0.0};
  CHECK_THROWS_AS(g2_ensemble(PulseSequence{}, grid, Engine::closed_form, NormalizationMode::paper),
                  EmptySequenceError);
  CHECK_THROWS_AS(g2_ensemble(alternate(1.0, 2), {}, Engine::closed_form, NormalizationMode::paper), EmptyGridError);
}

TEST_CASE("matrix engine: shared port layout matches closed form, alternating ports do not") {
  const auto grid = linspace(-kPi, kPi, 101);
  for (double z : {kPi / 2, 0.7, 2.2}) {
    const CorrelationCurve closed =
        g2_ensemble(alternate(z, 4), grid, Engine::closed_form, NormalizationMode::derived);
    const CorrelationCurve shared =
        g2_ensemble(alternate(z, 4, PortLayout::shared), grid, Engine::matrix, NormalizationMode::derived);
    const CorrelationCurve literal =
        g2_ensemble(alternate(z, 4, PortLayout::alternating), grid, Engine::matrix, NormalizationMode::derived);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(std::abs(shared.points[k].i_a_mean - closed.points[k].i_a_mean) <= 1e-12);
      CHECK(std::abs(shared.points[k].r_mean - closed.points[k].r_mean) <= 1e-12);
      CHECK(std::abs(*shared.points[k].g2 - *closed.points[k].g2) <= 1e-12);
      // port swap flips the sign exactly like zeta' = -zeta, so both segments agree
      const double fixed = 0.5 * (1 - std::sin(grid[k]) * std::sin(z));
      CHECK(std::abs(literal.points[k].i_a_mean - fixed) <= 1e-12);
      CHECK(std::abs(literal.points[k].r_mean - closed.points[k].r_mean) <= 1e-12);
    }
  }
}

TEST_CASE("random policy converges to the derived closed form") {
  const auto grid = linspace(-kPi, kPi, 101);
  const CorrelationCurve target = g2_closed(grid, NormalizationMode::derived);
  const DetuningConfig cfg{kPi, 1.0, 0.0};

  auto rms_error = [&](std::size_t n, std::uint64_t seed) {
    const PulseSequence seq = make_sequence(cfg, n, SequencePolicy::random, seed);
    const CorrelationCurve e = g2_ensemble(seq, grid, Engine::closed_form, NormalizationMode::derived);
    double s = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double d = *e.points[k].g2 - *target.points[k].g2;
      s += d * d;
    }
    return std::sqrt(s / grid.size());
  };

  double small = 0, large = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    small += rms_error(1000, seed);
    large += rms_error(2000, seed);
  }
  CHECK(small / large >= 1.3);
}

TEST_CASE("enum names round-trip") {
  for (NormalizationMode m : {NormalizationMode::paper, NormalizationMode::derived}) {
    CHECK(parse_normalization(to_string(m)) == m);
  }
  for (Engine e : {Engine::closed_form, Engine::matrix}) CHECK(parse_engine(to_string(e)) == e);
  CHECK_THROWS_AS(parse_engine("fdtd"), std::invalid_argument);
  CHECK_THROWS_AS(parse_normalization("unit"), std::invalid_argument);
}
