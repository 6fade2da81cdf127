#include "llab/boyd.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

using namespace llab;

TEST_CASE("dilation operators") {
  const DecreasingSequence g({4.0, 3.0, 2.0, 1.0});

  CHECK(dilate_down(1, g).values() == g.values());
  CHECK(dilate_down(2, g).values() == std::vector<double>{3.0, 1.0});
  CHECK(dilate_down(7, g).empty());

  CHECK(dilate_up(1, g).values() == g.values());
  CHECK(dilate_up(2, DecreasingSequence({3.0, 1.0})).values() ==
        std::vector<double>{3.0, 3.0, 1.0, 1.0});

  CHECK_THROWS_AS(dilate_down(0, g), std::domain_error);
  CHECK_THROWS_AS(dilate_up(-1, g), std::domain_error);
  CHECK_THROWS_AS(DecreasingSequence({1.0, 2.0}), std::domain_error);
}

TEST_CASE("dilate_down after dilate_up is the identity") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> v(1 + rng.next_u64() % 40);
    for (double& x : v) x = std::abs(rng.normal());
    std::sort(v.begin(), v.end(), std::greater<double>());
    const DecreasingSequence g(v);
    const int j = 1 + static_cast<int>(rng.next_u64() % 6);
    CHECK(dilate_down(j, dilate_up(j, g)).values() == g.values());
  }
}

TEST_CASE("down-dilations compose: E_{j1 j2} = E_{j1} E_{j2}") {
  Rng rng(19);
  for (int t = 0; t < 15; ++t) {
    std::vector<double> v(8 + rng.next_u64() % 60);
    for (double& x : v) x = std::abs(rng.normal());
    std::sort(v.begin(), v.end(), std::greater<double>());
    const DecreasingSequence g(v);
    const int j1 = 2 + static_cast<int>(rng.next_u64() % 3);
    const int j2 = 2 + static_cast<int>(rng.next_u64() % 3);
    CHECK(dilate_down(j1 * j2, g).values() ==
          dilate_down(j1, dilate_down(j2, g)).values());
  }
}

TEST_CASE("H and K estimates hit the flat-block values for l^p") {
  // flat blocks with length divisible by j attain j^{-1/p} exactly
  CHECK(estimate_H(SpaceSpec::lebesgue(2.0), 2, 4096, 1) ==
        doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-4));
  CHECK(estimate_H(SpaceSpec::lebesgue(3.0), 8, 4096, 1) ==
        doctest::Approx(0.5).epsilon(1e-3));
  CHECK(estimate_H(SpaceSpec::lebesgue(2.0), 1, 4096, 1) == 1.0);

  CHECK(estimate_K(SpaceSpec::lebesgue(2.0), 4, 4096, 1) ==
        doctest::Approx(2.0).epsilon(1e-4));
  CHECK(estimate_K(SpaceSpec::lebesgue(2.0), 1, 4096, 1) == 1.0);
  CHECK(estimate_K(SpaceSpec::lorentz(2.0, 2.0), 4, 4096, 1) ==
        doctest::Approx(2.0).epsilon(1e-3));

  CHECK_THROWS_AS(
      estimate_H(SpaceSpec::lebesgue(2.0).with_weight(Weight::power(0.3)), 2,
                 1024, 1),
      std::domain_error);
}

TEST_CASE("H stays below the analytic bound j^{-1/p}") {
  for (double p : {1.5, 2.0, 3.0}) {
    for (int j : {2, 3, 4, 8, 16}) {
      const double H = estimate_H(SpaceSpec::lebesgue(p), j, 4096, 7);
      const double bound = std::pow(static_cast<double>(j), -1.0 / p);
      CHECK(H <= bound * (1.0 + 1e-9));
      CHECK(H >= bound * (1.0 - 1e-6));
    }
  }
}

TEST_CASE("H is submultiplicative over the shared candidate family") {
  for (double p : {2.0, 2.5, 3.0}) {
    const SpaceSpec spec = SpaceSpec::lebesgue(p);
    const double h2 = estimate_H(spec, 2, 8192, 1);
    const double h4 = estimate_H(spec, 4, 8192, 1);
    const double h8 = estimate_H(spec, 8, 8192, 1);
    CHECK(h8 <= h2 * h4 * (1.0 + 1e-9));
  }
}

TEST_CASE("Boyd indices for Lebesgue spaces") {
  const auto est2 = boyd_indices(SpaceSpec::lebesgue(2.0), 1024, 16384, 1);
  CHECK(est2.alpha_hat == doctest::Approx(0.5).epsilon(0.04));
  CHECK(est2.beta_hat == doctest::Approx(0.5).epsilon(0.04));
  CHECK(est2.alpha_hat <= est2.beta_hat + 1e-9);

  const auto est4 = boyd_indices(SpaceSpec::lebesgue(4.0), 1024, 16384, 1);
  CHECK(est4.duality_residual.has_value());
  CHECK(*est4.duality_residual <= 0.03);

  CHECK_THROWS_AS(boyd_indices(SpaceSpec::lebesgue(2.0), 3, 1024, 1),
                  std::domain_error);
  // j_max >= 4 is accepted but yields only two dilation points
  CHECK_THROWS_AS(boyd_indices(SpaceSpec::lebesgue(2.0), 4, 1024, 1),
                  std::invalid_argument);
}

TEST_CASE("Boyd indices for Lorentz(3, 1.5) sit near 1/3") {
  const auto est = boyd_indices(SpaceSpec::lorentz(3.0, 1.5), 1024, 16384, 1);
  CHECK(est.alpha_hat >= 1.0 / 3.0 - 0.05);
  CHECK(est.alpha_hat <= 1.0 / 3.0 + 0.05);
  CHECK(est.beta_hat >= 1.0 / 3.0 - 0.05);
  CHECK(est.beta_hat <= 1.0 / 3.0 + 0.05);
}

TEST_CASE("0 <= alpha <= beta <= 1 within fit tolerance for built-ins") {
  const SpaceSpec specs[] = {
      SpaceSpec::lebesgue(1.5),
      SpaceSpec::lebesgue(3.0),
      SpaceSpec::lorentz(2.0, 1.0),
      SpaceSpec::orlicz(YoungFunction::piecewise_power(2.0, 4.0)),
  };
  for (const SpaceSpec& spec : specs) {
    const auto est = boyd_indices(spec, 256, 8192, 5);
    CHECK(est.alpha_hat >= -0.02);
    CHECK(est.beta_hat <= 1.02);
    CHECK(est.alpha_hat <= est.beta_hat + 0.02);
  }
}
