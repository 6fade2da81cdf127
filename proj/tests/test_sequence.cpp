#include "llab/sequence.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace llab;

TEST_CASE("normalization trims to a canonical block") {
  FiniteSequence f(3, {cplx{0, 0}, cplx{1, 0}, cplx{2, 0}, cplx{0, 0}});
  CHECK(f.first() == 4);
  CHECK(f.last() == 5);
  CHECK(f.support_size() == 2);

  FiniteSequence z(17, {cplx{0, 0}, cplx{0, 0}});
  CHECK(z.is_zero());
  CHECK(z.offset() == 0);

  CHECK_THROWS_AS(FiniteSequence(0, {cplx{1.0 / 0.0, 0}}), std::domain_error);
}

TEST_CASE("distribution function counts strict exceedances") {
  const FiniteSequence f(0, {cplx{3, 0}, cplx{1, 0}, cplx{2, 0}});
  CHECK(distribution_function(f, 1.5) == 2);
  CHECK(distribution_function(f, 0.0) == 3);
  CHECK(distribution_function(f, 3.0) == 0);
  CHECK(distribution_function(f, 100.0) == 0);
  CHECK_THROWS_AS(distribution_function(f, -0.1), std::domain_error);
}

TEST_CASE("decreasing rearrangement sorts magnitudes") {
  const FiniteSequence f(0, {cplx{3, 0}, cplx{1, 0}, cplx{2, 0}});
  CHECK(decreasing_rearrangement(f) == std::vector<double>{3.0, 2.0, 1.0});
  CHECK(decreasing_rearrangement(FiniteSequence()).empty());
}

TEST_CASE("rearrangement matches the inf-definition oracle") {
  Rng rng(42);
  for (int t = 0; t < 30; ++t) {
    const std::size_t len = 1 + rng.next_u64() % 50;
    std::vector<cplx> vals(len);
    for (cplx& v : vals) v = rng.complex_normal();
    const FiniteSequence f(-static_cast<long long>(len / 2), vals);
    const auto lib = decreasing_rearrangement(f);
    const auto ref = oracles::rearrangement_by_inf_definition(f);
    REQUIRE(lib.size() == ref.size());
    for (std::size_t i = 0; i < lib.size(); ++i) {
      CHECK(lib[i] == doctest::Approx(ref[i]).epsilon(1e-15));
    }
  }
}

TEST_CASE("reflect mirrors indices and is an involution") {
  CHECK(reflect(FiniteSequence::unit(3)).first() == -3);
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    std::vector<cplx> vals(1 + rng.next_u64() % 12);
    for (cplx& v : vals) v = rng.complex_normal();
    const FiniteSequence f(-3, vals);
    const FiniteSequence rr = reflect(reflect(f));
    CHECK(rr.offset() == f.offset());
    CHECK((rr - f).max_abs() == 0.0);
  }
  // symmetric sequences are fixed points
  const FiniteSequence s(-1, {cplx{2, 1}, cplx{5, 0}, cplx{2, 1}});
  CHECK((reflect(s) - s).max_abs() == 0.0);
}

TEST_CASE("rearrangement is invariant under reflect and translation") {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    std::vector<cplx> vals(1 + rng.next_u64() % 16);
    for (cplx& v : vals) v = rng.complex_normal();
    const FiniteSequence f(-5, vals);
    const auto base = decreasing_rearrangement(f);
    CHECK(decreasing_rearrangement(reflect(f)) == base);
    CHECK(decreasing_rearrangement(FiniteSequence(100, vals)) == base);
  }
}

TEST_CASE("modulation twists phases without touching magnitudes") {
  const FiniteSequence f(-2, {cplx{1, 1}, cplx{0, 2}, cplx{3, 0}});
  const FiniteSequence m0 = modulate(0.0, f);
  CHECK((m0 - f).max_abs() == 0.0);
  const FiniteSequence m = modulate(0.9, f);
  for (long long k = f.first(); k <= f.last(); ++k) {
    CHECK(std::abs(m.at(k)) == doctest::Approx(std::abs(f.at(k))).epsilon(1e-15));
  }
}
