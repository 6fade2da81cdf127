// Acceptance suite: one pass/fail line per criterion. Exit code 0 iff all
// criteria pass. Tolerances are pinned in code next to each check.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "llab/boyd.hpp"
#include "llab/experiments.hpp"
#include "llab/laurent.hpp"
#include "llab/literals.hpp"
#include "llab/spaces.hpp"
#include "llab/symbols.hpp"
#include "oracles.hpp"

using namespace llab;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", index,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

struct Fixtures {
  // 2 cos(theta) + 0.5 e^{2 i theta}
  Symbol twocos = Symbol::trig_poly(
      {cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{1, 0}, cplx{0.5, 0}});
  Symbol hat = Symbol::hat(1.0, kPi);
  Symbol truncstep = partial_sum(Symbol::indicator(0.0, kPi, 1.0), 64);

  std::vector<std::pair<std::string, const Symbol*>> all() const {
    return {{"twocos", &twocos}, {"hat", &hat}, {"truncstep", &truncstep}};
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// --- criterion 1: multiplier norm on l^2 equals the sup norm (within 2%) ---
void criterion_1(const Fixtures& fx) {
  bool ok = true;
  std::string detail;
  for (const auto& [name, a] : fx.all()) {
    const double sup = sup_norm(*a);
    const auto est =
        multiplier_norm_lower(*a, SpaceSpec::lebesgue(2.0), 2048, 2, 60, 1);
    const double rel = std::abs(est.lower - sup) / sup;
    detail += name + " rel " + fmt(rel) + "; ";
    if (!(rel <= 0.02) || est.lower > sup * (1.0 + 1e-9)) ok = false;
  }
  report(1, "M_{l^2} = L^inf at N=2048 within 2%", ok, detail);
}

// --- criterion 2: embedding consistency and monotone sweeps ---
void criterion_2(const Fixtures& fx) {
  bool ok = true;
  std::string detail;
  const std::vector<long long> Ns = {256, 512, 1024, 2048};
  for (const auto& [name, a] : fx.all()) {
    const double sup = sup_norm(*a);
    const auto sweep =
        multiplier_norm_lower_sweep(*a, SpaceSpec::lebesgue(2.0), Ns, 2, 50, 1);
    for (const auto& est : sweep) {
      if (est.lower > sup * (1.0 + 1e-6)) {
        ok = false;
        detail += name + " exceeds sup at N=" +
                  std::to_string(est.params.section_halfwidth) + "; ";
      }
    }
  }
  const SpaceSpec weighted =
      SpaceSpec::lebesgue(3.0).with_weight(Weight::power(0.2));
  const auto sweep = multiplier_norm_lower_sweep(fx.twocos, weighted,
                                                 std::vector<long long>{64, 128,
                                                                        256, 512},
                                                 4, 50, 1);
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    if (sweep[i].lower < sweep[i - 1].lower) {
      ok = false;
      detail += "weighted sweep decreased; ";
    }
  }
  if (detail.empty()) detail = "l^2 sweeps below sup, weighted sweep monotone";
  report(2, "embedding lower-consistency (sweeps)", ok, detail);
}

// --- criterion 3: uniform boundedness of Fejer means ---
void criterion_3(const Fixtures& fx) {
  bool ok = true;
  std::string detail;
  for (const auto& [name, a] : fx.all()) {
    const double sup = sup_norm(*a);
    for (long long n = 0; n <= 128; ++n) {
      if (sup_norm(fejer_mean(*a, n)) > sup + 1e-9) {
        ok = false;
        detail += name + " sup contraction fails at n=" + std::to_string(n) + "; ";
        break;
      }
    }
  }
  // lower(sigma_n(a)) <= exact upper(a) on l^2, n <= 64, N = 512
  const Symbol& a = fx.truncstep;
  const double exact_upper =
      multiplier_norm_upper(a, SpaceSpec::lebesgue(2.0), 1.0)
          .estimate.upper.value();
  for (long long n = 0; n <= 64; n += (n < 8 ? 1 : 7)) {
    const auto lo = multiplier_norm_lower(fejer_mean(a, n),
                                          SpaceSpec::lebesgue(2.0), 512, 2, 50, 1);
    if (lo.lower > exact_upper + 1e-9) {
      ok = false;
      detail += "sigma_n lower exceeds upper at n=" + std::to_string(n) + "; ";
    }
  }
  if (detail.empty()) detail = "contraction to 1e-9 and lower <= exact upper";
  report(3, "Fejer uniform boundedness", ok, detail);
}

// --- criterion 4: Fejer convergence rates ---
void criterion_4(const Fixtures& fx) {
  bool ok = true;
  std::string detail;
  const double hat_dev = sup_norm_difference(fejer_mean(fx.hat, 256), fx.hat);
  if (!(hat_dev < 0.05 * sup_norm(fx.hat))) {
    ok = false;
    detail += "hat deficit " + fmt(hat_dev) + " too large; ";
  } else {
    detail += "hat deficit " + fmt(hat_dev) + "; ";
  }

  // trig polynomial deficit-coefficient norm decays like 1/n
  std::vector<double> logn, logd;
  for (long long n = 4; n <= 512; n *= 2) {
    const Symbol deficit = make_deficit_trigpoly(fx.twocos, n, 64);
    double l1 = 0.0;
    for (long long k = -deficit.degree(); k <= deficit.degree(); ++k) {
      l1 += std::abs(deficit.coeff(k));
    }
    logn.push_back(std::log(static_cast<double>(n)));
    logd.push_back(std::log(l1));
  }
  const LinearFit fit = fit_line(logn, logd);
  detail += "log-log slope " + fmt(fit.slope);
  if (!(std::abs(fit.slope + 1.0) <= 0.1)) ok = false;
  report(4, "Fejer convergence (hat by n=256, O(1/n) coefficient decay)", ok,
         detail);
}

// --- criterion 5: Muckenhoupt machinery ---
void criterion_5() {
  bool ok = true;
  std::string detail;
  const auto cst = ap_characteristic(Weight::constant(3.0), 2.0, 4096);
  if (std::abs(cst.value - 1.0) > 1e-12) {
    ok = false;
    detail += "constant characteristic != 1; ";
  }
  std::vector<long long> budgets;
  for (long long b = 2; b <= 4096; b *= 2) budgets.push_back(b);
  const auto v04 = ap_membership_verdict(Weight::power(0.4), 2.0, budgets);
  const auto v06 = ap_membership_verdict(Weight::power(0.6), 2.0, budgets);
  if (v04.verdict != ApVerdict::InApEvidence) {
    ok = false;
    detail += "power(0.4) not classified in A_2 (final growth " +
              fmt(v04.final_doubling_growth) + "); ";
  }
  if (v06.verdict != ApVerdict::NotInApEvidence) {
    ok = false;
    detail += "power(0.6) not classified outside A_2 (final growth " +
              fmt(v06.final_doubling_growth) + "); ";
  }
  const auto stab = stability_probe(Weight::power(0.4), 2.0,
                                    {-0.3, -0.1, -0.05, 0.0, 0.05, 0.1, 0.3},
                                    {1.9, 2.0, 2.1}, 4096);
  if (!stab.open_box_nonempty) {
    ok = false;
    detail += "stability box around (2, 0) empty; ";
  }
  if (detail.empty()) {
    detail = "const=1 exactly, 0.4/0.6 split, stability box nonempty";
  }
  report(5, "Muckenhoupt characteristic / membership / stability", ok, detail);
}

// --- criterion 6: convexity midpoint inequality ---
void criterion_6() {
  const auto rep = convexity_region_probe(
      Weight::power(0.2, WeightDomain::HalfLine), {1.5, 2.0, 3.0},
      {-0.5, 0.0, 0.5, 1.0}, 1024);
  const bool ok = rep.all_nonnegative && !rep.midpoint_checks.empty() &&
                  rep.min_slack >= -1e-9;
  report(6, "convexity midpoint inequality (power(0.2), budget 2^10)", ok,
         "min slack " + fmt(rep.min_slack) + " over " +
             std::to_string(rep.midpoint_checks.size()) + " checks");
}

// --- criterion 7: Boyd indices ---
void criterion_7() {
  bool ok = true;
  std::string detail;
  BoydEstimate est15, est3;
  for (double p : {1.5, 2.0, 3.0}) {
    const auto est = boyd_indices(SpaceSpec::lebesgue(p), 1024, 16384, 1);
    if (p == 1.5) est15 = est;
    if (p == 3.0) est3 = est;
    const double target = 1.0 / p;
    detail += "p=" + fmt(p) + ": (" + fmt(est.alpha_hat) + "," +
              fmt(est.beta_hat) + "); ";
    if (std::abs(est.alpha_hat - target) > 0.02 ||
        std::abs(est.beta_hat - target) > 0.02) {
      ok = false;
    }
  }
  const double residual = std::abs(est3.alpha_hat - (1.0 - est15.beta_hat));
  detail += "duality residual " + fmt(residual);
  if (residual > 0.05) ok = false;
  report(7, "Boyd indices for l^p, p in {1.5, 2, 3}", ok, detail);
}

// --- criterion 8: conjugate-symbol duality across dual exponents ---
void criterion_8(const Fixtures& fx) {
  bool ok = true;
  std::string detail;
  const double p = 3.0;
  const double q = 1.5;
  const long long N = 1024;
  for (const auto& [name, aptr] : fx.all()) {
    const Symbol& a = *aptr;
    const Symbol abar = conjugate_symbol(a);
    const auto estp = multiplier_norm_lower(a, SpaceSpec::lebesgue(p), N, 2, 40, 1);
    const auto estq =
        multiplier_norm_lower(abar, SpaceSpec::lebesgue(q), N, 2, 40, 1);

    // transfer witnesses through the Holder duality map: the q-section of
    // the conjugate symbol is the adjoint of the p-section
    const FiniteSection S(a, N);
    auto to_coords = [&](const FiniteSequence& w) {
      std::vector<cplx> x(static_cast<std::size_t>(2 * N + 1), cplx{0, 0});
      for (long long k = std::max(-N, w.first()); k <= std::min(N, w.last());
           ++k) {
        x[static_cast<std::size_t>(k + N)] = w.at(k);
      }
      return x;
    };
    double lower_p = estp.lower;
    double lower_q = estq.lower;
    {
      const std::vector<cplx> y = S.apply(to_coords(*estp.witness));
      const std::vector<cplx> dual = holder_dual_witness(y, p);
      if (lp_norm(dual, q) > 0.0) {
        lower_q = std::max(
            lower_q, lp_norm(S.apply_adjoint(dual), q) / lp_norm(dual, q));
      }
    }
    {
      const std::vector<cplx> yq = S.apply_adjoint(to_coords(*estq.witness));
      const std::vector<cplx> dual = holder_dual_witness(yq, q);
      if (lp_norm(dual, p) > 0.0) {
        lower_p = std::max(lower_p,
                           lp_norm(S.apply(dual), p) / lp_norm(dual, p));
      }
    }
    const double rel =
        std::abs(lower_p - lower_q) / std::max(lower_p, lower_q);
    detail += name + " rel " + fmt(rel) + "; ";
    if (!(rel <= 0.03)) ok = false;
  }
  report(8, "conjugate duality: a on l^3 vs conj(a) on l^{3/2} at N=1024", ok,
         detail);
}

// --- criterion 9: interpolation consistency on sections ---
void criterion_9() {
  bool ok = true;
  std::string detail;
  // diagonal sections: exact equality
  const Symbol c = Symbol::constant(cplx{0.8, -1.1});
  const double e2 =
      multiplier_norm_lower(c, SpaceSpec::lebesgue(2.0), 8, 2, 20, 1).lower;
  const double e3 =
      multiplier_norm_lower(c, SpaceSpec::lebesgue(3.0), 8, 2, 20, 1).lower;
  const double e15 =
      multiplier_norm_lower(c, SpaceSpec::lebesgue(1.5), 8, 2, 20, 1).lower;
  if (std::abs(e2 - std::sqrt(e3 * e15)) > 1e-12) {
    ok = false;
    detail += "diagonal equality fails; ";
  }
  // nonnegative random sections with the exhaustive-restart ascent oracle
  Rng rng(2024);
  double worst = 0.0;
  for (int t = 0; t < 6; ++t) {
    std::vector<cplx> coeffs(7);
    for (cplx& z : coeffs) z = std::abs(rng.normal());
    const Symbol a = Symbol::trig_poly(std::move(coeffs));
    const long long N = 8 + static_cast<long long>(rng.next_u64() % 9);
    const double n2 =
        multiplier_norm_lower(a, SpaceSpec::lebesgue(2.0), N, 8, 120, 7 + t).lower;
    const double np =
        multiplier_norm_lower(a, SpaceSpec::lebesgue(3.0), N, 32, 150, 7 + t).lower;
    const double nq =
        multiplier_norm_lower(a, SpaceSpec::lebesgue(1.5), N, 32, 150, 7 + t).lower;
    const double excess = n2 / std::sqrt(np * nq) - 1.0;
    worst = std::max(worst, excess);
    if (!(excess <= 1e-6)) ok = false;
  }
  detail += "max interpolation excess " + fmt(worst);
  report(9, "Riesz-Thorin consistency on diagonal and random sections", ok,
         detail);
}

// --- criterion 10: oracle equivalences ---
void criterion_10() {
  bool ok = true;
  std::string detail;

  // (a) rearrangement vs the inf-definition brute force
  {
    Rng rng(99);
    bool sub = true;
    for (int t = 0; t < 40; ++t) {
      const std::size_t len = 1 + rng.next_u64() % 50;
      std::vector<cplx> vals(len);
      for (cplx& v : vals) v = rng.complex_normal();
      const FiniteSequence f(-25, vals);
      const auto lib = decreasing_rearrangement(f);
      const auto ref = oracles::rearrangement_by_inf_definition(f);
      if (lib.size() != ref.size()) sub = false;
      for (std::size_t i = 0; sub && i < lib.size(); ++i) {
        if (std::abs(lib[i] - ref[i]) > 1e-12 * std::max(1.0, ref[i])) sub = false;
      }
    }
    if (!sub) detail += "rearrangement oracle mismatch; ";
    ok = ok && sub;
  }

  // (b) closed-form Fourier coefficients vs 1e-10 quadrature
  {
    bool sub = true;
    double worst = 0.0;
    const Symbol reps[] = {Symbol::indicator(0.0, kPi, 1.0),
                           Symbol::hat(1.0, kPi)};
    for (const Symbol& a : reps) {
      for (long long n = -64; n <= 64; ++n) {
        const cplx lib = a.fourier_coefficient(n);
        const cplx ref =
            oracles::fourier_coefficient_by_quadrature(a, n, 1e-12);
        worst = std::max(worst, std::abs(lib - ref));
        if (std::abs(lib - ref) > 1e-10) sub = false;
      }
    }
    detail += "coeff max err " + fmt(worst) + "; ";
    ok = ok && sub;
  }

  // (c) Fejer averaging identity vs the coefficient formula
  {
    Rng rng(17);
    bool sub = true;
    for (int t = 0; t < 8; ++t) {
      std::vector<cplx> cs(11);
      for (cplx& z : cs) z = rng.complex_normal();
      const Symbol a = Symbol::trig_poly(std::move(cs));
      const long long n = 1 + static_cast<long long>(rng.next_u64() % 16);
      const Symbol fm = fejer_mean(a, n);
      for (long long m = -n; m <= n; ++m) {
        cplx avg{0, 0};
        for (long long k = std::llabs(m); k <= n; ++k) avg += a.coeff(m);
        avg /= static_cast<double>(n + 1);
        if (std::abs(fm.coeff(m) - avg) > 1e-14 * (1.0 + std::abs(avg))) {
          sub = false;
        }
      }
    }
    if (!sub) detail += "averaging identity mismatch; ";
    ok = ok && sub;
  }

  // (d) shift norm on weighted l^p vs the basis brute force
  {
    bool sub = true;
    const Weight w = Weight::power(0.3);
    for (double p : {1.5, 2.0, 3.0}) {
      const long long N = 64;
      const auto est = multiplier_norm_lower(
          Symbol::exponential(1), SpaceSpec::lebesgue(p).with_weight(w), N, 2,
          30, 1);
      double brute = 0.0;
      for (long long k = -N; k <= N - 1; ++k) {
        brute = std::max(brute, w.value(k + 1) / w.value(k));
      }
      if (std::abs(est.lower - brute) > 1e-12 * brute) sub = false;
    }
    if (!sub) detail += "shift window sup mismatch; ";
    ok = ok && sub;
  }

  report(10, "oracle equivalences (rearrangement, coefficients, Fejer, shift)",
         ok, detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite: Laurent multipliers on weighted "
              "rearrangement-invariant sequence spaces\n");
  const Fixtures fx;
  criterion_1(fx);
  criterion_2(fx);
  criterion_3(fx);
  criterion_4(fx);
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8(fx);
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
