#include <doctest.h>

#include <cmath>
#include <numbers>

#include "exwit/analytics.hpp"

using namespace exwit;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

TEST_CASE("markov damping") {
  CHECK(markov_damping(4, 0.1) == doctest::Approx(0.961).epsilon(5e-4));
  CHECK(markov_damping(9, 0.1) == doctest::Approx(0.914).epsilon(5e-4));
  CHECK(std::abs(markov_damping(9, 0.1) - std::pow(std::cos(0.1), 18)) < 1e-15);
  for (int k : {0, 1, 7, 30}) CHECK(markov_damping(k, 0.0) == 1.0);
  CHECK(markov_damping(0, 1.2) == 1.0);
  CHECK(markov_damping(6, kHalfPi) < 1e-90);
}

TEST_CASE("closed-form markov state for three monomers") {
  const double eta = 0.1, t = 1e-3;
  const auto terms = markov_final_state(3, 3, eta, t, {1.0, 1.0}, {0.0, 0.0, 0.0});
  const MarkovTerm& hop = find_term(terms, "A(1,2)");
  CHECK(hop.cos_exponent == 18);
  CHECK(hop.t_order == 1);
  CHECK(std::abs(hop.value) / t == doctest::Approx(0.914).epsilon(5e-4));
  CHECK(find_term(terms, "Z2*S(1,3)").cos_exponent == 18);
  CHECK(find_term(terms, "S(1,3)").cos_exponent == 30);
  CHECK(find_term(terms, "S(1,3)").t_order == 2);
  CHECK_THROWS(find_term(terms, "chain(1,3)"));

  // no damping without coupling
  for (const auto& term : markov_final_state(4, 2, 0.0, t, {1.0, 0.5, 2.0}, {0.1, 0.2, 0.3, 0.4}))
    CHECK(std::abs(term.value - term.prefactor) < 1e-15);
}

TEST_CASE("closed-form exponents follow the general-N pattern") {
  for (int n : {3, 4, 5})
    for (int m : {1, 2, 3}) {
      const auto terms = markov_final_state(n, m, 0.2, 1e-3, std::vector<double>(n - 1, 1.0), std::vector<double>(n, 0.0));
      const int lead = (2 + 4 * (n - 2)) * m;
      CHECK(find_term(terms, "A(1,2)").cos_exponent == lead);
      CHECK(find_term(terms, "Z2*S(1,3)").cos_exponent == lead + 2 * m * (n - 3));
      CHECK(find_term(terms, "S(1,3)").cos_exponent == lead + 4 * m);
    }
}

TEST_CASE("recursion step") {
  const double eta = 0.25, c = std::cos(eta), s = std::sin(eta);
  HoppingCoefficients h;
  h.F = Complex(0.7, 0.1);
  h.G = Complex(0.0, 0.05);
  const auto damped = fg_recursion_step(h, 0.0, eta, CollidingMonomer::First);
  CHECK(std::abs(damped.F - c * c * h.F) < 1e-15);
  CHECK(std::abs(damped.G - c * c * h.G) < 1e-15);
  CHECK(damped.l == 1);

  const Complex i(0, 1);
  const auto first = fg_recursion_step(h, 0.3, eta, CollidingMonomer::First);
  CHECK(std::abs(first.F - (c * c * h.F + i * c * s * 0.3 * h.G)) < 1e-15);
  CHECK(std::abs(first.G - (c * c * h.G + i * c * s * 0.3 * h.F)) < 1e-15);
  const auto second = fg_recursion_step(h, 0.3, eta, CollidingMonomer::Second);
  CHECK(std::abs(second.F - (c * c * h.F - i * c * s * 0.3 * h.G)) < 1e-15);
  CHECK(std::abs(second.G - (c * c * h.G - i * c * s * 0.3 * h.F)) < 1e-15);
  CHECK(second.m == 1);
}

TEST_CASE("reservoir bookkeeping reproduces the closed forms") {
  for (double eta : {0.05, 0.1, 0.4, 1.0}) {
    const double c = std::cos(eta), s = std::sin(eta), s2 = s * s;
    const ReservoirBlochTrace tr = reservoir_trace(eta);
    // first monomer (excited) against fresh qubits
    CHECK(std::abs(tr.r(1, 1, 1) + s2) < 1e-14);
    CHECK(std::abs(tr.r(1, 1, 2) + s2 * c * c) < 1e-14);
    CHECK(std::abs(tr.r(1, 1, 3) + s2 * std::pow(c, 4)) < 1e-14);
    // qubit one after the ground-state second monomer
    CHECK(std::abs(tr.r(1, 2, 1) - s2 * (1.0 - c * c)) < 1e-14);
    const double r3 = s2 * (3 * std::cos(2 * eta) + 6 * std::cos(4 * eta) - 3 * std::cos(6 * eta) + 26) / 32.0;
    CHECK(std::abs(tr.r(1, 3, 2) - r3) < 1e-14);
    CHECK(std::abs(tr.r(2, 1, 1) - c * c * std::pow(s, 4) * (2 + std::cos(2 * eta))) < 1e-14);
    for (const auto& it : tr.reservoir_z)
      for (const auto& mono : it)
        for (double z : mono) CHECK(std::abs(z) <= 1.0);
  }
  const ReservoirBlochTrace still = reservoir_trace(0.0);
  for (double z : still.reservoir_z[1][2]) CHECK(z == 0.0);
  CHECK_THROWS_AS(reservoir_trace(0.1, 4, 3), CapabilityError);
}

TEST_CASE("hopping coefficients") {
  const double eta = 0.1, c = std::cos(eta), s = std::sin(eta);
  const FGResult fg = compute_fg_stages(eta);
  REQUIRE(fg.stages.size() == 6);
  CHECK(std::abs(fg.stages[0].F - std::pow(c, 6) * (c * c - 1.5 * std::pow(s, 4))) < 1e-14);
  CHECK(fg.stages[0].F.real() == doctest::Approx(0.961).epsilon(5e-4));
  CHECK(std::abs(fg.stages[0].G.imag()) == doctest::Approx(9.7e-4).epsilon(5e-3));
  CHECK(fg.final.F.real() == doctest::Approx(0.914).epsilon(5e-4));
  for (const auto& st : fg.stages) {
    CHECK(std::abs(st.F.imag()) < 1e-15);
    CHECK(std::abs(st.G.real()) < 1e-15);
  }

  const HoppingCoefficients zero = compute_FGs(0.0);
  CHECK(std::abs(zero.F - Complex(1.0)) < 1e-15);
  CHECK(std::abs(zero.G) == 0.0);
  CHECK(zero.s == 1.0);

  const HoppingCoefficients strong = compute_FGs(kHalfPi);
  CHECK(std::abs(strong.s - 1.0) < 1e-12);
  CHECK(std::abs(strong.F) < 1e-12);
  CHECK(reference_s_closed_form(kHalfPi) == doctest::Approx(1.0));
  CHECK(reference_s_closed_form(0.0) == doctest::Approx(1.0));
}

TEST_CASE("gap helpers") {
  CHECK(s_vs_cos_gap(0.0) == 0.0);
  CHECK(F_vs_markov_gap(0.0) == 0.0);
  CHECK(G_magnitude(0.0) == 0.0);
  CHECK(F_vs_markov_gap(0.1) <= 1e-3);
  CHECK(s_vs_cos_gap(kHalfPi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("monomer-major recursion matches the engine") {
  for (double eta : {0.05, 0.2}) {
    ChainConfig cfg = ChainConfig::make(3, 3, eta, Environment::NonMarkov, Engine::Perturbative1);
    const auto engine = engine_fg_stages(run_protocol(cfg));
    const auto rec = compute_fg_stages(eta, Environment::NonMarkov, CollisionOrder::MonomerMajor).stages;
    REQUIRE(engine.size() == rec.size());
    for (size_t k = 0; k < rec.size(); ++k) {
      CHECK(std::abs(engine[k].F - rec[k].F) < 1e-9);
      CHECK(std::abs(engine[k].G - rec[k].G) < 1e-9);
    }
  }
}

TEST_CASE("coefficient pipeline") {
  PipelineConfig cfg;
  cfg.mode = PropagationMode::Exact;
  CHECK_THROWS_AS(coefficient_pipeline(cfg), CapabilityError);

  cfg.mode = PropagationMode::PerturbativeOrder1;
  cfg.eta = 0.0;
  const PipelineResult r = coefficient_pipeline(cfg);
  // without decoherence the pair enters the last transfer fully polarized
  CHECK(std::abs(r.s3 - 1.0) < 1e-15);
  CHECK(std::abs(r.pair.a1 + 1.0) < 1e-12);
}
