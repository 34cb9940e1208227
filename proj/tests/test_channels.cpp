#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "exwit/channels.hpp"

using namespace exwit;

namespace {

const BlochVector kExcited{0, 0, -1};
const BlochVector kMixed{0, 0, 0};

BlochVector random_ball(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    BlochVector v{u(rng), u(rng), u(rng)};
    if (v.norm() <= 1.0) return v;
  }
}

}  // namespace

TEST_CASE("partial swap unitary") {
  const ComplexMatrix u = pswap_unitary(0.37);
  CHECK(max_abs_diff(u.adjoint() * u, identity(4)) < 1e-15);
  CHECK(max_abs_diff(pswap_unitary(0.0), identity(4)) == 0.0);
  const Complex i(0, 1);
  CHECK(max_abs_diff(pswap_unitary(M_PI / 2), i * swap_unitary()) < 1e-15);
}

TEST_CASE("single collision of an excited monomer") {
  const double c2 = std::cos(0.1) * std::cos(0.1), s2 = 1.0 - c2;
  const CollisionOutcome out = bloch_pswap_update(kExcited, kMixed, 0.1);
  CHECK(out.system.z == doctest::Approx(-0.990033).epsilon(1e-6));
  CHECK(std::abs(out.system.z + c2) < 1e-15);
  CHECK(std::abs(out.reservoir.z + s2) < 1e-15);
  CHECK(std::abs(out.system.x) + std::abs(out.system.y) == 0.0);
}

TEST_CASE("markov homogenization of one monomer over three qubits") {
  const double c = std::cos(0.1), s2 = std::sin(0.1) * std::sin(0.1);
  const auto res = ReservoirState::maximally_mixed(3, Environment::Markov, 0.1);
  const HomogenizationResult h = homogenize_monomer(kExcited, res);
  CHECK(h.system.z == doctest::Approx(-0.9703969).epsilon(1e-7));
  CHECK(std::abs(h.system.z + std::pow(c, 6)) < 1e-15);
  REQUIRE(h.records.size() == 3);
  for (int q = 0; q < 3; ++q) {
    CHECK(h.records[q].reservoir_index == q);
    CHECK(std::abs(h.reservoir.qubits[q].z + s2 * std::pow(c, 2 * q)) < 1e-15);
  }

  // a Markov bank is reset before every monomer, so a second pass sees fresh qubits
  const HomogenizationResult again = homogenize_monomer(kExcited, h.reservoir);
  CHECK(max_abs_diff(again.system, h.system) < 1e-15);
}

TEST_CASE("non-markov reservoir keeps memory") {
  const double c2 = std::cos(0.1) * std::cos(0.1), s2 = 1.0 - c2;
  auto res = ReservoirState::maximally_mixed(3, Environment::NonMarkov, 0.1);
  const HomogenizationResult first = homogenize_monomer(kExcited, res, 0);
  const std::array<double, 3> r{-s2, -s2 * c2, -s2 * c2 * c2};
  for (int q = 0; q < 3; ++q) CHECK(std::abs(first.reservoir.qubits[q].z - r[q]) < 1e-15);

  // the next monomer (ground state) inherits the polarized reservoir
  const HomogenizationResult second = homogenize_monomer({0, 0, 1}, first.reservoir, 1);
  const HomogenizationResult fresh = homogenize_monomer({0, 0, 1}, res, 1);
  CHECK(second.system.z < fresh.system.z);
  CHECK(first.reservoir.reinitialized().qubits[0].norm() == 0.0);
}

TEST_CASE("bloch rule agrees with the density-matrix collision") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ue(0.0, M_PI / 2);
  const std::array<int, 2> dims{2, 2};
  const std::array<int, 1> sys{0}, env{1};
  for (int k = 0; k < 200; ++k) {
    const BlochVector s = random_ball(rng), r = random_ball(rng);
    const double eta = ue(rng);
    const ComplexMatrix joint = kron(bloch_to_density(s), bloch_to_density(r));
    const ComplexMatrix out = apply_pswap_density(joint, 0, 1, dims, eta);
    const ComplexMatrix u = pswap_unitary(eta);
    CHECK(max_abs_diff(out, u * joint * u.adjoint()) < 1e-13);
    const CollisionOutcome b = bloch_pswap_update(s, r, eta);
    CHECK(max_abs_diff(density_to_bloch(partial_trace(out, dims, sys)), b.system) < 1e-12);
    CHECK(max_abs_diff(density_to_bloch(partial_trace(out, dims, env)), b.reservoir) < 1e-12);
  }
}

TEST_CASE("partial swap preserves total Z and purity bounds") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 50; ++k) {
    const BlochVector s = random_ball(rng), r = random_ball(rng);
    const CollisionOutcome b = bloch_pswap_update(s, r, 0.3);
    CHECK(std::abs((b.system.z + b.reservoir.z) - (s.z + r.z)) < 1e-14);
    CHECK(b.system.norm() <= 1.0 + 1e-12);
    CHECK(b.reservoir.norm() <= 1.0 + 1e-12);
  }
}

TEST_CASE("embedded partial swap") {
  const ComplexMatrix u = embedded_pswap(3, 0, 2, 0.2);
  CHECK(max_abs_diff(u.adjoint() * u, identity(8)) < 1e-14);
  const ComplexMatrix direct = embedded_pswap(2, 0, 1, 0.2);
  CHECK(max_abs_diff(direct, pswap_unitary(0.2)) < 1e-15);
  CHECK_THROWS(embedded_pswap(3, 1, 1, 0.2));
}
