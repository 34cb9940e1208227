#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>

#include "exwit/dynamics.hpp"

using namespace exwit;

namespace {

ComplexMatrix random_density(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix rho = a * a.adjoint();
  return rho / rho.trace();
}

}  // namespace

TEST_CASE("two-site hamiltonian") {
  XXChainSpec spec{2, {0.7}, {0.2, -0.4}};
  const ComplexMatrix x = pauli_matrix(Pauli::X), y = pauli_matrix(Pauli::Y), z = pauli_matrix(Pauli::Z);
  const ComplexMatrix expect = 0.35 * (kron(x, x) + kron(y, y)) - 0.2 * kron(z, identity(2)) +
                               0.4 * kron(identity(2), z);
  CHECK(max_abs_diff(build_xx_hamiltonian(spec), expect) < 1e-15);
  CHECK(xx_form_mismatch(spec) < 1e-15);
  CHECK(xx_form_ratio() == 1.0);
}

TEST_CASE("one-site chain is a bare field") {
  XXChainSpec spec{1, {}, {0.9}};
  CHECK(max_abs_diff(build_xx_hamiltonian(spec), -0.9 * pauli_matrix(Pauli::Z)) == 0.0);
}

TEST_CASE("single-excitation block is tridiagonal with unit hopping") {
  const XXChainSpec spec = XXChainSpec::uniform(4);
  const ComplexMatrix h = build_xx_hamiltonian(spec);
  // one excitation (|1> at site k) sits at index 2^(N-1-k)
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Complex v = h(1 << (3 - a), 1 << (3 - b));
      if (std::abs(a - b) == 1) CHECK(std::abs(v - Complex(1.0)) < 1e-15);
      else CHECK(std::abs(v) < 1e-15);
    }
}

TEST_CASE("ladder and pauli forms agree on random chains") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (int n = 2; n <= 5; ++n) {
    XXChainSpec spec{n, {}, {}};
    for (int k = 0; k + 1 < n; ++k) spec.couplings.push_back(g(rng));
    for (int k = 0; k < n; ++k) spec.fields.push_back(g(rng));
    CHECK(max_abs_diff(build_xx_hamiltonian(spec), build_xx_hamiltonian_ladder(spec)) < 1e-14);
  }
}

TEST_CASE("invalid chain specs are rejected") {
  CHECK_THROWS_AS((XXChainSpec{3, {1.0}, {0, 0, 0}}.validate()), StructuralError);
  CHECK_THROWS_AS((XXChainSpec{0, {}, {}}.validate()), StructuralError);
  CHECK_THROWS_AS((XXChainSpec{2, {NAN}, {0, 0}}.validate()), StructuralError);
}

TEST_CASE("propagation at zero time is the identity map") {
  std::mt19937_64 rng(22);
  const ComplexMatrix rho = random_density(8, rng);
  const XXChainSpec spec = XXChainSpec::uniform(3, 1.0, 0.3);
  for (auto mode : {PropagationMode::Exact, PropagationMode::PerturbativeOrder1, PropagationMode::PerturbativeOrder2})
    CHECK(max_abs_diff(propagate(rho, spec, 0.0, mode), rho) < 1e-15);
}

TEST_CASE("first-order hop of a damped pair") {
  const int m = 3;
  const double eta = 0.1, t = 1e-3, cm = std::pow(std::cos(eta), 2 * m);
  const ComplexMatrix z = pauli_matrix(Pauli::Z);
  const ComplexMatrix rho = kron(0.5 * (identity(2) - cm * z), 0.5 * (identity(2) + cm * z));
  const ComplexMatrix out = propagate(rho, XXChainSpec::uniform(2), t, PropagationMode::PerturbativeOrder1);
  const Complex pm = hs_project(out, PauliString{Pauli::Plus, Pauli::Minus});
  const Complex mp = hs_project(out, PauliString{Pauli::Minus, Pauli::Plus});
  // a+- = -(itJ/4) c^(2M), a-+ the negative
  CHECK(std::abs(pm - Complex(0, -t / 4.0) * cm) < 1e-18);
  CHECK(std::abs(mp + pm) < 1e-18);
}

TEST_CASE("second-order truncation error scales as t^3") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  ComplexMatrix a(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a(i, j) = Complex(g(rng), g(rng));
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  const ComplexMatrix rho = random_density(8, rng);
  std::vector<double> lx, ly;
  for (double t : {1e-3, 2e-3, 4e-3, 8e-3, 1.6e-2}) {
    const double err = max_abs_diff(propagate(rho, h, t, PropagationMode::PerturbativeOrder2),
                                    propagate(rho, h, t, PropagationMode::Exact));
    lx.push_back(std::log(t));
    ly.push_back(std::log(err));
  }
  const double slope = (ly.back() - ly.front()) / (lx.back() - lx.front());
  CHECK(slope == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("evolution preserves excitation-number blocks") {
  std::mt19937_64 rng(24);
  const int n = 3;
  const ComplexMatrix rho = random_density(1 << n, rng);
  ComplexMatrix block = ComplexMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (std::popcount(unsigned(i)) == std::popcount(unsigned(j))) block(i, j) = rho(i, j);
  const ComplexMatrix out = propagate(block, XXChainSpec::uniform(n, 0.8, 0.2), 0.9, PropagationMode::Exact);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (std::popcount(unsigned(i)) != std::popcount(unsigned(j))) CHECK(std::abs(out(i, j)) < 1e-14);
}

TEST_CASE("conservation check") {
  for (int n = 1; n <= 5; ++n) {
    const ComplexMatrix zt = total_z(n);
    XXChainSpec spec = XXChainSpec::uniform(n, 1.3, 0.4);
    CHECK(check_conservation(build_xx_hamiltonian(spec), zt) < 1e-12);
    for (int k = 0; k + 1 < n; ++k) CHECK(check_conservation(build_pair_hamiltonian(spec, k), zt) < 1e-12);
    // [X_1, Z_total] = [X, Z] on site one; ||[X,Z]|| = 2 sqrt(2) on one qubit
    const double expect = 2.0 * std::sqrt(2.0) * std::sqrt(double(1 << (n - 1)));
    CHECK(check_conservation(pauli_string_matrix(PauliString::single(n, 0, Pauli::X)), zt) ==
          doctest::Approx(expect).epsilon(1e-12));
  }
}
