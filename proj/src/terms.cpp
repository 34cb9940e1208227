// Copyright 2026 The exwit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exwit/terms.hpp"

#include <array>

namespace exwit {

namespace {

PairHop split(Complex plus_minus, Complex minus_plus) {
  return {0.5 * (plus_minus - minus_plus), 0.5 * (plus_minus + minus_plus)};
}

}  // namespace

PairHop pair_hop(const ComplexMatrix& rho, int n_sites, int i, int j) {
  if (i == j) throw StructuralError("pair_hop: sites must differ");
  const std::array<int, 2> keep{std::min(i, j), std::max(i, j)};
  const ComplexMatrix r = partial_trace_qubits(rho, n_sites, keep);
  const bool flipped = i > j;
  const Complex pm = hs_project(r, PauliString{flipped ? Pauli::Minus : Pauli::Plus, flipped ? Pauli::Plus : Pauli::Minus});
  const Complex mp = hs_project(r, PauliString{flipped ? Pauli::Plus : Pauli::Minus, flipped ? Pauli::Minus : Pauli::Plus});
  return split(pm, mp);
}

ChainHop chain_hop(const ComplexMatrix& rho, int n_sites, int i, int mid, int j) {
  if (!(i < mid && mid < j)) throw StructuralError("chain_hop: expected i < mid < j");
  const std::array<int, 3> keep{i, mid, j};
  const ComplexMatrix r = partial_trace_qubits(rho, n_sites, keep);
  auto coeff = [&](Pauli a, Pauli m, Pauli b) { return hs_project(r, PauliString{a, m, b}); };
  return {split(coeff(Pauli::Plus, Pauli::Z, Pauli::Minus), coeff(Pauli::Minus, Pauli::Z, Pauli::Plus)),
          split(coeff(Pauli::Plus, Pauli::I, Pauli::Minus), coeff(Pauli::Minus, Pauli::I, Pauli::Plus))};
}

Complex hop_scale(double t, double j) { return Complex(0.0, -t * j / 4.0); }

double chain_scale(double t, double j1, double j2) { return -t * t * j1 * j2 / 8.0; }

PairHop normalized(const PairHop& h, Complex scale) {
  return {h.antisymmetric / scale, h.symmetric / scale};
}

}  // namespace exwit
