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

#pragma once

#include <vector>

#include "exwit/linalg.hpp"

namespace exwit {

// Open chain: couplings J_0..J_{N-2} link neighbours, fields B_0..B_{N-1}.
struct XXChainSpec {
  int n_sites = 1;
  std::vector<double> couplings;
  std::vector<double> fields;

  static XXChainSpec uniform(int n_sites, double j = 1.0, double b = 0.0);
  void validate() const;
};

enum class PropagationMode { Exact, PerturbativeOrder1, PerturbativeOrder2 };

const char* to_string(PropagationMode m);

struct Propagator {
  ComplexMatrix matrix;
  double t = 0.0;
  PropagationMode mode = PropagationMode::Exact;
};

// 1/2 sum J (X X + Y Y) - sum B Z
ComplexMatrix build_xx_hamiltonian(const XXChainSpec& spec);
// 1/4 sum J (s+ s- + s- s+) - sum B Z, the ladder-operator form
ComplexMatrix build_xx_hamiltonian_ladder(const XXChainSpec& spec);
// max|H_pauli - H_ladder| and the ratio of their hopping parts
double xx_form_mismatch(const XXChainSpec& spec);
double xx_form_ratio();

// J_k hop(k, k+1) - B_k Z_k - B_{k+1} Z_{k+1}, embedded in the full chain.
ComplexMatrix build_pair_hamiltonian(const XXChainSpec& spec, int k);

ComplexMatrix total_z(int n_sites);

Propagator make_propagator(const ComplexMatrix& h, double t, PropagationMode mode);

// Exact: U rho U^dag. Perturbative: rho - it[H,rho] (- t^2/2 [H,[H,rho]]).
ComplexMatrix propagate(const ComplexMatrix& rho, const ComplexMatrix& h, double t, PropagationMode mode);
ComplexMatrix propagate(const ComplexMatrix& rho, const XXChainSpec& spec, double t, PropagationMode mode);

// Frobenius norm of [op, z_total].
double check_conservation(const ComplexMatrix& op, const ComplexMatrix& z_total);

}  // namespace exwit
