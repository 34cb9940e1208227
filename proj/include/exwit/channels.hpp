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

#include <span>
#include <vector>

#include "exwit/linalg.hpp"

namespace exwit {

enum class Environment { Markov, NonMarkov };

const char* to_string(Environment e);

struct ReservoirState {
  std::vector<BlochVector> qubits;
  Environment policy = Environment::Markov;
  double eta = 0.0;

  static ReservoirState maximally_mixed(int m, Environment policy, double eta);
  int size() const { return static_cast<int>(qubits.size()); }
  ReservoirState reinitialized() const;
};

struct CollisionRecord {
  int monomer_index = 0;
  int reservoir_index = 0;
  int iteration = 0;
  BlochVector s_before, s_after, r_before, r_after;
};

ComplexMatrix swap_unitary();
// cos(eta) I + i sin(eta) SWAP
ComplexMatrix pswap_unitary(double eta);

struct CollisionOutcome {
  BlochVector system;
  BlochVector reservoir;
};

// Reduced single-qubit update of a product input under one partial swap.
CollisionOutcome bloch_pswap_update(const BlochVector& s, const BlochVector& r, double eta);

struct HomogenizationResult {
  BlochVector system;
  ReservoirState reservoir;
  std::vector<CollisionRecord> records;
};

// Collides s with reservoir qubits 0..M-1 in order. A Markov reservoir is
// reset to the maximally mixed state first.
HomogenizationResult homogenize_monomer(const BlochVector& s, const ReservoirState& res,
                                        int monomer_index = 0, int iteration = 0);

// Conjugates rho_joint by the partial swap acting on qubit factors site_a, site_b.
ComplexMatrix apply_pswap_density(const ComplexMatrix& rho_joint, int site_a, int site_b,
                                  std::span<const int> dims, double eta);

// Partial swap on qubits a, b of an n-qubit register, as a full matrix.
ComplexMatrix embedded_pswap(int n_qubits, int a, int b, double eta);

}  // namespace exwit
