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

#include <map>
#include <utility>
#include <vector>

#include "exwit/channels.hpp"
#include "exwit/dynamics.hpp"
#include "exwit/terms.hpp"

namespace exwit {

// Chain plus one attached reservoir qubit must fit this many qubits.
inline constexpr int kMaxQubits = 10;

enum class Engine { Exact, Perturbative1, Perturbative2 };
// MonomerMajor: each monomer meets qubits 1..M before the next monomer.
// ReservoirMajor: each reservoir qubit meets monomers 1..N before the next qubit.
enum class CollisionOrder { MonomerMajor, ReservoirMajor };
enum class Phase { Injection, Decoherence, Transfer, Recombination };

const char* to_string(Engine e);
const char* to_string(CollisionOrder o);
const char* to_string(Phase p);
PropagationMode propagation_mode(Engine e);

struct ChainConfig {
  int n_monomers = 3;
  int n_reservoir = 3;
  double eta = 0.1;
  double t = 1e-3;
  XXChainSpec spec = XXChainSpec::uniform(3);
  Environment environment = Environment::Markov;
  Engine engine = Engine::Perturbative2;
  CollisionOrder order = CollisionOrder::MonomerMajor;

  static ChainConfig make(int n, int m, double eta, Environment env, Engine engine = Engine::Perturbative2,
                          double t = 1e-3);
  void validate() const;
};

struct PhotonState {
  int n_sites = 0;
  // p_0 (vacuum) followed by p_i, photon on site i.
  std::vector<double> populations;
  // Weight outside the vacuum and single-photon sectors.
  double multi_excitation = 0.0;
  // Coefficient of a+_i a-_j in the reduced state of sites (i, j).
  std::map<std::pair<int, int>, Complex> coherences;
  ComplexMatrix register_state;

  double total_weight() const;
};

struct CollisionSnapshot {
  CollisionRecord record;
  PairHop first_pair;  // raw hop coefficients of monomers 0, 1 after the collision
};

struct PhaseRecord {
  int iteration = 0;
  Phase phase = Phase::Injection;
  ComplexMatrix chain_state;
  std::vector<BlochVector> chain_bloch;
  std::vector<BlochVector> reservoir;
  std::vector<CollisionSnapshot> collisions;
  std::map<std::pair<int, int>, PairHop> hops;
  double conserved_z = 0.0;
};

struct ProtocolTrace {
  ChainConfig config;
  std::vector<PhaseRecord> phases;
  PhotonState photon;
  bool complete = false;
  double conservation_drift = 0.0;   // max |change| of the total Z bookkeeping
  double generator_residual = 0.0;   // max ||[generator, total Z]||_F over the run

  int iterations() const;
  const PhaseRecord& find(int iteration, Phase phase) const;
};

struct DecoherenceResult {
  ComplexMatrix state;
  ReservoirState reservoir;
  std::vector<CollisionSnapshot> collisions;
  double discarded_z = 0.0;  // Z carried away by reset Markov reservoir qubits
};

ComplexMatrix inject_photon(const ChainConfig& config);
DecoherenceResult decoherence_phase(const ComplexMatrix& state, const ReservoirState& reservoir,
                                    const ChainConfig& config, int k);
ComplexMatrix transfer_phase(const ComplexMatrix& state, const ChainConfig& config, int k);
PhotonState recombine(const ComplexMatrix& state, const ChainConfig& config);
ProtocolTrace run_protocol(const ChainConfig& config);

// Reduced Bloch vectors of every chain site.
std::vector<BlochVector> site_bloch_vectors(const ComplexMatrix& rho);
double expectation_total_z(const ComplexMatrix& rho);

}  // namespace exwit
