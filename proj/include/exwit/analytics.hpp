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

#include <string>
#include <vector>

#include "exwit/channels.hpp"
#include "exwit/dynamics.hpp"
#include "exwit/protocol.hpp"

namespace exwit {

// cos^{2k}(eta): k maximally mixed collisions on one coherence.
double markov_damping(int k_collisions, double eta);

// One term of the general-N Markov photon state.
struct MarkovTerm {
  std::string label;     // e.g. "A(1,2)", "Z2*S(1,3)"
  int cos_exponent = 0;  // power of cos(eta)
  int t_order = 0;
  Complex prefactor;     // coefficient without the cos factor
  Complex value;         // prefactor * cos^cos_exponent
};

// Terms of the closed-form Markov final state. The N-site chain term is only
// listed through its prefactor and leading damping exponent.
std::vector<MarkovTerm> markov_final_state(int n, int m, double eta, double t, const std::vector<double>& j,
                                           const std::vector<double>& b);
const MarkovTerm& find_term(const std::vector<MarkovTerm>& terms, const std::string& label);

enum class CollidingMonomer { First, Second };

struct HoppingCoefficients {
  Complex F;            // antisymmetric hop weight
  Complex G;            // symmetric hop weight
  double s = 1.0;       // Bloch z of the last monomer, the reservoir-channel weight
  double markov = 1.0;  // Markov weight at the same stage
  int l = 0;            // collisions done on monomer 1 in the entangled round
  int m = 0;            // collisions done on monomer 2
};

// A collision of monomer 1 (2) with a reservoir qubit of Bloch z r_z rotates
// F and G into each other with phase +i (-i) cos sin r_z.
HoppingCoefficients fg_recursion_step(const HoppingCoefficients& prev, double r_z, double eta,
                                      CollidingMonomer which);

// Bloch z values of the non-Markov bookkeeping in the weak-transfer limit.
// reservoir_z[k][j][q]: qubit q right after meeting monomer j in iteration k+1.
// monomer_z[k][j][q]: monomer j right after meeting qubit q in iteration k+1.
struct ReservoirBlochTrace {
  int n_monomers = 0;
  int n_reservoir = 0;
  std::vector<std::vector<std::vector<double>>> reservoir_z;
  std::vector<std::vector<std::vector<double>>> monomer_z;

  double r(int iteration, int monomer, int qubit) const;  // 1-based indices
  double s(int iteration, int monomer, int qubit) const;
};

ReservoirBlochTrace reservoir_trace(double eta, int n = 3, int m = 3);

struct FGResult {
  HoppingCoefficients seed;                 // after the first transfer, before further collisions
  std::vector<HoppingCoefficients> stages;  // one per collision of monomer 1 or 2 in iteration 2
  HoppingCoefficients final;                // F(eta), G(eta), s(eta)
};

FGResult compute_fg_stages(double eta, Environment env = Environment::NonMarkov,
                           CollisionOrder order = CollisionOrder::ReservoirMajor);
HoppingCoefficients compute_FGs(double eta);

// Short reference closed form for s(eta); the recursion above is authoritative.
double reference_s_closed_form(double eta);

// Normalized F, G read off an engine trace at every collision of monomers 1 and 2
// during the second decoherence round; s is the final Bloch z of monomer 3.
std::vector<HoppingCoefficients> engine_fg_stages(const ProtocolTrace& trace);

double s_vs_cos_gap(double eta);
double F_vs_markov_gap(double eta);
double G_magnitude(double eta);

// --- finite-t coefficient pipeline for three monomers -------------------------

struct PipelineConfig {
  int n_reservoir = 3;
  double eta = 0.1;
  double t = 1e-3;
  double j1 = 1.0, j2 = 1.0;
  double b1 = 0.0, b2 = 0.0, b3 = 0.0;
  Environment environment = Environment::NonMarkov;
  PropagationMode mode = PropagationMode::PerturbativeOrder2;
  CollisionOrder order = CollisionOrder::MonomerMajor;
};

// rho_12 = 1/4 (I + a1 Z1 + a2 Z2 + a12 Z1 Z2) + alpha A + beta S
struct PairState {
  double a1 = 0.0, a2 = 0.0, a12 = 0.0;
  Complex alpha, beta;
};

struct PipelineStage {
  int monomer = 0;  // 0-based
  int qubit = 0;
  Complex alpha, beta;
};

// Raw coefficients of the three-monomer photon state.
struct PipelineResult {
  PairState pair;     // pair (1,2) entering the last transfer
  double s3 = 0.0;    // Bloch z of monomer 3 entering the last transfer
  std::vector<double> reservoir;
  std::vector<PipelineStage> stages;  // iteration-2 collisions in schedule order
  PairHop hop12;
  ChainHop hop13;
  PairHop hop23;          // terms beyond the reference structure
  PairHop hop23_z1;
};

PipelineResult coefficient_pipeline(const PipelineConfig& config);

}  // namespace exwit
