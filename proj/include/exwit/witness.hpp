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

#include "exwit/protocol.hpp"

namespace exwit {

// H = alpha Z_Q + beta Z_M + gamma Z_Q Z_M on probe (first) and mediator (second).
struct ClassicalHamiltonianSpec {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  ComplexMatrix matrix() const;
};

enum class Verdict { TaskAchieved, TaskNotAchieved };

const char* to_string(Verdict v);

struct WitnessReport {
  double conservation_residual = 0.0;
  double coherence = 0.0;
  Verdict verdict = Verdict::TaskNotAchieved;
  double threshold = 0.0;
};

inline constexpr double kResidualLimit = 1e-9;

// Var(Z_Q) after exp(-iHt) on a computational basis state |q m>.
double sharpness_after(const ComplexMatrix& h_qm, double t, int q_bit, int m_bit);
double classical_nogo_sharpness(const ClassicalHamiltonianSpec& spec, double t, int q_bit, int m_bit);

// 1e-6 t J: well below any first-order hop, well above truncation residue.
double default_threshold(double t, double j1);

double photon_coherence(const PhotonState& photon);
WitnessReport evaluate_witness(const ProtocolTrace& trace, double threshold);
WitnessReport evaluate_witness(const ProtocolTrace& trace);

}  // namespace exwit
