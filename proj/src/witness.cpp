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

#include "exwit/witness.hpp"

#include <algorithm>
#include <cmath>

namespace exwit {

ComplexMatrix ClassicalHamiltonianSpec::matrix() const {
  const ComplexMatrix zq = pauli_string_matrix(PauliString{Pauli::Z, Pauli::I});
  const ComplexMatrix zm = pauli_string_matrix(PauliString{Pauli::I, Pauli::Z});
  return alpha * zq + beta * zm + gamma * zq * zm;
}

const char* to_string(Verdict v) { return v == Verdict::TaskAchieved ? "achieved" : "not-achieved"; }

double sharpness_after(const ComplexMatrix& h_qm, double t, int q_bit, int m_bit) {
  if (h_qm.rows() != 4 || h_qm.cols() != 4) throw StructuralError("sharpness_after: expected a two-qubit generator");
  if ((q_bit != 0 && q_bit != 1) || (m_bit != 0 && m_bit != 1))
    throw StructuralError("sharpness_after: basis labels must be 0 or 1");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(2 * q_bit + m_bit) = 1.0;
  psi = matrix_exp_hermitian(h_qm, t) * psi;
  const ComplexMatrix zq = pauli_string_matrix(PauliString{Pauli::Z, Pauli::I});
  const double mean = psi.dot(zq * psi).real();
  // Z_Q^2 = I
  return std::max(0.0, 1.0 - mean * mean);
}

double classical_nogo_sharpness(const ClassicalHamiltonianSpec& spec, double t, int q_bit, int m_bit) {
  return sharpness_after(spec.matrix(), t, q_bit, m_bit);
}

double default_threshold(double t, double j1) { return 1e-6 * t * std::abs(j1); }

double photon_coherence(const PhotonState& photon) {
  double sum = 0.0;
  for (const auto& [ij, c] : photon.coherences)
    if (ij.first != ij.second) sum += std::abs(c);
  return sum;
}

WitnessReport evaluate_witness(const ProtocolTrace& trace, double threshold) {
  if (!trace.complete) throw StructuralError("evaluate_witness: trace is incomplete");
  WitnessReport rep;
  rep.threshold = threshold;
  rep.coherence = photon_coherence(trace.photon);
  rep.conservation_residual = std::max(trace.conservation_drift, trace.generator_residual);
  rep.verdict = rep.coherence > threshold && rep.conservation_residual < kResidualLimit ? Verdict::TaskAchieved
                                                                                        : Verdict::TaskNotAchieved;
  return rep;
}

WitnessReport evaluate_witness(const ProtocolTrace& trace) {
  const auto& j = trace.config.spec.couplings;
  return evaluate_witness(trace, default_threshold(trace.config.t, j.empty() ? 1.0 : j.front()));
}

}  // namespace exwit
