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

#include "exwit/dynamics.hpp"

#include <cmath>
#include <string>

namespace exwit {

namespace {

ComplexMatrix two_site(int n, int i, Pauli a, int j, Pauli b) {
  return pauli_string_matrix(PauliString::pair(n, i, a, j, b));
}

ComplexMatrix hop_pauli(int n, int k) {
  return 0.5 * (two_site(n, k, Pauli::X, k + 1, Pauli::X) + two_site(n, k, Pauli::Y, k + 1, Pauli::Y));
}

ComplexMatrix hop_ladder(int n, int k) {
  return 0.25 * (two_site(n, k, Pauli::Plus, k + 1, Pauli::Minus) +
                 two_site(n, k, Pauli::Minus, k + 1, Pauli::Plus));
}

ComplexMatrix field_terms(const XXChainSpec& spec) {
  const int n = spec.n_sites;
  ComplexMatrix h = ComplexMatrix::Zero(Eigen::Index(1) << n, Eigen::Index(1) << n);
  for (int k = 0; k < n; ++k)
    if (spec.fields[static_cast<size_t>(k)] != 0.0)
      h -= spec.fields[static_cast<size_t>(k)] * pauli_string_matrix(PauliString::single(n, k, Pauli::Z));
  return h;
}

}  // namespace

XXChainSpec XXChainSpec::uniform(int n_sites, double j, double b) {
  XXChainSpec s;
  s.n_sites = n_sites;
  s.couplings.assign(static_cast<size_t>(std::max(n_sites - 1, 0)), j);
  s.fields.assign(static_cast<size_t>(std::max(n_sites, 0)), b);
  return s;
}

void XXChainSpec::validate() const {
  if (n_sites < 1) throw StructuralError("XXChainSpec: n_sites must be >= 1");
  if (static_cast<int>(couplings.size()) != n_sites - 1)
    throw StructuralError("XXChainSpec: couplings has length " + std::to_string(couplings.size()) +
                          ", expected " + std::to_string(n_sites - 1));
  if (static_cast<int>(fields.size()) != n_sites)
    throw StructuralError("XXChainSpec: fields has length " + std::to_string(fields.size()) +
                          ", expected " + std::to_string(n_sites));
  for (double v : couplings)
    if (!std::isfinite(v)) throw StructuralError("XXChainSpec: couplings must be finite");
  for (double v : fields)
    if (!std::isfinite(v)) throw StructuralError("XXChainSpec: fields must be finite");
}

const char* to_string(PropagationMode m) {
  switch (m) {
    case PropagationMode::Exact: return "exact";
    case PropagationMode::PerturbativeOrder1: return "pert1";
    case PropagationMode::PerturbativeOrder2: return "pert2";
  }
  return "?";
}

ComplexMatrix build_xx_hamiltonian(const XXChainSpec& spec) {
  spec.validate();
  ComplexMatrix h = field_terms(spec);
  for (int k = 0; k + 1 < spec.n_sites; ++k) h += spec.couplings[static_cast<size_t>(k)] * hop_pauli(spec.n_sites, k);
  return h;
}

ComplexMatrix build_xx_hamiltonian_ladder(const XXChainSpec& spec) {
  spec.validate();
  ComplexMatrix h = field_terms(spec);
  for (int k = 0; k + 1 < spec.n_sites; ++k) h += spec.couplings[static_cast<size_t>(k)] * hop_ladder(spec.n_sites, k);
  return h;
}

double xx_form_mismatch(const XXChainSpec& spec) {
  return max_abs_diff(build_xx_hamiltonian(spec), build_xx_hamiltonian_ladder(spec));
}

double xx_form_ratio() {
  const ComplexMatrix p = hop_pauli(2, 0), l = hop_ladder(2, 0);
  // both forms are real multiples of |01><10| + h.c.
  return l(1, 2).real() / p(1, 2).real();
}

ComplexMatrix build_pair_hamiltonian(const XXChainSpec& spec, int k) {
  spec.validate();
  const int n = spec.n_sites;
  if (k < 0 || k + 1 >= n) throw StructuralError("build_pair_hamiltonian: pair index out of range");
  ComplexMatrix h = spec.couplings[static_cast<size_t>(k)] * hop_pauli(n, k);
  for (int s : {k, k + 1})
    h -= spec.fields[static_cast<size_t>(s)] * pauli_string_matrix(PauliString::single(n, s, Pauli::Z));
  return h;
}

ComplexMatrix total_z(int n_sites) {
  const Eigen::Index d = Eigen::Index(1) << n_sites;
  ComplexMatrix z = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    int ones = 0;
    for (int b = 0; b < n_sites; ++b) ones += static_cast<int>((i >> b) & 1);
    z(i, i) = static_cast<double>(n_sites - 2 * ones);
  }
  return z;
}

Propagator make_propagator(const ComplexMatrix& h, double t, PropagationMode mode) {
  const Eigen::Index d = h.rows();
  const Complex i(0.0, 1.0);
  switch (mode) {
    case PropagationMode::Exact:
      return {matrix_exp_hermitian(h, t), t, mode};
    case PropagationMode::PerturbativeOrder1:
      return {identity(static_cast<int>(d)) - i * t * h, t, mode};
    case PropagationMode::PerturbativeOrder2:
      return {identity(static_cast<int>(d)) - i * t * h - 0.5 * t * t * h * h, t, mode};
  }
  throw StructuralError("make_propagator: unknown mode");
}

ComplexMatrix propagate(const ComplexMatrix& rho, const ComplexMatrix& h, double t, PropagationMode mode) {
  if (rho.rows() != h.rows() || rho.cols() != h.cols())
    throw StructuralError("propagate: state and Hamiltonian dimensions differ");
  const Complex i(0.0, 1.0);
  switch (mode) {
    case PropagationMode::Exact: {
      const ComplexMatrix u = matrix_exp_hermitian(h, t);
      return u * rho * u.adjoint();
    }
    case PropagationMode::PerturbativeOrder1:
      return rho - i * t * commutator(h, rho);
    case PropagationMode::PerturbativeOrder2: {
      const ComplexMatrix c1 = commutator(h, rho);
      return rho - i * t * c1 - 0.5 * t * t * commutator(h, c1);
    }
  }
  throw StructuralError("propagate: unknown mode");
}

ComplexMatrix propagate(const ComplexMatrix& rho, const XXChainSpec& spec, double t, PropagationMode mode) {
  if (rho.rows() != (Eigen::Index(1) << spec.n_sites))
    throw StructuralError("propagate: state dimension is not 2^N");
  return propagate(rho, build_xx_hamiltonian(spec), t, mode);
}

double check_conservation(const ComplexMatrix& op, const ComplexMatrix& z_total) {
  if (op.rows() != z_total.rows() || op.cols() != z_total.cols())
    throw StructuralError("check_conservation: dimensions differ");
  return commutator(op, z_total).norm();
}

}  // namespace exwit
