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

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "exwit/errors.hpp"

namespace exwit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  bool operator==(const BlochVector&) const = default;
};

BlochVector operator+(const BlochVector& a, const BlochVector& b);
BlochVector operator-(const BlochVector& a, const BlochVector& b);
BlochVector operator*(double k, const BlochVector& a);
BlochVector cross(const BlochVector& a, const BlochVector& b);
double max_abs_diff(const BlochVector& a, const BlochVector& b);

// Ladder factors follow sigma+ = X + iY, sigma- = X - iY (no 1/2).
enum class Pauli { I, X, Y, Z, Plus, Minus };

class PauliString {
 public:
  explicit PauliString(int n_sites);
  PauliString(std::initializer_list<Pauli> factors);

  static PauliString single(int n_sites, int site, Pauli p);
  static PauliString pair(int n_sites, int i, Pauli pi, int j, Pauli pj);

  PauliString& set(int site, Pauli p);
  int n_sites() const { return static_cast<int>(factors_.size()); }
  Pauli at(int site) const;
  const std::vector<Pauli>& factors() const { return factors_; }
  std::string label() const;

 private:
  std::vector<Pauli> factors_;
};

ComplexMatrix identity(int dim);
ComplexMatrix pauli_matrix(Pauli p);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

// Sites are numbered from 0 in tensor-factor order; site 0 is the most significant bit.
ComplexMatrix embed_site(int n_sites, int site, const ComplexMatrix& op2);
ComplexMatrix pauli_string_matrix(const PauliString& p);

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep);
ComplexMatrix partial_trace_qubits(const ComplexMatrix& rho, int n_qubits,
                                   std::span<const int> keep);

// exp(-i h t) by spectral decomposition.
ComplexMatrix matrix_exp_hermitian(const ComplexMatrix& h, double t);

Complex hs_project(const ComplexMatrix& rho, const PauliString& p);
Complex hs_project(const ComplexMatrix& rho, const ComplexMatrix& op);

ComplexMatrix bloch_to_density(const BlochVector& s);
BlochVector density_to_bloch(const ComplexMatrix& rho);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_error(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
int qubit_count(const ComplexMatrix& a);

}  // namespace exwit
