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

#include "exwit/channels.hpp"

#include <cmath>

namespace exwit {

namespace {

// Permutation of full basis indices that exchanges the digits of factors a and b.
std::vector<Eigen::Index> swap_permutation(std::span<const int> dims, int a, int b) {
  const int n = static_cast<int>(dims.size());
  std::vector<Eigen::Index> stride(static_cast<size_t>(n));
  Eigen::Index total = 1;
  for (int s = n - 1; s >= 0; --s) {
    stride[static_cast<size_t>(s)] = total;
    total *= dims[static_cast<size_t>(s)];
  }
  const Eigen::Index sa = stride[static_cast<size_t>(a)], sb = stride[static_cast<size_t>(b)];
  std::vector<Eigen::Index> perm(static_cast<size_t>(total));
  for (Eigen::Index i = 0; i < total; ++i) {
    const Eigen::Index da = (i / sa) % 2, db = (i / sb) % 2;
    perm[static_cast<size_t>(i)] = i + (db - da) * sa + (da - db) * sb;
  }
  return perm;
}

}  // namespace

const char* to_string(Environment e) { return e == Environment::Markov ? "markov" : "nonmarkov"; }

ReservoirState ReservoirState::maximally_mixed(int m, Environment policy, double eta) {
  if (m < 1) throw StructuralError("ReservoirState: M must be >= 1");
  return ReservoirState{std::vector<BlochVector>(static_cast<size_t>(m)), policy, eta};
}

ReservoirState ReservoirState::reinitialized() const {
  ReservoirState out = *this;
  for (auto& q : out.qubits) q = BlochVector{};
  return out;
}

ComplexMatrix swap_unitary() {
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

ComplexMatrix pswap_unitary(double eta) {
  return std::cos(eta) * identity(4) + Complex(0.0, std::sin(eta)) * swap_unitary();
}

CollisionOutcome bloch_pswap_update(const BlochVector& s, const BlochVector& r, double eta) {
  const double c = std::cos(eta), sn = std::sin(eta);
  const BlochVector rxs = cross(r, s);
  return {c * c * s + sn * sn * r - c * sn * rxs, sn * sn * s + c * c * r + c * sn * rxs};
}

HomogenizationResult homogenize_monomer(const BlochVector& s, const ReservoirState& res,
                                        int monomer_index, int iteration) {
  if (res.qubits.empty()) throw StructuralError("homogenize_monomer: empty reservoir");
  HomogenizationResult out{s, res.policy == Environment::Markov ? res.reinitialized() : res, {}};
  for (int j = 0; j < out.reservoir.size(); ++j) {
    BlochVector& r = out.reservoir.qubits[static_cast<size_t>(j)];
    const auto next = bloch_pswap_update(out.system, r, res.eta);
    out.records.push_back({monomer_index, j, iteration, out.system, next.system, r, next.reservoir});
    out.system = next.system;
    r = next.reservoir;
  }
  return out;
}

ComplexMatrix apply_pswap_density(const ComplexMatrix& rho, int site_a, int site_b,
                                  std::span<const int> dims, double eta) {
  const int n = static_cast<int>(dims.size());
  if (site_a == site_b) throw StructuralError("apply_pswap_density: sites must be distinct");
  if (site_a < 0 || site_b < 0 || site_a >= n || site_b >= n)
    throw StructuralError("apply_pswap_density: site out of range");
  if (dims[static_cast<size_t>(site_a)] != 2 || dims[static_cast<size_t>(site_b)] != 2)
    throw StructuralError("apply_pswap_density: both sites must be qubits");
  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  if (rho.rows() != total || rho.cols() != total)
    throw StructuralError("apply_pswap_density: dims do not match the state");

  // (cI + isS) rho (cI - isS) = c^2 rho + s^2 S rho S + ics (S rho - rho S)
  const auto perm = swap_permutation(dims, site_a, site_b);
  const double c = std::cos(eta), sn = std::sin(eta);
  const Complex ics(0.0, c * sn);
  ComplexMatrix out(total, total);
  for (Eigen::Index j = 0; j < total; ++j) {
    const Eigen::Index pj = perm[static_cast<size_t>(j)];
    for (Eigen::Index i = 0; i < total; ++i) {
      const Eigen::Index pi = perm[static_cast<size_t>(i)];
      out(i, j) = c * c * rho(i, j) + sn * sn * rho(pi, pj) + ics * (rho(pi, j) - rho(i, pj));
    }
  }
  return out;
}

ComplexMatrix embedded_pswap(int n_qubits, int a, int b, double eta) {
  if (a == b || a < 0 || b < 0 || a >= n_qubits || b >= n_qubits)
    throw StructuralError("embedded_pswap: sites must be distinct and inside the register");
  std::vector<int> dims(static_cast<size_t>(n_qubits), 2);
  const Eigen::Index d = Eigen::Index(1) << n_qubits;
  const auto perm = swap_permutation(dims, a, b);
  ComplexMatrix u = std::cos(eta) * identity(static_cast<int>(d));
  for (Eigen::Index i = 0; i < d; ++i) u(perm[static_cast<size_t>(i)], i) += Complex(0.0, std::sin(eta));
  return u;
}

}  // namespace exwit
