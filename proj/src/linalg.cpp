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

#include "exwit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace exwit {

namespace {

constexpr double kHermitianTol = 1e-10;

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw StructuralError(std::string(what) + ": matrix must be square and non-empty");
}

}  // namespace

// --- Bloch vectors ----------------------------------------------------------

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector operator+(const BlochVector& a, const BlochVector& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
BlochVector operator-(const BlochVector& a, const BlochVector& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
BlochVector operator*(double k, const BlochVector& a) { return {k * a.x, k * a.y, k * a.z}; }

BlochVector cross(const BlochVector& a, const BlochVector& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double max_abs_diff(const BlochVector& a, const BlochVector& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

// --- Pauli strings ----------------------------------------------------------

PauliString::PauliString(int n_sites) {
  if (n_sites < 1) throw StructuralError("PauliString: n_sites must be >= 1");
  factors_.assign(static_cast<size_t>(n_sites), Pauli::I);
}

PauliString::PauliString(std::initializer_list<Pauli> factors) : factors_(factors) {
  if (factors_.empty()) throw StructuralError("PauliString: empty factor list");
}

PauliString PauliString::single(int n_sites, int site, Pauli p) {
  return PauliString(n_sites).set(site, p);
}

PauliString PauliString::pair(int n_sites, int i, Pauli pi, int j, Pauli pj) {
  PauliString s(n_sites);
  s.set(i, pi);
  s.set(j, pj);
  return s;
}

PauliString& PauliString::set(int site, Pauli p) {
  if (site < 0 || site >= n_sites()) throw std::out_of_range("PauliString: site out of range");
  factors_[static_cast<size_t>(site)] = p;
  return *this;
}

Pauli PauliString::at(int site) const {
  if (site < 0 || site >= n_sites()) throw std::out_of_range("PauliString: site out of range");
  return factors_[static_cast<size_t>(site)];
}

std::string PauliString::label() const {
  std::string out;
  for (Pauli p : factors_) {
    switch (p) {
      case Pauli::I: out += 'I'; break;
      case Pauli::X: out += 'X'; break;
      case Pauli::Y: out += 'Y'; break;
      case Pauli::Z: out += 'Z'; break;
      case Pauli::Plus: out += '+'; break;
      case Pauli::Minus: out += '-'; break;
    }
  }
  return out;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli_matrix(Pauli p) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (p) {
    case Pauli::I: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case Pauli::X: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case Pauli::Y: m(0, 1) = -i; m(1, 0) = i; break;
    case Pauli::Z: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case Pauli::Plus: m(0, 1) = 2.0; break;
    case Pauli::Minus: m(1, 0) = 2.0; break;
  }
  return m;
}

// --- tensor products --------------------------------------------------------

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw StructuralError("kron_all: no factors");
  ComplexMatrix out = factors[0];
  for (size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

ComplexMatrix embed_site(int n_sites, int site, const ComplexMatrix& op2) {
  if (op2.rows() != 2 || op2.cols() != 2) throw StructuralError("embed_site: operator must be 2x2");
  if (site < 0 || site >= n_sites) throw std::out_of_range("embed_site: site out of range");
  const Eigen::Index left = Eigen::Index(1) << site;
  const Eigen::Index right = Eigen::Index(1) << (n_sites - site - 1);
  return kron(kron(identity(static_cast<int>(left)), op2), identity(static_cast<int>(right)));
}

ComplexMatrix pauli_string_matrix(const PauliString& p) {
  std::vector<ComplexMatrix> f;
  f.reserve(p.factors().size());
  for (Pauli q : p.factors()) f.push_back(pauli_matrix(q));
  return kron_all(f);
}

// --- partial trace ----------------------------------------------------------

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep) {
  require_square(rho, "partial_trace");
  if (dims.empty() || keep.empty()) throw StructuralError("partial_trace: empty dims or keep set");
  const int n = static_cast<int>(dims.size());
  long long total = 1;
  for (int d : dims) {
    if (d < 1) throw StructuralError("partial_trace: subsystem dims must be positive");
    total *= d;
  }
  if (total != rho.rows())
    throw StructuralError("partial_trace: product of dims " + std::to_string(total) +
                          " does not match matrix dim " + std::to_string(rho.rows()));
  std::vector<bool> kept(static_cast<size_t>(n), false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw StructuralError("partial_trace: keep index out of range");
    if (kept[static_cast<size_t>(k)]) throw StructuralError("partial_trace: duplicate keep index");
    kept[static_cast<size_t>(k)] = true;
  }

  // Split every full index into (kept, traced) sub-indices, preserving factor order.
  const auto dim = static_cast<size_t>(total);
  std::vector<int> kidx(dim), tidx(dim);
  int dkeep = 1, dtrace = 1;
  for (int s = 0; s < n; ++s) (kept[static_cast<size_t>(s)] ? dkeep : dtrace) *= dims[static_cast<size_t>(s)];
  for (size_t full = 0; full < dim; ++full) {
    size_t rem = full;
    int kv = 0, tv = 0, kmul = 1, tmul = 1;
    for (int s = n - 1; s >= 0; --s) {
      const int d = dims[static_cast<size_t>(s)];
      const int digit = static_cast<int>(rem % static_cast<size_t>(d));
      rem /= static_cast<size_t>(d);
      if (kept[static_cast<size_t>(s)]) {
        kv += digit * kmul;
        kmul *= d;
      } else {
        tv += digit * tmul;
        tmul *= d;
      }
    }
    kidx[full] = kv;
    tidx[full] = tv;
  }
  std::vector<std::vector<Eigen::Index>> groups(static_cast<size_t>(dtrace),
                                                std::vector<Eigen::Index>(static_cast<size_t>(dkeep)));
  for (size_t full = 0; full < dim; ++full)
    groups[static_cast<size_t>(tidx[full])][static_cast<size_t>(kidx[full])] = static_cast<Eigen::Index>(full);

  ComplexMatrix out = ComplexMatrix::Zero(dkeep, dkeep);
  for (const auto& g : groups)
    for (int a = 0; a < dkeep; ++a)
      for (int b = 0; b < dkeep; ++b) out(a, b) += rho(g[static_cast<size_t>(a)], g[static_cast<size_t>(b)]);
  return out;
}

ComplexMatrix partial_trace_qubits(const ComplexMatrix& rho, int n_qubits, std::span<const int> keep) {
  std::vector<int> dims(static_cast<size_t>(n_qubits), 2);
  return partial_trace(rho, dims, keep);
}

// --- propagators and projections -------------------------------------------

ComplexMatrix matrix_exp_hermitian(const ComplexMatrix& h, double t) {
  require_square(h, "matrix_exp_hermitian");
  if (hermiticity_error(h) > kHermitianTol)
    throw ContractViolation("matrix_exp_hermitian: generator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) throw ContractViolation("matrix_exp_hermitian: eigensolver failed");
  const Eigen::VectorXd& w = es.eigenvalues();
  Eigen::VectorXcd phase(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phase(k) = std::exp(Complex(0.0, -w(k) * t));
  const ComplexMatrix& v = es.eigenvectors();
  return v * phase.asDiagonal() * v.adjoint();
}

Complex hs_project(const ComplexMatrix& rho, const ComplexMatrix& op) {
  require_square(rho, "hs_project");
  if (op.rows() != rho.rows() || op.cols() != rho.cols())
    throw StructuralError("hs_project: operator and state dimensions differ");
  const Complex num = (op.adjoint() * rho).trace();
  const double den = op.squaredNorm();
  if (den == 0.0) throw ContractViolation("hs_project: zero operator");
  return num / den;
}

Complex hs_project(const ComplexMatrix& rho, const PauliString& p) {
  if (rho.rows() != (Eigen::Index(1) << p.n_sites()))
    throw StructuralError("hs_project: Pauli string length does not match state dimension");
  return hs_project(rho, pauli_string_matrix(p));
}

ComplexMatrix bloch_to_density(const BlochVector& s) {
  const Complex i(0.0, 1.0);
  ComplexMatrix m(2, 2);
  m << 0.5 * (1.0 + s.z), 0.5 * (s.x - i * s.y), 0.5 * (s.x + i * s.y), 0.5 * (1.0 - s.z);
  return m;
}

BlochVector density_to_bloch(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw ContractViolation("density_to_bloch: state must be 2x2");
  if (hermiticity_error(rho) > kHermitianTol) throw ContractViolation("density_to_bloch: state not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kHermitianTol) throw ContractViolation("density_to_bloch: trace is not 1");
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

// --- diagnostics ------------------------------------------------------------

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

double hermiticity_error(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

int qubit_count(const ComplexMatrix& a) {
  require_square(a, "qubit_count");
  int n = 0;
  Eigen::Index d = a.rows();
  while (d > 1 && (d % 2) == 0) {
    d /= 2;
    ++n;
  }
  if (d != 1) throw StructuralError("qubit_count: dimension is not a power of two");
  return n;
}

}  // namespace exwit
