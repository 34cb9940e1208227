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

#include "exwit/protocol.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace exwit {

namespace {

ComplexMatrix basis_projector(int n_sites, Eigen::Index index) {
  const Eigen::Index d = Eigen::Index(1) << n_sites;
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  p(index, index) = 1.0;
  return p;
}

// Basis index with an excitation (|1>) on `site`; site 0 is the leftmost factor.
Eigen::Index excited_index(int n_sites, int site) { return Eigen::Index(1) << (n_sites - 1 - site); }

double reservoir_z(const std::vector<BlochVector>& qubits) {
  double z = 0.0;
  for (const auto& q : qubits) z += q.z;
  return z;
}

std::map<std::pair<int, int>, PairHop> all_pair_hops(const ComplexMatrix& rho, int n) {
  std::map<std::pair<int, int>, PairHop> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace(std::make_pair(i, j), pair_hop(rho, n, i, j));
  return out;
}

void check_iteration(const ChainConfig& config, int k, int last, const char* what) {
  if (k < 1 || k > last)
    throw StructuralError(std::string(what) + ": iteration " + std::to_string(k) + " outside 1.." +
                          std::to_string(last) + " for N=" + std::to_string(config.n_monomers));
}

}  // namespace

const char* to_string(Engine e) {
  switch (e) {
    case Engine::Exact: return "exact";
    case Engine::Perturbative1: return "pert1";
    case Engine::Perturbative2: return "pert2";
  }
  return "?";
}

const char* to_string(CollisionOrder o) {
  return o == CollisionOrder::MonomerMajor ? "monomer-major" : "reservoir-major";
}

const char* to_string(Phase p) {
  switch (p) {
    case Phase::Injection: return "injection";
    case Phase::Decoherence: return "decoherence";
    case Phase::Transfer: return "transfer";
    case Phase::Recombination: return "recombination";
  }
  return "?";
}

PropagationMode propagation_mode(Engine e) {
  switch (e) {
    case Engine::Exact: return PropagationMode::Exact;
    case Engine::Perturbative1: return PropagationMode::PerturbativeOrder1;
    case Engine::Perturbative2: return PropagationMode::PerturbativeOrder2;
  }
  return PropagationMode::Exact;
}

// --- configuration ----------------------------------------------------------

ChainConfig ChainConfig::make(int n, int m, double eta, Environment env, Engine engine, double t) {
  ChainConfig c;
  c.n_monomers = n;
  c.n_reservoir = m;
  c.eta = eta;
  c.t = t;
  c.spec = XXChainSpec::uniform(n);
  c.environment = env;
  c.engine = engine;
  return c;
}

void ChainConfig::validate() const {
  if (n_monomers < 2) throw StructuralError("n_monomers: must be >= 2, got " + std::to_string(n_monomers));
  if (n_reservoir < 1) throw StructuralError("n_reservoir: must be >= 1, got " + std::to_string(n_reservoir));
  if (!std::isfinite(eta)) throw StructuralError("eta: must be finite");
  if (!std::isfinite(t) || t < 0.0) throw StructuralError("t: must be finite and >= 0");
  if (spec.n_sites != n_monomers)
    throw StructuralError("spec: n_sites " + std::to_string(spec.n_sites) + " differs from n_monomers " +
                          std::to_string(n_monomers));
  spec.validate();
  if (n_monomers + 1 > kMaxQubits)
    throw ResourceError("n_monomers: " + std::to_string(n_monomers) + " monomers plus one reservoir qubit exceed the " +
                        std::to_string(kMaxQubits) + "-qubit cap");
}

// --- phases -----------------------------------------------------------------

ComplexMatrix inject_photon(const ChainConfig& config) {
  config.validate();
  return basis_projector(config.n_monomers, excited_index(config.n_monomers, 0));
}

DecoherenceResult decoherence_phase(const ComplexMatrix& state, const ReservoirState& reservoir,
                                    const ChainConfig& config, int k) {
  config.validate();
  check_iteration(config, k, config.n_monomers, "decoherence_phase");
  const int n = config.n_monomers, m = config.n_reservoir;
  if (state.rows() != (Eigen::Index(1) << n)) throw StructuralError("decoherence_phase: state is not 2^N dimensional");
  if (reservoir.size() != m) throw StructuralError("decoherence_phase: reservoir size differs from n_reservoir");

  const bool markov = config.environment == Environment::Markov;
  DecoherenceResult out{state, reservoir, {}, 0.0};
  out.reservoir.policy = config.environment;
  out.reservoir.eta = config.eta;

  // A Markov reservoir is fresh for every monomer; keep one copy per monomer.
  std::vector<ReservoirState> banks;
  if (markov) {
    out.discarded_z += reservoir_z(reservoir.qubits);
    banks.assign(static_cast<size_t>(n), out.reservoir.reinitialized());
  }

  std::vector<std::pair<int, int>> schedule;
  if (config.order == CollisionOrder::MonomerMajor) {
    for (int mono = 0; mono < n; ++mono)
      for (int q = 0; q < m; ++q) schedule.emplace_back(mono, q);
  } else {
    for (int q = 0; q < m; ++q)
      for (int mono = 0; mono < n; ++mono) schedule.emplace_back(mono, q);
  }

  const std::vector<int> dims(static_cast<size_t>(n + 1), 2);
  std::vector<int> chain_sites(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) chain_sites[static_cast<size_t>(s)] = s;
  const std::array<int, 1> res_site{n};

  for (auto [mono, q] : schedule) {
    ReservoirState& bank = markov ? banks[static_cast<size_t>(mono)] : out.reservoir;
    BlochVector& r = bank.qubits[static_cast<size_t>(q)];
    const std::array<int, 1> site{mono};
    CollisionRecord rec;
    rec.monomer_index = mono;
    rec.reservoir_index = q;
    rec.iteration = k;
    rec.s_before = density_to_bloch(partial_trace_qubits(out.state, n, site));
    rec.r_before = r;

    const ComplexMatrix joint =
        apply_pswap_density(kron(out.state, bloch_to_density(r)), mono, n, dims, config.eta);
    out.state = partial_trace(joint, dims, chain_sites);
    r = density_to_bloch(partial_trace(joint, dims, res_site));

    rec.s_after = density_to_bloch(partial_trace_qubits(out.state, n, site));
    rec.r_after = r;
    out.collisions.push_back({rec, pair_hop(out.state, n, 0, 1)});
  }

  if (markov) {
    for (int mono = 0; mono + 1 < n; ++mono) out.discarded_z += reservoir_z(banks[static_cast<size_t>(mono)].qubits);
    out.reservoir = banks.back();
  }
  return out;
}

ComplexMatrix transfer_phase(const ComplexMatrix& state, const ChainConfig& config, int k) {
  config.validate();
  check_iteration(config, k, config.n_monomers - 1, "transfer_phase");
  if (state.rows() != (Eigen::Index(1) << config.n_monomers))
    throw StructuralError("transfer_phase: state is not 2^N dimensional");
  // The excitation front moves from monomer k to k+1 under their pair Hamiltonian.
  return propagate(state, build_pair_hamiltonian(config.spec, k - 1), config.t, propagation_mode(config.engine));
}

PhotonState recombine(const ComplexMatrix& state, const ChainConfig& config) {
  config.validate();
  const int n = config.n_monomers;
  if (state.rows() != (Eigen::Index(1) << n)) throw StructuralError("recombine: state is not 2^N dimensional");
  // The sitewise swap hands the chain state to an initially empty photon register.
  PhotonState p;
  p.n_sites = n;
  p.register_state = state;
  p.populations.push_back(state(0, 0).real());
  double single = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::Index idx = excited_index(n, i);
    p.populations.push_back(state(idx, idx).real());
    single += state(idx, idx).real();
  }
  p.multi_excitation = state.trace().real() - p.populations.front() - single;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const PairHop h = pair_hop(state, n, i, j);
      // s+_i s-_j = S + A on the ordered pair
      p.coherences[{i, j}] = h.symmetric + h.antisymmetric;
    }
  return p;
}

double PhotonState::total_weight() const {
  double s = multi_excitation;
  for (double v : populations) s += v;
  return s;
}

// --- full run ---------------------------------------------------------------

std::vector<BlochVector> site_bloch_vectors(const ComplexMatrix& rho) {
  const int n = qubit_count(rho);
  std::vector<BlochVector> out;
  for (int s = 0; s < n; ++s) {
    const std::array<int, 1> site{s};
    out.push_back(density_to_bloch(partial_trace_qubits(rho, n, site)));
  }
  return out;
}

double expectation_total_z(const ComplexMatrix& rho) {
  return (total_z(qubit_count(rho)) * rho).trace().real();
}

int ProtocolTrace::iterations() const {
  int k = 0;
  for (const auto& p : phases) k = std::max(k, p.iteration);
  return k;
}

const PhaseRecord& ProtocolTrace::find(int iteration, Phase phase) const {
  for (const auto& p : phases)
    if (p.iteration == iteration && p.phase == phase) return p;
  throw StructuralError("ProtocolTrace: no " + std::string(to_string(phase)) + " record at iteration " +
                        std::to_string(iteration));
}

ProtocolTrace run_protocol(const ChainConfig& config) {
  config.validate();
  const int n = config.n_monomers;
  ProtocolTrace trace;
  trace.config = config;

  // Photon register: n modes, mode 0 excited before absorption.
  double photon_z = n - 2.0;
  double discarded_z = 0.0;
  const double chain_ground_z = n;
  const double start_total = chain_ground_z + photon_z;

  ComplexMatrix rho = inject_photon(config);
  photon_z = n;
  ReservoirState res = ReservoirState::maximally_mixed(config.n_reservoir, config.environment, config.eta);

  auto record = [&](int k, Phase phase, const ComplexMatrix& chain, std::vector<CollisionSnapshot> coll, double chain_z) {
    PhaseRecord r;
    r.iteration = k;
    r.phase = phase;
    r.chain_state = chain;
    r.chain_bloch = site_bloch_vectors(chain);
    r.reservoir = res.qubits;
    r.collisions = std::move(coll);
    r.hops = all_pair_hops(chain, n);
    r.conserved_z = chain_z + reservoir_z(res.qubits) + discarded_z + photon_z;
    trace.conservation_drift = std::max(trace.conservation_drift, std::abs(r.conserved_z - start_total));
    trace.phases.push_back(std::move(r));
  };

  record(1, Phase::Injection, rho, {}, expectation_total_z(rho));
  for (int k = 1; k < n; ++k) {
    DecoherenceResult d = decoherence_phase(rho, res, config, k);
    rho = std::move(d.state);
    res = std::move(d.reservoir);
    discarded_z += d.discarded_z;
    record(k, Phase::Decoherence, rho, std::move(d.collisions), expectation_total_z(rho));
    rho = transfer_phase(rho, config, k);
    record(k, Phase::Transfer, rho, {}, expectation_total_z(rho));
  }

  for (int k = 0; k + 1 < n; ++k)
    trace.generator_residual =
        std::max(trace.generator_residual, check_conservation(build_pair_hamiltonian(config.spec, k), total_z(n)));
  for (int mono = 0; mono < n; ++mono)
    trace.generator_residual = std::max(
        trace.generator_residual, check_conservation(embedded_pswap(n + 1, mono, n, config.eta), total_z(n + 1)));

  trace.photon = recombine(rho, config);
  photon_z = expectation_total_z(rho);
  const ComplexMatrix vacuum = basis_projector(n, 0);
  record(n, Phase::Recombination, vacuum, {}, expectation_total_z(vacuum));
  trace.complete = true;
  return trace;
}

}  // namespace exwit
