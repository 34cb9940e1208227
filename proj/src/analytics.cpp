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

#include "exwit/analytics.hpp"

#include <cmath>

namespace exwit {

namespace {

struct Trig {
  double c2, s2, cs;
  explicit Trig(double eta)
      : c2(std::cos(eta) * std::cos(eta)), s2(std::sin(eta) * std::sin(eta)), cs(std::cos(eta) * std::sin(eta)) {}
};

using Grid = std::vector<std::vector<std::vector<double>>>;

// Weak-transfer bookkeeping: transfers leave single-site Bloch z unchanged at first order.
struct BlochBook {
  std::vector<double> monomer;
  std::vector<double> reservoir;
  std::vector<std::vector<double>> banks;  // Markov: a fresh reservoir per monomer
};

std::vector<std::pair<int, int>> schedule(int n, int m, CollisionOrder order) {
  std::vector<std::pair<int, int>> out;
  if (order == CollisionOrder::MonomerMajor) {
    for (int j = 0; j < n; ++j)
      for (int q = 0; q < m; ++q) out.emplace_back(j, q);
  } else {
    for (int q = 0; q < m; ++q)
      for (int j = 0; j < n; ++j) out.emplace_back(j, q);
  }
  return out;
}

Grid zeros(int k, int n, int m) {
  return Grid(static_cast<size_t>(k), std::vector<std::vector<double>>(static_cast<size_t>(n),
                                                                       std::vector<double>(static_cast<size_t>(m))));
}

}  // namespace

double markov_damping(int k_collisions, double eta) {
  if (k_collisions < 0) throw ContractViolation("markov_damping: negative collision count");
  return std::pow(std::cos(eta), 2 * k_collisions);
}

// --- Markov closed form -------------------------------------------------------

std::vector<MarkovTerm> markov_final_state(int n, int m, double eta, double t, const std::vector<double>& j,
                                           const std::vector<double>& b) {
  if (n < 2) throw StructuralError("markov_final_state: N must be >= 2");
  if (m < 1) throw StructuralError("markov_final_state: M must be >= 1");
  if (static_cast<int>(j.size()) != n - 1 || static_cast<int>(b.size()) != n)
    throw StructuralError("markov_final_state: expected N-1 couplings and N fields");
  const Complex i(0.0, 1.0);
  const double c = std::cos(eta);
  const int lead = (2 + 4 * (n - 2)) * m;
  std::vector<MarkovTerm> out;
  auto add = [&](std::string label, int e, int order, Complex pre) {
    out.push_back({std::move(label), e, order, pre, pre * std::pow(c, e)});
  };

  add("A(1,2)", lead, 1, i * t * j[0]);
  if (n < 3) return out;
  add("S(1,2)", 4 * (n - 3) * m, 2, -t * t * b[1]);
  const Complex chain = -t * t * j[0] * j[1];
  add("Z2*S(1,3)", lead + 2 * m * (n - 3), 2, chain);
  add("S(1,3)", lead + 4 * m, 2, chain);
  add("Z2*A(1,3)", lead + 2 * m * (n - 3), 3, chain * i * t * b[2]);
  add("A(1,3)", lead + 4 * m, 3, chain * i * t * b[2]);
  if (n >= 4) {
    Complex pre = std::pow(i, 2 * n - 3) * std::pow(t, n - 2);
    for (double jk : j) pre *= jk;
    add("chain(1," + std::to_string(n) + ")", lead, n - 2, pre);
  }
  return out;
}

const MarkovTerm& find_term(const std::vector<MarkovTerm>& terms, const std::string& label) {
  for (const auto& t : terms)
    if (t.label == label) return t;
  throw StructuralError("markov_final_state: no term " + label);
}

// --- non-Markov recursion -----------------------------------------------------

HoppingCoefficients fg_recursion_step(const HoppingCoefficients& prev, double r_z, double eta,
                                      CollidingMonomer which) {
  const Trig g(eta);
  const double sign = which == CollidingMonomer::First ? 1.0 : -1.0;
  const Complex mix(0.0, sign * g.cs * r_z);
  HoppingCoefficients next = prev;
  next.F = g.c2 * prev.F + mix * prev.G;
  next.G = g.c2 * prev.G + mix * prev.F;
  next.markov = prev.markov * g.c2;
  (which == CollidingMonomer::First ? next.l : next.m) += 1;
  return next;
}

namespace {

// Runs `iterations` decoherence rounds of the weak-transfer Bloch bookkeeping.
// on_collision(iteration, monomer, qubit, r_before) fires before each update.
template <class F>
void run_bloch_book(BlochBook& book, double eta, int iterations, Environment env, CollisionOrder order,
                    Grid* rz, Grid* sz, F&& on_collision) {
  const Trig g(eta);
  const int n = static_cast<int>(book.monomer.size()), m = static_cast<int>(book.reservoir.size());
  for (int k = 0; k < iterations; ++k) {
    if (env == Environment::Markov) book.banks.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(m), 0.0));
    for (auto [j, q] : schedule(n, m, order)) {
      double& r = env == Environment::Markov ? book.banks[static_cast<size_t>(j)][static_cast<size_t>(q)]
                                             : book.reservoir[static_cast<size_t>(q)];
      double& s = book.monomer[static_cast<size_t>(j)];
      on_collision(k, j, q, r);
      const double s_new = g.c2 * s + g.s2 * r;
      r = g.s2 * s + g.c2 * r;
      s = s_new;
      if (rz) (*rz)[static_cast<size_t>(k)][static_cast<size_t>(j)][static_cast<size_t>(q)] = r;
      if (sz) (*sz)[static_cast<size_t>(k)][static_cast<size_t>(j)][static_cast<size_t>(q)] = s;
    }
    if (env == Environment::Markov) book.reservoir = book.banks.back();
  }
}

BlochBook fresh_book(int n, int m) {
  BlochBook b;
  b.monomer.assign(static_cast<size_t>(n), 1.0);
  b.monomer[0] = -1.0;
  b.reservoir.assign(static_cast<size_t>(m), 0.0);
  return b;
}

}  // namespace

double ReservoirBlochTrace::r(int iteration, int monomer, int qubit) const {
  return reservoir_z.at(static_cast<size_t>(iteration - 1)).at(static_cast<size_t>(monomer - 1)).at(static_cast<size_t>(qubit - 1));
}

double ReservoirBlochTrace::s(int iteration, int monomer, int qubit) const {
  return monomer_z.at(static_cast<size_t>(iteration - 1)).at(static_cast<size_t>(monomer - 1)).at(static_cast<size_t>(qubit - 1));
}

ReservoirBlochTrace reservoir_trace(double eta, int n, int m) {
  if (n != 3 || m != 3)
    throw CapabilityError("reservoir_trace: closed-form bookkeeping is available for N=M=3 only, got N=" +
                          std::to_string(n) + ", M=" + std::to_string(m));
  ReservoirBlochTrace out;
  out.n_monomers = n;
  out.n_reservoir = m;
  out.reservoir_z = zeros(n - 1, n, m);
  out.monomer_z = zeros(n - 1, n, m);
  BlochBook book = fresh_book(n, m);
  run_bloch_book(book, eta, n - 1, Environment::NonMarkov, CollisionOrder::MonomerMajor, &out.reservoir_z,
                 &out.monomer_z, [](int, int, int, double) {});
  return out;
}

FGResult compute_fg_stages(double eta, Environment env, CollisionOrder order) {
  constexpr int n = 3, m = 3;
  BlochBook book = fresh_book(n, m);
  run_bloch_book(book, eta, 1, env, order, nullptr, nullptr, [](int, int, int, double) {});

  FGResult out;
  // First-order transfer seeds the antisymmetric hop with the population imbalance.
  out.seed.F = 0.5 * (book.monomer[1] - book.monomer[0]);
  out.seed.G = 0.0;
  out.seed.s = book.monomer[2];
  out.seed.markov = markov_damping(m, eta);

  HoppingCoefficients cur = out.seed;
  run_bloch_book(book, eta, 1, env, order, nullptr, nullptr, [&](int, int j, int, double r) {
    if (j == 2) return;
    cur = fg_recursion_step(cur, r, eta, j == 0 ? CollidingMonomer::First : CollidingMonomer::Second);
    out.stages.push_back(cur);
  });
  for (auto& st : out.stages) st.s = book.monomer[2];
  out.final = cur;
  out.final.s = book.monomer[2];
  return out;
}

HoppingCoefficients compute_FGs(double eta) { return compute_fg_stages(eta).final; }

double reference_s_closed_form(double eta) {
  const double c = std::cos(eta), s = std::sin(eta);
  auto p = [](double x, int k) { return std::pow(x, k); };
  return p(c, 12) + p(s, 12) + p(s, 4) * (3 * p(c, 8) + 6 * p(c, 10) - 3 * p(c, 12) + 4 * p(c, 14)) +
         p(s, 8) * (6 * p(c, 4) + 7 * p(c, 6) - 27 * p(c, 8)) + p(s, 12) * (-p(c, 2) - 2 * p(c, 4) - 4 * p(c, 6));
}

std::vector<HoppingCoefficients> engine_fg_stages(const ProtocolTrace& trace) {
  const ChainConfig& cfg = trace.config;
  if (cfg.n_monomers < 3) throw CapabilityError("engine_fg_stages: needs at least three monomers");
  const PhaseRecord& round = trace.find(2, Phase::Decoherence);
  const Complex scale = hop_scale(cfg.t, cfg.spec.couplings.front());
  std::vector<HoppingCoefficients> out;
  int l = 0, m = 0;
  for (const auto& c : round.collisions) {
    const int mono = c.record.monomer_index;
    if (mono > 1) continue;
    (mono == 0 ? l : m) += 1;
    HoppingCoefficients h;
    h.F = c.first_pair.antisymmetric / scale;
    h.G = c.first_pair.symmetric / scale;
    h.l = l;
    h.m = m;
    h.markov = markov_damping(cfg.n_reservoir + l + m, cfg.eta);
    h.s = round.chain_bloch[2].z;
    out.push_back(h);
  }
  return out;
}

double s_vs_cos_gap(double eta) { return std::abs(compute_FGs(eta).s - std::pow(std::cos(eta), 12)); }

double F_vs_markov_gap(double eta) { return std::abs(compute_FGs(eta).F - std::pow(std::cos(eta), 18)); }

double G_magnitude(double eta) { return std::abs(compute_FGs(eta).G); }

}  // namespace exwit
