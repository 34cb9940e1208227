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

#include <cmath>

#include "exwit/analytics.hpp"

namespace exwit {

namespace {

struct Bookkeeping {
  PairState pair;
  double s3 = 1.0;
};

// Partial swap of monomer `mono` with a z-polarized reservoir qubit r, acting on the
// pair coefficients. Monomer 1 rotates the hops with +i cos sin r, monomer 2 with -i.
void collide(Bookkeeping& b, int mono, double& r, double c2, double s2, double cs) {
  PairState& p = b.pair;
  const double r0 = r;
  if (mono == 2) {
    r = s2 * b.s3 + c2 * r0;
    b.s3 = c2 * b.s3 + s2 * r0;
    return;
  }
  const Complex mix(0.0, (mono == 0 ? 1.0 : -1.0) * cs * r0);
  const Complex alpha = c2 * p.alpha + mix * p.beta;
  const Complex beta = c2 * p.beta + mix * p.alpha;
  p.alpha = alpha;
  p.beta = beta;
  if (mono == 0) {
    r = s2 * p.a1 + c2 * r0;
    p.a1 = c2 * p.a1 + s2 * r0;
    p.a12 = c2 * p.a12 + s2 * r0 * p.a2;
  } else {
    r = s2 * p.a2 + c2 * r0;
    p.a2 = c2 * p.a2 + s2 * r0;
    p.a12 = c2 * p.a12 + s2 * r0 * p.a1;
  }
}

// Pair propagation of rho_12 under J/4 (s+s- + s-s+) - Ba Z1 - Bb Z2, truncated at order 1 or 2.
PairState pair_transfer(const PairState& p, double j, double ba, double bb, double t, bool second) {
  const Complex i(0.0, 1.0);
  const double u = second ? t * t : 0.0;
  PairState q = p;
  q.a1 = (p.a1 + 16.0 * i * j * p.alpha * t +
          u * (-16.0 * ba * j * p.beta + 16.0 * bb * j * p.beta - j * j * p.a1 + j * j * p.a2)).real();
  q.a2 = (p.a2 - 16.0 * i * j * p.alpha * t +
          u * (16.0 * ba * j * p.beta - 16.0 * bb * j * p.beta + j * j * p.a1 - j * j * p.a2)).real();
  q.alpha = p.alpha + t * (2.0 * i * ba * p.beta - 2.0 * i * bb * p.beta + i * j * (p.a1 - p.a2) / 8.0) +
            u * (-2.0 * (ba - bb) * (ba - bb) * p.alpha - 2.0 * j * j * p.alpha);
  q.beta = p.beta + t * (2.0 * i * (ba - bb) * p.alpha) +
           u * (-2.0 * (ba - bb) * (ba - bb) * p.beta + (bb - ba) * j * (p.a1 - p.a2) / 8.0);
  return q;
}

PairHop split(Complex plus_minus, Complex minus_plus) {
  return {0.5 * (plus_minus - minus_plus), 0.5 * (plus_minus + minus_plus)};
}

}  // namespace

PipelineResult coefficient_pipeline(const PipelineConfig& cfg) {
  if (cfg.n_reservoir < 1) throw StructuralError("coefficient_pipeline: n_reservoir must be >= 1");
  if (cfg.mode == PropagationMode::Exact)
    throw CapabilityError("coefficient_pipeline: only truncated propagation has a closed coefficient map");
  const bool second = cfg.mode == PropagationMode::PerturbativeOrder2;
  const double c = std::cos(cfg.eta), s = std::sin(cfg.eta);
  const double c2 = c * c, s2 = s * s, cs = c * s, t = cfg.t;
  const int n = 3, m = cfg.n_reservoir;
  const Complex i(0.0, 1.0);

  Bookkeeping b;
  b.pair = {-1.0, 1.0, -1.0, 0.0, 0.0};
  std::vector<double> reservoir(static_cast<size_t>(m), 0.0);
  PipelineResult out;

  auto round = [&](bool record) {
    std::vector<std::vector<double>> banks(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(m), 0.0));
    const bool markov = cfg.environment == Environment::Markov;
    std::vector<std::pair<int, int>> sched;
    if (cfg.order == CollisionOrder::MonomerMajor) {
      for (int j = 0; j < n; ++j)
        for (int q = 0; q < m; ++q) sched.emplace_back(j, q);
    } else {
      for (int q = 0; q < m; ++q)
        for (int j = 0; j < n; ++j) sched.emplace_back(j, q);
    }
    for (auto [j, q] : sched) {
      double& r = markov ? banks[static_cast<size_t>(j)][static_cast<size_t>(q)] : reservoir[static_cast<size_t>(q)];
      collide(b, j, r, c2, s2, cs);
      if (record && j < 2) out.stages.push_back({j, q, b.pair.alpha, b.pair.beta});
    }
    if (markov) reservoir = banks.back();
  };

  round(false);
  b.pair = pair_transfer(b.pair, cfg.j1, cfg.b1, cfg.b2, t, second);
  round(true);

  // Transfer on monomers (2,3) acting on rho_12 (x) rho_3.
  const PairState& p = b.pair;
  const double u = second ? t : 0.0;
  const double j2 = cfg.j2, b2 = cfg.b2, b23 = cfg.b2 + cfg.b3, d23 = cfg.b2 - cfg.b3;
  const double damp = second ? t * t * (2.0 * b2 * b2 + 0.5 * j2 * j2) : 0.0;
  out.hop12 = {p.alpha - 2.0 * i * b2 * t * p.beta - damp * p.alpha, p.beta - 2.0 * i * b2 * t * p.alpha - damp * p.beta};

  const Complex pz_m = -(j2 * t / 2.0) * (p.alpha + p.beta) * (i + b23 * u);
  const Complex mz_p = (j2 * t / 2.0) * (p.alpha - p.beta) * (b23 * u - i);
  out.hop13.with_z = split(pz_m, mz_p);
  out.hop13.constant = split(b.s3 * pz_m, b.s3 * mz_p);

  const Complex k23 = j2 * t * (d23 * u - i) / 16.0;
  const Complex h23 = k23 * (b.s3 - p.a2);
  const Complex h23z = k23 * (p.a1 * b.s3 - p.a12);
  out.hop23 = split(h23, std::conj(h23));
  out.hop23_z1 = split(h23z, std::conj(h23z));

  out.pair = p;
  out.s3 = b.s3;
  out.reservoir = reservoir;
  return out;
}

}  // namespace exwit
