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

#include "exwit/linalg.hpp"

namespace exwit {

// Coefficients of A = s+_i s-_j - s-_i s+_j and S = s+_i s-_j + s-_i s+_j.
struct PairHop {
  Complex antisymmetric;
  Complex symmetric;
};

// Raw coefficients read from the reduced state of sites (i, j).
PairHop pair_hop(const ComplexMatrix& rho, int n_sites, int i, int j);

// Next-nearest hops through a middle site, split into the Z_mid-dressed part
// and the part carrying the identity on the middle site.
struct ChainHop {
  PairHop with_z;
  PairHop constant;
};

ChainHop chain_hop(const ComplexMatrix& rho, int n_sites, int i, int mid, int j);

// Dimensionless scale of a first-order hop, -i t J / 4.
Complex hop_scale(double t, double j);
// Dimensionless scale of a second-order two-bond hop, -t^2 J J' / 8.
double chain_scale(double t, double j1, double j2);

PairHop normalized(const PairHop& h, Complex scale);

}  // namespace exwit
