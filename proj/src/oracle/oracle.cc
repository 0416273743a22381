// Copyright 2026 The Biblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biblock/oracle.h"

#include "biblock/qdist.h"

namespace biblock {

Polynomial oracle_det(const BiBlockGraph& g) {
  return det_bareiss(q_distance_matrix(g));
}

Polynomial oracle_xi(const BiBlockGraph& g, int pivot) {
  const DistanceTable dist = distances(g);
  return det_bareiss(xi_construction(q_distance_matrix(dist), dist, pivot));
}

RingMatrix<RationalFunction> oracle_inverse(const BiBlockGraph& g) {
  return inverse_gauss(to_rational_functions(q_distance_matrix(g)));
}

}  // namespace biblock
