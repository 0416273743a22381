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

#ifndef BIBLOCK_ORACLE_H_
#define BIBLOCK_ORACLE_H_

#include "biblock/graph.h"
#include "biblock/matrix.h"
#include "biblock/polynomial.h"
#include "biblock/rational_function.h"

// Brute-force reference values. Nothing here depends on the closed forms:
// only exact arithmetic, elimination and the q-distance matrix are used.
namespace biblock {

// det_bareiss of the q-distance matrix.
Polynomial oracle_det(const BiBlockGraph& g);

// det_bareiss of xi_construction, pivoting on `pivot`.
Polynomial oracle_xi(const BiBlockGraph& g, int pivot = 0);

// inverse_gauss of the q-distance matrix.
RingMatrix<RationalFunction> oracle_inverse(const BiBlockGraph& g);

}  // namespace biblock

#endif  // BIBLOCK_ORACLE_H_
