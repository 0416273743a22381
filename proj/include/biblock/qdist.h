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

#ifndef BIBLOCK_QDIST_H_
#define BIBLOCK_QDIST_H_

#include "biblock/graph.h"
#include "biblock/matrix.h"
#include "biblock/polynomial.h"

namespace biblock {

// Entry (i, j) = [d(i, j)] = 1 + q + ... + q^(d-1); zero diagonal.
RingMatrix<Polynomial> q_distance_matrix(const DistanceTable& dist);
RingMatrix<Polynomial> q_distance_matrix(const BiBlockGraph& g);

enum class XiRoute {
  // D1 - M with M(i, j) = [beta_i + alpha_j].
  kDirect,
  // Subtract the pivot row from every other row, then q^alpha_j times the
  // pivot column from column j, and drop the pivot row and column.
  kRowColumnOperations,
};

// The (n-1)x(n-1) matrix whose determinant is the cofactor xi(D). The pivot
// vertex plays the role of the first row/column; the others keep their
// relative order. Throws DimensionError if D and dist disagree in size or
// pivot is out of range.
RingMatrix<Polynomial> xi_construction(const RingMatrix<Polynomial>& d,
                                       const DistanceTable& dist,
                                       int pivot = 0,
                                       XiRoute route = XiRoute::kDirect);

}  // namespace biblock

#endif  // BIBLOCK_QDIST_H_
