// Copyright 2026 The ftcons Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTC_SPECTRA_HPP
#define FTC_SPECTRA_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ftc/graph.hpp"
#include "ftc/matrix.hpp"

namespace ftc {

/// Default relative gap used to tell distinct eigenvalues apart.
inline constexpr double kClusterTol = 1e-8;

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi on a dense symmetric matrix. Stops when the off-diagonal
/// Frobenius norm drops below 1e-13 * ||M||_F; gives up after 100 sweeps.
/// Throws InputError on asymmetric input, NumericalError on non-convergence.
EigenDecomposition sym_eig(const Matrix& m);

struct Cluster {
  double value;             // mean of the members
  std::size_t multiplicity;
};

/// Greedy gap clustering of eigenvalues: a new cluster starts whenever
/// the gap to the previous value exceeds tol * max(1, max |lambda|).
std::vector<Cluster> cluster_distinct(std::span<const double> eigs, double tol = kClusterTol);

struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<Cluster> clusters;
  std::size_t distinct() const { return clusters.size(); }
};

Spectrum spectrum(const Matrix& m, double tol = kClusterTol);

struct MinimalPolyInfo {
  std::size_t degree;
  std::vector<double> roots;
};

/// Symmetric matrices only: the degree is the number of distinct eigenvalues.
MinimalPolyInfo minimal_poly_degree(const Matrix& m, double tol = kClusterTol);

bool is_symmetric(const Matrix& m, double rel_tol = 1e-12);

/// Strong connectivity of the support digraph {(i, j) : m_ji != 0}.
bool is_irreducible(const Matrix& m);

/// Every off-diagonal nonzero sits on an edge of g.
bool complies(const Matrix& m, const Graph& g);

/// Smallest d <= max_deg such that sum_{k<=d} |M|^k has no zero entry.
std::optional<int> no_zero_entry_witness(const Matrix& m, int max_deg);

}  // namespace ftc

#endif  // FTC_SPECTRA_HPP
