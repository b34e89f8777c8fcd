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

#ifndef FTC_SYNTHESIS_HPP
#define FTC_SYNTHESIS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ftc/graph.hpp"
#include "ftc/matrix.hpp"
#include "ftc/schedule.hpp"
#include "ftc/spectra.hpp"

namespace ftc {

/// Adjacency matrix of a regular graph (row sums equal the degree).
/// Throws PreconditionError if g is not regular.
Matrix candidate_adjacency(const Graph& g);

/// A - diag(A 1) + max(A 1) I: symmetric, nonnegative, irreducible, and
/// every row sums to the maximum degree.
Matrix candidate_laplacian_shift(const Graph& g);

/// Path adjacency plus ones at both ends of the diagonal, on nodes 0..n-1
/// in order. Throws PreconditionError for n < 2.
Matrix candidate_path(std::size_t n);

/// The same matrix on an arbitrary labelling of a path graph:
/// A + diag(2 - deg). Throws PreconditionError if g is not a path.
Matrix candidate_path(const Graph& g);

struct ConditionReport {
  bool symmetric = false;
  bool nonnegative = false;
  bool irreducible = false;
  bool has_one_eigvec = false;  // M 1 = k 1
  double k = 0.0;
  bool mult_one = false;        // k is a simple eigenvalue
  std::size_t s = 0;            // distinct eigenvalues
  std::size_t needed = 0;       // D + 1
  Spectrum spectrum;

  /// Hypotheses under which s - 1 factors reach consensus.
  bool schedulable() const {
    return symmetric && nonnegative && irreducible && has_one_eigvec && mult_one;
  }
  bool diameter_tight() const { return schedulable() && s == needed; }
};

/// Throws InputError if m does not comply with g.
ConditionReport check_conditions(const Matrix& m, const Graph& g, double tol = kClusterTol);

/// Largest |prod_{t>m} (mu - lambda_t) / (k - lambda_t)| over suffixes and
/// over mu in {lambda_t} and k: the gain applied to a rounding error made
/// after step m when the factors are applied in the given order.
double partial_growth(const std::vector<double>& lambdas, double k);

inline constexpr double kOrderGrowthLimit = 1e3;

/// Ascending order when its partial growth is at most kOrderGrowthLimit,
/// otherwise a Leja order starting from the shift farthest from k.
std::vector<double> order_shifts(std::vector<double> lambdas, double k);

/// Factors (M - lambda_t I) / (k - lambda_t) over the distinct eigenvalues
/// other than k, ordered by order_shifts. Throws PreconditionError when the
/// conditions fail and NumericalError when k is not separated from the
/// other eigenvalues.
Schedule build_schedule(const Matrix& m, const Graph& g, Construction tag,
                        double tol = kClusterTol);

/// Best verified schedule over the constructions that apply to g.
Schedule auto_synthesize(const Graph& g, double verify_tol = kVerifyTol);

}  // namespace ftc

#endif  // FTC_SYNTHESIS_HPP
