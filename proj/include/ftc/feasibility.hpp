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

#ifndef FTC_FEASIBILITY_HPP
#define FTC_FEASIBILITY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ftc/graph.hpp"
#include "ftc/schedule.hpp"

namespace ftc {

// ---------------------------------------------------------------------------
// Two-step infeasibility certificates.
//
// For AB = 11^T with A, B compliant, [AB]_ij = sum_v a_iv b_vj over the
// common neighbours v of a non-adjacent pair (i, j). B is applied first.

/// An entry of the first (B) or second (A) step matrix.
struct StepEntry {
  enum class Step { first, second };
  Step step;
  Node row;
  Node col;

  friend bool operator==(const StepEntry&, const StepEntry&) = default;
};

std::string to_string(const StepEntry& e);  // "a[i,v]" or "b[v,j]"

/// a_{i,via} * b_{via,j} = 1, forced because via is the only common
/// neighbour of the distance-2 pair (i, j).
struct ForcedProduct {
  Node i;
  Node via;
  Node j;

  StepEntry a() const { return {StepEntry::Step::second, i, via}; }
  StepEntry b() const { return {StepEntry::Step::first, via, j}; }
  friend bool operator==(const ForcedProduct&, const ForcedProduct&) = default;
};

/// lhs = rhs because both multiply `shared` to 1 (forced[lhs_from] and
/// forced[rhs_from]).
struct Equality {
  StepEntry lhs;
  StepEntry rhs;
  StepEntry shared;
  std::size_t lhs_from;
  std::size_t rhs_from;
};

/// One term a_{i,v} b_{v,j} of the contradicting entry, pinned to 1 by an
/// alternating chain of forced products a-b-a-b...
struct DeterminedProduct {
  Node via;
  std::vector<std::size_t> chain;  // indices into forced
};

struct InfeasibilityCertificate {
  std::size_t n = 0;
  std::vector<ForcedProduct> forced;
  std::vector<Equality> equalities;
  Node i = 0;  // contradicting entry [AB]_ij
  Node j = 0;
  std::vector<DeterminedProduct> products;

  /// Value the forced constraints give [AB]_ij (the number of terms).
  std::size_t sum() const { return products.size(); }
};

/// Only meaningful for diameter-2 graphs; returns nullopt otherwise and
/// whenever no contradiction can be derived (which proves nothing).
std::optional<InfeasibilityCertificate> certify_two_step_infeasible(const Graph& g);

/// Human-readable listing: forced products, equalities, contradiction.
/// Node labels are 0-indexed.
std::string format_certificate(const InfeasibilityCertificate& c);

// ---------------------------------------------------------------------------
// Alternating least squares over compliant factors.

inline constexpr double kSearchSuccessTol = 1e-8;

struct SearchOptions {
  int restarts = 32;
  int sweeps = 500;
  std::uint64_t seed = 1;
  double ridge = 1e-12;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SearchResult {
  int t = 0;
  double best_residual = 0.0;  // Frobenius norm of prod - J/n
  std::optional<Schedule> witness;
  int restarts = 0;
  long long iterations = 0;  // sweeps summed over restarts
  std::uint64_t seed = 0;
  int best_restart = -1;
};

/// Random compliant factors, entries uniform in [-1, 1] on the pattern.
std::vector<Matrix> random_compliant_factors(const Graph& g, int t, std::uint64_t seed,
                                             int restart);

struct DescentTrace {
  std::vector<Matrix> factors;
  std::vector<double> objective;  // F after every block update, F(init) first
  int sweeps = 0;
};

/// Block-coordinate descent from the given factors. F never increases:
/// a block update that would raise it is rejected.
DescentTrace als_descend(const Graph& g, std::vector<Matrix> factors, int sweeps,
                         double ridge = 1e-12);

SearchResult als_search(const Graph& g, int t, const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Consensus number bounds.

struct BoundWitness {
  std::string source;
  Schedule schedule;
  double residual = 0.0;
};

struct ConsensusBounds {
  int lower = 0;
  std::string lower_reason;
  std::optional<InfeasibilityCertificate> certificate;
  int upper = 0;
  std::vector<BoundWitness> witnesses;  // every verified schedule, shortest first

  bool exact() const { return lower == upper; }
};

struct BoundsOptions {
  bool search = true;            // try ALS between the bounds
  std::size_t search_max_n = 40;
  SearchOptions search_options{8, 300, 1, 1e-12, 0};
  double verify_tol = kSearchSuccessTol;
};

ConsensusBounds consensus_number_bounds(const Graph& g, const BoundsOptions& options = {});

}  // namespace ftc

#endif  // FTC_FEASIBILITY_HPP
