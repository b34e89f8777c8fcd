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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "ftc/error.hpp"
#include "ftc/feasibility.hpp"
#include "ftc/synthesis.hpp"
#include "ftc/tree_scheme.hpp"

namespace ftc {
namespace {

using Pattern = std::vector<std::pair<Node, Node>>;

Pattern free_entries(const Graph& g) {
  Pattern p;
  for (Node i = 0; i < g.size(); ++i)
    for (Node j = 0; j < g.size(); ++j)
      if (i == j || g.adjacent(i, j)) p.emplace_back(i, j);
  return p;
}

Matrix chain_product(const std::vector<Matrix>& factors, std::size_t begin, std::size_t end,
                     std::size_t n) {
  Matrix p = Matrix::identity(n);
  for (std::size_t k = begin; k < end; ++k) p = factors[k] * p;
  return p;
}

double objective(const std::vector<Matrix>& factors, std::size_t n) {
  const Matrix p = chain_product(factors, 0, factors.size(), n);
  const double avg = 1.0 / static_cast<double>(n);
  double f = 0.0;
  for (double v : p.data()) f += (v - avg) * (v - avg);
  return f;
}

// In-place Cholesky factorisation (lower triangle) of a symmetric
// positive definite matrix.
bool cholesky_factor(std::vector<double>& a, std::size_t p) {
  for (std::size_t j = 0; j < p; ++j) {
    double d = a[j * p + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * p + k] * a[j * p + k];
    if (!(d > 0.0)) return false;
    d = std::sqrt(d);
    a[j * p + j] = d;
    for (std::size_t i = j + 1; i < p; ++i) {
      double s = a[i * p + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * p + k] * a[j * p + k];
      a[i * p + j] = s / d;
    }
  }
  return true;
}

void cholesky_solve(const std::vector<double>& l, std::vector<double>& b, std::size_t p) {
  for (std::size_t i = 0; i < p; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l[i * p + k] * b[k];
    b[i] = s / l[i * p + i];
  }
  for (std::size_t i = p; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < p; ++k) s -= l[k * p + i] * b[k];
    b[i] = s / l[i * p + i];
  }
}

// Least-squares update of factor k with every other factor fixed:
// minimise ||L X R - J/n||_F over the free entries of X. The normal
// equations have Kronecker structure G[(a,b),(c,d)] = (L^T L)_ac (R R^T)_bd.
std::optional<Matrix> solve_block(const std::vector<Matrix>& factors, std::size_t k,
                                  const Pattern& pattern, std::size_t n, double ridge) {
  const Matrix right = chain_product(factors, 0, k, n);
  const Matrix left = chain_product(factors, k + 1, factors.size(), n);
  const Matrix ltl = left.transposed() * left;
  const Matrix rrt = right * right.transposed();
  // L^T (J/n) R^T = (1/n) (L^T 1)(R 1)^T
  std::vector<double> lt1(n, 0.0), r1(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      lt1[j] += left(i, j);
      r1[i] += right(i, j);
    }

  const std::size_t p = pattern.size();
  std::vector<double> gram(p * p);
  std::vector<double> rhs(p);
  double diag_mean = 0.0;
  for (std::size_t x = 0; x < p; ++x) {
    const auto [a, b] = pattern[x];
    for (std::size_t y = 0; y < p; ++y) {
      const auto [c, d] = pattern[y];
      gram[x * p + y] = ltl(a, c) * rrt(b, d);
    }
    rhs[x] = lt1[a] * r1[b] / static_cast<double>(n);
    diag_mean += gram[x * p + x];
  }
  diag_mean /= static_cast<double>(p);
  for (double damping = ridge * std::max(1.0, diag_mean); damping < 1.0; damping *= 100.0) {
    auto factor = gram;
    for (std::size_t x = 0; x < p; ++x) factor[x * p + x] += damping;
    if (cholesky_factor(factor, p)) {
      auto sol = rhs;
      cholesky_solve(factor, sol, p);
      // One refinement step against the undamped system removes the
      // O(damping) bias of the ridge solution.
      std::vector<double> correction(p);
      for (std::size_t x = 0; x < p; ++x) {
        double r = rhs[x];
        for (std::size_t y = 0; y < p; ++y) r -= gram[x * p + y] * sol[y];
        correction[x] = r;
      }
      cholesky_solve(factor, correction, p);
      for (std::size_t x = 0; x < p; ++x) sol[x] += correction[x];
      Matrix out(n, n);
      for (std::size_t x = 0; x < p; ++x) out(pattern[x].first, pattern[x].second) = sol[x];
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Matrix> random_compliant_factors(const Graph& g, int t, std::uint64_t seed,
                                             int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const auto pattern = free_entries(g);
  std::vector<Matrix> factors;
  for (int k = 0; k < t; ++k) {
    Matrix m(g.size(), g.size());
    for (auto [i, j] : pattern) m(i, j) = uniform(rng);
    factors.push_back(std::move(m));
  }
  return factors;
}

DescentTrace als_descend(const Graph& g, std::vector<Matrix> factors, int sweeps, double ridge) {
  const std::size_t n = g.size();
  const auto pattern = free_entries(g);
  DescentTrace trace;
  double f = objective(factors, n);
  trace.objective.push_back(f);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    const double before = f;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (auto block = solve_block(factors, k, pattern, n, ridge)) {
        Matrix old = std::exchange(factors[k], std::move(*block));
        const double candidate = objective(factors, n);
        if (candidate <= f) {
          f = candidate;
        } else {
          factors[k] = std::move(old);
        }
      }
      trace.objective.push_back(f);
    }
    trace.sweeps = sweep + 1;
    if (std::sqrt(f) < 1e-13 || before - f <= 1e-15 * before) break;
  }
  trace.factors = std::move(factors);
  return trace;
}

SearchResult als_search(const Graph& g, int t, const SearchOptions& options) {
  if (t < 1) throw InputError("search needs at least one step");
  if (options.restarts < 1) throw InputError("search needs at least one restart");
  const std::size_t n = g.size();

  struct Outcome {
    double residual = std::numeric_limits<double>::infinity();
    int sweeps = 0;
    std::vector<Matrix> factors;
  };
  std::vector<Outcome> outcomes(options.restarts);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < options.restarts; r = next++) {
      auto trace = als_descend(g, random_compliant_factors(g, t, options.seed, r),
                               options.sweeps, options.ridge);
      outcomes[r] = {std::sqrt(trace.objective.back()), trace.sweeps, std::move(trace.factors)};
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp(threads, 1u, static_cast<unsigned>(options.restarts));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }

  SearchResult result;
  result.t = t;
  result.restarts = options.restarts;
  result.seed = options.seed;
  result.best_residual = std::numeric_limits<double>::infinity();
  for (int r = 0; r < options.restarts; ++r) {
    result.iterations += outcomes[r].sweeps;
    if (outcomes[r].residual < result.best_residual) {
      result.best_residual = outcomes[r].residual;
      result.best_restart = r;
    }
  }
  if (result.best_residual <= kSearchSuccessTol) {
    Schedule s;
    s.n = n;
    s.construction = Construction::search;
    s.factors = std::move(outcomes[result.best_restart].factors);
    if (verify_schedule(s, g, kSearchSuccessTol).passed) result.witness = std::move(s);
  }
  return result;
}

ConsensusBounds consensus_number_bounds(const Graph& g, const BoundsOptions& options) {
  const auto m = metrics(g);
  ConsensusBounds bounds;
  bounds.lower = m.diameter;
  bounds.lower_reason = "diameter";
  if (m.diameter == 2) {
    bounds.certificate = certify_two_step_infeasible(g);
    if (bounds.certificate) {
      bounds.lower = 3;
      bounds.lower_reason = "two-step infeasibility certificate";
    }
  }

  auto offer = [&](std::string source, auto&& make) {
    try {
      Schedule s = make();
      const auto v = verify_schedule(s, g, options.verify_tol);
      if (v.passed) bounds.witnesses.push_back({std::move(source), std::move(s), v.residual});
    } catch (const PreconditionError&) {
    } catch (const NumericalError&) {
    }
  };
  if (g.size() >= 2 && g.is_path())
    offer("path", [&] { return build_schedule(candidate_path(g), g, Construction::path); });
  if (g.is_regular()) {
    offer("adjacency",
          [&] { return build_schedule(candidate_adjacency(g), g, Construction::adjacency); });
  }
  offer("laplacian-shift", [&] {
    return build_schedule(candidate_laplacian_shift(g), g, Construction::laplacian_shift);
  });
  if (g.is_tree()) offer("tree", [&] { return gather_distribute(g); });
  offer("bfs-fallback", [&] { return bfs_fallback(g); });

  auto shortest = [&] {
    std::stable_sort(bounds.witnesses.begin(), bounds.witnesses.end(),
                     [](const auto& a, const auto& b) {
                       return a.schedule.steps() < b.schedule.steps();
                     });
  };
  shortest();
  bounds.upper = static_cast<int>(bounds.witnesses.front().schedule.steps());

  if (options.search && g.size() <= options.search_max_n) {
    for (int t = std::max(bounds.lower, 1); t < bounds.upper; ++t) {
      auto r = als_search(g, t, options.search_options);
      if (r.witness) {
        const auto v = verify_schedule(*r.witness, g, options.verify_tol);
        bounds.witnesses.push_back({"search", std::move(*r.witness), v.residual});
        bounds.upper = t;
        shortest();
        break;
      }
    }
  }
  return bounds;
}

}  // namespace ftc
