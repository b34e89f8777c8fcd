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

#include "ftc/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ftc/error.hpp"
#include "ftc/tree_scheme.hpp"

namespace ftc {

Matrix candidate_adjacency(const Graph& g) {
  if (!g.is_regular()) throw PreconditionError("adjacency candidate needs a regular graph");
  return g.adjacency();
}

Matrix candidate_laplacian_shift(const Graph& g) {
  Matrix m = g.adjacency();
  std::size_t max_degree = 0;
  for (Node i = 0; i < g.size(); ++i) max_degree = std::max(max_degree, g.degree(i));
  for (Node i = 0; i < g.size(); ++i)
    m(i, i) = static_cast<double>(max_degree) - static_cast<double>(g.degree(i));
  return m;
}

Matrix candidate_path(std::size_t n) {
  if (n < 2) throw PreconditionError("path candidate needs n >= 2");
  Matrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = 1.0;
  m(0, 0) = 1.0;
  m(n - 1, n - 1) = 1.0;
  return m;
}

Matrix candidate_path(const Graph& g) {
  if (g.size() < 2 || !g.is_path()) throw PreconditionError("path candidate needs a path graph");
  Matrix m = g.adjacency();
  for (Node i = 0; i < g.size(); ++i) m(i, i) = 2.0 - static_cast<double>(g.degree(i));
  return m;
}

ConditionReport check_conditions(const Matrix& m, const Graph& g, double tol) {
  if (!complies(m, g)) throw InputError("matrix does not comply with the graph");
  const std::size_t n = g.size();
  ConditionReport r;
  r.needed = static_cast<std::size_t>(metrics(g).diameter) + 1;
  r.symmetric = is_symmetric(m);
  r.nonnegative = std::all_of(m.data().begin(), m.data().end(), [](double v) { return v >= 0; });
  r.irreducible = is_irreducible(m);

  std::vector<double> row_sums(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) row_sums[i] += m(i, j);
  r.k = row_sums[0];
  const double bound = 1e-10 * std::max(1.0, frobenius_norm(m));
  r.has_one_eigvec = std::all_of(row_sums.begin(), row_sums.end(),
                                 [&](double v) { return std::abs(v - r.k) < bound; });

  if (r.symmetric) {
    r.spectrum = spectrum(m, tol);
    r.s = r.spectrum.distinct();
    if (r.has_one_eigvec) {
      const auto nearest = std::min_element(
          r.spectrum.clusters.begin(), r.spectrum.clusters.end(),
          [&](const Cluster& a, const Cluster& b) {
            return std::abs(a.value - r.k) < std::abs(b.value - r.k);
          });
      r.mult_one = nearest->multiplicity == 1;
    }
  }
  return r;
}

double partial_growth(const std::vector<double>& lambdas, double k) {
  std::vector<double> points = lambdas;
  points.push_back(k);
  double worst = 1.0;
  for (double mu : points) {
    double p = 1.0;
    for (auto it = lambdas.rbegin(); it != lambdas.rend(); ++it) {
      p *= std::abs(mu - *it) / std::abs(k - *it);
      if (p == 0.0) break;
      worst = std::max(worst, p);
    }
  }
  return worst;
}

std::vector<double> order_shifts(std::vector<double> lambdas, double k) {
  std::sort(lambdas.begin(), lambdas.end());
  if (partial_growth(lambdas, k) <= kOrderGrowthLimit) return lambdas;
  // Leja order: farthest from k first, then maximise the product of distances
  // to the shifts already placed (compared in log form).
  std::vector<double> out;
  std::vector<double> logdist(lambdas.size(), 0.0);
  std::vector<bool> used(lambdas.size(), false);
  std::size_t next = 0;
  for (std::size_t i = 1; i < lambdas.size(); ++i)
    if (std::abs(k - lambdas[i]) > std::abs(k - lambdas[next])) next = i;
  while (out.size() < lambdas.size()) {
    used[next] = true;
    out.push_back(lambdas[next]);
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      if (used[i]) continue;
      logdist[i] += std::log(std::abs(lambdas[i] - lambdas[next]));
      if (!best || logdist[i] > logdist[*best]) best = i;
    }
    if (best) next = *best;
  }
  return out;
}

Schedule build_schedule(const Matrix& m, const Graph& g, Construction tag, double tol) {
  const auto report = check_conditions(m, g, tol);
  if (!report.schedulable()) {
    throw PreconditionError(
        "matrix must be symmetric, nonnegative, irreducible, with 1 as a simple eigenvector");
  }
  const std::size_t n = g.size();
  const double scale =
      std::max({1.0, std::abs(report.spectrum.eigenvalues.front()),
                std::abs(report.spectrum.eigenvalues.back())});
  const double separation = tol * scale;

  SpectralMeta meta{report.k, {}};
  bool k_seen = false;
  for (const auto& cluster : report.spectrum.clusters) {
    if (std::abs(report.k - cluster.value) <= separation) {
      if (k_seen) throw NumericalError("eigenvalue k appears in more than one cluster");
      k_seen = true;
      continue;
    }
    meta.lambdas.push_back(cluster.value);
  }
  if (!k_seen) throw NumericalError("row sum k is not among the computed eigenvalues");
  meta.lambdas = order_shifts(meta.lambdas, meta.k);

  Schedule s;
  s.n = n;
  s.construction = tag;
  for (double lambda : meta.lambdas) {
    Matrix factor = m;
    for (std::size_t i = 0; i < n; ++i) factor(i, i) -= lambda;
    factor *= 1.0 / (meta.k - lambda);
    s.factors.push_back(std::move(factor));
  }
  s.meta = std::move(meta);
  return s;
}

Schedule auto_synthesize(const Graph& g, double verify_tol) {
  std::vector<std::function<Schedule()>> attempts;
  if (g.size() >= 2 && g.is_path()) {
    attempts.emplace_back([&] { return build_schedule(candidate_path(g), g, Construction::path); });
  }
  if (g.is_regular()) {
    attempts.emplace_back(
        [&] { return build_schedule(candidate_adjacency(g), g, Construction::adjacency); });
  }
  attempts.emplace_back([&] {
    return build_schedule(candidate_laplacian_shift(g), g, Construction::laplacian_shift);
  });
  if (g.is_tree()) attempts.emplace_back([&] { return gather_distribute(g); });
  attempts.emplace_back([&] { return bfs_fallback(g); });

  std::optional<Schedule> best;
  for (const auto& attempt : attempts) {
    try {
      Schedule s = attempt();
      if (!verify_schedule(s, g, verify_tol).passed) continue;
      if (!best || s.steps() < best->steps()) best = std::move(s);
    } catch (const PreconditionError&) {
    } catch (const NumericalError&) {
    }
  }
  // The BFS fallback is exact, so something always verifies.
  if (!best) throw NumericalError("no construction verified");
  return *best;
}

}  // namespace ftc
