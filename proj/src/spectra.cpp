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

#include "ftc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "ftc/error.hpp"

namespace ftc {
namespace {

constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Zeroes a(p, q) with one rotation, updating a and the accumulated
// eigenvector matrix v in place.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::hypot(t, 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

bool is_symmetric(const Matrix& m, double rel_tol) {
  if (!m.square()) return false;
  const double bound = rel_tol * std::max(1.0, frobenius_norm(m));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > bound) return false;
  return true;
}

EigenDecomposition sym_eig(const Matrix& m) {
  if (!is_symmetric(m)) throw InputError("sym_eig: matrix is not symmetric");
  const std::size_t n = m.rows();
  Matrix a = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (m(i, j) + m(j, i));
  Matrix v = Matrix::identity(n);

  const double threshold = kOffDiagonalTol * frobenius_norm(m);
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep == kMaxSweeps) {
      throw NumericalError("sym_eig: no convergence after " + std::to_string(kMaxSweeps) +
                           " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweep;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<Cluster> cluster_distinct(std::span<const double> eigs, double tol) {
  std::vector<double> sorted(eigs.begin(), eigs.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Cluster> clusters;
  if (sorted.empty()) return clusters;
  const double scale = std::max({1.0, std::abs(sorted.front()), std::abs(sorted.back())});
  const double gap = tol * scale;

  double sum = sorted[0];
  std::size_t count = 1;
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k] - sorted[k - 1] > gap) {
      clusters.push_back({sum / static_cast<double>(count), count});
      sum = 0.0;
      count = 0;
    }
    sum += sorted[k];
    ++count;
  }
  clusters.push_back({sum / static_cast<double>(count), count});
  return clusters;
}

Spectrum spectrum(const Matrix& m, double tol) {
  Spectrum s;
  s.eigenvalues = sym_eig(m).values;
  s.clusters = cluster_distinct(s.eigenvalues, tol);
  return s;
}

MinimalPolyInfo minimal_poly_degree(const Matrix& m, double tol) {
  const auto s = spectrum(m, tol);
  MinimalPolyInfo info{s.distinct(), {}};
  for (const auto& c : s.clusters) info.roots.push_back(c.value);
  return info;
}

bool is_irreducible(const Matrix& m) {
  if (!m.square() || m.rows() == 0) return false;
  const std::size_t n = m.rows();
  // Forward and backward reachability from node 0 over arcs i -> j when m_ji != 0.
  auto reaches_all = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::queue<std::size_t> queue;
    seen[0] = 1;
    queue.push(0);
    std::size_t count = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t w = 0; w < n; ++w) {
        const double entry = forward ? m(w, u) : m(u, w);
        if (!seen[w] && entry != 0.0) {
          seen[w] = 1;
          ++count;
          queue.push(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(true) && reaches_all(false);
}

bool complies(const Matrix& m, const Graph& g) {
  if (m.rows() != g.size() || m.cols() != g.size()) {
    throw InputError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " but the graph has " + std::to_string(g.size()) + " nodes");
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0.0 && !g.adjacent(i, j)) return false;
  return true;
}

std::optional<int> no_zero_entry_witness(const Matrix& m, int max_deg) {
  if (!m.square()) throw InputError("no_zero_entry_witness: matrix must be square");
  const std::size_t n = m.rows();
  // Boolean walk reachability: reach(i, j) after d steps means some
  // |M|^k with k <= d has a positive (i, j) entry.
  std::vector<char> reach(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) reach[i * n + i] = 1;
  auto full = [&] { return std::all_of(reach.begin(), reach.end(), [](char c) { return c; }); };
  if (full()) return 0;
  for (int d = 1; d <= max_deg; ++d) {
    std::vector<char> next = reach;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (m(i, k) == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k * n + j]) next[i * n + j] = 1;
      }
    reach.swap(next);
    if (full()) return d;
  }
  return std::nullopt;
}

}  // namespace ftc
