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

#include "ftc/tree_scheme.hpp"

#include <algorithm>

#include "ftc/error.hpp"

namespace ftc {

RootedTreePlan plan_tree(const Graph& t) {
  if (!t.is_tree()) {
    throw PreconditionError("not a tree: " + std::to_string(t.edge_count()) + " edges on " +
                            std::to_string(t.size()) + " nodes");
  }
  const auto m = metrics(t);
  RootedTreePlan plan;
  plan.centers = m.center;
  plan.radius = m.radius;
  const std::size_t n = t.size();
  plan.parent.assign(n, 0);
  plan.depth.assign(n, 0);
  for (Node v = 0; v < n; ++v) {
    // Each node belongs to the nearer center; in a bicentral tree the two
    // centers are adjacent, so distances to them differ by exactly one.
    Node home = plan.centers[0];
    for (Node c : plan.centers)
      if (t.dist(v, c) < t.dist(v, home)) home = c;
    plan.depth[v] = t.dist(v, home);
    plan.parent[v] = v;
    for (Node w : t.neighbors(v)) {
      if (plan.depth[v] > 0 && t.dist(w, home) == plan.depth[v] - 1) {
        plan.parent[v] = w;
        break;
      }
    }
  }
  plan.height = *std::max_element(plan.depth.begin(), plan.depth.end());
  return plan;
}

Schedule gather_distribute(const Graph& t) {
  const auto plan = plan_tree(t);
  const std::size_t n = t.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  const int h = plan.height;  // R for one center, R - 1 for two

  Schedule s;
  s.n = n;
  s.construction = Construction::tree;

  // Gather: at step g (1..h) nodes at depth h - g + 1 feed their parents.
  for (int step = 1; step <= h; ++step) {
    const int feeding = h - step + 1;
    Matrix a = Matrix::identity(n);
    for (Node v = 0; v < n; ++v)
      if (plan.depth[v] == feeding) a(plan.parent[v], v) = 1.0;
    s.factors.push_back(std::move(a));
  }

  if (plan.centers.size() == 2) {
    // Both centers hold their half sums; exchange and average in one step.
    const Node u = plan.centers[0];
    const Node v = plan.centers[1];
    Matrix a = Matrix::identity(n);
    a(u, u) = a(u, v) = a(v, u) = a(v, v) = inv_n;
    s.factors.push_back(std::move(a));
    // Distribute: nodes at depth d copy their parent.
    for (int d = 1; d <= h; ++d) {
      Matrix b = Matrix::identity(n);
      for (Node w = 0; w < n; ++w) {
        if (plan.depth[w] == d) {
          b(w, w) = 0.0;
          b(w, plan.parent[w]) = 1.0;
        }
      }
      s.factors.push_back(std::move(b));
    }
  } else {
    const Node c = plan.centers[0];
    // First distribute step divides by n at the center and its children.
    for (int d = 1; d <= h; ++d) {
      Matrix b = Matrix::identity(n);
      if (d == 1) b(c, c) = inv_n;
      for (Node w = 0; w < n; ++w) {
        if (plan.depth[w] == d) {
          b(w, w) = 0.0;
          b(w, plan.parent[w]) = d == 1 ? inv_n : 1.0;
        }
      }
      s.factors.push_back(std::move(b));
    }
  }
  return s;
}

Schedule bfs_fallback(const Graph& g) {
  const auto m = metrics(g);
  return gather_distribute(bfs_tree(g, m.center.front()));
}

}  // namespace ftc
