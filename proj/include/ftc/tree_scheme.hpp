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

#ifndef FTC_TREE_SCHEME_HPP
#define FTC_TREE_SCHEME_HPP

#include <vector>

#include "ftc/graph.hpp"
#include "ftc/schedule.hpp"

namespace ftc {

/// A tree rooted at its center (one node) or bicenter (two adjacent
/// nodes). With two centers each node hangs off the center of its own half.
struct RootedTreePlan {
  std::vector<Node> centers;
  std::vector<Node> parent;  // centers map to themselves
  std::vector<int> depth;    // distance to the center of the node's half
  int radius = 0;
  int height = 0;            // max depth
};

/// Throws PreconditionError if t is not a tree.
RootedTreePlan plan_tree(const Graph& t);

/// Gather-and-distribute schedule of exactly D(t) steps. Entries are 0, 1
/// or 1/n, so the product is J/n up to a single rounding of 1/n.
Schedule gather_distribute(const Graph& t);

/// Gather-and-distribute on the BFS tree grown from the lowest-indexed
/// central node of g. At most 2 R(g) steps, compliant with g.
Schedule bfs_fallback(const Graph& g);

}  // namespace ftc

#endif  // FTC_TREE_SCHEME_HPP
