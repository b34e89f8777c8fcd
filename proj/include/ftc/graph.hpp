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

#ifndef FTC_GRAPH_HPP
#define FTC_GRAPH_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ftc/matrix.hpp"

namespace ftc {

using Node = std::size_t;
using Edge = std::pair<Node, Node>;  // stored with first < second

/// Undirected, simple, connected graph with its all-pairs hop distances.
///
/// Construction validates the invariants (no self loops, indices in range,
/// connectivity) and runs one BFS per node; every query afterwards is O(1)
/// or O(degree). Instances are immutable.
class Graph {
 public:
  /// Duplicate and reversed pairs are merged. Throws InputError on a self
  /// loop, an out-of-range index or a disconnected result.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted ascending.
  std::span<const Node> neighbors(Node i) const { return adj_[i]; }
  std::size_t degree(Node i) const { return adj_[i].size(); }
  bool adjacent(Node i, Node j) const { return dist(i, j) == 1; }
  int dist(Node i, Node j) const { return dist_[i * n_ + j]; }

  bool is_regular() const;
  bool is_tree() const { return edges_.size() + 1 == n_; }
  /// True when the graph is a simple path (connected, max degree 2, tree).
  bool is_path() const;

  Matrix adjacency() const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Node>> adj_;
  std::vector<int> dist_;
};

/// Parses an edge list: one "u v" pair per line, 0-indexed, '#' comments.
/// Without `n` the node count is one more than the largest index seen.
Graph parse_edge_list(std::string_view text, std::optional<std::size_t> n = std::nullopt);
Graph read_edge_list(const std::filesystem::path& path);
std::string format_edge_list(const Graph& g);

struct Metrics {
  int diameter = 0;
  int radius = 0;
  std::vector<int> eccentricity;
  std::vector<Node> center;  // ascending
};

Metrics metrics(const Graph& g);

/// Intersection array {b_0..b_{D-1}; c_1..c_D} of a distance-regular graph.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

std::optional<IntersectionArray> is_distance_regular(const Graph& g);

/// Shell sizes k_0..k_D implied by an intersection array
/// (k_0 = 1, k_{r+1} = k_r b_r / c_{r+1}).
std::vector<long long> shell_sizes(const IntersectionArray& a);

/// BFS parent of every node (root maps to itself). Ties go to the
/// lowest-indexed neighbour one level closer to the root.
std::vector<Node> bfs_parents(const Graph& g, Node root);
Graph bfs_tree(const Graph& g, Node root);

}  // namespace ftc

#endif  // FTC_GRAPH_HPP
