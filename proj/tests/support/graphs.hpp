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

#ifndef FTC_TESTS_SUPPORT_GRAPHS_HPP
#define FTC_TESTS_SUPPORT_GRAPHS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ftc/graph.hpp"

namespace ftc::testing {

inline std::string data_path(const std::string& name) {
  return std::string(FTC_DATA_DIR) + "/" + name + ".txt";
}

inline Graph load(const std::string& name) { return read_edge_list(data_path(name)); }

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Node i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Node i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Node i = 0; i < n; ++i)
    for (Node j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

// Random recursive tree on a random labelling.
inline std::vector<Edge> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
  std::vector<Node> label(n);
  std::iota(label.begin(), label.end(), Node{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> e;
  for (Node v = 1; v < n; ++v) {
    std::uniform_int_distribution<Node> pick(0, v - 1);
    e.emplace_back(label[pick(rng)], label[v]);
  }
  return e;
}

inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  return Graph(n, random_tree_edges(n, rng));
}

inline Graph random_connected(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
  auto e = random_tree_edges(n, rng);
  std::uniform_int_distribution<Node> pick(0, n - 1);
  for (std::size_t k = 0; k < extra; ++k) {
    const Node u = pick(rng), v = pick(rng);
    if (u != v) e.emplace_back(u, v);
  }
  return Graph(n, e);
}

// Floyd-Warshall over the edge list; independent of the BFS in Graph.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (Node i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (Node k = 0; k < n; ++k)
    for (Node i = 0; i < n; ++i)
      for (Node j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace ftc::testing

#endif
