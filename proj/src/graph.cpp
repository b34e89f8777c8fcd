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

#include "ftc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>
#include <string>

#include "ftc/error.hpp"

namespace ftc {
namespace {

constexpr int kUnreached = -1;

std::vector<int> bfs_distances(const std::vector<std::vector<Node>>& adj, Node root) {
  std::vector<int> d(adj.size(), kUnreached);
  std::queue<Node> queue;
  d[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop();
    for (Node w : adj[u]) {
      if (d[w] == kUnreached) {
        d[w] = d[u] + 1;
        queue.push(w);
      }
    }
  }
  return d;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n) {
  if (n == 0) throw InputError("graph must have at least one node");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("node index out of range: (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") with n = " + std::to_string(n));
    }
    if (u == v) throw InputError("self loop on node " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());

  dist_.assign(n * n, 0);
  for (Node i = 0; i < n; ++i) {
    const auto row = bfs_distances(adj_, i);
    for (Node j = 0; j < n; ++j) {
      if (row[j] == kUnreached) {
        throw InputError("graph is disconnected: no path from " + std::to_string(i) +
                         " to " + std::to_string(j));
      }
      dist_[i * n + j] = row[j];
    }
  }
}

bool Graph::is_regular() const {
  return std::all_of(adj_.begin(), adj_.end(),
                     [&](const auto& a) { return a.size() == adj_[0].size(); });
}

bool Graph::is_path() const {
  if (!is_tree()) return false;
  return std::all_of(adj_.begin(), adj_.end(), [](const auto& a) { return a.size() <= 2; });
}

Matrix Graph::adjacency() const {
  Matrix a(n_, n_);
  for (auto [u, v] : edges_) a(u, v) = a(v, u) = 1.0;
  return a;
}

Graph parse_edge_list(std::string_view text, std::optional<std::size_t> n) {
  std::vector<Edge> edges;
  std::size_t max_index = 0;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string su, sv, extra;
    fields >> su >> sv;
    auto parse_index = [&](const std::string& s) -> Node {
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("line " + std::to_string(line_no) + ": expected \"u v\", got \"" +
                         line + "\"");
      }
      if (value < 0 || (n && static_cast<std::size_t>(value) >= *n)) {
        throw InputError("line " + std::to_string(line_no) + ": node index out of range: " + s);
      }
      return static_cast<Node>(value);
    };
    const Node u = parse_index(su);
    const Node v = parse_index(sv);
    if (fields >> extra && extra[0] != '#') {
      throw InputError("line " + std::to_string(line_no) + ": trailing data \"" + extra + "\"");
    }
    if (u == v) throw InputError("line " + std::to_string(line_no) + ": self loop on node " + su);
    max_index = std::max({max_index, u, v});
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw InputError("edge list is empty");
  return Graph(n.value_or(max_index + 1), edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Metrics metrics(const Graph& g) {
  const std::size_t n = g.size();
  Metrics m;
  m.eccentricity.assign(n, 0);
  for (Node i = 0; i < n; ++i)
    for (Node j = 0; j < n; ++j) m.eccentricity[i] = std::max(m.eccentricity[i], g.dist(i, j));
  m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
  m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
  for (Node i = 0; i < n; ++i)
    if (m.eccentricity[i] == m.radius) m.center.push_back(i);
  return m;
}

std::optional<IntersectionArray> is_distance_regular(const Graph& g) {
  const std::size_t n = g.size();
  const int diameter = metrics(g).diameter;
  std::vector<int> b(diameter + 1, -1);
  std::vector<int> c(diameter + 1, -1);
  // b[D] and c[0] are zero by definition and recorded for uniform checking.
  for (Node i = 0; i < n; ++i) {
    for (Node j = 0; j < n; ++j) {
      const int r = g.dist(i, j);
      int closer = 0;
      int farther = 0;
      for (Node w : g.neighbors(i)) {
        const int d = g.dist(w, j);
        if (d == r - 1) ++closer;
        else if (d == r + 1) ++farther;
      }
      if (c[r] < 0) c[r] = closer;
      if (b[r] < 0) b[r] = farther;
      if (c[r] != closer || b[r] != farther) return std::nullopt;
    }
  }
  IntersectionArray array;
  array.b.assign(b.begin(), b.begin() + diameter);
  array.c.assign(c.begin() + 1, c.end());
  return array;
}

std::vector<long long> shell_sizes(const IntersectionArray& a) {
  std::vector<long long> k{1};
  for (std::size_t r = 0; r < a.b.size(); ++r) k.push_back(k.back() * a.b[r] / a.c[r]);
  return k;
}

std::vector<Node> bfs_parents(const Graph& g, Node root) {
  if (root >= g.size()) throw InputError("BFS root out of range");
  std::vector<Node> parent(g.size(), root);
  for (Node v = 0; v < g.size(); ++v) {
    if (v == root) continue;
    const int depth = g.dist(root, v);
    for (Node w : g.neighbors(v)) {
      if (g.dist(root, w) == depth - 1) {
        parent[v] = w;
        break;  // neighbours are sorted, so this is the lowest index
      }
    }
  }
  return parent;
}

Graph bfs_tree(const Graph& g, Node root) {
  const auto parent = bfs_parents(g, root);
  std::vector<Edge> edges;
  for (Node v = 0; v < g.size(); ++v)
    if (v != root) edges.emplace_back(parent[v], v);
  return Graph(g.size(), edges);
}

}  // namespace ftc
