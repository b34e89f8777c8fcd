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
#include <numeric>
#include <queue>
#include <sstream>

#include "ftc/feasibility.hpp"

namespace ftc {
namespace {

std::vector<Node> common_neighbors(const Graph& g, Node i, Node j) {
  std::vector<Node> out;
  const auto a = g.neighbors(i);
  const auto b = g.neighbors(j);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Union-find whose representative is always the smallest member index.
class MinUnionFind {
 public:
  explicit MinUnionFind(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
  }

 private:
  std::vector<std::size_t> parent_;
};

class EntryIndex {
 public:
  explicit EntryIndex(std::size_t n) : n_(n) {}
  std::size_t size() const { return 2 * n_ * n_; }
  std::size_t operator()(const StepEntry& e) const {
    const std::size_t base = e.step == StepEntry::Step::second ? 0 : n_ * n_;
    return base + e.row * n_ + e.col;
  }

 private:
  std::size_t n_;
};

}  // namespace

std::string to_string(const StepEntry& e) {
  return std::string(e.step == StepEntry::Step::second ? "a[" : "b[") + std::to_string(e.row) +
         "," + std::to_string(e.col) + "]";
}

std::optional<InfeasibilityCertificate> certify_two_step_infeasible(const Graph& g) {
  if (metrics(g).diameter != 2) return std::nullopt;
  const std::size_t n = g.size();
  const EntryIndex index(n);

  // Pairs are scanned source-major: j (the entry's column) outermost.
  std::vector<ForcedProduct> forced;
  for (Node j = 0; j < n; ++j)
    for (Node i = 0; i < n; ++i)
      if (g.dist(i, j) == 2) {
        const auto via = common_neighbors(g, i, j);
        if (via.size() == 1) forced.push_back({i, via[0], j});
      }

  // The constraint graph joins a_iv and b_vj for every forced product. Inside
  // one component all a-entries share a value alpha and all b-entries equal
  // 1/alpha, so any a-b product within a component is pinned to 1.
  MinUnionFind classes(index.size());
  std::vector<std::vector<std::size_t>> incident(index.size());
  for (std::size_t f = 0; f < forced.size(); ++f) {
    classes.unite(index(forced[f].a()), index(forced[f].b()));
    incident[index(forced[f].a())].push_back(f);
    incident[index(forced[f].b())].push_back(f);
  }

  for (Node j = 0; j < n; ++j) {
    for (Node i = 0; i < n; ++i) {
      if (g.dist(i, j) != 2) continue;
      const auto vias = common_neighbors(g, i, j);
      if (vias.size() < 2) continue;
      const bool determined = std::all_of(vias.begin(), vias.end(), [&](Node v) {
        return classes.find(index({StepEntry::Step::second, i, v})) ==
               classes.find(index({StepEntry::Step::first, v, j}));
      });
      if (!determined) continue;

      InfeasibilityCertificate cert;
      cert.n = n;
      cert.forced = forced;
      cert.i = i;
      cert.j = j;
      for (Node v : vias) {
        // Shortest alternating chain from a_iv to b_vj.
        const std::size_t from = index({StepEntry::Step::second, i, v});
        const std::size_t to = index({StepEntry::Step::first, v, j});
        std::vector<std::size_t> via_forced(index.size(), SIZE_MAX);
        std::vector<char> seen(index.size(), 0);
        std::queue<std::size_t> queue;
        seen[from] = 1;
        queue.push(from);
        while (!queue.empty() && !seen[to]) {
          const std::size_t u = queue.front();
          queue.pop();
          for (std::size_t f : incident[u]) {
            const std::size_t a = index(forced[f].a());
            const std::size_t w = a == u ? index(forced[f].b()) : a;
            if (!seen[w]) {
              seen[w] = 1;
              via_forced[w] = f;
              queue.push(w);
            }
          }
        }
        DeterminedProduct product{v, {}};
        for (std::size_t x = to; x != from;) {
          const std::size_t f = via_forced[x];
          product.chain.push_back(f);
          const std::size_t a = index(forced[f].a());
          x = a == x ? index(forced[f].b()) : a;
        }
        std::reverse(product.chain.begin(), product.chain.end());
        cert.products.push_back(std::move(product));
      }

      // Consecutive links of each chain share one entry; their other
      // entries are therefore equal.
      for (const auto& product : cert.products) {
        for (std::size_t k = 0; k + 1 < product.chain.size(); ++k) {
          const auto& f1 = forced[product.chain[k]];
          const auto& f2 = forced[product.chain[k + 1]];
          Equality eq{};
          if (f1.a() == f2.a()) {
            eq = {f1.b(), f2.b(), f1.a(), product.chain[k], product.chain[k + 1]};
          } else {
            eq = {f1.a(), f2.a(), f1.b(), product.chain[k], product.chain[k + 1]};
          }
          const bool known = std::any_of(cert.equalities.begin(), cert.equalities.end(),
                                         [&](const Equality& e) {
                                           return e.lhs == eq.lhs && e.rhs == eq.rhs;
                                         });
          if (!known) cert.equalities.push_back(eq);
        }
      }
      return cert;
    }
  }
  return std::nullopt;
}

std::string format_certificate(const InfeasibilityCertificate& c) {
  std::ostringstream out;
  out << "two-step infeasibility certificate (n = " << c.n << ", nodes 0-indexed)\n";
  out << "convention: [AB]_ij = sum_v a[i,v] b[v,j], B applied first, AB = 11^T after scaling\n";
  out << "forced products (" << c.forced.size() << "):\n";
  for (std::size_t f = 0; f < c.forced.size(); ++f) {
    const auto& p = c.forced[f];
    out << "  f" << f << ": " << to_string(p.a()) << " * " << to_string(p.b())
        << " = 1  (only common neighbour of " << p.i << " and " << p.j << " is " << p.via
        << ")\n";
  }
  out << "equalities (" << c.equalities.size() << "):\n";
  for (const auto& e : c.equalities) {
    out << "  " << to_string(e.lhs) << " = " << to_string(e.rhs) << "  (both times "
        << to_string(e.shared) << " equal 1: f" << e.lhs_from << ", f" << e.rhs_from << ")\n";
  }
  out << "contradiction at [AB]_" << c.i << "," << c.j << ", common neighbours {";
  for (std::size_t k = 0; k < c.products.size(); ++k)
    out << (k ? ", " : "") << c.products[k].via;
  out << "}:\n";
  for (const auto& p : c.products) {
    out << "  " << to_string({StepEntry::Step::second, c.i, p.via}) << " * "
        << to_string({StepEntry::Step::first, p.via, c.j}) << " = 1  via chain";
    for (std::size_t f : p.chain) out << " f" << f;
    out << "\n";
  }
  out << "  [AB]_" << c.i << "," << c.j << " = ";
  for (std::size_t k = 0; k < c.products.size(); ++k) out << (k ? " + " : "") << "1";
  out << "\nsum = " << c.sum() << " ≠ 1\n";
  return out.str();
}

}  // namespace ftc
