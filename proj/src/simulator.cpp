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

#include "ftc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>

#include "ftc/error.hpp"
#include "ftc/spectra.hpp"

namespace ftc {
namespace {

// What a single node stores: for every round, the weights it applies to
// itself and its neighbours, in ascending neighbour order.
struct NodeProgram {
  std::vector<Node> inputs;                 // closed neighbourhood, ascending
  std::vector<std::vector<double>> weights; // weights[round][k] for inputs[k]
};

std::vector<NodeProgram> distribute(const Graph& g, const Schedule& s) {
  std::vector<NodeProgram> programs(g.size());
  for (Node i = 0; i < g.size(); ++i) {
    auto& inputs = programs[i].inputs;
    inputs.assign(g.neighbors(i).begin(), g.neighbors(i).end());
    inputs.insert(std::lower_bound(inputs.begin(), inputs.end(), i), i);
    for (const auto& factor : s.factors) {
      std::vector<double> row;
      row.reserve(inputs.size());
      for (Node j : inputs) row.push_back(factor(i, j));
      programs[i].weights.push_back(std::move(row));
    }
  }
  return programs;
}

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double mean(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

double spread(const std::vector<double>& x, double center) {
  double r = 0.0;
  for (double v : x) r = std::max(r, std::abs(v - center));
  return r;
}

Trajectory run_schedule(const Graph& g, const Schedule& s, const StateVector& x0) {
  if (s.n != g.size()) throw InputError("schedule size does not match the graph");
  if (x0.values.size() != g.size()) {
    throw InputError("initial state has " + std::to_string(x0.values.size()) +
                     " values but the graph has " + std::to_string(g.size()) + " nodes");
  }
  for (const auto& f : s.factors)
    if (!complies(f, g)) throw InputError("schedule does not comply with the graph");

  const auto programs = distribute(g, s);
  Trajectory tr;
  tr.states.push_back({x0.values, 0});
  tr.initial_mean = mean(x0.values);
  for (std::size_t round = 0; round < s.steps(); ++round) {
    const auto& current = tr.states.back().values;
    std::vector<double> next(g.size());
    // Every node reads only round-t states; writes land in a fresh vector.
    for (Node i = 0; i < g.size(); ++i) {
      const auto& prog = programs[i];
      double acc = 0.0;
      for (std::size_t k = 0; k < prog.inputs.size(); ++k)
        acc += prog.weights[round][k] * current[prog.inputs[k]];
      next[i] = acc;
    }
    tr.states.push_back({std::move(next), round + 1});
  }
  tr.final_spread = spread(tr.states.back().values, tr.initial_mean);
  return tr;
}

StateVector random_initial(std::size_t n, double lo, double hi, std::uint64_t seed) {
  if (!(lo < hi)) throw InputError("random_initial needs lo < hi");
  std::mt19937_64 rng(seed);
  StateVector x;
  x.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // 53 random bits mapped to [0, 1); the clamp guards the rounding of lo + u (hi - lo).
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    x.values.push_back(std::min(lo + u * (hi - lo), std::nextafter(hi, lo)));
  }
  return x;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& tr,
                          const std::vector<std::string>& comments) {
  out << "step,node,value\n";
  for (const auto& state : tr.states)
    for (std::size_t i = 0; i < state.values.size(); ++i)
      out << state.step << ',' << i << ',' << format_g17(state.values[i]) << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "# initial_mean=" << format_g17(tr.initial_mean)
      << ",final_spread=" << format_g17(tr.final_spread) << '\n';
}

void export_trajectory(const Trajectory& tr, const std::filesystem::path& path,
                       const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write trajectory file " + path.string());
  write_trajectory_csv(out, tr, comments);
  if (!out) throw InputError("failed writing trajectory file " + path.string());
}

}  // namespace ftc
