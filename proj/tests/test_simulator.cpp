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

#include <doctest.h>

#include <cstring>
#include <random>
#include <sstream>

#include "ftc/error.hpp"
#include "ftc/simulator.hpp"
#include "ftc/synthesis.hpp"
#include "ftc/tree_scheme.hpp"
#include "support/graphs.hpp"

using namespace ftc;
using namespace ftc::testing;

TEST_CASE("run_schedule on Pappus reaches the average in four steps") {
  const Graph g = load("pappus");
  const Schedule s = build_schedule(g.adjacency(), g, Construction::adjacency);
  const auto x0 = random_initial(18, -1.5, 1.5, 7);
  const auto tr = run_schedule(g, s, x0);
  REQUIRE(tr.states.size() == 5);
  CHECK(tr.final_spread < 1e-9);
  CHECK(spread(tr.states[3].values, tr.initial_mean) > 1e-3);
  for (const auto& st : tr.states) CHECK(mean(st.values) == doctest::Approx(tr.initial_mean).epsilon(1e-12));
}

TEST_CASE("constant states are fixed points of spectral schedules") {
  for (const char* name : {"petersen", "gcx", "p10"}) {
    const Graph g = load(name);
    const Schedule s = auto_synthesize(g);
    const auto tr = run_schedule(g, s, StateVector{std::vector<double>(g.size(), 2.5), 0});
    for (const auto& st : tr.states)
      for (double v : st.values) CHECK(v == doctest::Approx(2.5).epsilon(1e-12));
  }
}

TEST_CASE("tree schedule on P4 from (0,0,0,4)") {
  const Graph g = path_graph(4);
  const auto tr = run_schedule(g, gather_distribute(g), StateVector{{0, 0, 0, 4}, 0});
  CHECK(tr.states.back().values == std::vector<double>{1, 1, 1, 1});
  CHECK(tr.final_spread == 0.0);
}

TEST_CASE("run_schedule input errors") {
  const Graph g = path_graph(3);
  Schedule s = gather_distribute(g);
  CHECK_THROWS_AS(run_schedule(g, s, StateVector{{1, 2}, 0}), InputError);
  s.factors[0](0, 2) = 0.5;
  CHECK_THROWS_AS(run_schedule(g, s, StateVector{{1, 2, 3}, 0}), InputError);
  CHECK_THROWS_AS(run_schedule(path_graph(4), gather_distribute(g), StateVector{{1, 2, 3, 4}, 0}),
                  InputError);
}

TEST_CASE("node-local updates match the global matrix-vector product bit for bit") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_connected(3 + trial, trial, rng);
    Schedule s;
    s.n = g.size();
    for (int k = 0; k < 3; ++k) {
      Matrix m(g.size(), g.size());
      for (Node i = 0; i < g.size(); ++i) {
        m(i, i) = u(rng);
        for (Node j : g.neighbors(i)) m(i, j) = u(rng);
      }
      s.factors.push_back(std::move(m));
    }
    StateVector x0;
    for (Node i = 0; i < g.size(); ++i) x0.values.push_back(u(rng));
    const auto tr = run_schedule(g, s, x0);
    std::vector<double> x = x0.values;
    for (std::size_t k = 0; k < s.steps(); ++k) {
      x = s.factors[k] * std::span<const double>(x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        // +0.0 normalises a possible signed zero
        const double a = tr.states[k + 1].values[i] + 0.0;
        const double b = x[i] + 0.0;
        CHECK(std::memcmp(&a, &b, sizeof a) == 0);
      }
    }
  }
}

TEST_CASE("mean is invariant and the final spread is bounded by the residual") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_connected(6 + trial, trial, rng);
    const Schedule s = build_schedule(candidate_laplacian_shift(g), g, Construction::laplacian_shift);
    const auto x0 = random_initial(g.size(), -1.5, 1.5, 1000 + trial);
    const auto tr = run_schedule(g, s, x0);
    for (const auto& st : tr.states) CHECK(std::abs(mean(st.values) - tr.initial_mean) < 1e-12);
    const double residual = verify_schedule(s, g).residual;
    double inf_norm = 0;
    for (double v : x0.values) inf_norm = std::max(inf_norm, std::abs(v));
    CHECK(tr.final_spread <= g.size() * residual * inf_norm + 1e-15);
  }
}

TEST_CASE("random_initial") {
  const auto a = random_initial(18, -1.5, 1.5, 7);
  const auto b = random_initial(18, -1.5, 1.5, 7);
  REQUIRE(a.values.size() == 18);
  CHECK(a.values == b.values);
  for (double v : a.values) {
    CHECK(v >= -1.5);
    CHECK(v < 1.5);
  }
  CHECK(random_initial(1, 0, 1, 3).values.size() == 1);
  CHECK(random_initial(18, -1.5, 1.5, 8).values != a.values);
  CHECK_THROWS_AS(random_initial(3, 1.0, 1.0, 1), InputError);
}

TEST_CASE("trajectory CSV") {
  SUBCASE("P3 two-step run has 9 data rows") {
    const Graph g = path_graph(3);
    const auto tr = run_schedule(g, gather_distribute(g), StateVector{{1, 2, 6}, 0});
    std::ostringstream out;
    write_trajectory_csv(out, tr, {"rng=none"});
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "step,node,value");
    int rows = 0;
    std::string last;
    while (std::getline(in, line)) {
      if (line[0] == '#') last = line;
      else ++rows;
    }
    CHECK(rows == 9);
    CHECK(last == "# initial_mean=3,final_spread=0");
  }
  SUBCASE("Pappus has 90 data rows") {
    const Graph g = load("pappus");
    const auto tr = run_schedule(g, auto_synthesize(g), random_initial(18, -1.5, 1.5, 7));
    std::ostringstream out;
    write_trajectory_csv(out, tr);
    const std::string text = out.str();
    const auto lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == 1 + 90 + 1);
  }
  SUBCASE("unwritable destination") {
    const Graph g = path_graph(3);
    const auto tr = run_schedule(g, gather_distribute(g), StateVector{{1, 2, 6}, 0});
    CHECK_THROWS_AS(export_trajectory(tr, "/nonexistent/dir/out.csv"), InputError);
  }
}
