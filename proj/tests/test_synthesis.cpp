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

#include <algorithm>
#include <cmath>
#include <random>

#include "ftc/error.hpp"
#include "ftc/synthesis.hpp"
#include "support/graphs.hpp"

using namespace ftc;
using namespace ftc::testing;

namespace {

Matrix shifted(const Matrix& a, double shift, double scale) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += shift;
  return scale * m;
}

std::vector<double> row_sums(const Matrix& m) {
  std::vector<double> s(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s[i] += m(i, j);
  return s;
}

}  // namespace

TEST_CASE("candidate_adjacency") {
  CHECK(candidate_adjacency(load("pappus")) == load("pappus").adjacency());
  CHECK(candidate_adjacency(cycle_graph(4)) == cycle_graph(4).adjacency());
  CHECK_THROWS_AS(candidate_adjacency(path_graph(3)), PreconditionError);
  const auto r = check_conditions(candidate_adjacency(cycle_graph(4)), cycle_graph(4));
  CHECK(r.k == 2.0);
}

TEST_CASE("candidate_laplacian_shift") {
  SUBCASE("G_cx") {
    const Graph g = load("gcx");
    const Matrix m = candidate_laplacian_shift(g);
    const auto r = check_conditions(m, g);
    CHECK(r.k == 4.0);
    CHECK(r.s == 4);
    CHECK(r.schedulable());
    CHECK(r.needed == 3);
    CHECK_FALSE(r.diameter_tight());
  }
  SUBCASE("K_N reduces to the adjacency matrix") {
    for (std::size_t n : {2, 3, 6}) {
      const Graph g = complete_graph(n);
      const Matrix m = candidate_laplacian_shift(g);
      CHECK(m == g.adjacency());
      const auto r = check_conditions(m, g);
      CHECK(r.k == static_cast<double>(n - 1));
      CHECK(r.s == 2);
    }
  }
  SUBCASE("regular graphs: same as adjacency") {
    CHECK(candidate_laplacian_shift(load("petersen")) == load("petersen").adjacency());
  }
  SUBCASE("structure on random graphs") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = random_connected(4 + trial, trial, rng);
      const auto r = check_conditions(candidate_laplacian_shift(g), g);
      CHECK(r.symmetric);
      CHECK(r.nonnegative);
      CHECK(r.irreducible);
      CHECK(r.has_one_eigvec);
      CHECK(r.mult_one);
    }
  }
}

TEST_CASE("candidate_path") {
  CHECK_THROWS_AS(candidate_path(std::size_t{1}), PreconditionError);
  SUBCASE("n = 2") {
    const Matrix m = candidate_path(2);
    CHECK(m == Matrix::constant(2, 1.0));
    const Schedule s = build_schedule(m, path_graph(2), Construction::path);
    REQUIRE(s.steps() == 1);
    CHECK(max_abs_diff(s.factors[0], Matrix::constant(2, 0.5)) < 1e-15);
  }
  SUBCASE("n = 3: (M + I)/3 then (M - I)/1") {
    const Graph g = path_graph(3);
    const Matrix m = candidate_path(3);
    // M^2 = I + J, so (M - I)(M + I) = J.
    CHECK(max_abs_diff(m * m, Matrix::identity(3) + Matrix::constant(3, 1.0)) == 0.0);
    const Schedule s = build_schedule(m, g, Construction::path);
    REQUIRE(s.steps() == 2);
    CHECK(max_abs_diff(s.factors[0], shifted(m, 1.0, 1.0 / 3.0)) < 1e-14);
    CHECK(max_abs_diff(s.factors[1], shifted(m, -1.0, 1.0)) < 1e-14);
    CHECK(verify_schedule(s, g).residual < 1e-14);
  }
  SUBCASE("n = 10: raw product is 11^T") {
    const Matrix m = candidate_path(10);
    const auto info = minimal_poly_degree(m);
    REQUIRE(info.degree == 10);
    Matrix raw = Matrix::identity(10);
    for (double l : info.roots) {
      if (std::abs(l - 2.0) < 1e-8) continue;
      raw = shifted(m, -l, 1.0) * raw;
    }
    CHECK(max_abs_diff(raw, Matrix::constant(10, 1.0)) < 1e-8);
  }
  SUBCASE("relabelled path") {
    const Graph g(4, std::vector<Edge>{{2, 0}, {0, 3}, {3, 1}});
    const Matrix m = candidate_path(g);
    CHECK(m(2, 2) == 1.0);
    CHECK(m(1, 1) == 1.0);
    CHECK(m(0, 0) == 0.0);
    CHECK(verify_schedule(build_schedule(m, g, Construction::path), g).passed);
    CHECK_THROWS_AS(candidate_path(cycle_graph(4)), PreconditionError);
  }
}

TEST_CASE("check_conditions") {
  SUBCASE("Pappus adjacency") {
    const Graph g = load("pappus");
    const auto r = check_conditions(g.adjacency(), g);
    CHECK(r.symmetric);
    CHECK(r.nonnegative);
    CHECK(r.irreducible);
    CHECK(r.has_one_eigvec);
    CHECK(r.mult_one);
    CHECK(r.k == 3.0);
    CHECK(r.s == 5);
    CHECK(r.needed == 5);
    CHECK(r.diameter_tight());
  }
  SUBCASE("asymmetric compliant matrix") {
    const Graph g = cycle_graph(5);
    Matrix m = g.adjacency();
    m(0, 1) = 0.3;
    const auto r = check_conditions(m, g);
    CHECK_FALSE(r.symmetric);
    CHECK_FALSE(r.schedulable());
  }
  SUBCASE("non-compliant matrix") {
    CHECK_THROWS_AS(check_conditions(Matrix::constant(3, 1.0), path_graph(3)), InputError);
  }
}

TEST_CASE("build_schedule on Pappus reproduces the displayed factors") {
  const Graph g = load("pappus");
  const Matrix a = g.adjacency();
  const Schedule s = build_schedule(a, g, Construction::adjacency);
  REQUIRE(s.steps() == 4);
  const double r3 = std::sqrt(3.0);
  CHECK(max_abs_diff(s.factors[0], shifted(a, 3.0, 1.0 / 6.0)) < 1e-12);
  CHECK(max_abs_diff(s.factors[1], shifted(a, r3, 1.0 / (3.0 + r3))) < 1e-12);
  CHECK(max_abs_diff(s.factors[2], shifted(a, 0.0, 1.0 / 3.0)) < 1e-12);
  CHECK(max_abs_diff(s.factors[3], shifted(a, -r3, 1.0 / (3.0 - r3))) < 1e-12);
  const auto v = verify_schedule(s, g);
  CHECK(v.compliant);
  CHECK(v.residual < 1e-10);
  REQUIRE(s.meta);
  CHECK(s.meta->k == 3.0);
  CHECK(s.meta->lambdas.size() == 4);
}

TEST_CASE("build_schedule on K_N is a single averaging step") {
  for (std::size_t n : {2, 3, 7}) {
    const Graph g = complete_graph(n);
    const Schedule s = build_schedule(candidate_adjacency(g), g, Construction::adjacency);
    REQUIRE(s.steps() == 1);
    CHECK(max_abs_diff(s.factors[0], Matrix::constant(n, 1.0 / n)) < 1e-14);
  }
}

TEST_CASE("build_schedule rejects matrices outside the hypotheses") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(build_schedule(g.adjacency(), g, Construction::adjacency), PreconditionError);
  Matrix m = candidate_path(3);
  m(0, 0) = -1.0;
  CHECK_THROWS_AS(build_schedule(m, g, Construction::path), PreconditionError);
}

TEST_CASE("verify_schedule") {
  const Graph p3 = path_graph(3);
  SUBCASE("identity-only schedule fails with residual 2/3") {
    Schedule s{3, {Matrix::identity(3)}, Construction::search, std::nullopt};
    const auto v = verify_schedule(s, p3);
    CHECK(v.residual == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(v.compliant);
    CHECK_FALSE(v.passed);
  }
  SUBCASE("non-edge entry breaks compliance") {
    Schedule s = build_schedule(candidate_path(3), p3, Construction::path);
    s.factors[1](0, 2) = 1.0;
    CHECK_FALSE(verify_schedule(s, p3).compliant);
    CHECK_FALSE(verify_schedule(s, p3).passed);
  }
  SUBCASE("dimension mismatch") {
    Schedule s{4, {Matrix::identity(4)}, Construction::search, std::nullopt};
    CHECK_THROWS_AS(verify_schedule(s, p3), InputError);
  }
}

TEST_CASE("spectral schedule invariants") {
  std::vector<Graph> graphs{load("pappus"), load("petersen"), load("gcx"), load("cube3"),
                            load("k33"),    path_graph(12),   cycle_graph(7)};
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) graphs.push_back(random_connected(6 + trial, trial, rng));

  for (const auto& g : graphs) {
    const Schedule s = build_schedule(candidate_laplacian_shift(g), g, Construction::laplacian_shift);
    const std::size_t n = g.size();
    REQUIRE(verify_schedule(s, g).passed);
    for (std::size_t a = 0; a < s.steps(); ++a) {
      // rows and columns sum to one
      for (double r : row_sums(s.factors[a])) CHECK(r == doctest::Approx(1.0).epsilon(1e-10));
      for (double c : row_sums(s.factors[a].transposed()))
        CHECK(c == doctest::Approx(1.0).epsilon(1e-10));
      for (std::size_t b = a + 1; b < s.steps(); ++b) {
        const Matrix ab = s.factors[a] * s.factors[b];
        const Matrix ba = s.factors[b] * s.factors[a];
        CHECK(max_abs_diff(ab, ba) < 1e-10 * std::max(1.0, max_abs(ab)));
      }
    }
    // any order verifies
    Schedule reversed = s;
    std::reverse(reversed.factors.begin(), reversed.factors.end());
    CHECK(verify_schedule(reversed, g).passed);
    Schedule shuffled = s;
    std::shuffle(shuffled.factors.begin(), shuffled.factors.end(), rng);
    CHECK(verify_schedule(shuffled, g).passed);

    // moving a scalar between two factors leaves the verdict alone
    if (s.steps() >= 2) {
      Schedule scaled = s;
      scaled.factors[0] *= 8.0;
      scaled.factors[1] *= 0.125;
      CHECK(verify_schedule(scaled, g).passed == verify_schedule(s, g).passed);
    }
    (void)n;
  }
}

TEST_CASE("distance-regular graphs get diameter-length schedules") {
  for (const char* name : {"pappus", "petersen", "c5", "c6", "k33", "cube3", "k5"}) {
    const Graph g = load(name);
    REQUIRE(is_distance_regular(g));
    const Schedule s = build_schedule(candidate_adjacency(g), g, Construction::adjacency);
    CHECK(s.steps() == static_cast<std::size_t>(metrics(g).diameter));
    CHECK(verify_schedule(s, g).passed);
  }
}

TEST_CASE("auto_synthesize") {
  SUBCASE("Pappus") {
    const Schedule s = auto_synthesize(load("pappus"));
    CHECK(s.steps() == 4);
    CHECK(s.construction == Construction::adjacency);
  }
  SUBCASE("G_cx via the shifted Laplacian") {
    const Schedule s = auto_synthesize(load("gcx"));
    CHECK(s.steps() == 3);
    CHECK(s.construction == Construction::laplacian_shift);
  }
  SUBCASE("paths prefer the path construction") {
    const Schedule s = auto_synthesize(path_graph(10));
    CHECK(s.steps() == 9);
    CHECK(s.construction == Construction::path);
  }
  SUBCASE("trees reach their diameter") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph t = random_tree(3 + trial * 2, rng);
      const Schedule s = auto_synthesize(t);
      CHECK(s.steps() == static_cast<std::size_t>(metrics(t).diameter));
      CHECK(verify_schedule(s, t).passed);
    }
  }
  SUBCASE("always returns something verified") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = random_connected(5 + trial, 2 * trial, rng);
      const Schedule s = auto_synthesize(g);
      CHECK(verify_schedule(s, g).passed);
      CHECK(s.steps() <= static_cast<std::size_t>(2 * metrics(g).radius));
    }
  }
}

TEST_CASE("order_shifts") {
  SUBCASE("tame spectra keep ascending order") {
    const double r3 = std::sqrt(3.0);
    const std::vector<double> l{r3, -3.0, 0.0, -r3};
    CHECK(order_shifts(l, 3.0) == std::vector<double>{-3.0, -r3, 0.0, r3});
    CHECK(partial_growth({-3.0, -r3, 0.0, r3}, 3.0) <= kOrderGrowthLimit);
  }
  SUBCASE("long paths switch to a stable order") {
    const Graph g = path_graph(40);
    const Schedule s = build_schedule(candidate_path(g), g, Construction::path);
    std::vector<double> asc = s.meta->lambdas;
    std::sort(asc.begin(), asc.end());
    CHECK(partial_growth(asc, 2.0) > kOrderGrowthLimit);
    CHECK(partial_growth(s.meta->lambdas, 2.0) <= kOrderGrowthLimit);
    CHECK(std::is_permutation(asc.begin(), asc.end(), s.meta->lambdas.begin()));
    CHECK(verify_schedule(s, g).residual < 1e-12);
  }
  SUBCASE("growth by hand") {
    // Shifts {0, 1} with k = 2: the last factor maps mu = 0 to 1.
    CHECK(partial_growth({0.0, 1.0}, 2.0) == 1.0);
    // Shifts {-1, 1.9} with k = 2: the last factor maps mu = -1 to 2.9 / 0.1.
    CHECK(partial_growth({-1.0, 1.9}, 2.0) == doctest::Approx(29.0));
    // Reversed, the largest gain is the 2.9 / 3 < 1 of mu = 1.9, so mu = k dominates.
    CHECK(partial_growth({1.9, -1.0}, 2.0) == 1.0);
  }
}
