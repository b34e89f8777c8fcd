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

#ifndef FTC_SIMULATOR_HPP
#define FTC_SIMULATOR_HPP

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "ftc/graph.hpp"
#include "ftc/schedule.hpp"

namespace ftc {

struct StateVector {
  std::vector<double> values;
  std::size_t step = 0;
};

struct Trajectory {
  std::vector<StateVector> states;  // states[0] is the initial vector
  double initial_mean = 0.0;
  double final_spread = 0.0;        // max |x_i - initial_mean| at the end
};

double mean(const std::vector<double>& x);
double spread(const std::vector<double>& x, double center);

/// Lockstep replay. Each node keeps only its own weight row restricted to
/// its closed neighbourhood and sums neighbour states in ascending index
/// order. Throws InputError on a non-compliant schedule or size mismatch.
Trajectory run_schedule(const Graph& g, const Schedule& s, const StateVector& x0);

/// Name of the generator behind random_initial.
inline constexpr const char* kRngName = "std::mt19937_64";

/// n values uniform in [lo, hi), reproducible from the seed.
StateVector random_initial(std::size_t n, double lo, double hi, std::uint64_t seed);

/// "step,node,value" rows followed by a comment line with initial_mean and
/// final_spread. `comments` are emitted as extra '#' lines before it.
void write_trajectory_csv(std::ostream& out, const Trajectory& tr,
                          const std::vector<std::string>& comments = {});
void export_trajectory(const Trajectory& tr, const std::filesystem::path& path,
                       const std::vector<std::string>& comments = {});

}  // namespace ftc

#endif  // FTC_SIMULATOR_HPP
