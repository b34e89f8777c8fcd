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

#ifndef FTC_SCHEDULE_HPP
#define FTC_SCHEDULE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ftc/graph.hpp"
#include "ftc/matrix.hpp"

namespace ftc {

inline constexpr double kVerifyTol = 1e-9;

enum class Construction { adjacency, laplacian_shift, path, tree, search };

std::string_view to_string(Construction c);
Construction construction_from_string(std::string_view s);

struct SpectralMeta {
  double k = 0.0;
  std::vector<double> lambdas;
};

/// Ordered factors A(1)..A(t); factors[0] is applied first.
struct Schedule {
  std::size_t n = 0;
  std::vector<Matrix> factors;
  Construction construction = Construction::search;
  std::optional<SpectralMeta> meta;

  std::size_t steps() const { return factors.size(); }
  /// A(t) ... A(1)
  Matrix product() const;
};

struct Verification {
  double residual = 0.0;  // max |prod - J/n|
  bool compliant = false;
  bool passed = false;
};

/// Throws InputError when a factor's dimension does not match g.
Verification verify_schedule(const Schedule& s, const Graph& g, double tol = kVerifyTol);

/// JSON document: {"n", "steps", "matrices": [row-major arrays],
/// "construction", "meta": {"k", "lambdas"}}. Numbers are written with 17
/// significant digits so a load/save cycle is lossless.
std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_json(std::string_view text);
void save_schedule(const Schedule& s, const std::filesystem::path& path);
Schedule load_schedule(const std::filesystem::path& path);

}  // namespace ftc

#endif  // FTC_SCHEDULE_HPP
