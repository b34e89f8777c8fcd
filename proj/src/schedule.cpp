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

#include "ftc/schedule.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ftc/error.hpp"
#include "ftc/spectra.hpp"

namespace ftc {
namespace {

constexpr std::array<std::pair<Construction, std::string_view>, 5> kNames{{
    {Construction::adjacency, "adjacency"},
    {Construction::laplacian_shift, "laplacian-shift"},
    {Construction::path, "path"},
    {Construction::tree, "tree"},
    {Construction::search, "search"},
}};

std::string format_double(double v) {
  if (!std::isfinite(v)) throw InputError("schedule contains a non-finite value");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string_view to_string(Construction c) {
  for (auto [value, name] : kNames)
    if (value == c) return name;
  return "unknown";
}

Construction construction_from_string(std::string_view s) {
  for (auto [value, name] : kNames)
    if (name == s) return value;
  throw InputError("unknown construction \"" + std::string(s) + "\"");
}

Matrix Schedule::product() const {
  Matrix p = Matrix::identity(n);
  for (const auto& f : factors) p = f * p;
  return p;
}

Verification verify_schedule(const Schedule& s, const Graph& g, double tol) {
  if (s.n != g.size()) {
    throw InputError("schedule has n = " + std::to_string(s.n) + " but the graph has " +
                     std::to_string(g.size()) + " nodes");
  }
  Verification v;
  v.compliant = true;
  for (const auto& f : s.factors) v.compliant = complies(f, g) && v.compliant;
  const double avg = 1.0 / static_cast<double>(s.n);
  v.residual = max_abs_diff(s.product(), Matrix::constant(s.n, avg));
  v.passed = v.compliant && v.residual <= tol;
  return v;
}

std::string schedule_to_json(const Schedule& s) {
  std::ostringstream out;
  out << "{\n  \"n\": " << s.n << ",\n  \"steps\": " << s.steps() << ",\n";
  out << "  \"construction\": \"" << to_string(s.construction) << "\",\n";
  if (s.meta) {
    out << "  \"meta\": {\"k\": " << format_double(s.meta->k) << ", \"lambdas\": [";
    for (std::size_t i = 0; i < s.meta->lambdas.size(); ++i)
      out << (i ? ", " : "") << format_double(s.meta->lambdas[i]);
    out << "]},\n";
  }
  out << "  \"matrices\": [";
  for (std::size_t t = 0; t < s.factors.size(); ++t) {
    out << (t ? ",\n    [" : "\n    [");
    const auto& values = s.factors[t].data();
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k) out << (k % s.n == 0 ? ",\n     " : ", ");
      out << format_double(values[k]);
    }
    out << "]";
  }
  out << (s.factors.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

Schedule schedule_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("schedule is not valid JSON: ") + e.what());
  }
  try {
    Schedule s;
    s.n = doc.at("n").get<std::size_t>();
    if (s.n == 0) throw InputError("schedule has n = 0");
    if (doc.contains("construction"))
      s.construction = construction_from_string(doc["construction"].get<std::string>());
    if (doc.contains("meta") && !doc["meta"].is_null()) {
      SpectralMeta meta;
      meta.k = doc["meta"].at("k").get<double>();
      meta.lambdas = doc["meta"].value("lambdas", std::vector<double>{});
      s.meta = std::move(meta);
    }
    for (const auto& m : doc.at("matrices")) {
      std::vector<double> values;
      // Accept nested rows as well as a flat row-major array.
      for (const auto& item : m) {
        if (item.is_array()) {
          for (const auto& x : item) values.push_back(x.get<double>());
        } else {
          values.push_back(item.get<double>());
        }
      }
      s.factors.push_back(Matrix::from_row_major(s.n, std::move(values)));
    }
    if (doc.contains("steps") && doc["steps"].get<std::size_t>() != s.factors.size()) {
      throw InputError("schedule declares " + std::to_string(doc["steps"].get<std::size_t>()) +
                       " steps but lists " + std::to_string(s.factors.size()) + " matrices");
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed schedule: ") + e.what());
  }
}

void save_schedule(const Schedule& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write schedule file " + path.string());
  out << schedule_to_json(s);
  if (!out) throw InputError("failed writing schedule file " + path.string());
}

Schedule load_schedule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open schedule file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return schedule_from_json(buf.str());
}

}  // namespace ftc
