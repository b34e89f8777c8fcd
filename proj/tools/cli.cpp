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

#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftc/error.hpp"
#include "ftc/feasibility.hpp"
#include "ftc/graph.hpp"
#include "ftc/schedule.hpp"
#include "ftc/simulator.hpp"
#include "ftc/spectra.hpp"
#include "ftc/synthesis.hpp"
#include "ftc/tree_scheme.hpp"

namespace ftc::cli {
namespace {

std::string num(double v, const char* fmt = "%.6g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string sci(double v) { return num(v, "%.3e"); }

template <typename Range>
std::string join(const Range& r, const char* sep = " ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : r) {
    out << (first ? "" : sep) << x;
    first = false;
  }
  return out.str();
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

int analyze(Context& ctx, const std::string& file, double cluster_tol) {
  const Graph g = read_edge_list(file);
  const auto m = metrics(g);
  auto& out = ctx.out;
  out << "graph " << file << "\n";
  out << "nodes " << g.size() << "\n";
  out << "edges " << g.edge_count() << "\n";
  out << "diameter " << m.diameter << "\n";
  out << "radius " << m.radius << "\n";
  out << "center " << join(m.center) << "\n";
  if (g.is_regular()) {
    out << "regularity " << g.degree(0) << "-regular\n";
  } else {
    out << "regularity not regular\n";
  }
  out << "tree " << (g.is_tree() ? "yes" : "no") << "\n";
  if (auto array = is_distance_regular(g)) {
    out << "distance-regular {" << join(array->b, ",") << ";" << join(array->c, ",") << "}\n";
  } else {
    out << "distance-regular no\n";
  }
  const auto sp = spectrum(g.adjacency(), cluster_tol);
  out << "adjacency spectrum";
  for (const auto& c : sp.clusters) out << " " << num(c.value, "%.12g") << "^" << c.multiplicity;
  out << "\n";
  out << "s=" << sp.distinct() << " (D+1=" << m.diameter + 1 << ")\n";
  out << "cluster-tol " << num(cluster_tol) << "\n";
  return kOk;
}

int synthesize(Context& ctx, const std::string& file, const std::string& method,
               const std::string& out_file, double tol, double cluster_tol) {
  const Graph g = read_edge_list(file);
  Schedule s;
  try {
    if (method == "auto") {
      s = auto_synthesize(g, tol);
    } else if (method == "adjacency") {
      s = build_schedule(candidate_adjacency(g), g, Construction::adjacency, cluster_tol);
    } else if (method == "laplacian-shift") {
      s = build_schedule(candidate_laplacian_shift(g), g, Construction::laplacian_shift,
                         cluster_tol);
    } else if (method == "path") {
      s = build_schedule(candidate_path(g), g, Construction::path, cluster_tol);
    } else if (method == "tree") {
      s = gather_distribute(g);
    } else {
      s = bfs_fallback(g);
    }
  } catch (const PreconditionError& e) {
    ctx.out << "method " << method << " not applicable: " << e.what() << "\n";
    return kNegative;
  } catch (const NumericalError& e) {
    ctx.out << "method " << method << " failed: " << e.what() << "\n";
    return kNegative;
  }
  const auto v = verify_schedule(s, g, tol);
  auto& out = ctx.out;
  out << "construction " << to_string(s.construction) << "\n";
  out << "steps " << s.steps() << "\n";
  if (s.meta) {
    out << "k " << num(s.meta->k, "%.12g") << "\n";
    out << "lambdas";
    for (double l : s.meta->lambdas) out << " " << num(l, "%.12g");
    out << "\n";
  }
  out << "residual " << sci(v.residual) << "\n";
  out << "compliant " << (v.compliant ? "yes" : "no") << "\n";
  out << "verify-tol " << num(tol) << "\n";
  out << "cluster-tol " << num(cluster_tol) << "\n";
  out << "verdict " << (v.passed ? "PASS" : "FAIL") << "\n";
  if (!v.passed) return kNegative;
  if (!out_file.empty()) {
    save_schedule(s, out_file);
    out << "written " << out_file << "\n";
  }
  return kOk;
}

int verify(Context& ctx, const std::string& graph_file, const std::string& schedule_file,
           double tol) {
  const Graph g = read_edge_list(graph_file);
  const Schedule s = load_schedule(schedule_file);
  const auto v = verify_schedule(s, g, tol);
  auto& out = ctx.out;
  out << "steps " << s.steps() << "\n";
  out << "construction " << to_string(s.construction) << "\n";
  out << "compliant " << (v.compliant ? "yes" : "no") << "\n";
  out << "verify-tol " << num(tol) << "\n";
  if (!v.compliant) {
    out << "non-compliant FAIL\n";
    return kNegative;
  }
  out << "residual " << sci(v.residual) << (v.passed ? " PASS" : " FAIL") << "\n";
  return v.passed ? kOk : kNegative;
}

std::vector<double> read_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open initial state file " + path);
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    if (token[0] == '#') {
      std::getline(in, token);
      continue;
    }
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError("initial state file: bad number \"" + token + "\"");
    }
  }
  return values;
}

int simulate(Context& ctx, const std::string& graph_file, const std::string& schedule_file,
             std::optional<std::uint64_t> seed, const std::string& x0_file, double lo, double hi,
             const std::string& csv, double tol) {
  const Graph g = read_edge_list(graph_file);
  const Schedule s = load_schedule(schedule_file);
  StateVector x0;
  std::vector<std::string> provenance;
  if (!x0_file.empty()) {
    x0.values = read_vector(x0_file);
    provenance.push_back("x0 from " + x0_file);
  } else {
    const std::uint64_t sd = seed.value_or(7);
    x0 = random_initial(g.size(), lo, hi, sd);
    provenance.push_back(std::string("rng=") + kRngName + " seed=" + std::to_string(sd) +
                         " range=[" + num(lo) + "," + num(hi) + ")");
  }
  const auto tr = run_schedule(g, s, x0);
  auto& out = ctx.out;
  out << "nodes " << g.size() << "\n";
  out << "steps " << s.steps() << "\n";
  out << "initial_mean " << num(tr.initial_mean, "%.17g") << "\n";
  for (const auto& st : tr.states)
    out << "step " << st.step << " spread " << sci(spread(st.values, tr.initial_mean)) << "\n";
  out << "final_spread " << sci(tr.final_spread) << "\n";
  double scale = 1.0;
  for (double v : x0.values) scale = std::max(scale, std::abs(v));
  out << "consensus-tol " << num(tol) << " (times max(1, |x0|_inf))\n";
  if (!csv.empty()) {
    export_trajectory(tr, csv, provenance);
    out << "written " << csv << " (" << tr.states.size() * g.size() << " rows)\n";
  }
  const bool reached = tr.final_spread <= tol * scale;
  out << "consensus " << (reached ? "reached" : "not reached") << "\n";
  return reached ? kOk : kNegative;
}

int certify2(Context& ctx, const std::string& file) {
  const Graph g = read_edge_list(file);
  const int d = metrics(g).diameter;
  auto& out = ctx.out;
  out << "diameter " << d << "\n";
  if (d > 2) {
    out << "D > 2: two steps impossible a priori\n";
    return kOk;
  }
  if (d < 2) {
    out << "D < 2: one step suffices, no certificate\n";
    return kNegative;
  }
  if (auto cert = certify_two_step_infeasible(g)) {
    out << format_certificate(*cert);
    return kOk;
  }
  out << "no certificate found\n";
  return kNegative;
}

int search(Context& ctx, const std::string& file, int steps, int restarts, int iters,
           std::uint64_t seed, const std::string& out_file) {
  if (steps < 1) {
    ctx.err << "--steps must be at least 1\n";
    return kUsage;
  }
  if (restarts < 1 || iters < 1) {
    ctx.err << "--restarts and --iters must be positive\n";
    return kUsage;
  }
  const Graph g = read_edge_list(file);
  SearchOptions opts;
  opts.restarts = restarts;
  opts.sweeps = iters;
  opts.seed = seed;
  const auto r = als_search(g, steps, opts);
  auto& out = ctx.out;
  out << "steps " << r.t << "\n";
  out << "restarts " << r.restarts << "\n";
  out << "sweeps " << r.iterations << "\n";
  out << "seed " << r.seed << "\n";
  out << "success-tol " << num(kSearchSuccessTol) << "\n";
  out << "best_residual " << sci(r.best_residual) << " (restart " << r.best_restart << ")\n";
  if (!r.witness) {
    out << "no witness\n";
    return kNegative;
  }
  out << "witness found\n";
  if (!out_file.empty()) {
    save_schedule(*r.witness, out_file);
    out << "written " << out_file << "\n";
  }
  return kOk;
}

int bounds(Context& ctx, const std::string& file, bool no_search, int restarts, int iters,
           std::uint64_t seed) {
  const Graph g = read_edge_list(file);
  BoundsOptions opts;
  opts.search = !no_search;
  opts.search_options.restarts = restarts;
  opts.search_options.sweeps = iters;
  opts.search_options.seed = seed;
  const auto b = consensus_number_bounds(g, opts);
  auto& out = ctx.out;
  out << "diameter " << metrics(g).diameter << "\n";
  out << "lower " << b.lower << " (" << b.lower_reason << ")\n";
  for (const auto& w : b.witnesses) {
    out << "witness " << w.source << " steps " << w.schedule.steps() << " residual "
        << sci(w.residual) << "\n";
  }
  out << "upper " << b.upper << " (" << b.witnesses.front().source << ")\n";
  out << "verify-tol " << num(opts.verify_tol) << "\n";
  if (b.exact()) {
    out << "consensus number = " << b.lower << " (certified lower = upper)\n";
    return kOk;
  }
  out << "consensus number in [" << b.lower << ", " << b.upper << "]\n";
  return kNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-time average consensus schedules on undirected graphs", "ftcons"};
  app.require_subcommand(1);
  double cluster_tol = kClusterTol;
  double tol = kVerifyTol;

  std::string graph_file, schedule_file, out_file, method = "auto", x0_file, csv;

  auto* a = app.add_subcommand("analyze", "metrics, distance-regularity and adjacency spectrum");
  a->add_option("graph", graph_file, "edge-list file")->required();
  a->add_option("--cluster-tol", cluster_tol, "relative gap separating eigenvalues");

  auto* syn = app.add_subcommand("synthesize", "build and verify a consensus schedule");
  syn->add_option("graph", graph_file, "edge-list file")->required();
  syn->add_option("--method", method, "construction")
      ->check(CLI::IsMember({"auto", "adjacency", "laplacian-shift", "path", "tree",
                             "bfs-fallback"}));
  syn->add_option("--out", out_file, "schedule file to write");
  syn->add_option("--tol", tol, "max-entry residual tolerance");
  syn->add_option("--cluster-tol", cluster_tol, "relative gap separating eigenvalues");

  auto* ver = app.add_subcommand("verify", "check a schedule against a graph");
  ver->add_option("graph", graph_file, "edge-list file")->required();
  ver->add_option("schedule", schedule_file, "schedule file")->required();
  ver->add_option("--tol", tol, "max-entry residual tolerance");

  std::optional<std::uint64_t> seed;
  double lo = -1.5, hi = 1.5, consensus_tol = 1e-9;
  auto* sim = app.add_subcommand("simulate", "replay a schedule on a simulated network");
  sim->add_option("graph", graph_file, "edge-list file")->required();
  sim->add_option("schedule", schedule_file, "schedule file")->required();
  auto* seed_opt = sim->add_option("--seed", seed, "seed for uniform initial states (default 7)");
  sim->add_option("--x0", x0_file, "file of initial values")->excludes(seed_opt);
  sim->add_option("--lo", lo, "lower end of the initial range");
  sim->add_option("--hi", hi, "upper end of the initial range");
  sim->add_option("--csv", csv, "trajectory CSV to write");
  sim->add_option("--tol", consensus_tol, "spread tolerance, relative to max(1, |x0|_inf)");

  auto* cert = app.add_subcommand("certify2", "try to prove that two steps cannot suffice");
  cert->add_option("graph", graph_file, "edge-list file")->required();

  int steps = 0, restarts = 32, iters = 500;
  std::uint64_t search_seed = 1;
  auto* srch = app.add_subcommand("search", "alternating least squares for a t-step schedule");
  srch->add_option("graph", graph_file, "edge-list file")->required();
  srch->add_option("--steps", steps, "number of factors")->required();
  srch->add_option("--restarts", restarts, "random restarts");
  srch->add_option("--iters", iters, "sweeps per restart");
  srch->add_option("--seed", search_seed, "seed");
  srch->add_option("--out", out_file, "witness schedule file to write");

  bool no_search = false;
  int bound_restarts = 8, bound_iters = 300;
  auto* bnd = app.add_subcommand("bounds", "bracket the consensus number");
  bnd->add_option("graph", graph_file, "edge-list file")->required();
  bnd->add_flag("--no-search", no_search, "skip the numeric search between the bounds");
  bnd->add_option("--restarts", bound_restarts, "search restarts per step count");
  bnd->add_option("--iters", bound_iters, "search sweeps per restart");
  bnd->add_option("--seed", search_seed, "search seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Context ctx{out, err};
  try {
    if (*a) return analyze(ctx, graph_file, cluster_tol);
    if (*syn) return synthesize(ctx, graph_file, method, out_file, tol, cluster_tol);
    if (*ver) return verify(ctx, graph_file, schedule_file, tol);
    if (*sim)
      return simulate(ctx, graph_file, schedule_file, seed, x0_file, lo, hi, csv, consensus_tol);
    if (*cert) return certify2(ctx, graph_file);
    if (*srch) return search(ctx, graph_file, steps, restarts, iters, search_seed, out_file);
    if (*bnd) return bounds(ctx, graph_file, no_search, bound_restarts, bound_iters, search_seed);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}

}  // namespace ftc::cli
