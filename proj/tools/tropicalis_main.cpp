// Copyright 2026 The Tropicalis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tropicalis/calculus.hpp"
#include "tropicalis/cayley.hpp"
#include "tropicalis/duality.hpp"
#include "tropicalis/io.hpp"
#include "tropicalis/linalg.hpp"
#include "tropicalis/rng.hpp"
#include "tropicalis/semiring.hpp"

namespace {

using namespace tropicalis;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error kind=usage msg=\"" << msg << "\"\n";
  std::exit(kExitUsage);
}

Semiring parse_semiring_or_die(const std::string& token) {
  auto d = Semiring::parse(token);
  if (!d) usage_error("unknown semiring token '" + token + "'");
  return *d;
}

enum class Format { Text, Csv, Jsonl };

Format parse_format(const std::string& token) {
  if (token == "text") return Format::Text;
  if (token == "csv") return Format::Csv;
  if (token == "jsonl") return Format::Jsonl;
  usage_error("unknown format '" + token + "'");
}

GridSpec parse_range(const std::string& spec) {
  double a = 0, b = 0, step = 0;
  auto c1 = spec.find(':');
  auto c2 = spec.rfind(':');
  if (c1 == std::string::npos || c2 == c1) usage_error("range must be a:b:step");
  try {
    a = parse_number(spec.substr(0, c1));
    b = parse_number(spec.substr(c1 + 1, c2 - c1 - 1));
    step = parse_number(spec.substr(c2 + 1));
  } catch (const TropError&) {
    usage_error("bad number in range '" + spec + "'");
  }
  if (!(step > 0) || b < a) usage_error("range needs a <= b and step > 0");
  int count = static_cast<int>(std::floor((b - a) / step + 1.5));
  return GridSpec{a, step, count};
}

void emit_validation(const ValidationReport& rep, Format fmt) {
  if (fmt == Format::Csv) {
    std::cout << "axiom,pass,witness\n";
    for (const auto& c : rep.checks) {
      std::cout << c.axiom << "," << (c.pass ? 1 : 0) << "," << c.witness
                << "\n";
    }
    return;
  }
  if (fmt == Format::Jsonl) {
    for (const auto& c : rep.checks) {
      json j{{"axiom", c.axiom}, {"pass", c.pass}, {"witness", c.witness}};
      std::cout << j.dump() << "\n";
    }
    return;
  }
  for (const auto& c : rep.checks) {
    std::cout << "check " << c.axiom << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.pass && !c.witness.empty()) std::cout << " witness=" << c.witness;
    std::cout << "\n";
  }
  std::cout << (rep.all_passed() ? "PASS " : "FAIL ") << rep.subject
            << " axioms=" << rep.passed_count() << "/" << rep.checks.size()
            << "\n";
}

int run_validate(const std::string& path, const std::string& what, Format fmt) {
  CayleyStructure s = read_cayley_file(path);
  ValidationReport rep;
  if (what == "semigroup") {
    rep = validate_semigroup(s);
  } else if (what == "semiring") {
    rep = validate_semiring(s);
  } else if (what == "semifield") {
    rep = validate_semifield(s);
  } else if (what == "integrally-closed") {
    rep = is_integrally_closed(s);
  } else {
    usage_error("unknown validation target '" + what + "'");
  }
  emit_validation(rep, fmt);
  return rep.all_passed() ? kExitOk : kExitDomain;
}

int run_complete(const std::string& path) {
  CayleyStructure s = read_cayley_file(path);
  CayleyStructure done = complete_semiring(s);
  write_cayley(std::cout, done);
  return kExitOk;
}

int run_solve_path(const std::string& path, const std::string& semiring,
                   int source, std::optional<int> target, Format fmt) {
  Semiring d = parse_semiring_or_die(semiring);
  Graph g = read_graph_file(path);
  PathResult r = shortest_paths(g, d, source);

  std::vector<int> targets;
  if (target) {
    targets.push_back(*target);
  } else {
    for (int v = 0; v < g.n; ++v) targets.push_back(v);
  }

  if (fmt == Format::Csv) std::cout << "source,target,dist,path\n";
  for (int v : targets) {
    if (v < 0 || v >= g.n) usage_error("target node out of range");
    std::vector<int> p = reconstruct_path(r, v);
    std::string dist = format_number(r.dist[v].payload());
    switch (fmt) {
      case Format::Text: {
        std::cout << source << "->" << v << " dist=" << dist << " path=";
        if (p.empty()) {
          std::cout << "none";
        } else {
          for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << p[i];
          }
        }
        std::cout << "\n";
        break;
      }
      case Format::Csv: {
        std::cout << source << "," << v << "," << dist << ",";
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (i) std::cout << ";";
          std::cout << p[i];
        }
        std::cout << "\n";
        break;
      }
      case Format::Jsonl: {
        json j{{"source", source}, {"target", v}, {"dist", dist}, {"path", p}};
        std::cout << j.dump() << "\n";
        break;
      }
    }
  }
  return kExitOk;
}

int run_star(const std::string& path) {
  TropMatrix a = read_matrix_file(path);
  write_matrix(std::cout, kleene_star(a));
  return kExitOk;
}

int run_bellman(const std::string& hpath, const std::string& fpath,
                const std::string& method) {
  BellmanMethod m;
  if (method == "jacobi") {
    m = BellmanMethod::Jacobi;
  } else if (method == "gauss-seidel") {
    m = BellmanMethod::GaussSeidel;
  } else if (method == "closure") {
    m = BellmanMethod::Closure;
  } else {
    usage_error("unknown method '" + method + "'");
  }
  TropMatrix h = read_matrix_file(hpath);
  TropMatrix f = read_matrix_file(fpath);
  BellmanSolution sol = solve_bellman(h, f, m);
  std::cout << "# method=" << bellman_method_name(sol.method)
            << " iterations=" << sol.iterations
            << " converged=" << (sol.converged ? 1 : 0) << "\n";
  write_matrix(std::cout, sol.x);
  return kExitOk;
}

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
};

void emit_suite(const SuiteResult& s, Format fmt) {
  switch (fmt) {
    case Format::Text:
      std::cout << (s.failures == 0 ? "PASS " : "FAIL ") << s.name
                << " trials=" << s.trials << " failures=" << s.failures
                << "\n";
      break;
    case Format::Csv:
      std::cout << s.name << "," << s.trials << "," << s.failures << ","
                << (s.failures == 0 ? 1 : 0) << "\n";
      break;
    case Format::Jsonl: {
      json j{{"suite", s.name},
             {"trials", s.trials},
             {"failures", s.failures},
             {"pass", s.failures == 0}};
      std::cout << j.dump() << "\n";
      break;
    }
  }
}

int run_duality_check(int dim, int trials, std::uint64_t seed, Format fmt) {
  if (dim < 1 || dim > 64) usage_error("--dim must be in [1, 64]");
  if (trials < 1) usage_error("--trials must be positive");
  Semiring hat(SemiringKind::RMaxHat);
  Rng rng(seed);

  auto rand_vec = [&](double p_zero, double p_top) {
    std::vector<Value> v;
    for (int i = 0; i < dim; ++i) {
      double roll = rng.unit();
      if (roll < p_zero) {
        v.push_back(hat.zero());
      } else if (roll < p_zero + p_top) {
        v.push_back(hat.top());
      } else {
        v.push_back(hat.value(static_cast<double>(rng.uniform_int(-8, 8))));
      }
    }
    return TropVector(hat, std::move(v));
  };

  SuiteResult t51{"thm5.1", trials, 0};
  SuiteResult t52{"thm5.2", trials, 0};
  SuiteResult t56{"thm5.6", trials, 0};
  SuiteResult t57{"thm5.7", trials, 0};

  for (int t = 0; t < trials; ++t) {
    {
      TropVector x = rand_vec(0.12, 0.08);
      const int m = 1 + static_cast<int>(rng.uniform_int(0, 4));
      TropVector sup = TropVector::zeros(hat, dim);
      Value rhs = hat.zero();
      std::vector<TropVector> ys;
      for (int i = 0; i < m; ++i) {
        ys.push_back(rand_vec(0.12, 0.08));
        sup = vec_add(sup, ys.back());
        rhs = hat.add(rhs, xstar_eval(x, ys.back()));
      }
      bool ok = xstar_eval(x, sup) == rhs;
      Value k = hat.value(static_cast<double>(rng.uniform_int(-6, 6)));
      ok = ok && xstar_eval(x, vec_scale(k, ys[0])) ==
                     hat.mul(k, xstar_eval(x, ys[0]));
      ok = ok && xstar_eval(x, vec_scale(hat.zero(), ys[0])) == hat.zero();
      if (!ok) ++t51.failures;
    }
    {
      TropVector c = rand_vec(0.15, 0.08);
      bool zero = true;
      for (int i = 0; i < dim; ++i) zero = zero && c.at(i) == hat.zero();
      if (!zero) {
        FunctionalRep f{c};
        TropVector x = recover_generator(f);
        bool ok = true;
        for (int s = 0; s < 8 && ok; ++s) {
          TropVector y = rand_vec(0.12, 0.08);
          ok = xstar_eval(x, y) == functional_apply(f, y);
        }
        if (!ok) ++t52.failures;
      }
    }
    {
      TropVector x1 = rand_vec(0.12, 0.08);
      TropVector x2 = rand_vec(0.12, 0.08);
      TropVector y = rand_vec(0.12, 0.08);
      DualVector sum = dual_add(DualVector{x1}, DualVector{x2});
      bool ok = xstar_eval(sum.x, y) ==
                hat.add(xstar_eval(x1, y), xstar_eval(x2, y));
      Value k = hat.value(static_cast<double>(rng.uniform_int(-6, 6)));
      DualVector ks = dual_scale(k, DualVector{x1});
      ok = ok && xstar_eval(ks.x, y) == hat.mul(k, xstar_eval(x1, y));
      if (!ok) ++t56.failures;
    }
    {
      TropVector x = rand_vec(0.12, 0.08);
      bool all_top = true;
      for (int i = 0; i < dim; ++i) all_top = all_top && x.at(i) == hat.top();
      if (!all_top && !(double_dual(x) == x)) ++t57.failures;
    }
  }

  std::cout << "# seed=" << seed << " dim=" << dim << " trials=" << trials
            << "\n";
  if (fmt == Format::Csv) std::cout << "suite,trials,failures,pass\n";
  emit_suite(t51, fmt);
  emit_suite(t52, fmt);
  emit_suite(t56, fmt);
  emit_suite(t57, fmt);
  const bool ok =
      !t51.failures && !t52.failures && !t56.failures && !t57.failures;
  return ok ? kExitOk : kExitDomain;
}

TropVector row_vector(const TropMatrix& m) {
  if (m.rows() == 1) return m.row(0);
  if (m.cols() == 1) return m.col(0);
  throw TropError(ErrorKind::Shape,
                  "expected a single-row or single-column matrix");
}

int run_project(const std::string& vec_path, const std::string& gens_path,
                const std::string& mode) {
  TropVector x = row_vector(read_matrix_file(vec_path));
  TropMatrix gm = read_matrix_file(gens_path);
  if (gm.cols() != x.size()) {
    throw TropError(ErrorKind::Shape,
                    "generator columns must match the vector dimension");
  }
  std::vector<TropVector> gens;
  for (int i = 0; i < gm.rows(); ++i) gens.push_back(gm.row(i));

  TropVector out = x;
  bool padded = false;
  if (mode == "upper") {
    GeneratorSet w = make_generator_set(gens, ClosureKind::InfClosure);
    ProjectionResult pr = project_upper(x, w);
    out = pr.value;
    padded = pr.top_padded;
  } else if (mode == "lower") {
    GeneratorSet w = make_generator_set(gens, ClosureKind::SupSpan);
    out = project_lower(x, w);
  } else {
    usage_error("--mode must be upper or lower");
  }
  if (padded) std::cout << "# top-padded=1\n";
  TropMatrix m(out.descriptor(), 1, out.size(),
               std::vector<Value>(out.values().begin(), out.values().end()));
  write_matrix(std::cout, m);
  return kExitOk;
}

int run_legendre(const std::string& path, const std::string& xi_spec,
                 bool fenchel, bool fast, Format fmt) {
  SampledFunction phi = read_function_file(path);
  GridSpec xi = parse_range(xi_spec);
  LegendreResult res = legendre(phi, xi, LegendreOptions{fenchel, fast});
  if (!res.note.empty()) std::cout << "# note=" << res.note << "\n";
  switch (fmt) {
    case Format::Text:
      write_function(std::cout, res.fn);
      break;
    case Format::Csv:
      std::cout << "xi,value\n";
      for (int q = 0; q < res.fn.size(); ++q) {
        std::cout << format_number(res.fn.x_at(q)) << ","
                  << format_number(res.fn.at(q)) << "\n";
      }
      break;
    case Format::Jsonl:
      for (int q = 0; q < res.fn.size(); ++q) {
        json j{{"xi", format_number(res.fn.x_at(q))},
               {"value", format_number(res.fn.at(q))}};
        std::cout << j.dump() << "\n";
      }
      break;
  }
  return kExitOk;
}

int run_hj_demo(const std::string& init, double t, const std::string& hs,
                const std::string& grid_spec, Format fmt) {
  if (!(t > 0)) usage_error("--t must be positive");
  GridSpec grid = parse_range(grid_spec);
  if (grid.count < 2) usage_error("grid needs at least 2 points");

  SampledFunction s0 = [&]() -> SampledFunction {
    if (init == "quad" || init == "abs") {
      std::vector<double> v(grid.count);
      for (int i = 0; i < grid.count; ++i) {
        double x = grid.at(i);
        v[i] = init == "quad" ? x * x / 2 : std::abs(x);
      }
      return SampledFunction(grid.origin, grid.step, std::move(v),
                             Orientation::MinPlus);
    }
    if (init.rfind("file:", 0) == 0) {
      return read_function_file(init.substr(5));
    }
    usage_error("--init must be quad, abs or file:<path>");
  }();

  std::vector<double> h_values;
  std::stringstream ss{hs};
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    double h = parse_number(tok);
    if (!(h > 0)) usage_error("every h must be positive");
    h_values.push_back(h);
  }
  if (h_values.empty()) usage_error("--h needs at least one value");

  HJStepResult hl = hopf_lax_step(HJState{s0, 0.0, 1.0}, t);
  // the gap is read off the interior half of the grid, away from the
  // truncation-affected samples
  const double mid = s0.origin() + s0.step() * (s0.size() - 1) / 2.0;
  const double radius = s0.step() * (s0.size() - 1) / 4.0;

  if (fmt == Format::Csv) std::cout << "h,sup_gap\n";
  for (double h : h_values) {
    SampledFunction sh = cole_hopf_evolve(s0, t, h);
    double gap = 0.0;
    for (int i = 0; i < sh.size(); ++i) {
      if (hl.boundary[i]) continue;
      if (std::abs(sh.x_at(i) - mid) > radius) continue;
      gap = std::max(gap, std::abs(sh.at(i) - hl.state.action.at(i)));
    }
    switch (fmt) {
      case Format::Text:
        std::cout << "h=" << format_number(h) << " gap=" << format_number(gap)
                  << "\n";
        break;
      case Format::Csv:
        std::cout << format_number(h) << "," << format_number(gap) << "\n";
        break;
      case Format::Jsonl: {
        json j{{"h", format_number(h)}, {"sup_gap", format_number(gap)}};
        std::cout << j.dump() << "\n";
        break;
      }
    }
  }
  return kExitOk;
}

int run_integrate(const std::string& path, const std::string& wrt,
                  Format fmt) {
  SampledFunction phi = read_function_file(path);
  double value = 0.0;
  if (wrt.empty()) {
    value = idem_integral(phi);
  } else {
    value = idem_integral_wrt(phi, read_function_file(wrt));
  }
  switch (fmt) {
    case Format::Text:
      std::cout << "integral=" << format_number(value) << "\n";
      break;
    case Format::Csv:
      std::cout << "integral\n" << format_number(value) << "\n";
      break;
    case Format::Jsonl: {
      json j{{"integral", format_number(value)}};
      std::cout << j.dump() << "\n";
      break;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("TROPICALIS_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end && *end == '\0' && n >= 0) {
      set_max_threads(static_cast<unsigned>(n));
    }
  }

  CLI::App app{
      "tropicalis: idempotent semiring algebra, tropical linear solvers,\n"
      "order completions, duality suites and idempotent calculus"};
  app.require_subcommand(1);

  std::string table_path, what = "semiring", fmt_token = "text";
  auto* validate = app.add_subcommand("validate", "check table axioms");
  validate->add_option("file", table_path, "table file")->required();
  bool opt_semigroup = false, opt_semiring = false, opt_semifield = false,
       opt_closed = false;
  validate->add_flag("--semigroup", opt_semigroup, "semigroup axioms only");
  validate->add_flag("--semiring", opt_semiring, "semiring axioms (default)");
  validate->add_flag("--semifield", opt_semifield, "semifield axioms");
  validate->add_flag("--integrally-closed", opt_closed,
                     "bounded powers force x below the unit");
  validate->add_option("--format", fmt_token,
                       "text|csv|jsonl (csv columns: axiom,pass,witness)");

  std::string complete_path;
  auto* complete =
      app.add_subcommand("complete", "normal completion of a semiring table");
  complete->add_option("file", complete_path, "table file")->required();

  std::string graph_path, semiring_token = "rmin";
  int source = 0;
  std::optional<int> target;
  auto* solve =
      app.add_subcommand("solve-path", "single-source paths over a semiring");
  solve->add_option("file", graph_path, "edge list file")->required();
  solve->add_option("--semiring", semiring_token,
                    "rmin|rmax|minmax|bool|... (default rmin)");
  solve->add_option("--source", source, "source node")->required();
  int target_value = -1;
  auto* topt = solve->add_option("--target", target_value, "target node");
  solve->add_option("--format", fmt_token,
                    "text|csv|jsonl (csv columns: source,target,dist,path)");

  std::string star_path;
  auto* star = app.add_subcommand("star", "Kleene star of a square matrix");
  star->add_option("file", star_path, "matrix file")->required();

  std::string bell_h, bell_f, method = "jacobi";
  auto* bellman = app.add_subcommand("bellman", "solve X = H X (+) F");
  bellman->add_option("H", bell_h, "system matrix file")->required();
  bellman->add_option("F", bell_f, "right-hand side file")->required();
  bellman->add_option("--method", method, "jacobi|gauss-seidel|closure");

  int dim = 3, trials = 1000;
  std::uint64_t seed = 0;
  auto* duality =
      app.add_subcommand("duality-check", "functional duality property suites");
  duality->add_option("--dim", dim, "vector dimension (default 3)");
  duality->add_option("--trials", trials, "trials per suite (default 1000)");
  duality->add_option("--seed", seed, "rng seed (default 0)");
  duality->add_option(
      "--format", fmt_token,
      "text|csv|jsonl (csv columns: suite,trials,failures,pass)");

  std::string proj_vec, proj_gens, proj_mode = "upper";
  auto* project =
      app.add_subcommand("project", "project onto a generated subspace");
  project->add_option("vector", proj_vec, "1 x n matrix file")->required();
  project->add_option("--gens", proj_gens, "generator matrix file (rows)")
      ->required();
  project->add_option("--mode", proj_mode, "upper|lower");

  std::string leg_path, xi_spec;
  bool fenchel = false, fast = false;
  auto* leg = app.add_subcommand("legendre", "tropical Fourier transform");
  leg->add_option("file", leg_path, "sampled function file")->required();
  leg->add_option("--xi", xi_spec, "a:b:step output grid")->required();
  leg->add_flag("--fenchel", fenchel, "classical sign sup(xi x - phi)");
  leg->add_flag("--fast", fast, "linear-time scan for concave inputs");
  leg->add_option("--format", fmt_token,
                  "text|csv|jsonl (csv columns: xi,value)");

  std::string init = "quad", h_list = "0.2,0.1,0.05,0.025",
              hj_grid = "-4:4:0.01", out_fmt = "csv";
  double hj_t = 1.0;
  auto* hj = app.add_subcommand("hj-demo",
                                "Hopf-Lax vs heat-kernel dequantization gaps");
  hj->set_help_flag("--help", "print help");  // frees -h for the --h list
  hj->add_option("--init", init, "quad|abs|file:<path>");
  hj->add_option("--t", hj_t, "evolution time (default 1)");
  hj->add_option("--h", h_list, "comma list of Planck-like parameters");
  hj->add_option("--grid", hj_grid, "a:b:step sampling grid");
  hj->add_option("--out", out_fmt, "csv|text|jsonl (csv columns: h,sup_gap)");

  std::string int_path, wrt_path;
  auto* integ = app.add_subcommand("integrate", "idempotent integral");
  integ->add_option("file", int_path, "sampled function file")->required();
  integ->add_option("--wrt", wrt_path, "integrate against this density");
  integ->add_option("--format", fmt_token, "text|csv|jsonl");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    usage_error(e.what());
  }

  try {
    Format fmt = parse_format(fmt_token);
    if (validate->parsed()) {
      int picked = opt_semigroup + opt_semiring + opt_semifield + opt_closed;
      if (picked > 1) usage_error("pick one validation target");
      if (opt_semigroup) what = "semigroup";
      if (opt_semifield) what = "semifield";
      if (opt_closed) what = "integrally-closed";
      return run_validate(table_path, what, fmt);
    }
    if (complete->parsed()) return run_complete(complete_path);
    if (solve->parsed()) {
      if (topt->count() > 0) target = target_value;
      return run_solve_path(graph_path, semiring_token, source, target, fmt);
    }
    if (star->parsed()) return run_star(star_path);
    if (bellman->parsed()) return run_bellman(bell_h, bell_f, method);
    if (duality->parsed()) return run_duality_check(dim, trials, seed, fmt);
    if (project->parsed()) return run_project(proj_vec, proj_gens, proj_mode);
    if (leg->parsed()) {
      return run_legendre(leg_path, xi_spec, fenchel, fast, fmt);
    }
    if (hj->parsed()) {
      return run_hj_demo(init, hj_t, h_list, hj_grid, parse_format(out_fmt));
    }
    if (integ->parsed()) return run_integrate(int_path, wrt_path, fmt);
  } catch (const TropError& e) {
    std::cerr << "error kind=" << error_kind_token(e.kind()) << " msg=\""
              << e.what() << "\"\n";
    return kExitDomain;
  }
  usage_error("no subcommand given");
}
