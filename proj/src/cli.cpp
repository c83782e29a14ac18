#include "coupled_fp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <utility>
#include <variant>

#include <CLI11.hpp>

#include "coupled_fp/conditions.hpp"
#include "coupled_fp/kernels.hpp"
#include "coupled_fp/problems.hpp"
#include "coupled_fp/serialize.hpp"
#include "coupled_fp/solver.hpp"
#include "coupled_fp/uniqueness.hpp"

namespace coupled_fp::cli {

namespace {

constexpr int kUniquenessStarts = 10;

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw InputError("cannot write output file '" + cfg.output + "'");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void apply_thread_cap() {
  if (const char* env = std::getenv("COUPLED_FP_THREADS")) {
    try {
      const int threads = std::stoi(env);
      if (threads <= 0) throw std::invalid_argument(env);
      set_thread_cap(threads);
    } catch (const std::logic_error&) {
      throw InputError(std::string("COUPLED_FP_THREADS must be a positive integer, got '") + env + "'");
    }
  }
}

template <class E, class D>
std::vector<D> eps_values(const RunConfig& cfg) {
  std::vector<D> eps;
  for (double e : cfg.eps_grid) {
    if (!(e > 0)) throw InputError("--eps-grid values must be positive");
    eps.push_back(from_double<D>(e));
  }
  if (eps.empty()) throw InputError("--eps-grid must not be empty");
  return eps;
}

template <class E, class D>
int run_solve(const RunConfig& cfg, const ProblemInstance<E, D>& p, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  SolveOptions<D> opts;
  opts.tol = from_double<D>(cfg.tol);
  opts.max_iter = cfg.max_iter;
  opts.require_admissible = check_start(p.op, p.default_start).admissible;
  const auto trace = solve(p.op, p.default_start, opts);

  json summary = trace_summary_json(*p.space, trace);
  summary["problem"] = p.name;
  if (!cfg.output.empty()) {
    emit(cfg, out, format == "csv" ? trace_csv(*p.space, trace) : dump(trace_json(*p.space, trace)));
    summary["trace_file"] = cfg.output;
  }
  out << dump(summary);
  return kExitOk;
}

template <class E, class D>
int run_verify(const RunConfig& cfg, const ProblemInstance<E, D>& p, std::ostream& out) {
  if (cfg.format == "csv") throw InputError("verify writes JSON only");
  const auto eps = eps_values<E, D>(cfg);
  const CheckOptions opts{cfg.samples, cfg.seed, Execution::parallel};
  const auto& space = *p.space;

  json reports = json::array();
  reports.push_back(report_json(space, check_mixed_monotone(p.op, opts)));
  if (p.op.lipschitz) {
    const auto& [a, b] = *p.op.lipschitz;
    // d(F(x,y),F(u,v)) ≤ a·p + b·q ≤ max(a,b)·(p+q): k = 2·max(a,b) is implied.
    const D implied = D(2 * (a > b ? a : b));
    if (implied < D(1)) {
      reports.push_back(report_json(space, check_banach_k(p.op, implied, opts)));
    } else if (D(a + b) < D(1)) {
      auto r = check_banach_k(p.op, D(a + b), opts);
      r.note = "k = a + b from the Lipschitz data; no k < 1 is implied by it";
      reports.push_back(report_json(space, r));
    }
  }
  reports.push_back(report_json(space, check_samet(p.op, std::span<const D>(eps), p.delta_rule, opts)));
  reports.push_back(report_json(space, check_symmetric_mk(p.op, std::span<const D>(eps), p.delta_rule, opts)));
  reports.push_back(report_json(space, check_strict_contraction(p.op, opts)));

  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["problem"] = p.name;
  doc["operator"] = p.op.description;
  doc["space"] = space.description;
  doc["delta_rule"] = p.delta_description;
  doc["seed"] = cfg.seed;
  doc["samples"] = cfg.samples;
  json grid = json::array();
  for (const auto& e : eps) grid.push_back(scalar_json(e));
  doc["eps_grid"] = grid;
  doc["reports"] = reports;
  emit(cfg, out, dump(doc));
  return kExitOk;
}

template <class E, class D>
int run_delta_curve(const RunConfig& cfg, const ProblemInstance<E, D>& p, std::ostream& out) {
  const auto eps = eps_values<E, D>(cfg);
  const auto curve = estimate_delta_curve(p.op, std::span<const D>(eps), CheckOptions{cfg.samples, cfg.seed});
  if (cfg.format == "csv") {
    emit(cfg, out, delta_curve_csv(curve));
  } else {
    json doc = delta_curve_json(curve);
    doc["problem"] = p.name;
    emit(cfg, out, dump(doc));
  }
  return kExitOk;
}

template <class E, class D>
int run_uniqueness(const RunConfig& cfg, const ProblemInstance<E, D>& p, std::ostream& out) {
  if (cfg.format == "csv") throw InputError("uniqueness writes JSON only");
  SolveOptions<D> opts;
  opts.tol = from_double<D>(cfg.tol);
  opts.max_iter = cfg.max_iter;
  const auto starts = admissible_starts(p, kUniquenessStarts, cfg.seed);
  if (starts.empty()) throw InputError("no admissible start found for '" + p.name + "'");
  auto report = multi_start_uniqueness(p.op, starts, opts);
  report.comparability = probe_comparability(*p.space, cfg.samples, cfg.seed, p.bound_search);
  json doc = uniqueness_json(*p.space, report);
  doc["problem"] = p.name;
  emit(cfg, out, dump(doc));
  return kExitOk;
}

template <class E, class D>
int run_audit(const RunConfig& cfg, const ProblemInstance<E, D>& p, std::ostream& out) {
  if (cfg.format == "csv") throw InputError("audit-space writes JSON only");
  const auto& space = *p.space;
  const auto report = audit_space(space, cfg.samples, cfg.seed);
  json doc = audit_json<E>(report, [&](const E& e) { return element_json(space, e); });
  doc["problem"] = p.name;
  emit(cfg, out, dump(doc));
  return kExitOk;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0)) throw InputError("--tol must be positive");
  if (cfg.max_iter == 0) throw InputError("--max-iter must be positive");
  if (cfg.samples == 0) throw InputError("--samples must be positive");
  if (!cfg.format.empty() && cfg.format != "csv" && cfg.format != "json")
    throw InputError("--format must be csv or json");
  if (cfg.problem.empty()) throw InputError("--problem is required");
}

}  // namespace

ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coupled fixed points of mixed monotone operators: solver and contractive-condition checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--problem", cfg.problem, "built-in name, linear(a,b,c), finite_poset(file) or a .json file")
        ->required();
    sub->add_option("--tol", cfg.tol, "convergence tolerance")->capture_default_str();
    sub->add_option("--max-iter", cfg.max_iter, "iteration cap")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "samples per check (per epsilon for band checks)")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--eps-grid", cfg.eps_grid, "epsilon values")->delimiter(',')->capture_default_str();
    sub->add_option("--output", cfg.output, "output file (default: stdout)");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  const std::pair<const char*, const char*> commands[] = {
      {"solve", "iterate T from the start pair and report the trace"},
      {"verify", "check the contractive conditions on samples"},
      {"delta-curve", "largest delta per epsilon for the one-sided condition"},
      {"uniqueness", "multi-start run and comparability probe"},
      {"audit-space", "sample the metric and order axioms"},
  };
  for (const auto& [name, about] : commands) add_common(app.add_subcommand(name, about));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {std::nullopt, kExitOk};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return {std::nullopt, kExitInput};
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return {cfg, kExitOk};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    apply_thread_cap();
    const AnyProblem problem = builtin(cfg.problem);
    return std::visit(
        [&](const auto& p) -> int {
          if (cfg.command == "solve") return run_solve(cfg, p, out);
          if (cfg.command == "verify") return run_verify(cfg, p, out);
          if (cfg.command == "delta-curve") return run_delta_curve(cfg, p, out);
          if (cfg.command == "uniqueness") return run_uniqueness(cfg, p, out);
          if (cfg.command == "audit-space") return run_audit(cfg, p, out);
          throw InputError("unknown command '" + cfg.command + "'");
        },
        problem);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace coupled_fp::cli
