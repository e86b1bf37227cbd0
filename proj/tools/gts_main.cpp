#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gts/lattice.hpp"
#include "gts/parser.hpp"
#include "gts/pipeline.hpp"
#include "gts/progen.hpp"
#include "gts/rng.hpp"
#include "gts/typecheck.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gts::error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string value_str(const gts::RunOutcome& out) {
  switch (out.value->kind) {
    case gts::TargetExpr::Kind::IntLit: return std::to_string(out.value->value);
    case gts::TargetExpr::Kind::Lam: return "<fun>";
    case gts::TargetExpr::Kind::Addr: return "<ref>";
    default: return "?";
  }
}

void print_outcome(std::ostream& os, const gts::RunOutcome& out) {
  if (out.kind == gts::RunOutcome::Kind::Value)
    os << "value " << value_str(out) << "\n";
  else
    os << gts::outcome_name(out.kind) << "\n";
}

struct CompileArgs {
  std::string file;
  bool no_opt = false;
  bool open_world = false;
};

gts::CompileResult compile_file(const CompileArgs& args, bool need_solver) {
  gts::SurfaceExprPtr s = gts::parse_program(read_file(args.file));
  gts::CompileOptions opts;
  opts.open_world = args.open_world;
  opts.optimize = !args.no_opt || need_solver;
  gts::CompileResult res = gts::compile_surface(s, opts);
  for (const std::string& w : res.warnings) std::cerr << w << "\n";
  return res;
}

int cmd_check(const std::string& file) {
  gts::SurfaceExprPtr s = gts::parse_program(read_file(file));
  gts::SurfaceTypePtr ty = gts::typecheck_surface(s);
  std::cout << gts::to_string(ty) << "\n";
  return 0;
}

int cmd_fuzz(std::uint64_t count, std::uint64_t seed, int budget, std::uint64_t fuel) {
  std::uint64_t agreed = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    gts::SurfaceExprPtr p = gts::gen_program(seed + i, budget);
    bool ok = true;
    for (bool open_world : {false, true}) {
      gts::CompileOptions opts;
      opts.open_world = open_world;
      gts::CompileResult r = gts::compile_surface(p, opts);
      gts::RunOutcome a = gts::run(r.erased, fuel);
      gts::RunOutcome b = gts::run(r.optimized, fuel);
      if (!gts::outcomes_agree(a, b)) {
        ok = false;
        std::cerr << "disagreement at seed " << seed + i
                  << (open_world ? " (open world)" : " (closed world)") << ": erased="
                  << gts::outcome_name(a.kind) << " optimized=" << gts::outcome_name(b.kind)
                  << "\n  program: " << gts::print(p) << "\n";
      }
    }
    if (ok) ++agreed;
  }
  std::cout << agreed << "/" << count << " agree\n";
  return agreed == count ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transient gradual typing compiler and typing-lattice harness"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "surface-typecheck a program");
  std::string check_file;
  check->add_option("file", check_file, "program (.gts)")->required();

  // compile
  auto* compile = app.add_subcommand("compile", "compile to the target calculus");
  CompileArgs cargs;
  std::string emit = "optimized";
  bool dump_transient = false, dump_constraints = false, dump_solution = false,
       dump_trace = false;
  std::string out_path;
  compile->add_option("file", cargs.file, "program (.gts)")->required();
  compile->add_flag("--no-opt", cargs.no_opt, "emit the erased program; skip the solver");
  compile->add_flag("--open-world", cargs.open_world, "protect the program type from the open world");
  compile->add_option("--emit", emit, "erased|optimized (default optimized)")
      ->check(CLI::IsMember({"erased", "optimized"}));
  compile->add_flag("--dump-transient", dump_transient, "print the check-inserted program");
  compile->add_flag("--dump-constraints", dump_constraints, "print the constraint set as JSON");
  compile->add_flag("--dump-solution", dump_solution, "print the solution as JSON");
  compile->add_flag("--trace", dump_trace, "print the solver trace");
  compile->add_option("-o,--out", out_path, "write the emitted program to a file");

  // run
  auto* runc = app.add_subcommand("run", "compile and evaluate");
  CompileArgs rargs;
  std::uint64_t run_fuel = 1'000'000;
  bool count_checks = false, trace_eval = false;
  runc->add_option("file", rargs.file, "program (.gts)")->required();
  runc->add_flag("--no-opt", rargs.no_opt, "run the erased program");
  runc->add_flag("--open-world", rargs.open_world, "protect the program type from the open world");
  runc->add_option("--fuel", run_fuel, "max machine steps (default 1000000)");
  runc->add_flag("--count-checks", count_checks, "report executed/failed check counts");
  runc->add_flag("--trace-eval", trace_eval, "print each machine state");

  // solve
  auto* solvec = app.add_subcommand("solve", "print constraints and solution");
  CompileArgs sargs;
  solvec->add_option("file", sargs.file, "program (.gts)")->required();
  solvec->add_flag("--open-world", sargs.open_world, "protect the program type from the open world");

  // lattice
  auto* lat = app.add_subcommand("lattice", "sample the typing lattice and measure check counts");
  CompileArgs largs;
  int intervals = 100, samples = 10;
  std::uint64_t lat_seed = 0, lat_fuel = 1'000'000;
  std::string csv_path;
  lat->add_option("file", largs.file, "program (.gts)")->required();
  lat->add_option("--intervals", intervals, "max intervals (default 100)");
  lat->add_option("--samples", samples, "configurations per interval (default 10)");
  lat->add_option("--seed", lat_seed, "master seed (default 0)");
  lat->add_option("--out", csv_path, "CSV output path (default stdout)");
  lat->add_flag("--open-world", largs.open_world, "protect the program type from the open world");
  lat->add_option("--fuel", lat_fuel, "max machine steps per run (default 1000000)");

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "differential corpus: erased vs optimized");
  std::uint64_t fz_count = 100, fz_seed = 0, fz_fuel = 100'000;
  int fz_budget = 30;
  fuzz->add_option("--count", fz_count, "number of programs (default 100)");
  fuzz->add_option("--seed", fz_seed, "first program seed (default 0)");
  fuzz->add_option("--budget", fz_budget, "program size budget (default 30)");
  fuzz->add_option("--fuel", fz_fuel, "max machine steps per run (default 100000)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(check_file);

    if (compile->parsed()) {
      bool need_solver = dump_constraints || dump_solution || dump_trace;
      gts::CompileResult res = compile_file(cargs, need_solver);
      bool dumped = dump_transient || dump_constraints || dump_solution || dump_trace;
      if (dump_transient) std::cout << gts::print(res.transient) << "\n";
      if (dump_constraints)
        std::cout << gts::constraints_json(res.program_type, res.constraints).dump() << "\n";
      if (dump_solution)
        std::cout << gts::solution_json(res.solve.solution).dump() << "\n";
      if (dump_trace)
        for (const gts::TraceStep& t : res.solve.trace) std::cout << t.line() << "\n";
      const gts::TargetExprPtr& program =
          (cargs.no_opt || emit == "erased") ? res.erased : res.optimized;
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw gts::error("cannot open " + out_path);
        out << gts::print(program) << "\n";
      } else if (!dumped) {
        std::cout << gts::print(program) << "\n";
      }
      return 0;
    }

    if (runc->parsed()) {
      gts::CompileResult res = compile_file(rargs, false);
      const gts::TargetExprPtr& program = rargs.no_opt ? res.erased : res.optimized;
      gts::RunOutcome out =
          gts::run(program, run_fuel, trace_eval ? &std::cout : nullptr);
      print_outcome(std::cout, out);
      if (count_checks)
        std::cout << "checks: executed=" << out.stats.checks_executed
                  << " failed=" << out.stats.checks_failed << "\n";
      return 0;
    }

    if (solvec->parsed()) {
      gts::CompileResult res = compile_file(sargs, true);
      std::cout << gts::constraints_json(res.program_type, res.constraints).dump() << "\n";
      std::cout << gts::solution_json(res.solve.solution).dump() << "\n";
      return 0;
    }

    if (lat->parsed()) {
      gts::SurfaceExprPtr s = gts::parse_program(read_file(largs.file));
      gts::typecheck_surface(s);
      std::vector<std::string> skipped;
      std::vector<gts::Configuration> configs =
          gts::sample_lattice(s, intervals, samples, lat_seed, &skipped);
      for (const std::string& msg : skipped) std::cerr << "warn: " << msg << "\n";
      std::ofstream file_out;
      std::ostream* os = &std::cout;
      if (!csv_path.empty()) {
        file_out.open(csv_path, std::ios::binary);
        if (!file_out) throw gts::error("cannot open " + csv_path);
        os = &file_out;
      }
      gts::write_csv_header(*os);
      for (const gts::Configuration& c : configs) {
        gts::ConfigMetrics m = gts::measure(c, largs.open_world, lat_fuel);
        gts::write_csv_row(*os, c, m);
      }
      return 0;
    }

    if (fuzz->parsed()) return cmd_fuzz(fz_count, fz_seed, fz_budget, fz_fuel);
  } catch (const gts::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const gts::type_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const gts::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const gts::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
