#include "gts/pipeline.hpp"

#include "gts/typecheck.hpp"

namespace gts {

CompileResult compile_surface(const SurfaceExprPtr& s, const CompileOptions& opts) {
  CompileResult res;
  res.surface_type = typecheck_surface(s);

  VarSupply supply;
  auto [d, ty] = insert_checks(s, supply);
  res.transient = d;
  shallow_typecheck(d);  // inserter self-check
  res.erased = erase(d);

  if (!opts.optimize) {
    res.optimized = res.erased;
    res.solver_fallback = true;
    return res;
  }

  GenResult gen = generate(d, supply);
  res.program_type = gen.type;
  res.constraints = std::move(gen.constraints);
  if (opts.open_world) res.constraints.merge(open_world_constraints(res.program_type));

  std::uint32_t need_vars = supply.issued();
  res.solve = solve(res.constraints, need_vars, supply);
  res.solver_fallback = res.solve.status != SolveStatus::Solved;

  if (!res.solve.ok()) {
    // Unsatisfiable set or rejected σ★: warn and keep every check.
    res.warnings.push_back("warn: check optimization disabled: " + res.solve.message);
    res.optimized = res.erased;
    return res;
  }

  OptimizeResult opt = optimize(d, res.solve.solution);
  res.optimized = opt.expr;
  for (std::string& w : opt.warnings) res.warnings.push_back(std::move(w));
  return res;
}

}  // namespace gts
