#pragma once

#include <string>
#include <vector>

#include "gts/constraints.hpp"
#include "gts/insert.hpp"
#include "gts/optimize.hpp"
#include "gts/solver.hpp"

namespace gts {

struct CompileOptions {
  bool open_world = false;
  bool optimize = true;  // false: erased output only, solver skipped
};

struct CompileResult {
  SurfaceTypePtr surface_type;
  TransientExprPtr transient;
  ConstraintType program_type = ConstraintType::dyn();
  ConstraintSet constraints;  // includes open-world constraints when enabled
  SolveResult solve;
  bool solver_fallback = false;  // anything but a clean Solved
  TargetExprPtr erased;
  TargetExprPtr optimized;  // == erased when the solver failed outright
  std::vector<std::string> warnings;
};

// Full pipeline: surface typecheck → check insertion (validated by the
// shallow system) → constraint generation → solve → optimizing translation,
// with the plain erasure always produced alongside.
CompileResult compile_surface(const SurfaceExprPtr& s, const CompileOptions& opts);

}  // namespace gts
