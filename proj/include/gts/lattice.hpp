#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gts/ast.hpp"
#include "gts/eval.hpp"
#include "gts/pipeline.hpp"

namespace gts {

// Type weight: the number of non-★ type constructors across all annotations.
int type_weight(const SurfaceExprPtr& s);
int type_weight(const SurfaceTypePtr& u);

struct Configuration {
  int id = 0;
  std::uint64_t seed = 0;
  int interval_lo = 0;
  int interval_hi = 0;  // exclusive; the fully-typed row uses [W, W+1)
  int achieved_weight = 0;
  SurfaceExprPtr program;
};

// Randomly erase annotation constructors (each non-★ constructor node is one
// candidate) until the weight falls below `hi`; accept a weight in [lo, hi),
// restarting with a derived seed otherwise. Empty after max_restarts tries.
std::optional<SurfaceExprPtr> dynamize(const SurfaceExprPtr& s, int lo, int hi,
                                       std::uint64_t seed, int max_restarts = 100);

// Stratified sample: up to `max_intervals` equal intervals over [0, W), ten
// (per_interval) configurations each, plus the fully-typed original last.
// Unreachable intervals are reported in `skipped` and omitted.
std::vector<Configuration> sample_lattice(const SurfaceExprPtr& s, int max_intervals,
                                          int per_interval, std::uint64_t seed,
                                          std::vector<std::string>* skipped = nullptr);

struct ConfigMetrics {
  std::size_t static_checks_unopt = 0;
  std::size_t static_checks_opt = 0;
  // Executed checks that inspect a concrete tag; ▷★ executions verify nothing
  // and are configuration-invariant, so they are excluded from this proxy.
  std::uint64_t dyn_checks_unopt = 0;
  std::uint64_t dyn_checks_opt = 0;
  RunOutcome::Kind outcome_unopt = RunOutcome::Kind::Stuck;
  RunOutcome::Kind outcome_opt = RunOutcome::Kind::Stuck;
  bool agree = false;
  bool solver_fallback = false;
};

// Terminal observation: same kind; ground values compared as integers,
// lambdas and addresses by kind only.
bool outcomes_agree(const RunOutcome& a, const RunOutcome& b);

ConfigMetrics measure(const Configuration& c, bool open_world, std::uint64_t fuel);

// CSV row order follows configuration ids; header per the harness contract.
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const Configuration& c, const ConfigMetrics& m);

}  // namespace gts
