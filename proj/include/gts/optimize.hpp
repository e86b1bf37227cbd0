#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gts/ast.hpp"
#include "gts/solver.hpp"

namespace gts {

struct OptimizeResult {
  TargetExprPtr expr;
  FullTypePtr type;
  std::vector<std::string> warnings;  // one per check replaced by fail
};

// Optimizing translation: removes a check when the solved type of the checked
// term is at least as precise as the tag; keeps it when the type is ★; and
// replaces it with `fail` (plus a warning) when the two can never match.
// All other forms translate homomorphically; the subtype side conditions are
// re-checked and raise internal_error if σ does not actually validate.
//
// Precondition: sigma validates against d's constraint set.
OptimizeResult optimize(const TransientExprPtr& d, const Solution& sigma);

// Plain erasure: drops type-variable annotations, keeps every check.
TargetExprPtr erase(const TransientExprPtr& d);

struct CheckCensus {
  std::size_t static_checks = 0;
  std::size_t fail_nodes = 0;
};
CheckCensus check_census(const TargetExprPtr& e);

// Check tags in left-to-right traversal order (for subset comparisons).
std::vector<Tag> check_tags_in_order(const TargetExprPtr& e);

}  // namespace gts
