#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gts/constraints.hpp"

namespace gts {

struct TraceStep {
  std::string rule;      // "1".."16", "solve", "fallback"
  std::string consumed;  // printed constraints consumed
  std::string produced;  // printed constraints produced

  std::string line() const { return "RULE " + rule + ": " + consumed + " ==> " + produced; }
};

using SolverTrace = std::vector<TraceStep>;

// Finite map from type variables to variable-free full types.
class Solution {
 public:
  void set(TypeVar v, FullTypePtr t) { map_[v] = std::move(t); }
  const FullTypePtr* find(TypeVar v) const {
    auto it = map_.find(v);
    return it == map_.end() ? nullptr : &it->second;
  }
  FullTypePtr at(TypeVar v) const {
    if (const FullTypePtr* t = find(v)) return *t;
    throw internal_error("solution has no mapping for " + v.name());
  }
  const std::map<TypeVar, FullTypePtr>& entries() const { return map_; }

 private:
  std::map<TypeVar, FullTypePtr> map_;
};

enum class SolveStatus {
  Solved,        // the Ω ⇓ σ loop reached the all-definitions base case
  FallbackStar,  // no progress; σ★ (everything unsolved ↦ ★) validated
  Failed,        // unsatisfiable constraint or σ★ did not validate
};

struct SolveResult {
  SolveStatus status = SolveStatus::Failed;
  Solution solution;  // meaningful unless Failed
  SolverTrace trace;
  std::string message;  // reason for FallbackStar/Failed

  bool ok() const { return status != SolveStatus::Failed; }
};

// One normal-form pass of the 16 rewrite rules, in listed order, first match
// in insertion order. Exposed for tests; solve() uses it internally.
struct SimplifyOutcome {
  std::vector<Constraint> constraints;
  std::optional<std::string> unsat;  // first unsatisfiable leftover, if any
};
SimplifyOutcome simplify(const ConstraintSet& omega, VarSupply& supply,
                         SolverTrace* trace = nullptr);

// Ω ⇓ σ. `need_vars` is the fresh-variable count at entry: the returned
// solution is total over indices [0, need_vars) (variables the constraint set
// never mentions are mapped to ★).
SolveResult solve(const ConstraintSet& omega, std::uint32_t need_vars,
                  VarSupply& supply);

// Definition-1 validator, independent of the solve path: checks each clause
// directly with subtype/tag_of_full/syntactic equality.
struct ValidateResult {
  bool ok = true;
  std::string violation;  // first violated clause, for diagnostics
};
ValidateResult validate(const ConstraintSet& omega, const Solution& sigma);

// σA: homomorphic substitution; the result is variable-free.
FullTypePtr apply_solution(const Solution& sigma, const ConstraintType& a);
FullTypePtr apply_solution(const Solution& sigma, const FullTypePtr& t);

nlohmann::ordered_json solution_json(const Solution& sigma);

}  // namespace gts
