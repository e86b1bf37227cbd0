#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "gts/ast.hpp"

namespace gts {

// μ: addresses are consecutive integers from 0; never removed.
class Store {
 public:
  std::int64_t alloc(TargetExprPtr v) {
    cells_.push_back(std::move(v));
    return static_cast<std::int64_t>(cells_.size()) - 1;
  }
  const TargetExprPtr* read(std::int64_t a) const {
    if (a < 0 || a >= static_cast<std::int64_t>(cells_.size())) return nullptr;
    return &cells_[static_cast<std::size_t>(a)];
  }
  bool write(std::int64_t a, TargetExprPtr v) {
    if (a < 0 || a >= static_cast<std::int64_t>(cells_.size())) return false;
    cells_[static_cast<std::size_t>(a)] = std::move(v);
    return true;
  }
  std::size_t size() const { return cells_.size(); }

 private:
  std::vector<TargetExprPtr> cells_;
};

struct EvalStats {
  std::uint64_t steps = 0;
  std::uint64_t checks_executed = 0;         // every ECheck/ECheckFail firing
  std::uint64_t checks_failed = 0;           // 0 or 1
  std::uint64_t checks_executed_tagged = 0;  // firings with tag ≠ ★
};

struct RunOutcome {
  enum class Kind { Value, CheckFailure, FuelExhausted, Stuck, Overflow };
  Kind kind = Kind::Stuck;
  TargetExprPtr value;       // Value
  TargetExprPtr stuck_expr;  // Stuck: the redex no rule applies to
  Store store;
  EvalStats stats;
};

const char* outcome_name(RunOutcome::Kind k);  // "value" "fail" "fuel" "stuck" "overflow"

bool is_value(const TargetExprPtr& e);

// ⊢ v : S — tag membership for values.
bool has_tag_value(const TargetExprPtr& v, Tag s);

// e[x/v]; v must be closed.
TargetExprPtr substitute(const TargetExprPtr& e, const std::string& x,
                         const TargetExprPtr& v);

// Small-step machine: ⟨e, μ⟩ configurations plus the absorbing fail state.
class Machine {
 public:
  explicit Machine(TargetExprPtr e) : expr_(std::move(e)) {}

  enum class Status { Running, Value, Failed, Stuck, Overflow };

  // One reduction under the leftmost-innermost evaluation context.
  Status step();

  const TargetExprPtr& expr() const { return expr_; }
  const TargetExprPtr& stuck_expr() const { return stuck_expr_; }
  const Store& store() const { return store_; }
  Store& store() { return store_; }
  const EvalStats& stats() const { return stats_; }

 private:
  TargetExprPtr expr_;
  TargetExprPtr stuck_expr_;
  Store store_;
  EvalStats stats_;
  bool failed_ = false;
};

// Iterate step() until a terminal state or fuel runs out.
RunOutcome run(TargetExprPtr e, std::uint64_t fuel = 1'000'000,
               std::ostream* trace = nullptr);

}  // namespace gts
