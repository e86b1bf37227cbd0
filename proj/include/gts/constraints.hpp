#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "gts/ast.hpp"
#include "gts/types.hpp"

namespace gts {

// ---------------------------------------------------------------------------
// Constraints C ::= A <: A | A ▷S⊳ A | A = A | α : S | α := T
// ---------------------------------------------------------------------------

struct SubC {
  ConstraintType lhs, rhs;
  bool operator==(const SubC&) const = default;
};

// Check constraint: if lhs solves to tag, lhs = rhs; otherwise rhs's
// variable parts are ★.
struct ChkC {
  ConstraintType lhs;
  Tag tag;
  ConstraintType rhs;
  bool operator==(const ChkC&) const = default;
};

struct EqC {
  ConstraintType lhs, rhs;
  bool operator==(const EqC&) const = default;
};

struct TagCo {
  TypeVar var;
  Tag tag;
  bool operator==(const TagCo&) const = default;
};

struct DefC {
  TypeVar var;
  FullTypePtr body;
  bool operator==(const DefC& o) const { return var == o.var && equal(body, o.body); }
};

using Constraint = std::variant<SubC, ChkC, EqC, TagCo, DefC>;

bool equal(const Constraint& a, const Constraint& b);
std::string to_string(const Constraint& c);
void collect_vars(const Constraint& c, std::vector<TypeVar>& out);

// Ordered set: keeps first-insertion order, collapses duplicates.
class ConstraintSet {
 public:
  void insert(Constraint c) {
    if (!contains(c)) items_.push_back(std::move(c));
  }
  void merge(const ConstraintSet& other) {
    for (const Constraint& c : other.items_) insert(c);
  }
  bool contains(const Constraint& c) const {
    for (const Constraint& x : items_)
      if (equal(x, c)) return true;
    return false;
  }

  const std::vector<Constraint>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  std::vector<TypeVar> vars() const;  // distinct, ascending

 private:
  std::vector<Constraint> items_;
};

// ---------------------------------------------------------------------------
// ▷_S on constraint types ("match_tag")
// ---------------------------------------------------------------------------

// Returns the input when it already has constructor s; the most general type
// of constructor s over fresh variables when the input is a variable; ▷★ is
// the identity and any leaf matches int. A concrete constructor mismatch is a
// contract violation (generation never asks for one).
ConstraintType match_tag(const ConstraintType& a, Tag s, VarSupply& supply);

// ---------------------------------------------------------------------------
// Constraint generation (one left-to-right pass, Γ ⊢ d : A ; Ω)
// ---------------------------------------------------------------------------

struct GenResult {
  ConstraintType type;
  ConstraintSet constraints;
};

// Throws internal_error on a shape error (an elimination form whose subject
// does not have the required constructor type) — cannot happen on
// check-inserter output.
GenResult generate(const TransientExprPtr& d, VarSupply& supply);

// Constraints protecting the program's overall type from the open world.
ConstraintSet open_world_constraints(const ConstraintType& a);

// ---------------------------------------------------------------------------
// JSON dumps (stable key order)
// ---------------------------------------------------------------------------

nlohmann::ordered_json type_json(const ConstraintType& a);
nlohmann::ordered_json type_json(const FullTypePtr& t);
nlohmann::ordered_json constraint_json(const Constraint& c);
nlohmann::ordered_json constraints_json(const ConstraintType& result,
                                        const ConstraintSet& omega);

}  // namespace gts
