#pragma once

#include <utility>

#include "gts/ast.hpp"
#include "gts/typecheck.hpp"

namespace gts {

// Γ ⊢ s ⇝ d : U — translate a typechecked surface program into the transient
// calculus, inserting checks at function entries, call sites (callee and
// result), dereferences (subject and result), assignment targets, and both
// addition operands. Every lambda receives two fresh type variables and every
// reference introduction one; variables are issued in pre-order.
//
// Precondition: typecheck_surface succeeds on s.
std::pair<TransientExprPtr, SurfaceTypePtr> insert_checks(TypeEnv& env,
                                                          const SurfaceExprPtr& s,
                                                          VarSupply& supply);

inline std::pair<TransientExprPtr, SurfaceTypePtr> insert_checks(
    const SurfaceExprPtr& s, VarSupply& supply) {
  TypeEnv env;
  return insert_checks(env, s, supply);
}

// Tag-level validator for transient terms. Functions have tag "fun", literals
// "int", references "ref"; variables are bound at ★. A check (d ▷ S) has tag S
// when d's tag is ★ or S, and (d ▷ ★) is transparent. Throws shallow_error when
// an elimination form sees the wrong tag — on check-inserter output that means
// an inserter bug.
Tag shallow_typecheck(const TransientExprPtr& d);

}  // namespace gts
