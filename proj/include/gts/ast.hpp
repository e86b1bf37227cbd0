#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "gts/diagnostics.hpp"
#include "gts/types.hpp"

namespace gts {

// ---------------------------------------------------------------------------
// Surface expressions s (the gradually typed language)
// ---------------------------------------------------------------------------

class SurfaceExpr;
using SurfaceExprPtr = std::shared_ptr<const SurfaceExpr>;

class SurfaceExpr {
 public:
  enum class Kind : std::uint8_t { Var, IntLit, Add, Lam, App, RefNew, Deref, Assign };

  Kind kind;
  Span span;
  std::string name;        // Var; Lam parameter
  std::int64_t value = 0;  // IntLit
  SurfaceTypePtr ty1;      // Lam parameter type; RefNew content type
  SurfaceTypePtr ty2;      // Lam return type
  SurfaceExprPtr a, b;
};

SurfaceExprPtr s_var(std::string name, Span sp = {});
SurfaceExprPtr s_int(std::int64_t v, Span sp = {});
SurfaceExprPtr s_add(SurfaceExprPtr l, SurfaceExprPtr r, Span sp = {});
SurfaceExprPtr s_lam(std::string param, SurfaceTypePtr pty, SurfaceTypePtr rty,
                     SurfaceExprPtr body, Span sp = {});
SurfaceExprPtr s_app(SurfaceExprPtr f, SurfaceExprPtr arg, Span sp = {});
SurfaceExprPtr s_ref(SurfaceTypePtr ty, SurfaceExprPtr init, Span sp = {});
SurfaceExprPtr s_deref(SurfaceExprPtr e, Span sp = {});
SurfaceExprPtr s_assign(SurfaceExprPtr target, SurfaceExprPtr val, Span sp = {});

// Structural equality; spans are ignored.
bool equal(const SurfaceExprPtr& a, const SurfaceExprPtr& b);
std::string print(const SurfaceExprPtr& s);
std::size_t node_count(const SurfaceExprPtr& s);

// ---------------------------------------------------------------------------
// Transient expressions d (checks + type variables)
// ---------------------------------------------------------------------------

class TransientExpr;
using TransientExprPtr = std::shared_ptr<const TransientExpr>;

class TransientExpr {
 public:
  enum class Kind : std::uint8_t {
    Var, IntLit, Add, Lam, App, Let, RefNew, Deref, Assign, Check
  };

  Kind kind;
  Span span;
  std::string name;        // Var; Lam parameter; Let binder
  std::int64_t value = 0;  // IntLit
  TypeVar var1, var2;      // Lam ⟨α,β⟩; RefNew ⟨α⟩ (var1)
  Tag tag = Tag::Dyn;      // Check
  TransientExprPtr a, b;
};

TransientExprPtr d_var(std::string name, Span sp = {});
TransientExprPtr d_int(std::int64_t v, Span sp = {});
TransientExprPtr d_add(TransientExprPtr l, TransientExprPtr r, Span sp = {});
TransientExprPtr d_lam(std::string param, TypeVar pv, TypeVar rv,
                       TransientExprPtr body, Span sp = {});
TransientExprPtr d_app(TransientExprPtr f, TransientExprPtr arg, Span sp = {});
TransientExprPtr d_let(std::string name, TransientExprPtr bound,
                       TransientExprPtr body, Span sp = {});
TransientExprPtr d_ref(TypeVar v, TransientExprPtr init, Span sp = {});
TransientExprPtr d_deref(TransientExprPtr e, Span sp = {});
TransientExprPtr d_assign(TransientExprPtr target, TransientExprPtr val, Span sp = {});
TransientExprPtr d_check(TransientExprPtr e, Tag tag, Span sp = {});

bool equal(const TransientExprPtr& a, const TransientExprPtr& b);
std::string print(const TransientExprPtr& d);
std::size_t count_checks(const TransientExprPtr& d);

// ---------------------------------------------------------------------------
// Target expressions e (checks + addresses + fail)
// ---------------------------------------------------------------------------

class TargetExpr;
using TargetExprPtr = std::shared_ptr<const TargetExpr>;

class TargetExpr {
 public:
  enum class Kind : std::uint8_t {
    Var, Addr, IntLit, Add, Lam, App, Let, RefNew, Deref, Assign, Check, Fail
  };

  Kind kind;
  Span span;
  std::string name;         // Var; Lam parameter; Let binder
  std::int64_t value = 0;   // IntLit; Addr index
  Tag tag = Tag::Dyn;       // Check
  TargetExprPtr a, b;
};

TargetExprPtr e_var(std::string name, Span sp = {});
TargetExprPtr e_addr(std::int64_t addr);
TargetExprPtr e_int(std::int64_t v, Span sp = {});
TargetExprPtr e_add(TargetExprPtr l, TargetExprPtr r, Span sp = {});
TargetExprPtr e_lam(std::string param, TargetExprPtr body, Span sp = {});
TargetExprPtr e_app(TargetExprPtr f, TargetExprPtr arg, Span sp = {});
TargetExprPtr e_let(std::string name, TargetExprPtr bound, TargetExprPtr body,
                    Span sp = {});
TargetExprPtr e_ref(TargetExprPtr init, Span sp = {});
TargetExprPtr e_deref(TargetExprPtr e, Span sp = {});
TargetExprPtr e_assign(TargetExprPtr target, TargetExprPtr val, Span sp = {});
TargetExprPtr e_check(TargetExprPtr e, Tag tag, Span sp = {});
TargetExprPtr e_fail(Span sp = {});

bool equal(const TargetExprPtr& a, const TargetExprPtr& b);
std::string print(const TargetExprPtr& e);

}  // namespace gts
