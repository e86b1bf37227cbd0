#include "gts/eval.hpp"

namespace gts {

const char* outcome_name(RunOutcome::Kind k) {
  switch (k) {
    case RunOutcome::Kind::Value: return "value";
    case RunOutcome::Kind::CheckFailure: return "fail";
    case RunOutcome::Kind::FuelExhausted: return "fuel";
    case RunOutcome::Kind::Stuck: return "stuck";
    case RunOutcome::Kind::Overflow: return "overflow";
  }
  return "?";
}

bool is_value(const TargetExprPtr& e) {
  return e->kind == TargetExpr::Kind::Addr || e->kind == TargetExpr::Kind::IntLit ||
         e->kind == TargetExpr::Kind::Lam;
}

bool has_tag_value(const TargetExprPtr& v, Tag s) {
  switch (s) {
    case Tag::Dyn: return true;
    case Tag::Int: return v->kind == TargetExpr::Kind::IntLit;
    case Tag::Fun: return v->kind == TargetExpr::Kind::Lam;
    case Tag::Ref: return v->kind == TargetExpr::Kind::Addr;
  }
  return false;
}

TargetExprPtr substitute(const TargetExprPtr& e, const std::string& x,
                         const TargetExprPtr& v) {
  switch (e->kind) {
    case TargetExpr::Kind::Var:
      return e->name == x ? v : e;
    case TargetExpr::Kind::Addr:
    case TargetExpr::Kind::IntLit:
    case TargetExpr::Kind::Fail:
      return e;
    case TargetExpr::Kind::Lam:
      if (e->name == x) return e;  // shadowed
      return e_lam(e->name, substitute(e->a, x, v), e->span);
    case TargetExpr::Kind::Let: {
      TargetExprPtr bound = substitute(e->a, x, v);
      TargetExprPtr body = e->name == x ? e->b : substitute(e->b, x, v);
      return e_let(e->name, std::move(bound), std::move(body), e->span);
    }
    case TargetExpr::Kind::Add:
      return e_add(substitute(e->a, x, v), substitute(e->b, x, v), e->span);
    case TargetExpr::Kind::App:
      return e_app(substitute(e->a, x, v), substitute(e->b, x, v), e->span);
    case TargetExpr::Kind::Assign:
      return e_assign(substitute(e->a, x, v), substitute(e->b, x, v), e->span);
    case TargetExpr::Kind::RefNew:
      return e_ref(substitute(e->a, x, v), e->span);
    case TargetExpr::Kind::Deref:
      return e_deref(substitute(e->a, x, v), e->span);
    case TargetExpr::Kind::Check:
      return e_check(substitute(e->a, x, v), e->tag, e->span);
  }
  return e;
}

namespace {

struct Red {
  enum class Kind { Stepped, IsValue, Fail, Stuck, Overflow };
  Kind kind;
  TargetExprPtr e;  // Stepped: the reduct; Stuck: the offending redex
};

Red stepped(TargetExprPtr e) { return {Red::Kind::Stepped, std::move(e)}; }
Red stuck(TargetExprPtr e) { return {Red::Kind::Stuck, std::move(e)}; }

// One reduction of the leftmost-innermost redex per the E grammar.
Red reduce(const TargetExprPtr& e, Store& store, EvalStats& stats) {
  if (is_value(e)) return {Red::Kind::IsValue, nullptr};
  switch (e->kind) {
    case TargetExpr::Kind::Var:
      return stuck(e);  // free variable; unreachable for closed programs
    case TargetExpr::Kind::Fail:
      return {Red::Kind::Fail, nullptr};  // EFail
    case TargetExpr::Kind::Add: {
      if (!is_value(e->a)) {
        Red r = reduce(e->a, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_add(r.e, e->b, e->span));
      }
      if (!is_value(e->b)) {
        Red r = reduce(e->b, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_add(e->a, r.e, e->span));
      }
      if (e->a->kind == TargetExpr::Kind::IntLit &&
          e->b->kind == TargetExpr::Kind::IntLit) {  // EAdd
        std::int64_t sum = 0;
        if (__builtin_add_overflow(e->a->value, e->b->value, &sum))
          return {Red::Kind::Overflow, nullptr};
        return stepped(e_int(sum, e->span));
      }
      return stuck(e);
    }
    case TargetExpr::Kind::App: {
      if (!is_value(e->a)) {
        Red r = reduce(e->a, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_app(r.e, e->b, e->span));
      }
      if (!is_value(e->b)) {
        Red r = reduce(e->b, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_app(e->a, r.e, e->span));
      }
      if (e->a->kind == TargetExpr::Kind::Lam)  // EApp
        return stepped(substitute(e->a->a, e->a->name, e->b));
      return stuck(e);
    }
    case TargetExpr::Kind::Let: {
      if (!is_value(e->a)) {
        Red r = reduce(e->a, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_let(e->name, r.e, e->b, e->span));
      }
      return stepped(substitute(e->b, e->name, e->a));  // ELet
    }
    case TargetExpr::Kind::RefNew: {
      if (!is_value(e->a)) {
        Red r = reduce(e->a, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_ref(r.e, e->span));
      }
      return stepped(e_addr(store.alloc(e->a)));  // ERef
    }
    case TargetExpr::Kind::Deref: {
      if (!is_value(e->a)) {
        Red r = reduce(e->a, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_deref(r.e, e->span));
      }
      if (e->a->kind == TargetExpr::Kind::Addr)
        if (const TargetExprPtr* v = store.read(e->a->value))  // EDeref
          return stepped(*v);
      return stuck(e);
    }
    case TargetExpr::Kind::Assign: {
      if (!is_value(e->a)) {
        Red r = reduce(e->a, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_assign(r.e, e->b, e->span));
      }
      if (!is_value(e->b)) {
        Red r = reduce(e->b, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_assign(e->a, r.e, e->span));
      }
      if (e->a->kind == TargetExpr::Kind::Addr && store.read(e->a->value)) {
        store.write(e->a->value, e->b);  // EUpdt: result is 0
        return stepped(e_int(0, e->span));
      }
      return stuck(e);
    }
    case TargetExpr::Kind::Check: {
      if (!is_value(e->a)) {
        Red r = reduce(e->a, store, stats);
        if (r.kind != Red::Kind::Stepped) return r;
        return stepped(e_check(r.e, e->tag, e->span));
      }
      ++stats.checks_executed;
      if (e->tag != Tag::Dyn) ++stats.checks_executed_tagged;
      if (has_tag_value(e->a, e->tag)) return stepped(e->a);  // ECheck
      stats.checks_failed = 1;                                // ECheckFail
      return {Red::Kind::Fail, nullptr};
    }
    default:
      return stuck(e);
  }
}

}  // namespace

Machine::Status Machine::step() {
  if (failed_) return Status::Failed;  // fail is absorbing
  Red r = reduce(expr_, store_, stats_);
  switch (r.kind) {
    case Red::Kind::Stepped:
      expr_ = std::move(r.e);
      ++stats_.steps;
      return Status::Running;
    case Red::Kind::IsValue:
      return Status::Value;
    case Red::Kind::Fail:
      failed_ = true;
      ++stats_.steps;
      return Status::Failed;
    case Red::Kind::Stuck:
      stuck_expr_ = std::move(r.e);
      return Status::Stuck;
    case Red::Kind::Overflow:
      return Status::Overflow;
  }
  return Status::Stuck;
}

RunOutcome run(TargetExprPtr e, std::uint64_t fuel, std::ostream* trace) {
  Machine m(std::move(e));
  while (m.stats().steps < fuel) {
    if (trace)
      *trace << "⟨" << print(m.expr()) << "⟩ | store-size=" << m.store().size()
             << "\n";
    Machine::Status st = m.step();
    if (st == Machine::Status::Running) continue;
    RunOutcome out;
    out.stats = m.stats();
    switch (st) {
      case Machine::Status::Value:
        out.kind = RunOutcome::Kind::Value;
        out.value = m.expr();
        out.store = m.store();
        break;
      case Machine::Status::Failed:
        out.kind = RunOutcome::Kind::CheckFailure;
        break;
      case Machine::Status::Stuck:
        out.kind = RunOutcome::Kind::Stuck;
        out.stuck_expr = m.stuck_expr();
        break;
      case Machine::Status::Overflow:
        out.kind = RunOutcome::Kind::Overflow;
        break;
      default:
        break;
    }
    return out;
  }
  // Fuel spent: the only terminal reachable without a further step is a value.
  RunOutcome out;
  out.stats = m.stats();
  if (is_value(m.expr())) {
    out.kind = RunOutcome::Kind::Value;
    out.value = m.expr();
    out.store = m.store();
  } else {
    out.kind = RunOutcome::Kind::FuelExhausted;
  }
  return out;
}

}  // namespace gts
