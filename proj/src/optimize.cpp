#include "gts/optimize.hpp"

namespace gts {

namespace {

class FullEnv {
 public:
  void push(const std::string& name, FullTypePtr t) {
    entries_.emplace_back(name, std::move(t));
  }
  void pop() { entries_.pop_back(); }
  const FullTypePtr* lookup(const std::string& name) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

 private:
  std::vector<std::pair<std::string, FullTypePtr>> entries_;
};

struct Translator {
  const Solution& sigma;
  std::vector<std::string> warnings;

  struct Out {
    TargetExprPtr e;
    FullTypePtr t;
  };

  Out go(FullEnv& env, const TransientExprPtr& d) {
    switch (d->kind) {
      case TransientExpr::Kind::Var: {  // DVar
        const FullTypePtr* t = env.lookup(d->name);
        if (!t) throw internal_error("optimize: unbound variable '" + d->name + "'");
        return {e_var(d->name, d->span), *t};
      }
      case TransientExpr::Kind::IntLit:  // DInt
        return {e_int(d->value, d->span), t_int()};
      case TransientExpr::Kind::Add: {  // DAdd
        Out l = go(env, d->a);
        Out r = go(env, d->b);
        require(l.t->kind() == FullType::Kind::Int &&
                    r.t->kind() == FullType::Kind::Int,
                "'+' operands are not int under σ");
        return {e_add(l.e, r.e, d->span), t_int()};
      }
      case TransientExpr::Kind::Lam: {  // DAbs
        FullTypePtr pt = sigma.at(d->var1);
        FullTypePtr rt = sigma.at(d->var2);
        env.push(d->name, pt);
        Out body = go(env, d->a);
        env.pop();
        require(subtype(body.t, rt), "lambda body type is not a subtype of σ" +
                                         d->var2.name());
        return {e_lam(d->name, body.e, d->span), t_fun(pt, rt)};
      }
      case TransientExpr::Kind::App: {  // DApp
        Out f = go(env, d->a);
        require(f.t->kind() == FullType::Kind::Fun,
                "application of a non-function type under σ");
        Out arg = go(env, d->b);
        require(subtype(arg.t, f.t->dom()),
                "argument type is not a subtype of the parameter type under σ");
        return {e_app(f.e, arg.e, d->span), f.t->cod()};
      }
      case TransientExpr::Kind::Let: {  // DLet
        Out bound = go(env, d->a);
        env.push(d->name, bound.t);
        Out body = go(env, d->b);
        env.pop();
        return {e_let(d->name, bound.e, body.e, d->span), body.t};
      }
      case TransientExpr::Kind::RefNew: {  // DRef
        FullTypePtr ct = sigma.at(d->var1);
        Out init = go(env, d->a);
        require(subtype(init.t, ct),
                "reference initializer is not a subtype of σ" + d->var1.name());
        return {e_ref(init.e, d->span), t_ref(ct)};
      }
      case TransientExpr::Kind::Deref: {  // DDeref
        Out r = go(env, d->a);
        require(r.t->kind() == FullType::Kind::Ref,
                "dereference of a non-reference type under σ");
        return {e_deref(r.e, d->span), r.t->content()};
      }
      case TransientExpr::Kind::Assign: {  // DUpdt
        Out r = go(env, d->a);
        require(r.t->kind() == FullType::Kind::Ref,
                "assignment to a non-reference type under σ");
        Out v = go(env, d->b);
        require(subtype(v.t, r.t->content()),
                "assigned value is not a subtype of the reference content under σ");
        return {e_assign(r.e, v.e, d->span), t_int()};
      }
      case TransientExpr::Kind::Check: {
        Out inner = go(env, d->a);
        Tag got = tag_of_full(inner.t);
        if (tag_precise(got, d->tag)) {
          // DCheckRemove
          return {inner.e, inner.t};
        }
        if (inner.t->is_dyn()) {
          // DCheckKeep (S ≠ ★ here, else the remove case had fired)
          return {e_check(inner.e, d->tag, d->span), up_tag(d->tag)};
        }
        // DCheckFail: the whole check becomes fail; the scrutinee is discarded.
        warnings.push_back("warn: check always fails at " + d->span.str() + ": " +
                           to_string(inner.t) + " vs " + tag_name(d->tag));
        return {e_fail(d->span), up_tag(d->tag)};
      }
    }
    throw internal_error("optimize: bad expression kind");
  }

  static void require(bool cond, const std::string& what) {
    if (!cond)
      throw internal_error("optimize: side condition failed (solver bug): " + what);
  }
};

}  // namespace

OptimizeResult optimize(const TransientExprPtr& d, const Solution& sigma) {
  Translator tr{sigma, {}};
  FullEnv env;
  Translator::Out out = tr.go(env, d);
  return {out.e, out.t, std::move(tr.warnings)};
}

TargetExprPtr erase(const TransientExprPtr& d) {
  switch (d->kind) {
    case TransientExpr::Kind::Var:
      return e_var(d->name, d->span);
    case TransientExpr::Kind::IntLit:
      return e_int(d->value, d->span);
    case TransientExpr::Kind::Add:
      return e_add(erase(d->a), erase(d->b), d->span);
    case TransientExpr::Kind::Lam:
      return e_lam(d->name, erase(d->a), d->span);
    case TransientExpr::Kind::App:
      return e_app(erase(d->a), erase(d->b), d->span);
    case TransientExpr::Kind::Let:
      return e_let(d->name, erase(d->a), erase(d->b), d->span);
    case TransientExpr::Kind::RefNew:
      return e_ref(erase(d->a), d->span);
    case TransientExpr::Kind::Deref:
      return e_deref(erase(d->a), d->span);
    case TransientExpr::Kind::Assign:
      return e_assign(erase(d->a), erase(d->b), d->span);
    case TransientExpr::Kind::Check:
      return e_check(erase(d->a), d->tag, d->span);
  }
  throw internal_error("erase: bad expression kind");
}

CheckCensus check_census(const TargetExprPtr& e) {
  CheckCensus c;
  if (e->kind == TargetExpr::Kind::Check) ++c.static_checks;
  if (e->kind == TargetExpr::Kind::Fail) ++c.fail_nodes;
  if (e->a) {
    CheckCensus ca = check_census(e->a);
    c.static_checks += ca.static_checks;
    c.fail_nodes += ca.fail_nodes;
  }
  if (e->b) {
    CheckCensus cb = check_census(e->b);
    c.static_checks += cb.static_checks;
    c.fail_nodes += cb.fail_nodes;
  }
  return c;
}

namespace {

void collect_check_tags(const TargetExprPtr& e, std::vector<Tag>& out) {
  if (e->a) collect_check_tags(e->a, out);
  if (e->b) collect_check_tags(e->b, out);
  if (e->kind == TargetExpr::Kind::Check) out.push_back(e->tag);
}

}  // namespace

std::vector<Tag> check_tags_in_order(const TargetExprPtr& e) {
  std::vector<Tag> out;
  collect_check_tags(e, out);
  return out;
}

}  // namespace gts
