#include "gts/insert.hpp"

namespace gts {

std::pair<TransientExprPtr, SurfaceTypePtr> insert_checks(TypeEnv& env,
                                                          const SurfaceExprPtr& s,
                                                          VarSupply& supply) {
  switch (s->kind) {
    case SurfaceExpr::Kind::Var: {
      const SurfaceTypePtr* t = env.lookup(s->name);
      if (!t) throw type_error(s->span, "SVar", "unbound variable '" + s->name + "'");
      return {d_var(s->name, s->span), *t};
    }
    case SurfaceExpr::Kind::IntLit:
      return {d_int(s->value, s->span), ut_int()};
    case SurfaceExpr::Kind::Add: {
      auto [d1, u1] = insert_checks(env, s->a, supply);
      auto [d2, u2] = insert_checks(env, s->b, supply);
      return {d_add(d_check(d1, Tag::Int, s->a->span),
                    d_check(d2, Tag::Int, s->b->span), s->span),
              ut_int()};
    }
    case SurfaceExpr::Kind::Lam: {
      TypeVar pv = supply.fresh();
      TypeVar rv = supply.fresh();
      env.push(s->name, s->ty1);
      auto [body, u2] = insert_checks(env, s->a, supply);
      env.pop();
      // Entry check: rebind the parameter to its checked value so every use
      // in the body sees the checked type.
      TransientExprPtr entry =
          d_let(s->name, d_check(d_var(s->name, s->span), tag_of_surface(s->ty1), s->span),
                body, s->span);
      return {d_lam(s->name, pv, rv, std::move(entry), s->span), ut_fun(s->ty1, s->ty2)};
    }
    case SurfaceExpr::Kind::App: {
      auto [d1, uf] = insert_checks(env, s->a, supply);
      auto m = match_fun(uf);
      if (!m) throw type_error(s->span, "SApp", "callee does not match a function type");
      auto [d2, ua] = insert_checks(env, s->b, supply);
      TransientExprPtr call =
          d_app(d_check(d1, Tag::Fun, s->a->span), d2, s->span);
      return {d_check(std::move(call), tag_of_surface(m->second), s->span), m->second};
    }
    case SurfaceExpr::Kind::RefNew: {
      TypeVar v = supply.fresh();
      auto [d, u2] = insert_checks(env, s->a, supply);
      return {d_ref(v, d, s->span), ut_ref(s->ty1)};
    }
    case SurfaceExpr::Kind::Deref: {
      auto [d, u] = insert_checks(env, s->a, supply);
      auto m = match_ref(u);
      if (!m) throw type_error(s->span, "SDeref", "subject does not match a reference type");
      TransientExprPtr read = d_deref(d_check(d, Tag::Ref, s->a->span), s->span);
      return {d_check(std::move(read), tag_of_surface(*m), s->span), *m};
    }
    case SurfaceExpr::Kind::Assign: {
      auto [d1, u] = insert_checks(env, s->a, supply);
      auto m = match_ref(u);
      if (!m) throw type_error(s->span, "SUpdt", "target does not match a reference type");
      auto [d2, uv] = insert_checks(env, s->b, supply);
      return {d_assign(d_check(d1, Tag::Ref, s->a->span), d2, s->span), ut_int()};
    }
  }
  throw internal_error("insert_checks: bad expression kind");
}

// ---------------------------------------------------------------------------
// Shallow (tag-level) validator
// ---------------------------------------------------------------------------

namespace {

class TagEnv {
 public:
  void push(const std::string& name) { names_.push_back(name); }
  void pop() { names_.pop_back(); }
  bool bound(const std::string& name) const {
    for (auto it = names_.rbegin(); it != names_.rend(); ++it)
      if (*it == name) return true;
    return false;
  }

 private:
  std::vector<std::string> names_;
};

Tag shallow(TagEnv& env, const TransientExprPtr& d) {
  switch (d->kind) {
    case TransientExpr::Kind::Var:
      if (!env.bound(d->name))
        throw shallow_error("shallow type error: unbound variable '" + d->name + "'");
      return Tag::Dyn;  // PVar: all binders carry ★
    case TransientExpr::Kind::IntLit:
      return Tag::Int;  // PInt
    case TransientExpr::Kind::Add: {  // PAdd
      Tag l = shallow(env, d->a);
      Tag r = shallow(env, d->b);
      if (l != Tag::Int || r != Tag::Int)
        throw shallow_error("shallow type error: '+' requires int operands, got " +
                            tag_name(l) + " and " + tag_name(r));
      return Tag::Int;
    }
    case TransientExpr::Kind::Lam: {  // PAbs
      env.push(d->name);
      shallow(env, d->a);
      env.pop();
      return Tag::Fun;
    }
    case TransientExpr::Kind::App: {  // PApp
      Tag f = shallow(env, d->a);
      if (f != Tag::Fun)
        throw shallow_error("shallow type error: callee has tag " + tag_name(f) +
                            ", expected fun");
      shallow(env, d->b);
      return Tag::Dyn;
    }
    case TransientExpr::Kind::Let: {
      shallow(env, d->a);
      env.push(d->name);
      Tag body = shallow(env, d->b);
      env.pop();
      return body;
    }
    case TransientExpr::Kind::RefNew:  // PRef
      shallow(env, d->a);
      return Tag::Ref;
    case TransientExpr::Kind::Deref: {  // PDeref
      Tag t = shallow(env, d->a);
      if (t != Tag::Ref)
        throw shallow_error("shallow type error: dereference of tag " + tag_name(t));
      return Tag::Dyn;
    }
    case TransientExpr::Kind::Assign: {  // PUpdt
      Tag t = shallow(env, d->a);
      if (t != Tag::Ref)
        throw shallow_error("shallow type error: assignment to tag " + tag_name(t));
      shallow(env, d->b);
      return Tag::Int;
    }
    case TransientExpr::Kind::Check: {
      Tag inner = shallow(env, d->a);
      if (d->tag == Tag::Dyn) return inner;  // ▷★ is transparent
      if (inner == Tag::Dyn || inner == d->tag) return d->tag;
      throw shallow_error("shallow type error: check ▷" + tag_name(d->tag) +
                          " applied to tag " + tag_name(inner));
    }
  }
  throw internal_error("shallow_typecheck: bad expression kind");
}

}  // namespace

Tag shallow_typecheck(const TransientExprPtr& d) {
  TagEnv env;
  return shallow(env, d);
}

}  // namespace gts
