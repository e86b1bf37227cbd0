#include "gts/typecheck.hpp"

namespace gts {

SurfaceTypePtr typecheck_surface(TypeEnv& env, const SurfaceExprPtr& s) {
  switch (s->kind) {
    case SurfaceExpr::Kind::Var: {  // SVar
      if (const SurfaceTypePtr* t = env.lookup(s->name)) return *t;
      throw type_error(s->span, "SVar", "unbound variable '" + s->name + "'");
    }
    case SurfaceExpr::Kind::IntLit:  // SInt
      return ut_int();
    case SurfaceExpr::Kind::Add: {  // SAdd
      SurfaceTypePtr u1 = typecheck_surface(env, s->a);
      if (!consistent(u1, ut_int()))
        throw type_error(s->span, "SAdd", "left operand type " + to_string(u1) +
                                              " is not consistent with int");
      SurfaceTypePtr u2 = typecheck_surface(env, s->b);
      if (!consistent(u2, ut_int()))
        throw type_error(s->span, "SAdd", "right operand type " + to_string(u2) +
                                              " is not consistent with int");
      return ut_int();
    }
    case SurfaceExpr::Kind::Lam: {  // SAbs
      env.push(s->name, s->ty1);
      SurfaceTypePtr body = typecheck_surface(env, s->a);
      env.pop();
      if (!consistent(body, s->ty2))
        throw type_error(s->span, "SAbs",
                         "body type " + to_string(body) +
                             " is not consistent with declared return type " +
                             to_string(s->ty2));
      return ut_fun(s->ty1, s->ty2);
    }
    case SurfaceExpr::Kind::App: {  // SApp
      SurfaceTypePtr uf = typecheck_surface(env, s->a);
      auto m = match_fun(uf);
      if (!m)
        throw type_error(s->span, "SApp", "callee type " + to_string(uf) +
                                              " does not match a function type");
      SurfaceTypePtr ua = typecheck_surface(env, s->b);
      if (!consistent(ua, m->first))
        throw type_error(s->span, "SApp", "argument type " + to_string(ua) +
                                              " is not consistent with " +
                                              to_string(m->first));
      return m->second;
    }
    case SurfaceExpr::Kind::RefNew: {  // SRef
      SurfaceTypePtr u2 = typecheck_surface(env, s->a);
      if (!consistent(u2, s->ty1))
        throw type_error(s->span, "SRef", "initializer type " + to_string(u2) +
                                              " is not consistent with " +
                                              to_string(s->ty1));
      return ut_ref(s->ty1);
    }
    case SurfaceExpr::Kind::Deref: {  // SDeref
      SurfaceTypePtr u = typecheck_surface(env, s->a);
      auto m = match_ref(u);
      if (!m)
        throw type_error(s->span, "SDeref", "type " + to_string(u) +
                                                " does not match a reference type");
      return *m;
    }
    case SurfaceExpr::Kind::Assign: {  // SUpdt
      SurfaceTypePtr u = typecheck_surface(env, s->a);
      auto m = match_ref(u);
      if (!m)
        throw type_error(s->span, "SUpdt", "assignment target type " + to_string(u) +
                                               " does not match a reference type");
      SurfaceTypePtr uv = typecheck_surface(env, s->b);
      if (!consistent(uv, *m))
        throw type_error(s->span, "SUpdt", "assigned value type " + to_string(uv) +
                                               " is not consistent with " +
                                               to_string(*m));
      return ut_int();
    }
  }
  throw internal_error("typecheck_surface: bad expression kind");
}

}  // namespace gts
