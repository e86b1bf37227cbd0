#include "gts/ast.hpp"

namespace gts {

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

namespace {

SurfaceExprPtr make_s(SurfaceExpr e) {
  return std::make_shared<SurfaceExpr>(std::move(e));
}
TransientExprPtr make_d(TransientExpr e) {
  return std::make_shared<TransientExpr>(std::move(e));
}
TargetExprPtr make_e(TargetExpr e) {
  return std::make_shared<TargetExpr>(std::move(e));
}

}  // namespace

SurfaceExprPtr s_var(std::string name, Span sp) {
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::Var;
  e.span = sp;
  e.name = std::move(name);
  return make_s(std::move(e));
}

SurfaceExprPtr s_int(std::int64_t v, Span sp) {
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::IntLit;
  e.span = sp;
  e.value = v;
  return make_s(std::move(e));
}

SurfaceExprPtr s_add(SurfaceExprPtr l, SurfaceExprPtr r, Span sp) {
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::Add;
  e.span = sp;
  e.a = std::move(l);
  e.b = std::move(r);
  return make_s(std::move(e));
}

SurfaceExprPtr s_lam(std::string param, SurfaceTypePtr pty, SurfaceTypePtr rty,
                     SurfaceExprPtr body, Span sp) {
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::Lam;
  e.span = sp;
  e.name = std::move(param);
  e.ty1 = std::move(pty);
  e.ty2 = std::move(rty);
  e.a = std::move(body);
  return make_s(std::move(e));
}

SurfaceExprPtr s_app(SurfaceExprPtr f, SurfaceExprPtr arg, Span sp) {
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::App;
  e.span = sp;
  e.a = std::move(f);
  e.b = std::move(arg);
  return make_s(std::move(e));
}

SurfaceExprPtr s_ref(SurfaceTypePtr ty, SurfaceExprPtr init, Span sp) {
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::RefNew;
  e.span = sp;
  e.ty1 = std::move(ty);
  e.a = std::move(init);
  return make_s(std::move(e));
}

SurfaceExprPtr s_deref(SurfaceExprPtr inner, Span sp) {
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::Deref;
  e.span = sp;
  e.a = std::move(inner);
  return make_s(std::move(e));
}

SurfaceExprPtr s_assign(SurfaceExprPtr target, SurfaceExprPtr val, Span sp) {
  SurfaceExpr e;
  e.kind = SurfaceExpr::Kind::Assign;
  e.span = sp;
  e.a = std::move(target);
  e.b = std::move(val);
  return make_s(std::move(e));
}

TransientExprPtr d_var(std::string name, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::Var;
  e.span = sp;
  e.name = std::move(name);
  return make_d(std::move(e));
}

TransientExprPtr d_int(std::int64_t v, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::IntLit;
  e.span = sp;
  e.value = v;
  return make_d(std::move(e));
}

TransientExprPtr d_add(TransientExprPtr l, TransientExprPtr r, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::Add;
  e.span = sp;
  e.a = std::move(l);
  e.b = std::move(r);
  return make_d(std::move(e));
}

TransientExprPtr d_lam(std::string param, TypeVar pv, TypeVar rv,
                       TransientExprPtr body, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::Lam;
  e.span = sp;
  e.name = std::move(param);
  e.var1 = pv;
  e.var2 = rv;
  e.a = std::move(body);
  return make_d(std::move(e));
}

TransientExprPtr d_app(TransientExprPtr f, TransientExprPtr arg, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::App;
  e.span = sp;
  e.a = std::move(f);
  e.b = std::move(arg);
  return make_d(std::move(e));
}

TransientExprPtr d_let(std::string name, TransientExprPtr bound,
                       TransientExprPtr body, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::Let;
  e.span = sp;
  e.name = std::move(name);
  e.a = std::move(bound);
  e.b = std::move(body);
  return make_d(std::move(e));
}

TransientExprPtr d_ref(TypeVar v, TransientExprPtr init, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::RefNew;
  e.span = sp;
  e.var1 = v;
  e.a = std::move(init);
  return make_d(std::move(e));
}

TransientExprPtr d_deref(TransientExprPtr inner, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::Deref;
  e.span = sp;
  e.a = std::move(inner);
  return make_d(std::move(e));
}

TransientExprPtr d_assign(TransientExprPtr target, TransientExprPtr val, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::Assign;
  e.span = sp;
  e.a = std::move(target);
  e.b = std::move(val);
  return make_d(std::move(e));
}

TransientExprPtr d_check(TransientExprPtr inner, Tag tag, Span sp) {
  TransientExpr e;
  e.kind = TransientExpr::Kind::Check;
  e.span = sp;
  e.tag = tag;
  e.a = std::move(inner);
  return make_d(std::move(e));
}

TargetExprPtr e_var(std::string name, Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::Var;
  e.span = sp;
  e.name = std::move(name);
  return make_e(std::move(e));
}

TargetExprPtr e_addr(std::int64_t addr) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::Addr;
  e.value = addr;
  return make_e(std::move(e));
}

TargetExprPtr e_int(std::int64_t v, Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::IntLit;
  e.span = sp;
  e.value = v;
  return make_e(std::move(e));
}

TargetExprPtr e_add(TargetExprPtr l, TargetExprPtr r, Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::Add;
  e.span = sp;
  e.a = std::move(l);
  e.b = std::move(r);
  return make_e(std::move(e));
}

TargetExprPtr e_lam(std::string param, TargetExprPtr body, Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::Lam;
  e.span = sp;
  e.name = std::move(param);
  e.a = std::move(body);
  return make_e(std::move(e));
}

TargetExprPtr e_app(TargetExprPtr f, TargetExprPtr arg, Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::App;
  e.span = sp;
  e.a = std::move(f);
  e.b = std::move(arg);
  return make_e(std::move(e));
}

TargetExprPtr e_let(std::string name, TargetExprPtr bound, TargetExprPtr body,
                    Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::Let;
  e.span = sp;
  e.name = std::move(name);
  e.a = std::move(bound);
  e.b = std::move(body);
  return make_e(std::move(e));
}

TargetExprPtr e_ref(TargetExprPtr init, Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::RefNew;
  e.span = sp;
  e.a = std::move(init);
  return make_e(std::move(e));
}

TargetExprPtr e_deref(TargetExprPtr inner, Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::Deref;
  e.span = sp;
  e.a = std::move(inner);
  return make_e(std::move(e));
}

TargetExprPtr e_assign(TargetExprPtr target, TargetExprPtr val, Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::Assign;
  e.span = sp;
  e.a = std::move(target);
  e.b = std::move(val);
  return make_e(std::move(e));
}

TargetExprPtr e_check(TargetExprPtr inner, Tag tag, Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::Check;
  e.span = sp;
  e.tag = tag;
  e.a = std::move(inner);
  return make_e(std::move(e));
}

TargetExprPtr e_fail(Span sp) {
  TargetExpr e;
  e.kind = TargetExpr::Kind::Fail;
  e.span = sp;
  return make_e(std::move(e));
}

// ---------------------------------------------------------------------------
// Equality (spans ignored)
// ---------------------------------------------------------------------------

bool equal(const SurfaceExprPtr& a, const SurfaceExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case SurfaceExpr::Kind::Var:
      return a->name == b->name;
    case SurfaceExpr::Kind::IntLit:
      return a->value == b->value;
    case SurfaceExpr::Kind::Add:
    case SurfaceExpr::Kind::App:
    case SurfaceExpr::Kind::Assign:
      return equal(a->a, b->a) && equal(a->b, b->b);
    case SurfaceExpr::Kind::Lam:
      return a->name == b->name && equal(a->ty1, b->ty1) &&
             equal(a->ty2, b->ty2) && equal(a->a, b->a);
    case SurfaceExpr::Kind::RefNew:
      return equal(a->ty1, b->ty1) && equal(a->a, b->a);
    case SurfaceExpr::Kind::Deref:
      return equal(a->a, b->a);
  }
  return false;
}

bool equal(const TransientExprPtr& a, const TransientExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TransientExpr::Kind::Var:
      return a->name == b->name;
    case TransientExpr::Kind::IntLit:
      return a->value == b->value;
    case TransientExpr::Kind::Add:
    case TransientExpr::Kind::App:
    case TransientExpr::Kind::Assign:
      return equal(a->a, b->a) && equal(a->b, b->b);
    case TransientExpr::Kind::Lam:
      return a->name == b->name && a->var1 == b->var1 && a->var2 == b->var2 &&
             equal(a->a, b->a);
    case TransientExpr::Kind::Let:
      return a->name == b->name && equal(a->a, b->a) && equal(a->b, b->b);
    case TransientExpr::Kind::RefNew:
      return a->var1 == b->var1 && equal(a->a, b->a);
    case TransientExpr::Kind::Deref:
      return equal(a->a, b->a);
    case TransientExpr::Kind::Check:
      return a->tag == b->tag && equal(a->a, b->a);
  }
  return false;
}

bool equal(const TargetExprPtr& a, const TargetExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TargetExpr::Kind::Var:
      return a->name == b->name;
    case TargetExpr::Kind::Addr:
    case TargetExpr::Kind::IntLit:
      return a->value == b->value;
    case TargetExpr::Kind::Add:
    case TargetExpr::Kind::App:
    case TargetExpr::Kind::Assign:
      return equal(a->a, b->a) && equal(a->b, b->b);
    case TargetExpr::Kind::Lam:
      return a->name == b->name && equal(a->a, b->a);
    case TargetExpr::Kind::Let:
      return a->name == b->name && equal(a->a, b->a) && equal(a->b, b->b);
    case TargetExpr::Kind::RefNew:
    case TargetExpr::Kind::Deref:
      return equal(a->a, b->a);
    case TargetExpr::Kind::Check:
      return a->tag == b->tag && equal(a->a, b->a);
    case TargetExpr::Kind::Fail:
      return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Printers
// ---------------------------------------------------------------------------
// Precedence levels: assign 0 < add 1 < app 2 < atom 3. Each printer emits a
// form that re-parses to the same tree (round-trip is a frontend invariant).

namespace {

void print_s(const SurfaceExprPtr& e, std::string& out, int prec) {
  auto wrap = [&](int mine, auto&& body) {
    if (mine < prec) out += "(";
    body();
    if (mine < prec) out += ")";
  };
  switch (e->kind) {
    case SurfaceExpr::Kind::Var:
      out += e->name;
      return;
    case SurfaceExpr::Kind::IntLit:
      out += std::to_string(e->value);
      return;
    case SurfaceExpr::Kind::Add:
      wrap(1, [&] {
        print_s(e->a, out, 1);
        out += " + ";
        print_s(e->b, out, 2);
      });
      return;
    case SurfaceExpr::Kind::App:
      wrap(2, [&] {
        print_s(e->a, out, 2);
        out += " ";
        print_s(e->b, out, 3);
      });
      return;
    case SurfaceExpr::Kind::Assign:
      wrap(0, [&] {
        print_s(e->a, out, 1);
        out += " := ";
        print_s(e->b, out, 0);
      });
      return;
    case SurfaceExpr::Kind::Lam:
      out += "fun (" + e->name + ": " + to_string(e->ty1) + ") -> " +
             to_string(e->ty2) + " { ";
      print_s(e->a, out, 0);
      out += " }";
      return;
    case SurfaceExpr::Kind::RefNew:
      out += "ref<" + to_string(e->ty1) + "> ";
      print_s(e->a, out, 3);
      return;
    case SurfaceExpr::Kind::Deref:
      out += "!";
      print_s(e->a, out, 3);
      return;
  }
}

void print_d(const TransientExprPtr& e, std::string& out, int prec) {
  auto wrap = [&](int mine, auto&& body) {
    if (mine < prec) out += "(";
    body();
    if (mine < prec) out += ")";
  };
  switch (e->kind) {
    case TransientExpr::Kind::Var:
      out += e->name;
      return;
    case TransientExpr::Kind::IntLit:
      out += std::to_string(e->value);
      return;
    case TransientExpr::Kind::Add:
      wrap(1, [&] {
        print_d(e->a, out, 1);
        out += " + ";
        print_d(e->b, out, 2);
      });
      return;
    case TransientExpr::Kind::App:
      wrap(2, [&] {
        print_d(e->a, out, 2);
        out += " ";
        print_d(e->b, out, 3);
      });
      return;
    case TransientExpr::Kind::Assign:
      wrap(0, [&] {
        print_d(e->a, out, 1);
        out += " := ";
        print_d(e->b, out, 0);
      });
      return;
    case TransientExpr::Kind::Lam:
      out += "fun⟨" + e->var1.name() + "," + e->var2.name() + "⟩(" + e->name + ") { ";
      print_d(e->a, out, 0);
      out += " }";
      return;
    case TransientExpr::Kind::Let:
      wrap(0, [&] {
        out += "let " + e->name + " = ";
        print_d(e->a, out, 1);
        out += " in ";
        print_d(e->b, out, 0);
      });
      return;
    case TransientExpr::Kind::RefNew:
      out += "ref⟨" + e->var1.name() + "⟩ ";
      print_d(e->a, out, 3);
      return;
    case TransientExpr::Kind::Deref:
      out += "!";
      print_d(e->a, out, 3);
      return;
    case TransientExpr::Kind::Check:
      out += "(";
      print_d(e->a, out, 1);
      out += " ▷ " + tag_name(e->tag) + ")";
      return;
  }
}

void print_e(const TargetExprPtr& e, std::string& out, int prec) {
  auto wrap = [&](int mine, auto&& body) {
    if (mine < prec) out += "(";
    body();
    if (mine < prec) out += ")";
  };
  switch (e->kind) {
    case TargetExpr::Kind::Var:
      out += e->name;
      return;
    case TargetExpr::Kind::Addr:
      out += "addr@" + std::to_string(e->value);
      return;
    case TargetExpr::Kind::IntLit:
      out += std::to_string(e->value);
      return;
    case TargetExpr::Kind::Add:
      wrap(1, [&] {
        print_e(e->a, out, 1);
        out += " + ";
        print_e(e->b, out, 2);
      });
      return;
    case TargetExpr::Kind::App:
      wrap(2, [&] {
        print_e(e->a, out, 2);
        out += " ";
        print_e(e->b, out, 3);
      });
      return;
    case TargetExpr::Kind::Assign:
      wrap(0, [&] {
        print_e(e->a, out, 1);
        out += " := ";
        print_e(e->b, out, 0);
      });
      return;
    case TargetExpr::Kind::Lam:
      out += "fun(" + e->name + ") { ";
      print_e(e->a, out, 0);
      out += " }";
      return;
    case TargetExpr::Kind::Let:
      wrap(0, [&] {
        out += "let " + e->name + " = ";
        print_e(e->a, out, 1);
        out += " in ";
        print_e(e->b, out, 0);
      });
      return;
    case TargetExpr::Kind::RefNew:
      out += "ref ";
      print_e(e->a, out, 3);
      return;
    case TargetExpr::Kind::Deref:
      out += "!";
      print_e(e->a, out, 3);
      return;
    case TargetExpr::Kind::Check:
      out += "(";
      print_e(e->a, out, 1);
      out += " ▷ " + tag_name(e->tag) + ")";
      return;
    case TargetExpr::Kind::Fail:
      out += "fail";
      return;
  }
}

}  // namespace

std::string print(const SurfaceExprPtr& s) {
  std::string out;
  print_s(s, out, 0);
  return out;
}

std::string print(const TransientExprPtr& d) {
  std::string out;
  print_d(d, out, 0);
  return out;
}

std::string print(const TargetExprPtr& e) {
  std::string out;
  print_e(e, out, 0);
  return out;
}

std::size_t node_count(const SurfaceExprPtr& s) {
  std::size_t n = 1;
  if (s->a) n += node_count(s->a);
  if (s->b) n += node_count(s->b);
  return n;
}

std::size_t count_checks(const TransientExprPtr& d) {
  std::size_t n = d->kind == TransientExpr::Kind::Check ? 1 : 0;
  if (d->a) n += count_checks(d->a);
  if (d->b) n += count_checks(d->b);
  return n;
}

}  // namespace gts
