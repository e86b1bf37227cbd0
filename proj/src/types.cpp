#include "gts/types.hpp"

#include <algorithm>

namespace gts {

std::string tag_name(Tag t) {
  switch (t) {
    case Tag::Dyn: return "dyn";
    case Tag::Int: return "int";
    case Tag::Ref: return "ref";
    case Tag::Fun: return "fun";
  }
  return "?";
}

std::optional<Tag> tag_from_name(const std::string& name) {
  if (name == "dyn") return Tag::Dyn;
  if (name == "int") return Tag::Int;
  if (name == "ref") return Tag::Ref;
  if (name == "fun") return Tag::Fun;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Surface types
// ---------------------------------------------------------------------------

SurfaceTypePtr ut_dyn() {
  static const SurfaceTypePtr t = SurfaceType::make(SurfaceType::Kind::Dyn);
  return t;
}

SurfaceTypePtr ut_int() {
  static const SurfaceTypePtr t = SurfaceType::make(SurfaceType::Kind::Int);
  return t;
}

SurfaceTypePtr ut_ref(SurfaceTypePtr content) {
  return SurfaceType::make(SurfaceType::Kind::Ref, std::move(content));
}

SurfaceTypePtr ut_fun(SurfaceTypePtr dom, SurfaceTypePtr cod) {
  return SurfaceType::make(SurfaceType::Kind::Fun, std::move(dom), std::move(cod));
}

bool equal(const SurfaceTypePtr& a, const SurfaceTypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case SurfaceType::Kind::Dyn:
    case SurfaceType::Kind::Int:
      return true;
    case SurfaceType::Kind::Ref:
      return equal(a->content(), b->content());
    case SurfaceType::Kind::Fun:
      return equal(a->dom(), b->dom()) && equal(a->cod(), b->cod());
  }
  return false;
}

namespace {

// Parenthesize Fun in domain position and Fun under ref, so the printed
// form parses back to the same tree under right-associative "->".
void print_surface_type(const SurfaceTypePtr& u, std::string& out, bool atom) {
  switch (u->kind()) {
    case SurfaceType::Kind::Dyn: out += "dyn"; return;
    case SurfaceType::Kind::Int: out += "int"; return;
    case SurfaceType::Kind::Ref:
      out += "ref ";
      print_surface_type(u->content(), out, true);
      return;
    case SurfaceType::Kind::Fun:
      if (atom) out += "(";
      print_surface_type(u->dom(), out, true);
      out += " -> ";
      print_surface_type(u->cod(), out, false);
      if (atom) out += ")";
      return;
  }
}

}  // namespace

std::string to_string(const SurfaceTypePtr& u) {
  std::string out;
  print_surface_type(u, out, false);
  return out;
}

bool consistent(const SurfaceTypePtr& u1, const SurfaceTypePtr& u2) {
  if (u1->is_dyn() || u2->is_dyn()) return true;
  if (u1->kind() != u2->kind()) return false;
  switch (u1->kind()) {
    case SurfaceType::Kind::Int:
      return true;
    case SurfaceType::Kind::Ref:
      return consistent(u1->content(), u2->content());
    case SurfaceType::Kind::Fun:
      return consistent(u1->dom(), u2->dom()) && consistent(u1->cod(), u2->cod());
    default:
      return false;
  }
}

std::optional<std::pair<SurfaceTypePtr, SurfaceTypePtr>> match_fun(const SurfaceTypePtr& u) {
  if (u->kind() == SurfaceType::Kind::Fun) return std::make_pair(u->dom(), u->cod());
  if (u->is_dyn()) return std::make_pair(ut_dyn(), ut_dyn());
  return std::nullopt;
}

std::optional<SurfaceTypePtr> match_ref(const SurfaceTypePtr& u) {
  if (u->kind() == SurfaceType::Kind::Ref) return u->content();
  if (u->is_dyn()) return ut_dyn();
  return std::nullopt;
}

Tag tag_of_surface(const SurfaceTypePtr& u) {
  switch (u->kind()) {
    case SurfaceType::Kind::Dyn: return Tag::Dyn;
    case SurfaceType::Kind::Int: return Tag::Int;
    case SurfaceType::Kind::Ref: return Tag::Ref;
    case SurfaceType::Kind::Fun: return Tag::Fun;
  }
  return Tag::Dyn;
}

// ---------------------------------------------------------------------------
// Full types
// ---------------------------------------------------------------------------

FullTypePtr t_dyn() {
  static const FullTypePtr t = FullType::make(FullType::Kind::Dyn);
  return t;
}

FullTypePtr t_int() {
  static const FullTypePtr t = FullType::make(FullType::Kind::Int);
  return t;
}

FullTypePtr t_var(TypeVar v) { return FullType::make(FullType::Kind::Var, v); }

FullTypePtr t_ref(FullTypePtr content) {
  return FullType::make(FullType::Kind::Ref, {}, std::move(content));
}

FullTypePtr t_fun(FullTypePtr dom, FullTypePtr cod) {
  return FullType::make(FullType::Kind::Fun, {}, std::move(dom), std::move(cod));
}

bool equal(const FullTypePtr& a, const FullTypePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case FullType::Kind::Dyn:
    case FullType::Kind::Int:
      return true;
    case FullType::Kind::Var:
      return a->var() == b->var();
    case FullType::Kind::Ref:
      return equal(a->content(), b->content());
    case FullType::Kind::Fun:
      return equal(a->dom(), b->dom()) && equal(a->cod(), b->cod());
  }
  return false;
}

bool contains_var(const FullTypePtr& t, TypeVar v) {
  switch (t->kind()) {
    case FullType::Kind::Dyn:
    case FullType::Kind::Int:
      return false;
    case FullType::Kind::Var:
      return t->var() == v;
    case FullType::Kind::Ref:
      return contains_var(t->content(), v);
    case FullType::Kind::Fun:
      return contains_var(t->dom(), v) || contains_var(t->cod(), v);
  }
  return false;
}

bool is_ground(const FullTypePtr& t) {
  switch (t->kind()) {
    case FullType::Kind::Dyn:
    case FullType::Kind::Int:
      return true;
    case FullType::Kind::Var:
      return false;
    case FullType::Kind::Ref:
      return is_ground(t->content());
    case FullType::Kind::Fun:
      return is_ground(t->dom()) && is_ground(t->cod());
  }
  return false;
}

void collect_vars(const FullTypePtr& t, std::vector<TypeVar>& out) {
  switch (t->kind()) {
    case FullType::Kind::Var:
      out.push_back(t->var());
      return;
    case FullType::Kind::Ref:
      collect_vars(t->content(), out);
      return;
    case FullType::Kind::Fun:
      collect_vars(t->dom(), out);
      collect_vars(t->cod(), out);
      return;
    default:
      return;
  }
}

namespace {

void print_full_type(const FullTypePtr& t, std::string& out, bool atom) {
  switch (t->kind()) {
    case FullType::Kind::Dyn: out += "dyn"; return;
    case FullType::Kind::Int: out += "int"; return;
    case FullType::Kind::Var: out += t->var().name(); return;
    case FullType::Kind::Ref:
      out += "ref ";
      print_full_type(t->content(), out, true);
      return;
    case FullType::Kind::Fun:
      if (atom) out += "(";
      print_full_type(t->dom(), out, true);
      out += " -> ";
      print_full_type(t->cod(), out, false);
      if (atom) out += ")";
      return;
  }
}

}  // namespace

std::string to_string(const FullTypePtr& t) {
  std::string out;
  print_full_type(t, out, false);
  return out;
}

Tag tag_of_full(const FullTypePtr& t) {
  switch (t->kind()) {
    case FullType::Kind::Dyn: return Tag::Dyn;
    case FullType::Kind::Int: return Tag::Int;
    case FullType::Kind::Ref: return Tag::Ref;
    case FullType::Kind::Fun: return Tag::Fun;
    case FullType::Kind::Var:
      throw internal_error("tag_of_full applied to unresolved variable " +
                           t->var().name());
  }
  throw internal_error("tag_of_full: bad kind");
}

FullTypePtr up_tag(Tag s) {
  switch (s) {
    case Tag::Dyn: return t_dyn();
    case Tag::Int: return t_int();
    case Tag::Ref: return t_ref(t_dyn());
    case Tag::Fun: return t_fun(t_dyn(), t_dyn());
  }
  return t_dyn();
}

bool subtype(const FullTypePtr& t1, const FullTypePtr& t2) {
  if (t1->kind() == FullType::Kind::Var || t2->kind() == FullType::Kind::Var)
    throw internal_error("subtype applied to unresolved variable");
  switch (t2->kind()) {
    case FullType::Kind::Dyn:
      switch (t1->kind()) {
        case FullType::Kind::Dyn:
        case FullType::Kind::Int:
          return true;
        case FullType::Kind::Fun:
          // Fun <: ★ only through Fun <: ★ -> ★.
          return subtype(t1, t_fun(t_dyn(), t_dyn()));
        case FullType::Kind::Ref:
          // Ref <: ★ only through Ref <: ref ★.
          return subtype(t1, t_ref(t_dyn()));
        default:
          return false;
      }
    case FullType::Kind::Int:
      return t1->kind() == FullType::Kind::Int;
    case FullType::Kind::Fun:
      return t1->kind() == FullType::Kind::Fun &&
             subtype(t2->dom(), t1->dom()) && subtype(t1->cod(), t2->cod());
    case FullType::Kind::Ref:
      return t1->kind() == FullType::Kind::Ref &&
             subtype(t1->content(), t2->content()) &&
             subtype(t2->content(), t1->content());
    default:
      return false;
  }
}

FullTypePtr subst(const FullTypePtr& t, TypeVar v, const FullTypePtr& r) {
  switch (t->kind()) {
    case FullType::Kind::Dyn:
    case FullType::Kind::Int:
      return t;
    case FullType::Kind::Var:
      return t->var() == v ? r : t;
    case FullType::Kind::Ref: {
      FullTypePtr c = subst(t->content(), v, r);
      return c.get() == t->content().get() ? t : t_ref(std::move(c));
    }
    case FullType::Kind::Fun: {
      FullTypePtr d = subst(t->dom(), v, r);
      FullTypePtr c = subst(t->cod(), v, r);
      if (d.get() == t->dom().get() && c.get() == t->cod().get()) return t;
      return t_fun(std::move(d), std::move(c));
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Constraint types
// ---------------------------------------------------------------------------

namespace {

std::string leaf_str(const LeafType& l) {
  return l.is_var() ? l.as_var().name() : std::string("dyn");
}

}  // namespace

std::string to_string(const ConstraintType& a) {
  switch (a.kind()) {
    case ConstraintType::Kind::Leaf: return leaf_str(a.as_leaf());
    case ConstraintType::Kind::Int: return "int";
    case ConstraintType::Kind::Ref: return "ref " + leaf_str(a.content());
    case ConstraintType::Kind::Fun:
      return leaf_str(a.dom()) + " -> " + leaf_str(a.cod());
  }
  return "?";
}

Tag tag_of_ctype(const ConstraintType& a) {
  switch (a.kind()) {
    case ConstraintType::Kind::Leaf:
      if (a.is_var())
        throw internal_error("tag_of_ctype applied to variable " + a.as_var().name());
      return Tag::Dyn;
    case ConstraintType::Kind::Int: return Tag::Int;
    case ConstraintType::Kind::Ref: return Tag::Ref;
    case ConstraintType::Kind::Fun: return Tag::Fun;
  }
  return Tag::Dyn;
}

std::vector<TypeVar> parts(const ConstraintType& a) {
  std::vector<TypeVar> out;
  switch (a.kind()) {
    case ConstraintType::Kind::Ref:
      if (a.content().is_var()) out.push_back(a.content().as_var());
      break;
    case ConstraintType::Kind::Fun:
      if (a.dom().is_var()) out.push_back(a.dom().as_var());
      if (a.cod().is_var()) out.push_back(a.cod().as_var());
      break;
    default:
      break;
  }
  return out;
}

bool contains_var(const ConstraintType& a, TypeVar v) {
  switch (a.kind()) {
    case ConstraintType::Kind::Leaf:
      return a.is_var() && a.as_var() == v;
    case ConstraintType::Kind::Int:
      return false;
    case ConstraintType::Kind::Ref:
      return a.content().is_var() && a.content().as_var() == v;
    case ConstraintType::Kind::Fun:
      return (a.dom().is_var() && a.dom().as_var() == v) ||
             (a.cod().is_var() && a.cod().as_var() == v);
  }
  return false;
}

void collect_vars(const ConstraintType& a, std::vector<TypeVar>& out) {
  switch (a.kind()) {
    case ConstraintType::Kind::Leaf:
      if (a.is_var()) out.push_back(a.as_var());
      return;
    case ConstraintType::Kind::Ref:
      if (a.content().is_var()) out.push_back(a.content().as_var());
      return;
    case ConstraintType::Kind::Fun:
      if (a.dom().is_var()) out.push_back(a.dom().as_var());
      if (a.cod().is_var()) out.push_back(a.cod().as_var());
      return;
    default:
      return;
  }
}

namespace {

FullTypePtr full_of_leaf(const LeafType& l) {
  return l.is_var() ? t_var(l.as_var()) : t_dyn();
}

}  // namespace

FullTypePtr full_of(const ConstraintType& a) {
  switch (a.kind()) {
    case ConstraintType::Kind::Leaf: return full_of_leaf(a.as_leaf());
    case ConstraintType::Kind::Int: return t_int();
    case ConstraintType::Kind::Ref: return t_ref(full_of_leaf(a.content()));
    case ConstraintType::Kind::Fun:
      return t_fun(full_of_leaf(a.dom()), full_of_leaf(a.cod()));
  }
  return t_dyn();
}

}  // namespace gts
