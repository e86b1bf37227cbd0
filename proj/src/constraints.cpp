#include "gts/constraints.hpp"

#include <algorithm>

namespace gts {

bool equal(const Constraint& a, const Constraint& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x == std::get<T>(b);
      },
      a);
}

std::string to_string(const Constraint& c) {
  struct Printer {
    std::string operator()(const SubC& s) const {
      return to_string(s.lhs) + " <: " + to_string(s.rhs);
    }
    std::string operator()(const ChkC& s) const {
      return to_string(s.lhs) + " ▷" + tag_name(s.tag) + "⊳ " + to_string(s.rhs);
    }
    std::string operator()(const EqC& s) const {
      return to_string(s.lhs) + " = " + to_string(s.rhs);
    }
    std::string operator()(const TagCo& s) const {
      return s.var.name() + " : " + tag_name(s.tag);
    }
    std::string operator()(const DefC& s) const {
      return s.var.name() + " := " + to_string(s.body);
    }
  };
  return std::visit(Printer{}, c);
}

void collect_vars(const Constraint& c, std::vector<TypeVar>& out) {
  struct Visitor {
    std::vector<TypeVar>& out;
    void operator()(const SubC& s) const {
      collect_vars(s.lhs, out);
      collect_vars(s.rhs, out);
    }
    void operator()(const ChkC& s) const {
      collect_vars(s.lhs, out);
      collect_vars(s.rhs, out);
    }
    void operator()(const EqC& s) const {
      collect_vars(s.lhs, out);
      collect_vars(s.rhs, out);
    }
    void operator()(const TagCo& s) const { out.push_back(s.var); }
    void operator()(const DefC& s) const {
      out.push_back(s.var);
      collect_vars(s.body, out);
    }
  };
  std::visit(Visitor{out}, c);
}

std::vector<TypeVar> ConstraintSet::vars() const {
  std::vector<TypeVar> out;
  for (const Constraint& c : items_) collect_vars(c, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// ▷_S
// ---------------------------------------------------------------------------

ConstraintType match_tag(const ConstraintType& a, Tag s, VarSupply& supply) {
  if (s == Tag::Dyn) return a;  // A ▷★ A
  switch (s) {
    case Tag::Int:
      if (a.kind() == ConstraintType::Kind::Int || a.is_leaf())
        return ConstraintType::integer();  // int ▷int int; V ▷int int
      break;
    case Tag::Fun:
      if (a.kind() == ConstraintType::Kind::Fun) return a;
      if (a.is_var()) {
        LeafType dom = LeafType::var(supply.fresh());  // β before γ
        LeafType cod = LeafType::var(supply.fresh());
        return ConstraintType::fun(dom, cod);
      }
      break;
    case Tag::Ref:
      if (a.kind() == ConstraintType::Kind::Ref) return a;
      if (a.is_var()) return ConstraintType::ref(LeafType::var(supply.fresh()));
      break;
    default:
      break;
  }
  throw internal_error("match_tag: " + to_string(a) + " has no match against tag " +
                       tag_name(s));
}

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

namespace {

class CTypeEnv {
 public:
  void push(const std::string& name, ConstraintType t) {
    entries_.emplace_back(name, t);
  }
  void pop() { entries_.pop_back(); }
  const ConstraintType* lookup(const std::string& name) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

 private:
  std::vector<std::pair<std::string, ConstraintType>> entries_;
};

struct Generator {
  VarSupply& supply;
  ConstraintSet omega;

  ConstraintType gen(CTypeEnv& env, const TransientExprPtr& d) {
    switch (d->kind) {
      case TransientExpr::Kind::Var: {  // IVar
        const ConstraintType* t = env.lookup(d->name);
        if (!t) throw internal_error("generate: unbound variable '" + d->name + "'");
        return *t;
      }
      case TransientExpr::Kind::IntLit:  // IInt
        return ConstraintType::integer();
      case TransientExpr::Kind::Add: {  // IAdd
        require_int(gen(env, d->a));
        require_int(gen(env, d->b));
        return ConstraintType::integer();
      }
      case TransientExpr::Kind::Lam: {  // IAbs
        env.push(d->name, ConstraintType::var(d->var1));
        ConstraintType body = gen(env, d->a);
        env.pop();
        omega.insert(SubC{body, ConstraintType::var(d->var2)});
        return ConstraintType::fun(LeafType::var(d->var1), LeafType::var(d->var2));
      }
      case TransientExpr::Kind::App: {  // IApp
        ConstraintType f = gen(env, d->a);
        if (f.kind() != ConstraintType::Kind::Fun)
          throw internal_error("generate: application of non-function type " +
                               to_string(f));
        ConstraintType arg = gen(env, d->b);
        omega.insert(SubC{arg, ConstraintType::leaf(f.dom())});
        return ConstraintType::leaf(f.cod());
      }
      case TransientExpr::Kind::Let: {  // ILet
        ConstraintType bound = gen(env, d->a);
        env.push(d->name, bound);
        ConstraintType body = gen(env, d->b);
        env.pop();
        return body;
      }
      case TransientExpr::Kind::RefNew: {  // IRef
        ConstraintType init = gen(env, d->a);
        omega.insert(SubC{init, ConstraintType::var(d->var1)});
        return ConstraintType::ref(LeafType::var(d->var1));
      }
      case TransientExpr::Kind::Deref: {  // IDeref
        ConstraintType r = gen(env, d->a);
        if (r.kind() != ConstraintType::Kind::Ref)
          throw internal_error("generate: dereference of non-reference type " +
                               to_string(r));
        return ConstraintType::leaf(r.content());
      }
      case TransientExpr::Kind::Assign: {  // IUpdt
        ConstraintType r = gen(env, d->a);
        if (r.kind() != ConstraintType::Kind::Ref)
          throw internal_error("generate: assignment to non-reference type " +
                               to_string(r));
        ConstraintType v = gen(env, d->b);
        omega.insert(SubC{v, ConstraintType::leaf(r.content())});
        return ConstraintType::integer();
      }
      case TransientExpr::Kind::Check: {  // ICheck
        ConstraintType inner = gen(env, d->a);
        ConstraintType result = match_tag(inner, d->tag, supply);
        omega.insert(ChkC{inner, d->tag, result});
        return result;
      }
    }
    throw internal_error("generate: bad expression kind");
  }

  void require_int(const ConstraintType& a) {
    if (a.kind() != ConstraintType::Kind::Int)
      throw internal_error("generate: '+' operand has type " + to_string(a) +
                           ", expected int");
  }
};

}  // namespace

GenResult generate(const TransientExprPtr& d, VarSupply& supply) {
  Generator g{supply, {}};
  CTypeEnv env;
  ConstraintType t = g.gen(env, d);
  return {t, std::move(g.omega)};
}

ConstraintSet open_world_constraints(const ConstraintType& a) {
  ConstraintSet out;
  switch (a.kind()) {
    case ConstraintType::Kind::Leaf:
      out.insert(SubC{a, ConstraintType::dyn()});
      break;
    case ConstraintType::Kind::Int:
      break;
    case ConstraintType::Kind::Ref:
      out.insert(SubC{ConstraintType::leaf(a.content()), ConstraintType::dyn()});
      out.insert(SubC{ConstraintType::dyn(), ConstraintType::leaf(a.content())});
      break;
    case ConstraintType::Kind::Fun:
      out.insert(SubC{ConstraintType::dyn(), ConstraintType::leaf(a.dom())});
      out.insert(SubC{ConstraintType::leaf(a.cod()), ConstraintType::dyn()});
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json leaf_json(const LeafType& l) {
  nlohmann::ordered_json j;
  if (l.is_var()) {
    j["k"] = "var";
    j["id"] = l.as_var().index;
  } else {
    j["k"] = "dyn";
  }
  return j;
}

}  // namespace

nlohmann::ordered_json type_json(const ConstraintType& a) {
  nlohmann::ordered_json j;
  switch (a.kind()) {
    case ConstraintType::Kind::Leaf:
      return leaf_json(a.as_leaf());
    case ConstraintType::Kind::Int:
      j["k"] = "int";
      return j;
    case ConstraintType::Kind::Ref:
      j["k"] = "ref";
      j["of"] = leaf_json(a.content());
      return j;
    case ConstraintType::Kind::Fun:
      j["k"] = "fun";
      j["dom"] = leaf_json(a.dom());
      j["cod"] = leaf_json(a.cod());
      return j;
  }
  return j;
}

nlohmann::ordered_json type_json(const FullTypePtr& t) {
  nlohmann::ordered_json j;
  switch (t->kind()) {
    case FullType::Kind::Dyn:
      j["k"] = "dyn";
      return j;
    case FullType::Kind::Int:
      j["k"] = "int";
      return j;
    case FullType::Kind::Var:
      j["k"] = "var";
      j["id"] = t->var().index;
      return j;
    case FullType::Kind::Ref:
      j["k"] = "ref";
      j["of"] = type_json(t->content());
      return j;
    case FullType::Kind::Fun:
      j["k"] = "fun";
      j["dom"] = type_json(t->dom());
      j["cod"] = type_json(t->cod());
      return j;
  }
  return j;
}

nlohmann::ordered_json constraint_json(const Constraint& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(const SubC& s) const {
      nlohmann::ordered_json j;
      j["k"] = "sub";
      j["lhs"] = type_json(s.lhs);
      j["rhs"] = type_json(s.rhs);
      return j;
    }
    nlohmann::ordered_json operator()(const ChkC& s) const {
      nlohmann::ordered_json j;
      j["k"] = "chk";
      j["lhs"] = type_json(s.lhs);
      j["tag"] = tag_name(s.tag);
      j["rhs"] = type_json(s.rhs);
      return j;
    }
    nlohmann::ordered_json operator()(const EqC& s) const {
      nlohmann::ordered_json j;
      j["k"] = "eq";
      j["lhs"] = type_json(s.lhs);
      j["rhs"] = type_json(s.rhs);
      return j;
    }
    nlohmann::ordered_json operator()(const TagCo& s) const {
      nlohmann::ordered_json j;
      j["k"] = "tag";
      j["var"] = s.var.index;
      j["tag"] = tag_name(s.tag);
      return j;
    }
    nlohmann::ordered_json operator()(const DefC& s) const {
      nlohmann::ordered_json j;
      j["k"] = "def";
      j["var"] = s.var.index;
      j["body"] = type_json(s.body);
      return j;
    }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json constraints_json(const ConstraintType& result,
                                        const ConstraintSet& omega) {
  nlohmann::ordered_json j;
  j["result"] = type_json(result);
  j["constraints"] = nlohmann::ordered_json::array();
  for (const Constraint& c : omega.items()) j["constraints"].push_back(constraint_json(c));
  return j;
}

}  // namespace gts
