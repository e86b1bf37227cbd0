#include "gts/solver.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

namespace gts {

namespace {

// ---------------------------------------------------------------------------
// Working set helpers
// ---------------------------------------------------------------------------

using Work = std::vector<Constraint>;

bool in_work(const Work& w, const Constraint& c) {
  for (const Constraint& x : w)
    if (equal(x, c)) return true;
  return false;
}

void push_unique(Work& w, Constraint c) {
  if (!in_work(w, c)) w.push_back(std::move(c));
}

void dedup(Work& w) {
  Work out;
  for (Constraint& c : w)
    if (!in_work(out, c)) out.push_back(std::move(c));
  w = std::move(out);
}

const DefC* find_def(const Work& w, TypeVar v) {
  for (const Constraint& c : w)
    if (const DefC* d = std::get_if<DefC>(&c))
      if (d->var == v) return d;
  return nullptr;
}

bool has_chk_on(const Work& w, TypeVar v, std::size_t except = SIZE_MAX) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i == except) continue;
    if (const ChkC* k = std::get_if<ChkC>(&w[i]))
      if (k->lhs.is_var() && k->lhs.as_var() == v) return true;
  }
  return false;
}

bool has_eq_on(const Work& w, TypeVar v) {
  for (const Constraint& c : w)
    if (const EqC* e = std::get_if<EqC>(&c)) {
      if (e->lhs.is_var() && e->lhs.as_var() == v) return true;
      if (e->rhs.is_var() && e->rhs.as_var() == v) return true;
    }
  return false;
}

// Substitute v := b inside a shallow type. Substituting a constructor into a
// nested leaf would break shallowness; the vsol discipline makes that
// unreachable, so it is a contract violation.
ConstraintType subst_ct(const ConstraintType& a, TypeVar v, const ConstraintType& b) {
  auto subst_leaf = [&](const LeafType& l, bool nested) -> LeafType {
    if (!l.is_var() || l.as_var() != v) return l;
    if (b.is_leaf()) return b.as_leaf();
    if (nested)
      throw internal_error("substitution " + v.name() + " := " + to_string(b) +
                           " would nest a constructor inside a shallow type");
    return l;  // unreachable; top-level handled by caller
  };
  switch (a.kind()) {
    case ConstraintType::Kind::Leaf:
      if (a.is_var() && a.as_var() == v) return b;
      return a;
    case ConstraintType::Kind::Int:
      return a;
    case ConstraintType::Kind::Ref:
      return ConstraintType::ref(subst_leaf(a.content(), true));
    case ConstraintType::Kind::Fun:
      return ConstraintType::fun(subst_leaf(a.dom(), true), subst_leaf(a.cod(), true));
  }
  return a;
}

void subst_work(Work& w, TypeVar v, const ConstraintType& b) {
  FullTypePtr full_b = full_of(b);
  for (Constraint& c : w) {
    if (SubC* s = std::get_if<SubC>(&c)) {
      s->lhs = subst_ct(s->lhs, v, b);
      s->rhs = subst_ct(s->rhs, v, b);
    } else if (ChkC* k = std::get_if<ChkC>(&c)) {
      k->lhs = subst_ct(k->lhs, v, b);
      k->rhs = subst_ct(k->rhs, v, b);
    } else if (EqC* e = std::get_if<EqC>(&c)) {
      e->lhs = subst_ct(e->lhs, v, b);
      e->rhs = subst_ct(e->rhs, v, b);
    } else if (DefC* d = std::get_if<DefC>(&c)) {
      d->body = subst(d->body, v, full_b);
    } else if (TagCo* t = std::get_if<TagCo>(&c)) {
      if (t->var == v)
        throw internal_error("substitution hit a live tag constraint on " + v.name());
    }
  }
  dedup(w);
}

// ---------------------------------------------------------------------------
// Termination measure: lexicographic
//   (#Chk + #Tag, #distinct undefined vars in non-Def constraints,
//    total non-Def constraint size, #unoriented equalities).
// Strictly decreases for each of the 16 rules; asserted per step.
// ---------------------------------------------------------------------------

std::size_t ct_size(const ConstraintType& a) {
  switch (a.kind()) {
    case ConstraintType::Kind::Leaf:
    case ConstraintType::Kind::Int:
      return 1;
    case ConstraintType::Kind::Ref:
      return 3;
    case ConstraintType::Kind::Fun:
      return 4;
  }
  return 1;
}

using Measure = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

Measure measure(const Work& w) {
  std::size_t chk_tag = 0, size = 0, unoriented = 0;
  std::vector<TypeVar> undef;
  for (const Constraint& c : w) {
    if (const SubC* s = std::get_if<SubC>(&c)) {
      size += ct_size(s->lhs) + ct_size(s->rhs);
      collect_vars(s->lhs, undef);
      collect_vars(s->rhs, undef);
    } else if (const ChkC* k = std::get_if<ChkC>(&c)) {
      ++chk_tag;
      size += ct_size(k->lhs) + ct_size(k->rhs) + 1;
      collect_vars(k->lhs, undef);
      collect_vars(k->rhs, undef);
    } else if (const EqC* e = std::get_if<EqC>(&c)) {
      size += ct_size(e->lhs) + ct_size(e->rhs);
      if (!e->lhs.is_var() && e->rhs.is_var()) ++unoriented;
      collect_vars(e->lhs, undef);
      collect_vars(e->rhs, undef);
    } else if (std::holds_alternative<TagCo>(c)) {
      ++chk_tag;
      size += 1;
    }
  }
  std::sort(undef.begin(), undef.end());
  undef.erase(std::unique(undef.begin(), undef.end()), undef.end());
  std::size_t undefined = 0;
  for (TypeVar v : undef)
    if (!find_def(w, v)) ++undefined;
  return {chk_tag, undefined, size, unoriented};
}

// ---------------------------------------------------------------------------
// The sixteen rewrite rules
// ---------------------------------------------------------------------------

class Rewriter {
 public:
  Rewriter(Work w, VarSupply& supply, SolverTrace* trace)
      : w_(std::move(w)), supply_(supply), trace_(trace) {}

  // Rewrites to a normal form; each step strictly decreases the measure.
  void normalize() {
    Measure before = measure(w_);
    while (step()) {
      Measure after = measure(w_);
      if (!(after < before))
        throw internal_error("simplification measure failed to decrease (rule " +
                             last_rule_ + ")");
      before = after;
    }
  }

  Work& work() { return w_; }

  // First definitely-unsatisfiable leftover, if any.
  std::optional<std::string> find_unsat() const {
    for (const Constraint& c : w_) {
      if (std::holds_alternative<EqC>(c)) {
        // Any equality surviving normalization is unsatisfiable: either an
        // occurs-check failure or two incompatible concrete types.
        return "unsatisfiable constraint: " + to_string(c);
      }
      if (const SubC* s = std::get_if<SubC>(&c)) {
        if (!s->lhs.is_var() && !s->rhs.is_var())
          return "unsatisfiable constraint: " + to_string(c);
      }
    }
    return std::nullopt;
  }

 private:
  void trace(const std::string& rule, const std::string& consumed,
             const std::string& produced) {
    last_rule_ = rule;
    if (trace_) trace_->push_back({rule, consumed, produced});
  }

  void replace(std::size_t i, const std::string& rule,
               std::vector<Constraint> produced) {
    Constraint old = w_[i];
    w_.erase(w_.begin() + static_cast<std::ptrdiff_t>(i));
    std::string produced_str;
    for (const Constraint& p : produced) {
      if (!produced_str.empty()) produced_str += ", ";
      produced_str += to_string(p);
      push_unique(w_, p);
    }
    trace(rule, to_string(old), produced_str.empty() ? "(dropped)" : produced_str);
  }

  bool step() {
    return rule_sub_fun_dyn() || rule_sub_fun_fun() || rule_sub_ref_dyn() ||
           rule_sub_ref_ref() || rule_sub_refl() || rule_sub_int_dyn() ||
           rule_eq_fun_fun() || rule_eq_ref_ref() || rule_eq_refl() ||
           rule_eq_orient() || rule_eq_subst() || rule_chk_refl() ||
           rule_tag_chk_same() || rule_tag_chk_diff() || rule_chk_dup() ||
           rule_tag_lone();
  }

  // 1: Fun(V1,V2) <: ★  →  ★ <: V1, V2 <: ★
  bool rule_sub_fun_dyn() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const SubC* s = std::get_if<SubC>(&w_[i]);
      if (!s || s->lhs.kind() != ConstraintType::Kind::Fun || !s->rhs.is_dyn())
        continue;
      ConstraintType dom = ConstraintType::leaf(s->lhs.dom());
      ConstraintType cod = ConstraintType::leaf(s->lhs.cod());
      replace(i, "1",
              {SubC{ConstraintType::dyn(), dom}, SubC{cod, ConstraintType::dyn()}});
      return true;
    }
    return false;
  }

  // 2: Fun(V1,V2) <: Fun(V3,V4)  →  V3 <: V1, V2 <: V4
  bool rule_sub_fun_fun() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const SubC* s = std::get_if<SubC>(&w_[i]);
      if (!s || s->lhs.kind() != ConstraintType::Kind::Fun ||
          s->rhs.kind() != ConstraintType::Kind::Fun)
        continue;
      replace(i, "2",
              {SubC{ConstraintType::leaf(s->rhs.dom()), ConstraintType::leaf(s->lhs.dom())},
               SubC{ConstraintType::leaf(s->lhs.cod()), ConstraintType::leaf(s->rhs.cod())}});
      return true;
    }
    return false;
  }

  // 3: Ref(V) <: ★  →  V = ★
  bool rule_sub_ref_dyn() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const SubC* s = std::get_if<SubC>(&w_[i]);
      if (!s || s->lhs.kind() != ConstraintType::Kind::Ref || !s->rhs.is_dyn())
        continue;
      replace(i, "3", {EqC{ConstraintType::leaf(s->lhs.content()), ConstraintType::dyn()}});
      return true;
    }
    return false;
  }

  // 4: Ref(V1) <: Ref(V2)  →  V1 = V2  (reference invariance)
  bool rule_sub_ref_ref() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const SubC* s = std::get_if<SubC>(&w_[i]);
      if (!s || s->lhs.kind() != ConstraintType::Kind::Ref ||
          s->rhs.kind() != ConstraintType::Kind::Ref)
        continue;
      replace(i, "4",
              {EqC{ConstraintType::leaf(s->lhs.content()), ConstraintType::leaf(s->rhs.content())}});
      return true;
    }
    return false;
  }

  // 5: A <: A  →  (dropped)
  bool rule_sub_refl() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const SubC* s = std::get_if<SubC>(&w_[i]);
      if (!s || !(s->lhs == s->rhs)) continue;
      replace(i, "5", {});
      return true;
    }
    return false;
  }

  // 6: int <: ★  →  (dropped)
  bool rule_sub_int_dyn() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const SubC* s = std::get_if<SubC>(&w_[i]);
      if (!s || s->lhs.kind() != ConstraintType::Kind::Int || !s->rhs.is_dyn())
        continue;
      replace(i, "6", {});
      return true;
    }
    return false;
  }

  // 7: Fun(V1,V2) = Fun(V3,V4)  →  V1 = V3, V2 = V4
  bool rule_eq_fun_fun() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const EqC* e = std::get_if<EqC>(&w_[i]);
      if (!e || e->lhs.kind() != ConstraintType::Kind::Fun ||
          e->rhs.kind() != ConstraintType::Kind::Fun)
        continue;
      replace(i, "7",
              {EqC{ConstraintType::leaf(e->lhs.dom()), ConstraintType::leaf(e->rhs.dom())},
               EqC{ConstraintType::leaf(e->lhs.cod()), ConstraintType::leaf(e->rhs.cod())}});
      return true;
    }
    return false;
  }

  // 8: Ref(V1) = Ref(V2)  →  V1 = V2
  bool rule_eq_ref_ref() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const EqC* e = std::get_if<EqC>(&w_[i]);
      if (!e || e->lhs.kind() != ConstraintType::Kind::Ref ||
          e->rhs.kind() != ConstraintType::Kind::Ref)
        continue;
      replace(i, "8",
              {EqC{ConstraintType::leaf(e->lhs.content()), ConstraintType::leaf(e->rhs.content())}});
      return true;
    }
    return false;
  }

  // 9: A = A  →  (dropped)
  bool rule_eq_refl() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const EqC* e = std::get_if<EqC>(&w_[i]);
      if (!e || !(e->lhs == e->rhs)) continue;
      replace(i, "9", {});
      return true;
    }
    return false;
  }

  // 10: A = α  →  α = A  where A is not a variable
  bool rule_eq_orient() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const EqC* e = std::get_if<EqC>(&w_[i]);
      if (!e || e->lhs.is_var() || !e->rhs.is_var()) continue;
      replace(i, "10", {EqC{e->rhs, e->lhs}});
      return true;
    }
    return false;
  }

  // 11: α = A  →  Ω[α/A] ∪ {α := A}  where α ∉ vars(A) and α is not yet defined
  bool rule_eq_subst() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const EqC* e = std::get_if<EqC>(&w_[i]);
      if (!e || !e->lhs.is_var()) continue;
      TypeVar v = e->lhs.as_var();
      if (contains_var(e->rhs, v)) continue;  // occurs check
      if (find_def(w_, v)) continue;
      ConstraintType a = e->rhs;
      Constraint old = w_[i];
      w_.erase(w_.begin() + static_cast<std::ptrdiff_t>(i));
      subst_work(w_, v, a);
      Constraint def = DefC{v, full_of(a)};
      push_unique(w_, def);
      trace("11", to_string(old), to_string(def));
      return true;
    }
    return false;
  }

  // 12: A ▷S⊳ A  →  (dropped)
  bool rule_chk_refl() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const ChkC* k = std::get_if<ChkC>(&w_[i]);
      if (!k || !(k->lhs == k->rhs)) continue;
      replace(i, "12", {});
      return true;
    }
    return false;
  }

  // 13: α : S, α ▷S⊳ A  →  α = A  (the only check on α; A ≠ α)
  bool rule_tag_chk_same() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const TagCo* t = std::get_if<TagCo>(&w_[i]);
      if (!t) continue;
      for (std::size_t j = 0; j < w_.size(); ++j) {
        const ChkC* k = std::get_if<ChkC>(&w_[j]);
        if (!k || !k->lhs.is_var() || k->lhs.as_var() != t->var || k->tag != t->tag)
          continue;
        if (has_chk_on(w_, t->var, j)) continue;
        if (k->rhs.is_var() && k->rhs.as_var() == t->var) continue;
        Constraint eq = EqC{ConstraintType::var(t->var), k->rhs};
        std::string consumed = to_string(w_[i]) + ", " + to_string(w_[j]);
        std::size_t hi = std::max(i, j), lo = std::min(i, j);
        w_.erase(w_.begin() + static_cast<std::ptrdiff_t>(hi));
        w_.erase(w_.begin() + static_cast<std::ptrdiff_t>(lo));
        push_unique(w_, eq);
        trace("13", consumed, to_string(eq));
        return true;
      }
    }
    return false;
  }

  // 14: α : S1, α ▷S2⊳ A  →  α : S1, parts(A) = ★  where S1 ≠ S2
  bool rule_tag_chk_diff() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const TagCo* t = std::get_if<TagCo>(&w_[i]);
      if (!t) continue;
      for (std::size_t j = 0; j < w_.size(); ++j) {
        const ChkC* k = std::get_if<ChkC>(&w_[j]);
        if (!k || !k->lhs.is_var() || k->lhs.as_var() != t->var || k->tag == t->tag)
          continue;
        std::string consumed = to_string(w_[i]) + ", " + to_string(w_[j]);
        std::vector<TypeVar> ps = parts(k->rhs);
        w_.erase(w_.begin() + static_cast<std::ptrdiff_t>(j));
        std::string produced = to_string(Constraint(*t));
        for (TypeVar p : ps) {
          Constraint eq = EqC{ConstraintType::var(p), ConstraintType::dyn()};
          produced += ", " + to_string(eq);
          push_unique(w_, eq);
        }
        trace("14", consumed, produced);
        return true;
      }
    }
    return false;
  }

  // 15: α ▷S⊳ A1, α ▷S⊳ A2  →  α ▷S⊳ A1, A2 = A1  (first-inserted kept)
  bool rule_chk_dup() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const ChkC* k1 = std::get_if<ChkC>(&w_[i]);
      if (!k1 || !k1->lhs.is_var()) continue;
      for (std::size_t j = i + 1; j < w_.size(); ++j) {
        const ChkC* k2 = std::get_if<ChkC>(&w_[j]);
        if (!k2 || !k2->lhs.is_var() || !(k2->lhs == k1->lhs) || k2->tag != k1->tag)
          continue;
        Constraint eq = EqC{k2->rhs, k1->rhs};
        std::string consumed = to_string(w_[i]) + ", " + to_string(w_[j]);
        w_.erase(w_.begin() + static_cast<std::ptrdiff_t>(j));
        push_unique(w_, eq);
        trace("15", consumed, to_string(Constraint(*k1)) + ", " + to_string(eq));
        return true;
      }
    }
    return false;
  }

  // 16: α : S  →  α = (α ▷_S)  with no check, definition, or equality on α.
  // With S = ★ the matched type would be α itself, so the definition α := ★
  // is emitted instead (as the equality α = ★).
  bool rule_tag_lone() {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      const TagCo* t = std::get_if<TagCo>(&w_[i]);
      if (!t) continue;
      if (has_chk_on(w_, t->var)) continue;
      if (find_def(w_, t->var)) continue;
      if (has_eq_on(w_, t->var)) continue;
      ConstraintType matched =
          t->tag == Tag::Dyn ? ConstraintType::dyn()
                             : match_tag(ConstraintType::var(t->var), t->tag, supply_);
      Constraint eq = EqC{ConstraintType::var(t->var), matched};
      replace(i, "16", {eq});
      return true;
    }
    return false;
  }

  Work w_;
  VarSupply& supply_;
  SolverTrace* trace_;
  std::string last_rule_;
};

// ---------------------------------------------------------------------------
// vsol and variable selection
// ---------------------------------------------------------------------------

struct VsolInfo {
  bool ok = false;
  std::vector<ConstraintType> lower_bounds;  // non-variable lower bounds of α
  std::vector<Tag> check_tags;               // tags of checks scrutinizing α
};

VsolInfo vsol(const Work& w, TypeVar v) {
  VsolInfo info;
  ConstraintType vt = ConstraintType::var(v);
  for (const Constraint& c : w) {
    if (const SubC* s = std::get_if<SubC>(&c)) {
      if (s->rhs == vt) {
        // Candidate lower bound: must be a non-variable type not containing α.
        if (s->lhs.is_var() || contains_var(s->lhs, v)) return {};
        info.lower_bounds.push_back(s->lhs);
        continue;
      }
      if (s->lhs == vt) {
        // Upper bound: only leaves (another variable or ★) are admissible.
        if (!s->rhs.is_leaf()) return {};
        continue;
      }
      if (contains_var(s->lhs, v) || contains_var(s->rhs, v)) return {};
    } else if (const ChkC* k = std::get_if<ChkC>(&c)) {
      if (k->lhs == vt) {
        if (contains_var(k->rhs, v)) return {};
        info.check_tags.push_back(k->tag);
        continue;
      }
      if (contains_var(k->lhs, v) || contains_var(k->rhs, v)) return {};
    } else if (const EqC* e = std::get_if<EqC>(&c)) {
      if (contains_var(e->lhs, v) || contains_var(e->rhs, v)) return {};
    } else if (const TagCo* t = std::get_if<TagCo>(&c)) {
      if (t->var == v) return {};
    } else if (const DefC* d = std::get_if<DefC>(&c)) {
      if (d->var == v) return {};
      // α inside another variable's definition body is permitted.
    }
  }
  info.ok = true;
  return info;
}

std::vector<TypeVar> work_vars(const Work& w) {
  std::vector<TypeVar> out;
  for (const Constraint& c : w) collect_vars(c, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool only_ground_defs(const Work& w) {
  for (const Constraint& c : w) {
    const DefC* d = std::get_if<DefC>(&c);
    if (!d || !is_ground(d->body)) return false;
  }
  return true;
}

FullTypePtr all_vars_to_dyn(const FullTypePtr& t) {
  switch (t->kind()) {
    case FullType::Kind::Var:
      return t_dyn();
    case FullType::Kind::Ref:
      return t_ref(all_vars_to_dyn(t->content()));
    case FullType::Kind::Fun:
      return t_fun(all_vars_to_dyn(t->dom()), all_vars_to_dyn(t->cod()));
    default:
      return t;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

SimplifyOutcome simplify(const ConstraintSet& omega, VarSupply& supply,
                         SolverTrace* trace) {
  Rewriter rw(omega.items(), supply, trace);
  rw.normalize();
  SimplifyOutcome out;
  out.unsat = rw.find_unsat();
  out.constraints = std::move(rw.work());
  return out;
}

SolveResult solve(const ConstraintSet& omega, std::uint32_t need_vars,
                  VarSupply& supply) {
  SolveResult res;
  Rewriter rw(omega.items(), supply, &res.trace);

  auto fill_missing = [&](Solution& sigma) {
    for (std::uint32_t i = 0; i < need_vars; ++i)
      if (!sigma.find(TypeVar{i})) sigma.set(TypeVar{i}, t_dyn());
  };

  // Defensive cap; each iteration defines at least one variable and rule 16
  // introduces at most two fresh ones per definition.
  std::size_t iterations = 0;
  const std::size_t max_iterations = 1000 + 50 * (need_vars + omega.size() + 8);

  while (true) {
    if (++iterations > max_iterations)
      throw internal_error("solve failed to terminate");
    rw.normalize();
    if (auto unsat = rw.find_unsat()) {
      res.status = SolveStatus::Failed;
      res.message = *unsat;
      return res;
    }
    Work& w = rw.work();
    if (only_ground_defs(w)) {
      for (const Constraint& c : w) res.solution.set(std::get<DefC>(c).var, std::get<DefC>(c).body);
      fill_missing(res.solution);
      res.status = SolveStatus::Solved;
      return res;
    }

    // Select the least-indexed variable admissible for solving.
    std::optional<TypeVar> selected;
    VsolInfo info;
    for (TypeVar v : work_vars(w)) {
      if (find_def(w, v)) continue;
      VsolInfo vi = vsol(w, v);
      if (vi.ok) {
        selected = v;
        info = std::move(vi);
        break;
      }
    }

    if (!selected) {
      // No progress: retry once with σ★ (defined variables keep their bodies
      // with leftover leaves dynamized; everything else ↦ ★), accept iff it
      // validates.
      Solution star;
      for (const Constraint& c : w)
        if (const DefC* d = std::get_if<DefC>(&c))
          star.set(d->var, all_vars_to_dyn(d->body));
      for (TypeVar v : work_vars(w))
        if (!star.find(v)) star.set(v, t_dyn());
      fill_missing(star);
      ValidateResult vr = validate(omega, star);
      if (vr.ok) {
        res.status = SolveStatus::FallbackStar;
        res.solution = std::move(star);
        res.message = "no solvable variable at normal form; σ★ accepted";
        res.trace.push_back({"fallback", "", "σ★ (unsolved variables ↦ dyn)"});
        return res;
      }
      res.status = SolveStatus::Failed;
      res.message = "no solvable variable at normal form and σ★ does not validate (" +
                    vr.violation + ")";
      return res;
    }

    // Tag: join of the non-variable lower bounds; with no lower bounds, the
    // join of the variable's check tags (★ when it has no checks either), so
    // that a variable no value ever flows into still matches its checks.
    Tag s;
    if (!info.lower_bounds.empty()) {
      s = tag_of_ctype(info.lower_bounds.front());
      for (std::size_t i = 1; i < info.lower_bounds.size(); ++i)
        s = tag_join(s, tag_of_ctype(info.lower_bounds[i]));
    } else if (!info.check_tags.empty()) {
      s = info.check_tags.front();
      for (std::size_t i = 1; i < info.check_tags.size(); ++i)
        s = tag_join(s, info.check_tags[i]);
    } else {
      s = Tag::Dyn;
    }
    Constraint tc = TagCo{*selected, s};
    res.trace.push_back({"solve", "", to_string(tc)});
    rw.work().push_back(tc);
  }
}

ValidateResult validate(const ConstraintSet& omega, const Solution& sigma) {
  for (const Constraint& c : omega.items()) {
    if (const SubC* s = std::get_if<SubC>(&c)) {
      FullTypePtr t1 = apply_solution(sigma, s->lhs);
      FullTypePtr t2 = apply_solution(sigma, s->rhs);
      if (!subtype(t1, t2))
        return {false, "clause 1: " + to_string(c) + " — " + to_string(t1) +
                           " is not a subtype of " + to_string(t2)};
    } else if (const ChkC* k = std::get_if<ChkC>(&c)) {
      FullTypePtr t1 = apply_solution(sigma, k->lhs);
      if (tag_of_full(t1) == k->tag) {
        FullTypePtr t2 = apply_solution(sigma, k->rhs);
        if (!equal(t1, t2))
          return {false, "clause 2a: " + to_string(c) + " — " + to_string(t1) +
                             " ≠ " + to_string(t2)};
      } else {
        for (TypeVar p : parts(k->rhs))
          if (!sigma.at(p)->is_dyn())
            return {false, "clause 2b: " + to_string(c) + " — part " + p.name() +
                               " is not dyn"};
      }
    } else if (const EqC* e = std::get_if<EqC>(&c)) {
      if (!equal(apply_solution(sigma, e->lhs), apply_solution(sigma, e->rhs)))
        return {false, "clause 3: " + to_string(c)};
    } else if (const DefC* d = std::get_if<DefC>(&c)) {
      if (!equal(sigma.at(d->var), apply_solution(sigma, d->body)))
        return {false, "clause 4: " + to_string(c)};
    } else if (const TagCo* t = std::get_if<TagCo>(&c)) {
      if (tag_of_full(sigma.at(t->var)) != t->tag)
        return {false, "clause 5: " + to_string(c)};
    }
  }
  return {};
}

FullTypePtr apply_solution(const Solution& sigma, const ConstraintType& a) {
  return apply_solution(sigma, full_of(a));
}

FullTypePtr apply_solution(const Solution& sigma, const FullTypePtr& t) {
  switch (t->kind()) {
    case FullType::Kind::Var:
      return sigma.at(t->var());
    case FullType::Kind::Ref:
      return t_ref(apply_solution(sigma, t->content()));
    case FullType::Kind::Fun:
      return t_fun(apply_solution(sigma, t->dom()), apply_solution(sigma, t->cod()));
    default:
      return t;
  }
}

nlohmann::ordered_json solution_json(const Solution& sigma) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [v, t] : sigma.entries()) j[v.name()] = type_json(t);
  return j;
}

}  // namespace gts
