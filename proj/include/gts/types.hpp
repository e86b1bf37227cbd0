#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gts/diagnostics.hpp"

namespace gts {

// ---------------------------------------------------------------------------
// Type tags S ::= ★ | int | ref | ->
// ---------------------------------------------------------------------------

enum class Tag : std::uint8_t { Dyn, Int, Ref, Fun };

inline constexpr Tag kAllTags[] = {Tag::Dyn, Tag::Int, Tag::Ref, Tag::Fun};

std::string tag_name(Tag t);  // "dyn" | "int" | "ref" | "fun"
std::optional<Tag> tag_from_name(const std::string& name);

// s1 ⪯ s2: true iff s1 = s2 or s2 = ★.
inline bool tag_precise(Tag s1, Tag s2) { return s1 == s2 || s2 == Tag::Dyn; }

// S ⊔ S: s if both equal, ★ otherwise.
inline Tag tag_join(Tag s1, Tag s2) { return s1 == s2 ? s1 : Tag::Dyn; }

// ---------------------------------------------------------------------------
// Type variables
// ---------------------------------------------------------------------------

struct TypeVar {
  std::uint32_t index = 0;

  bool operator==(const TypeVar&) const = default;
  auto operator<=>(const TypeVar&) const = default;
  std::string name() const { return "a" + std::to_string(index); }
};

// Monotonically increasing fresh-variable source; one per pipeline run.
class VarSupply {
 public:
  TypeVar fresh() { return TypeVar{next_++}; }
  std::uint32_t issued() const { return next_; }

 private:
  std::uint32_t next_ = 0;
};

// ---------------------------------------------------------------------------
// Surface gradual types U ::= ★ | int | ref U | U -> U
// ---------------------------------------------------------------------------

class SurfaceType;
using SurfaceTypePtr = std::shared_ptr<const SurfaceType>;

class SurfaceType {
 public:
  enum class Kind : std::uint8_t { Dyn, Int, Ref, Fun };

  Kind kind() const { return kind_; }
  const SurfaceTypePtr& content() const { return a_; }  // Ref
  const SurfaceTypePtr& dom() const { return a_; }      // Fun
  const SurfaceTypePtr& cod() const { return b_; }      // Fun

  bool is_dyn() const { return kind_ == Kind::Dyn; }

  static SurfaceTypePtr make(Kind k, SurfaceTypePtr a = nullptr,
                             SurfaceTypePtr b = nullptr) {
    return std::make_shared<SurfaceType>(SurfaceType(k, std::move(a), std::move(b)));
  }

 private:
  SurfaceType(Kind k, SurfaceTypePtr a, SurfaceTypePtr b)
      : kind_(k), a_(std::move(a)), b_(std::move(b)) {}

  Kind kind_;
  SurfaceTypePtr a_, b_;
};

SurfaceTypePtr ut_dyn();
SurfaceTypePtr ut_int();
SurfaceTypePtr ut_ref(SurfaceTypePtr content);
SurfaceTypePtr ut_fun(SurfaceTypePtr dom, SurfaceTypePtr cod);

bool equal(const SurfaceTypePtr& a, const SurfaceTypePtr& b);
std::string to_string(const SurfaceTypePtr& u);

// U ∼ U
bool consistent(const SurfaceTypePtr& u1, const SurfaceTypePtr& u2);

// ▷: match against a function / reference shape; absent when neither rule fires.
std::optional<std::pair<SurfaceTypePtr, SurfaceTypePtr>> match_fun(const SurfaceTypePtr& u);
std::optional<SurfaceTypePtr> match_ref(const SurfaceTypePtr& u);

// ⌊U⌋
Tag tag_of_surface(const SurfaceTypePtr& u);

// ---------------------------------------------------------------------------
// Full types T ::= ★ | int | α | ref T | T -> T (arbitrary nesting)
// ---------------------------------------------------------------------------

class FullType;
using FullTypePtr = std::shared_ptr<const FullType>;

class FullType {
 public:
  enum class Kind : std::uint8_t { Dyn, Int, Var, Ref, Fun };

  Kind kind() const { return kind_; }
  TypeVar var() const { return var_; }
  const FullTypePtr& content() const { return a_; }
  const FullTypePtr& dom() const { return a_; }
  const FullTypePtr& cod() const { return b_; }

  bool is_dyn() const { return kind_ == Kind::Dyn; }

  static FullTypePtr make(Kind k, TypeVar v = {}, FullTypePtr a = nullptr,
                          FullTypePtr b = nullptr) {
    return std::make_shared<FullType>(FullType(k, v, std::move(a), std::move(b)));
  }

 private:
  FullType(Kind k, TypeVar v, FullTypePtr a, FullTypePtr b)
      : kind_(k), var_(v), a_(std::move(a)), b_(std::move(b)) {}

  Kind kind_;
  TypeVar var_;
  FullTypePtr a_, b_;
};

FullTypePtr t_dyn();
FullTypePtr t_int();
FullTypePtr t_var(TypeVar v);
FullTypePtr t_ref(FullTypePtr content);
FullTypePtr t_fun(FullTypePtr dom, FullTypePtr cod);

bool equal(const FullTypePtr& a, const FullTypePtr& b);
bool contains_var(const FullTypePtr& t, TypeVar v);
bool is_ground(const FullTypePtr& t);  // no variables anywhere
void collect_vars(const FullTypePtr& t, std::vector<TypeVar>& out);
std::string to_string(const FullTypePtr& t);

// ⌊T⌋; rejects variables (callers must substitute first).
Tag tag_of_full(const FullTypePtr& t);

// up(S): ★ | int | ref ★ | ★ -> ★
FullTypePtr up_tag(Tag s);

// ⊢ T <: T on variable-free full types.
bool subtype(const FullTypePtr& t1, const FullTypePtr& t2);

// Substitute every occurrence of v in t by r.
FullTypePtr subst(const FullTypePtr& t, TypeVar v, const FullTypePtr& r);

// ---------------------------------------------------------------------------
// Shallow constraint types: V ::= α | ★, A ::= V | int | ref V | V -> V
// ---------------------------------------------------------------------------

// Leaf type V: a variable or ★.
struct LeafType {
  std::optional<TypeVar> v;

  static LeafType dyn() { return {}; }
  static LeafType var(TypeVar tv) { return {tv}; }
  bool is_var() const { return v.has_value(); }
  bool is_dyn() const { return !v.has_value(); }
  TypeVar as_var() const { return *v; }
  bool operator==(const LeafType&) const = default;
};

// A shallow constraint type. Shallowness is structural: constructor
// arguments are LeafType by construction, so nesting cannot be expressed.
class ConstraintType {
 public:
  enum class Kind : std::uint8_t { Leaf, Int, Ref, Fun };

  static ConstraintType leaf(LeafType l) { return ConstraintType(Kind::Leaf, l, {}); }
  static ConstraintType var(TypeVar v) { return leaf(LeafType::var(v)); }
  static ConstraintType dyn() { return leaf(LeafType::dyn()); }
  static ConstraintType integer() { return ConstraintType(Kind::Int, {}, {}); }
  static ConstraintType ref(LeafType content) {
    return ConstraintType(Kind::Ref, content, {});
  }
  static ConstraintType fun(LeafType dom, LeafType cod) {
    return ConstraintType(Kind::Fun, dom, cod);
  }

  Kind kind() const { return kind_; }
  bool is_leaf() const { return kind_ == Kind::Leaf; }
  bool is_var() const { return kind_ == Kind::Leaf && a_.is_var(); }
  bool is_dyn() const { return kind_ == Kind::Leaf && a_.is_dyn(); }
  TypeVar as_var() const { return a_.as_var(); }
  LeafType as_leaf() const { return a_; }
  LeafType content() const { return a_; }  // Ref
  LeafType dom() const { return a_; }      // Fun
  LeafType cod() const { return b_; }      // Fun

  bool operator==(const ConstraintType&) const = default;

 private:
  ConstraintType(Kind k, LeafType a, LeafType b) : kind_(k), a_(a), b_(b) {}

  Kind kind_;
  LeafType a_, b_;
};

std::string to_string(const ConstraintType& a);

// ⌊A⌋; rejects bare variables.
Tag tag_of_ctype(const ConstraintType& a);

// parts(A): leaf variables of constructor types; empty for ★, int, variables.
std::vector<TypeVar> parts(const ConstraintType& a);

bool contains_var(const ConstraintType& a, TypeVar v);
void collect_vars(const ConstraintType& a, std::vector<TypeVar>& out);

// Embed a shallow type into the full-type grammar.
FullTypePtr full_of(const ConstraintType& a);

}  // namespace gts
