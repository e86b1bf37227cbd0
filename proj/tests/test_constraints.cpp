#include <doctest.h>

#include "gts/constraints.hpp"
#include "gts/insert.hpp"
#include "gts/parser.hpp"
#include "gts/progen.hpp"

using namespace gts;

TEST_CASE("match_tag") {
  VarSupply supply;
  TypeVar a = supply.fresh();
  // α ▷fun → β→γ with β, γ fresh
  ConstraintType m = match_tag(ConstraintType::var(a), Tag::Fun, supply);
  REQUIRE(m.kind() == ConstraintType::Kind::Fun);
  CHECK(m.dom().is_var());
  CHECK(m.cod().is_var());
  CHECK(m.dom().as_var() == TypeVar{1});
  CHECK(m.cod().as_var() == TypeVar{2});

  // ★→★ already matches
  ConstraintType ff = ConstraintType::fun(LeafType::dyn(), LeafType::dyn());
  CHECK(match_tag(ff, Tag::Fun, supply) == ff);

  // V ▷int int
  CHECK(match_tag(ConstraintType::var(a), Tag::Int, supply) == ConstraintType::integer());
  CHECK(match_tag(ConstraintType::dyn(), Tag::Int, supply) == ConstraintType::integer());

  // ▷★ is the identity
  CHECK(match_tag(ConstraintType::var(a), Tag::Dyn, supply) == ConstraintType::var(a));
  CHECK(match_tag(ff, Tag::Dyn, supply) == ff);

  ConstraintType r = match_tag(ConstraintType::var(a), Tag::Ref, supply);
  REQUIRE(r.kind() == ConstraintType::Kind::Ref);
  CHECK(r.content().is_var());

  // a concrete constructor mismatch is a contract violation
  CHECK_THROWS_AS(match_tag(ConstraintType::integer(), Tag::Fun, supply), internal_error);
  CHECK_THROWS_AS(match_tag(ff, Tag::Ref, supply), internal_error);
  CHECK_THROWS_AS(match_tag(ConstraintType::dyn(), Tag::Fun, supply), internal_error);
}

TEST_CASE("generation: entry-checked identity") {
  // λ⟨a0,a1⟩x. let x = x▷int in x  →  (a0→a1, {a0 ▷int⊳ int, int <: a1})
  VarSupply supply;
  auto [d, ty] = insert_checks(parse_program("fun (x: int) -> int { x }"), supply);
  GenResult g = generate(d, supply);
  REQUIRE(g.type.kind() == ConstraintType::Kind::Fun);
  CHECK(g.type.dom().as_var() == TypeVar{0});
  CHECK(g.type.cod().as_var() == TypeVar{1});
  REQUIRE(g.constraints.size() == 2);
  CHECK(equal(g.constraints.items()[0],
              Constraint(ChkC{ConstraintType::var(TypeVar{0}), Tag::Int,
                              ConstraintType::integer()})));
  CHECK(equal(g.constraints.items()[1],
              Constraint(SubC{ConstraintType::integer(), ConstraintType::var(TypeVar{1})})));
}

TEST_CASE("generation: literal") {
  VarSupply supply;
  GenResult g = generate(d_int(3), supply);
  CHECK(g.type == ConstraintType::integer());
  CHECK(g.constraints.empty());
}

TEST_CASE("generation: shape errors on ill-formed terms") {
  VarSupply supply;
  // applying an integer
  CHECK_THROWS_AS(generate(d_app(d_int(1), d_int(2)), supply), internal_error);
  // dereferencing an integer
  CHECK_THROWS_AS(generate(d_deref(d_int(1)), supply), internal_error);
  // adding a lambda
  CHECK_THROWS_AS(
      generate(d_add(d_int(1), d_lam("x", TypeVar{0}, TypeVar{1}, d_var("x"))), supply),
      internal_error);
}

TEST_CASE("open world constraints") {
  TypeVar a{0}, b{1};
  ConstraintSet fn =
      open_world_constraints(ConstraintType::fun(LeafType::var(a), LeafType::var(b)));
  REQUIRE(fn.size() == 2);
  CHECK(equal(fn.items()[0], Constraint(SubC{ConstraintType::dyn(), ConstraintType::var(a)})));
  CHECK(equal(fn.items()[1], Constraint(SubC{ConstraintType::var(b), ConstraintType::dyn()})));

  CHECK(open_world_constraints(ConstraintType::integer()).empty());

  ConstraintSet rf = open_world_constraints(ConstraintType::ref(LeafType::var(a)));
  REQUIRE(rf.size() == 2);
  CHECK(equal(rf.items()[0], Constraint(SubC{ConstraintType::var(a), ConstraintType::dyn()})));
  CHECK(equal(rf.items()[1], Constraint(SubC{ConstraintType::dyn(), ConstraintType::var(a)})));

  ConstraintSet lf = open_world_constraints(ConstraintType::var(a));
  REQUIRE(lf.size() == 1);
  CHECK(equal(lf.items()[0], Constraint(SubC{ConstraintType::var(a), ConstraintType::dyn()})));
}

TEST_CASE("structural facts about generated constraint sets") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    VarSupply supply;
    auto [d, ty] = insert_checks(gen_program(seed, 30), supply);
    VarSupply before = supply;
    GenResult g = generate(d, supply);
    for (const Constraint& c : g.constraints.items()) {
      if (const SubC* s = std::get_if<SubC>(&c)) {
        // every generated subtype constraint has a leaf right-hand side
        CHECK(s->rhs.is_leaf());
      } else if (const ChkC* k = std::get_if<ChkC>(&c)) {
        // equal sides exactly when ▷ returned its input unchanged
        VarSupply probe = before;
        bool identity = false;
        if (k->tag == Tag::Dyn || k->lhs.kind() != ConstraintType::Kind::Leaf)
          identity = match_tag(k->lhs, k->tag, probe) == k->lhs;
        CHECK((k->lhs == k->rhs) == identity);
      } else {
        FAIL("generation produced a non-subtype, non-check constraint");
      }
    }
  }
}
