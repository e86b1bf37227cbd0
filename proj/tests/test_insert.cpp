#include <doctest.h>

#include <set>

#include "gts/constraints.hpp"
#include "gts/insert.hpp"
#include "gts/parser.hpp"
#include "gts/progen.hpp"

using namespace gts;

TEST_CASE("insertion: function entry") {
  VarSupply supply;
  auto [d, ty] = insert_checks(parse_program("fun (x: int) -> int { x }"), supply);
  // fun⟨a0,a1⟩(x){ let x = (x ▷ int) in x }
  TransientExprPtr expected =
      d_lam("x", TypeVar{0}, TypeVar{1},
            d_let("x", d_check(d_var("x"), Tag::Int), d_var("x")));
  CHECK(equal(d, expected));
  CHECK(equal(ty, ut_fun(ut_int(), ut_int())));
  CHECK(supply.issued() == 2);
}

TEST_CASE("insertion: call site with dynamic callee") {
  VarSupply supply;
  TypeEnv env;
  env.push("f", ut_dyn());
  auto [d, ty] = insert_checks(env, parse_program("f 5"), supply);
  // ((f ▷ fun) 5) ▷ dyn — the result check comes from ★ ▷ ★→★
  TransientExprPtr expected =
      d_check(d_app(d_check(d_var("f"), Tag::Fun), d_int(5)), Tag::Dyn);
  CHECK(equal(d, expected));
  CHECK(ty->is_dyn());
}

TEST_CASE("insertion: both addition operands are checked") {
  VarSupply supply;
  auto [d, ty] = insert_checks(parse_program("1 + 2"), supply);
  CHECK(equal(d, d_add(d_check(d_int(1), Tag::Int), d_check(d_int(2), Tag::Int))));
}

TEST_CASE("insertion: dereference checks subject and result") {
  VarSupply supply;
  auto [d, ty] = insert_checks(parse_program("!(ref<int> 5)"), supply);
  TransientExprPtr expected =
      d_check(d_deref(d_check(d_ref(TypeVar{0}, d_int(5)), Tag::Ref)), Tag::Int);
  CHECK(equal(d, expected));
}

TEST_CASE("insertion: assignment target is checked") {
  VarSupply supply;
  auto [d, ty] = insert_checks(parse_program("ref<int> 0 := 4"), supply);
  TransientExprPtr expected =
      d_assign(d_check(d_ref(TypeVar{0}, d_int(0)), Tag::Ref), d_int(4));
  CHECK(equal(d, expected));
  CHECK(equal(ty, ut_int()));
}

TEST_CASE("check count is a function of the input") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SurfaceExprPtr p = gen_program(seed, 30);
    VarSupply s1, s2;
    auto [d1, t1] = insert_checks(p, s1);
    auto [d2, t2] = insert_checks(p, s2);
    CHECK(equal(d1, d2));
    CHECK(count_checks(d1) == count_checks(d2));
  }
}

namespace {

void collect_issued(const TransientExprPtr& d, std::vector<TypeVar>& out) {
  if (d->kind == TransientExpr::Kind::Lam) {
    out.push_back(d->var1);
    out.push_back(d->var2);
  } else if (d->kind == TransientExpr::Kind::RefNew) {
    out.push_back(d->var1);
  }
  if (d->a) collect_issued(d->a, out);
  if (d->b) collect_issued(d->b, out);
}

}  // namespace

TEST_CASE("fresh variables are pairwise distinct") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    VarSupply supply;
    auto [d, ty] = insert_checks(gen_program(seed, 30), supply);
    std::vector<TypeVar> vars;
    collect_issued(d, vars);
    std::set<TypeVar> dedup(vars.begin(), vars.end());
    CHECK(dedup.size() == vars.size());
  }
}

TEST_CASE("shallow typechecking of transient terms") {
  CHECK(shallow_typecheck(d_int(3)) == Tag::Int);
  CHECK(shallow_typecheck(d_lam("x", TypeVar{0}, TypeVar{1}, d_var("x"))) == Tag::Fun);
  // PAdd requires int operands: a ★-tagged variable operand is an error
  CHECK_THROWS_AS(shallow_typecheck(d_lam("x", TypeVar{0}, TypeVar{1},
                                          d_add(d_int(1), d_var("x")))),
                  shallow_error);
  // checks give their tag when applied to ★
  CHECK(shallow_typecheck(d_lam("x", TypeVar{0}, TypeVar{1},
                                d_add(d_int(1), d_check(d_var("x"), Tag::Int)))) ==
        Tag::Fun);
  // a check against an unrelated concrete tag is an inserter bug
  CHECK_THROWS_AS(shallow_typecheck(d_check(d_int(1), Tag::Fun)), shallow_error);
}

TEST_CASE("inserter output always shallow-typechecks and generates") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SurfaceExprPtr p = gen_program(seed, 30);
    VarSupply supply;
    auto [d, ty] = insert_checks(p, supply);
    CHECK_NOTHROW(shallow_typecheck(d));
    CHECK_NOTHROW(generate(d, supply));  // inserter output is always constraint-typable
  }
}
