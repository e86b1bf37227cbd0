#include <doctest.h>

#include "gts/insert.hpp"
#include "gts/parser.hpp"
#include "gts/progen.hpp"
#include "gts/solver.hpp"

using namespace gts;

namespace {

ConstraintType cvar(std::uint32_t i) { return ConstraintType::var(TypeVar{i}); }
ConstraintType cfun(std::uint32_t i, std::uint32_t j) {
  return ConstraintType::fun(LeafType::var(TypeVar{i}), LeafType::var(TypeVar{j}));
}

}  // namespace

TEST_CASE("simplify: ref below dyn forces dyn content") {
  // {ref a0 <: ★} → {a0 := ★} via rule 3 then the substitution rule
  ConstraintSet omega;
  omega.insert(SubC{ConstraintType::ref(LeafType::var(TypeVar{0})), ConstraintType::dyn()});
  VarSupply supply;
  SolverTrace trace;
  SimplifyOutcome out = simplify(omega, supply, &trace);
  CHECK_FALSE(out.unsat.has_value());
  REQUIRE(out.constraints.size() == 1);
  const DefC* d = std::get_if<DefC>(&out.constraints[0]);
  REQUIRE(d != nullptr);
  CHECK(d->var == TypeVar{0});
  CHECK(d->body->is_dyn());
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].rule == "3");
  CHECK(trace[1].rule == "11");
}

TEST_CASE("simplify: trivial function equality vanishes") {
  ConstraintSet omega;
  ConstraintType ff = ConstraintType::fun(LeafType::dyn(), LeafType::dyn());
  omega.insert(EqC{ff, ff});
  VarSupply supply;
  SimplifyOutcome out = simplify(omega, supply);
  CHECK(out.constraints.empty());
  CHECK_FALSE(out.unsat.has_value());
}

TEST_CASE("simplify: mismatched tag and check drop the check") {
  // {a0 : fun, a0 ▷int⊳ int}: rule 14 drops the check (parts(int) = ∅),
  // leaving the lone tag constraint to define a0 as a fresh function type.
  ConstraintSet omega;
  omega.insert(TagCo{TypeVar{0}, Tag::Fun});
  omega.insert(ChkC{cvar(0), Tag::Int, ConstraintType::integer()});
  VarSupply supply;
  for (int i = 0; i < 1; ++i) supply.fresh();  // a0 is taken
  SolverTrace trace;
  SimplifyOutcome out = simplify(omega, supply, &trace);
  REQUIRE(trace.size() >= 1);
  CHECK(trace[0].rule == "14");
  CHECK(trace[0].produced == "a0 : fun");  // only the tag constraint survives rule 14
  REQUIRE(out.constraints.size() == 1);
  const DefC* d = std::get_if<DefC>(&out.constraints[0]);
  REQUIRE(d != nullptr);
  CHECK(d->var == TypeVar{0});
  CHECK(d->body->kind() == FullType::Kind::Fun);
}

TEST_CASE("simplify: substitution is blocked by an existing definition") {
  ConstraintSet omega;
  omega.insert(DefC{TypeVar{0}, t_int()});
  omega.insert(EqC{cvar(0), ConstraintType::dyn()});
  VarSupply supply;
  supply.fresh();
  SolverTrace trace;
  SimplifyOutcome out = simplify(omega, supply, &trace);
  for (const TraceStep& t : trace) CHECK(t.rule != "11");
  CHECK(out.unsat.has_value());  // the stranded equality is unsatisfiable
}

TEST_CASE("solve: single lower bound") {
  ConstraintSet omega;
  omega.insert(SubC{ConstraintType::integer(), cvar(0)});
  VarSupply supply;
  supply.fresh();
  SolveResult res = solve(omega, supply.issued(), supply);
  REQUIRE(res.status == SolveStatus::Solved);
  CHECK(equal(res.solution.at(TypeVar{0}), t_int()));
  CHECK(validate(omega, res.solution).ok);
}

TEST_CASE("solve: empty set") {
  ConstraintSet omega;
  VarSupply supply;
  SolveResult res = solve(omega, 0, supply);
  REQUIRE(res.status == SolveStatus::Solved);
  CHECK(res.solution.entries().empty());
}

TEST_CASE("solve: the worked constraint set") {
  // Ω = {ε→ζ <: δ, δ ▷fun⊳ η→θ, int <: η, ref ω <: η, int <: ζ}
  // with ε=a0, ζ=a1, δ=a2, η=a3, θ=a4, ω=a5.
  ConstraintSet omega;
  omega.insert(SubC{cfun(0, 1), cvar(2)});
  omega.insert(ChkC{cvar(2), Tag::Fun, cfun(3, 4)});
  omega.insert(SubC{ConstraintType::integer(), cvar(3)});
  omega.insert(SubC{ConstraintType::ref(LeafType::var(TypeVar{5})), cvar(3)});
  omega.insert(SubC{ConstraintType::integer(), cvar(1)});
  VarSupply supply;
  for (int i = 0; i < 6; ++i) supply.fresh();

  SolveResult res = solve(omega, supply.issued(), supply);
  REQUIRE(res.status == SolveStatus::Solved);
  CHECK(equal(res.solution.at(TypeVar{0}), t_dyn()));                  // ε ↦ ★
  CHECK(equal(res.solution.at(TypeVar{1}), t_int()));                  // ζ ↦ int
  CHECK(equal(res.solution.at(TypeVar{2}), t_fun(t_dyn(), t_int())));  // δ ↦ ★→int
  CHECK(equal(res.solution.at(TypeVar{3}), t_dyn()));                  // η ↦ ★
  CHECK(equal(res.solution.at(TypeVar{4}), t_int()));                  // θ ↦ int
  CHECK(equal(res.solution.at(TypeVar{5}), t_dyn()));                  // ω ↦ ★

  CHECK(validate(omega, res.solution).ok);

  // determinism: same set, same solution and same trace
  VarSupply supply2;
  for (int i = 0; i < 6; ++i) supply2.fresh();
  SolveResult res2 = solve(omega, supply2.issued(), supply2);
  REQUIRE(res2.status == SolveStatus::Solved);
  REQUIRE(res2.trace.size() == res.trace.size());
  for (std::size_t i = 0; i < res.trace.size(); ++i)
    CHECK(res.trace[i].line() == res2.trace[i].line());
  for (const auto& [v, t] : res.solution.entries())
    CHECK(equal(res2.solution.at(v), t));
}

TEST_CASE("solve: variable-variable subtype cycle falls back to sigma-star") {
  ConstraintSet omega;
  omega.insert(SubC{cvar(0), cvar(1)});
  omega.insert(SubC{cvar(1), cvar(0)});
  VarSupply supply;
  supply.fresh();
  supply.fresh();
  SolveResult res = solve(omega, supply.issued(), supply);
  REQUIRE(res.status == SolveStatus::FallbackStar);
  CHECK(res.solution.at(TypeVar{0})->is_dyn());
  CHECK(res.solution.at(TypeVar{1})->is_dyn());
  CHECK(validate(omega, res.solution).ok);
}

TEST_CASE("solve: occurs check failure is unsatisfiable") {
  ConstraintSet omega;
  omega.insert(EqC{cvar(0), cfun(0, 1)});
  VarSupply supply;
  supply.fresh();
  supply.fresh();
  SolveResult res = solve(omega, supply.issued(), supply);
  CHECK(res.status == SolveStatus::Failed);
  CHECK(res.message.find("unsatisfiable") != std::string::npos);
}

TEST_CASE("solve: incompatible concrete equality is unsatisfiable") {
  ConstraintSet omega;
  omega.insert(EqC{ConstraintType::integer(),
                   ConstraintType::fun(LeafType::dyn(), LeafType::dyn())});
  VarSupply supply;
  SolveResult res = solve(omega, 0, supply);
  CHECK(res.status == SolveStatus::Failed);
}

TEST_CASE("validate") {
  ConstraintSet omega;
  omega.insert(SubC{ConstraintType::integer(), cvar(0)});
  Solution good;
  good.set(TypeVar{0}, t_int());
  CHECK(validate(omega, good).ok);
  Solution bad;
  bad.set(TypeVar{0}, t_ref(t_dyn()));
  ValidateResult vr = validate(omega, bad);
  CHECK_FALSE(vr.ok);
  CHECK(vr.violation.find("clause 1") != std::string::npos);

  // clause 2a: matching tag demands syntactic equality
  ConstraintSet chk;
  chk.insert(ChkC{cvar(0), Tag::Fun, cfun(1, 2)});
  Solution s2;
  s2.set(TypeVar{0}, t_fun(t_int(), t_int()));
  s2.set(TypeVar{1}, t_int());
  s2.set(TypeVar{2}, t_int());
  CHECK(validate(chk, s2).ok);
  s2.set(TypeVar{2}, t_dyn());
  CHECK_FALSE(validate(chk, s2).ok);

  // clause 2b: mismatching tag demands dyn parts
  Solution s3;
  s3.set(TypeVar{0}, t_int());
  s3.set(TypeVar{1}, t_dyn());
  s3.set(TypeVar{2}, t_dyn());
  CHECK(validate(chk, s3).ok);
  s3.set(TypeVar{1}, t_int());
  CHECK_FALSE(validate(chk, s3).ok);

  // clause 5
  ConstraintSet tagc;
  tagc.insert(TagCo{TypeVar{0}, Tag::Ref});
  Solution s4;
  s4.set(TypeVar{0}, t_ref(t_int()));
  CHECK(validate(tagc, s4).ok);
  s4.set(TypeVar{0}, t_int());
  CHECK_FALSE(validate(tagc, s4).ok);
}

TEST_CASE("apply_solution") {
  Solution sigma;
  sigma.set(TypeVar{0}, t_int());
  CHECK_THROWS_AS(apply_solution(sigma, cvar(1)), internal_error);  // unmapped
  CHECK(equal(apply_solution(sigma,
                             ConstraintType::fun(LeafType::var(TypeVar{0}), LeafType::dyn())),
              t_fun(t_int(), t_dyn())));
  Solution empty;
  CHECK(equal(apply_solution(empty, ConstraintType::integer()), t_int()));
  Solution sb;
  sb.set(TypeVar{1}, t_dyn());
  CHECK(equal(apply_solution(sb, ConstraintType::ref(LeafType::var(TypeVar{1}))),
              t_ref(t_dyn())));
}

TEST_CASE("solver soundness over the generated corpus") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    SurfaceExprPtr p = gen_program(seed, 30);
    for (bool open_world : {false, true}) {
      VarSupply supply;
      auto [d, ty] = insert_checks(p, supply);
      GenResult g = generate(d, supply);
      ConstraintSet omega = g.constraints;
      if (open_world) omega.merge(open_world_constraints(g.type));
      std::uint32_t need = supply.issued();
      SolveResult res = solve(omega, need, supply);
      REQUIRE(res.ok());
      ValidateResult vr = validate(omega, res.solution);
      if (!vr.ok) {
        CAPTURE(seed);
        CAPTURE(open_world);
        CAPTURE(vr.violation);
        FAIL("solution failed validation");
      }
    }
  }
}

TEST_CASE("duplicate checks on one variable merge, first kept") {
  // {a0 ▷ref⊳ ref a1, a0 ▷ref⊳ ref a2, ref a3 <: a0}
  ConstraintSet omega;
  omega.insert(ChkC{cvar(0), Tag::Ref, ConstraintType::ref(LeafType::var(TypeVar{1}))});
  omega.insert(ChkC{cvar(0), Tag::Ref, ConstraintType::ref(LeafType::var(TypeVar{2}))});
  omega.insert(SubC{ConstraintType::ref(LeafType::var(TypeVar{3})), cvar(0)});
  VarSupply supply;
  for (int i = 0; i < 4; ++i) supply.fresh();
  SolveResult res = solve(omega, supply.issued(), supply);
  REQUIRE(res.status == SolveStatus::Solved);
  // the merge equates the two check results; a0 takes the first one
  CHECK(equal(res.solution.at(TypeVar{0}), t_ref(t_dyn())));
  CHECK(equal(res.solution.at(TypeVar{1}), t_dyn()));
  CHECK(equal(res.solution.at(TypeVar{2}), t_dyn()));
  CHECK(equal(res.solution.at(TypeVar{3}), t_dyn()));
  CHECK(validate(omega, res.solution).ok);
  bool rule15_fired = false;
  for (const TraceStep& t : res.trace) rule15_fired |= t.rule == "15";
  CHECK(rule15_fired);
}

TEST_CASE("checks with mixed tags force the variable to dyn parts") {
  // a0 has no lower bounds but is checked at both ref and int: the join of
  // its check tags is dyn, both checks survive to run time.
  ConstraintSet omega;
  omega.insert(ChkC{cvar(0), Tag::Ref, ConstraintType::ref(LeafType::var(TypeVar{1}))});
  omega.insert(ChkC{cvar(0), Tag::Int, ConstraintType::integer()});
  VarSupply supply;
  supply.fresh();
  supply.fresh();
  SolveResult res = solve(omega, supply.issued(), supply);
  REQUIRE(res.status == SolveStatus::Solved);
  CHECK(res.solution.at(TypeVar{0})->is_dyn());
  CHECK(res.solution.at(TypeVar{1})->is_dyn());
  CHECK(validate(omega, res.solution).ok);
}

TEST_CASE("single non-variable lower bounds decompose through definitions") {
  // {a0 -> a1 <: a2, int <: a0 is not well-formed as a lower bound of a2's
  // domain until a2 is defined; the chain must still ground out}
  ConstraintSet omega;
  omega.insert(SubC{cfun(0, 1), cvar(2)});
  omega.insert(SubC{ConstraintType::integer(), cvar(1)});
  omega.insert(SubC{cvar(2), ConstraintType::dyn()});
  VarSupply supply;
  for (int i = 0; i < 3; ++i) supply.fresh();
  SolveResult res = solve(omega, supply.issued(), supply);
  REQUIRE(res.status == SolveStatus::Solved);
  // a2 <: dyn forces the function below dyn: domain exactly dyn
  CHECK(equal(res.solution.at(TypeVar{0}), t_dyn()));
  CHECK(validate(omega, res.solution).ok);
}
