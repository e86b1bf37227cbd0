#include <doctest.h>

#include "gts/optimize.hpp"
#include "gts/parser.hpp"
#include "gts/pipeline.hpp"
#include "gts/progen.hpp"

using namespace gts;

namespace {

// λ⟨a0,a1⟩x. let x = (x ▷ int) in x — the entry-checked identity.
TransientExprPtr checked_identity() {
  return d_lam("x", TypeVar{0}, TypeVar{1},
               d_let("x", d_check(d_var("x"), Tag::Int), d_var("x")));
}

}  // namespace

TEST_CASE("check removal: precise solved type") {
  Solution sigma;
  sigma.set(TypeVar{0}, t_int());
  sigma.set(TypeVar{1}, t_int());
  OptimizeResult r = optimize(checked_identity(), sigma);
  CHECK(check_census(r.expr).static_checks == 0);
  CHECK(check_census(r.expr).fail_nodes == 0);
  CHECK(r.warnings.empty());
  CHECK(equal(r.type, t_fun(t_int(), t_int())));
}

TEST_CASE("check kept: dynamic solved type") {
  Solution sigma;
  sigma.set(TypeVar{0}, t_dyn());
  sigma.set(TypeVar{1}, t_dyn());
  OptimizeResult r = optimize(checked_identity(), sigma);
  CHECK(check_census(r.expr).static_checks == 1);
  CHECK(r.warnings.empty());
  // the kept check's result is used at up(int) = int
  CHECK(equal(r.type, t_fun(t_dyn(), t_dyn())));
}

TEST_CASE("check fail: impossible tag") {
  Solution sigma;
  sigma.set(TypeVar{0}, t_ref(t_dyn()));
  sigma.set(TypeVar{1}, t_dyn());
  OptimizeResult r = optimize(checked_identity(), sigma);
  CHECK(check_census(r.expr).static_checks == 0);
  CHECK(check_census(r.expr).fail_nodes == 1);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("check always fails") != std::string::npos);
  CHECK(r.warnings[0].find("ref dyn") != std::string::npos);
  CHECK(r.warnings[0].find("int") != std::string::npos);
}

TEST_CASE("dyn checks are always removable") {
  // (x ▷ dyn) vanishes whatever x's solved type is
  TransientExprPtr lam = d_lam("x", TypeVar{0}, TypeVar{1},
                               d_let("x", d_check(d_var("x"), Tag::Dyn), d_var("x")));
  for (const FullTypePtr& t : {t_int(), t_dyn(), t_ref(t_dyn())}) {
    Solution sigma;
    sigma.set(TypeVar{0}, t);
    sigma.set(TypeVar{1}, t);
    CHECK(check_census(optimize(lam, sigma).expr).static_checks == 0);
  }
}

TEST_CASE("erasure keeps every check and drops annotations") {
  TransientExprPtr body = d_int(7);
  CHECK(equal(erase(d_lam("x", TypeVar{0}, TypeVar{1}, body)), e_lam("x", e_int(7))));
  CHECK(equal(erase(d_int(7)), e_int(7)));
  CHECK(equal(erase(d_check(d_int(7), Tag::Fun)), e_check(e_int(7), Tag::Fun)));
  CHECK(equal(erase(d_ref(TypeVar{2}, d_int(1))), e_ref(e_int(1))));
  CHECK(equal(erase(d_let("y", d_int(1), d_var("y"))), e_let("y", e_int(1), e_var("y"))));

  VarSupply supply;
  auto [d, ty] = insert_checks(parse_program("fun (x: int) -> int { x }"), supply);
  CHECK(count_checks(d) == check_census(erase(d)).static_checks);
}

TEST_CASE("census") {
  VarSupply supply;
  auto [d, ty] = insert_checks(parse_program("fun (x: int) -> int { x }"), supply);
  CheckCensus unopt = check_census(erase(d));
  CHECK(unopt.static_checks == 1);  // just the entry check
  CHECK(unopt.fail_nodes == 0);

  CHECK(check_census(e_int(3)).static_checks == 0);
  CHECK(check_census(e_int(3)).fail_nodes == 0);

  // closed world: the never-called parameter's entry check is removed
  CompileResult res = compile_surface(parse_program("fun (x: int) -> int { x }"), {});
  CHECK(check_census(res.optimized).static_checks == 0);
  CHECK(check_census(res.optimized).fail_nodes == 0);
}

namespace {

bool is_subsequence(const std::vector<Tag>& sub, const std::vector<Tag>& super) {
  std::size_t i = 0;
  for (Tag t : super) {
    if (i < sub.size() && sub[i] == t) ++i;
  }
  return i == sub.size();
}

}  // namespace

TEST_CASE("optimized checks are a subsequence of erased checks") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    CompileOptions opts;
    opts.open_world = seed % 2 == 0;
    CompileResult res = compile_surface(gen_program(seed, 30), opts);
    CHECK(is_subsequence(check_tags_in_order(res.optimized),
                         check_tags_in_order(res.erased)));
    // no ▷dyn check survives optimization
    for (Tag t : check_tags_in_order(res.optimized)) CHECK(t != Tag::Dyn);
  }
}
