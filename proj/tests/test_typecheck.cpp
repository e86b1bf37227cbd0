#include <doctest.h>

#include "gts/parser.hpp"
#include "gts/progen.hpp"
#include "gts/typecheck.hpp"

using namespace gts;

TEST_CASE("typecheck basics") {
  CHECK(equal(typecheck_surface(parse_program("5")), ut_int()));
  // (fun (x: dyn) -> dyn { x }) 7 : dyn, via ★ ▷ ★→★ and int ∼ ★
  CHECK(equal(typecheck_surface(parse_program("(fun (x: dyn) -> dyn { x }) 7")), ut_dyn()));
  CHECK(equal(typecheck_surface(parse_program("ref<int> 5")), ut_ref(ut_int())));
  CHECK(equal(typecheck_surface(parse_program("!(ref<int> 5)")), ut_int()));
  CHECK(equal(typecheck_surface(parse_program("fun (r: ref int) -> int { r := 3 }")),
              ut_fun(ut_ref(ut_int()), ut_int())));
}

TEST_CASE("typecheck rejections name the rule and the types") {
  try {
    typecheck_surface(parse_program("fun (x: int) -> int { x := 1 }"));
    FAIL("expected type_error");
  } catch (const type_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("SUpdt") != std::string::npos);
    CHECK(msg.find("int") != std::string::npos);
  }
  CHECK_THROWS_AS(typecheck_surface(parse_program("5 6")), type_error);
  CHECK_THROWS_AS(typecheck_surface(parse_program("!5")), type_error);
  CHECK_THROWS_AS(typecheck_surface(parse_program("(fun (x: int) -> int { x }) (ref<int> 1)")),
                  type_error);
  CHECK_THROWS_AS(typecheck_surface(parse_program("1 + ref<int> 1")), type_error);
  CHECK_THROWS_AS(typecheck_surface(parse_program("y")), type_error);
  // declared return type inconsistent with the body
  CHECK_THROWS_AS(typecheck_surface(parse_program("fun (x: int) -> ref int { 3 }")),
                  type_error);
}

TEST_CASE("consistency is used, not equality") {
  // int argument to a dyn parameter and vice versa
  CHECK(equal(typecheck_surface(parse_program("(fun (x: int) -> int { x }) ((fun (d: dyn) -> dyn { d }) 3)")),
              ut_int()));
  // dyn callee applies
  CHECK(equal(typecheck_surface(parse_program("fun (f: dyn) -> dyn { f 1 }")),
              ut_fun(ut_dyn(), ut_dyn())));
}

TEST_CASE("shadowing is permitted") {
  CHECK(equal(typecheck_surface(
                  parse_program("fun (x: int) -> int { (fun (x: dyn) -> int { 0 }) x + x }")),
              ut_fun(ut_int(), ut_int())));
}

TEST_CASE("every generated program typechecks") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SurfaceExprPtr p = gen_program(seed, 30);
    CHECK_NOTHROW(typecheck_surface(p));
  }
}
