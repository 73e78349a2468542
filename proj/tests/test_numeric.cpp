#include <doctest.h>

#include "puiseux/error.hpp"
#include "puiseux/linalg.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("rationals parse and print canonically") {
  CHECK(q("6/4") == make_rat(3, 2));
  CHECK(q("-2") == make_rat(-2));
  CHECK(to_string(q("-6/4")) == "-3/2");
  CHECK(to_string(q("4/2")) == "2");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK(lcm_of_denominators({q("1/2"), q("2/3"), q("5")}) == 6);
}

TEST_CASE("values of exponents") {
  auto id = WeightMatrix::identity(2);
  CHECK(val_of_exp(id, ev({"0", "0"})) == val({"0", "0"}));
  CHECK(val_of_exp(id, ev({"2", "1"})) == val({"2", "1"}));
  WeightMatrix w({{q("1"), q("1")}, {q("0"), q("1")}});
  CHECK(val_of_exp(w, ev({"1", "-1"})) == val({"0", "-1"}));
}

TEST_CASE("value comparison") {
  CHECK(val_cmp(val({"1", "0"}), val({"1", "0"})) == std::strong_ordering::equal);
  CHECK(val_cmp(val({"1", "-5"}), val({"1", "0"})) == std::strong_ordering::less);
  CHECK(val_cmp(Val::infinity(), val({"100", "100"})) == std::strong_ordering::greater);
  CHECK(Val::infinity() == Val::infinity());
  CHECK((Val::infinity() + val({"1"})).is_infinite());
  CHECK(Val::infinity().scaled(0, 2) == Val::zero(2));
  CHECK(Val::infinity().scaled(3, 2).is_infinite());
  CHECK(val({"0", "1"}).is_positive());
  CHECK_FALSE(val({"0", "0"}).is_positive());
  CHECK_FALSE(val({"-1", "7"}).is_positive());
}

TEST_CASE("solving for gamma") {
  CHECK(solve_gamma_row(WeightMatrix::identity(2), val({"1/2", "1/2"})) == ev({"1/2", "1/2"}));
  WeightMatrix w({{q("1"), q("1")}, {q("0"), q("1")}});
  CHECK(solve_gamma_row(w, val({"0", "-1"})) == ev({"1", "-1"}));
  WeightMatrix tall({{q("1"), q("0")}, {q("0"), q("1")}, {q("1"), q("1")}});
  try {
    solve_gamma_row(tall, val({"1", "0", "0"}));
    FAIL("expected NotInImage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInImage);
  }
}

TEST_CASE("weight matrices must have full column rank") {
  try {
    WeightMatrix({{q("1"), q("2")}, {q("2"), q("4")}});
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
  CHECK_THROWS_AS(WeightMatrix({{q("1"), q("2")}, {q("1")}}), Error);
}

TEST_CASE("echelon system") {
  EchelonSystem s(2, 1);
  CHECK(s.add_row({q("1"), q("1")}, {q("3")}) == EchelonSystem::AddResult::Independent);
  CHECK(s.add_row({q("2"), q("2")}, {q("6")}) == EchelonSystem::AddResult::Redundant);
  CHECK_FALSE(s.solution());
  auto t = s;
  CHECK(t.add_row({q("1"), q("1")}, {q("4")}) == EchelonSystem::AddResult::Inconsistent);
  CHECK(s.add_row({q("1"), q("-1")}, {q("1")}) == EchelonSystem::AddResult::Independent);
  auto x = s.solution();
  REQUIRE(x);
  CHECK((*x)[0][0] == 2);
  CHECK((*x)[1][0] == 1);
  CHECK(rank({{q("1"), q("2")}, {q("2"), q("4")}, {q("0"), q("1")}}) == 2);
}

TEST_CASE("value map is injective, linear and invertible on random samples") {
  PolyGen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = gen.weight2();
    ExpVec a{gen.small_rat(6, 4), gen.small_rat(6, 4)};
    ExpVec b{gen.small_rat(6, 4), gen.small_rat(6, 4)};
    if (a != b) CHECK(val_of_exp(w, a) != val_of_exp(w, b));
    CHECK(val_of_exp(w, a + b) == val_of_exp(w, a) + val_of_exp(w, b));
    CHECK(solve_gamma_row(w, val_of_exp(w, a)) == a);
  }
}
