#include "doctest.h"

#include "hopfcoh/scalar.hpp"

using namespace hopfcoh;

TEST_CASE("rational arithmetic stays exact") {
  Field q = Field::rationals();
  Scalar a = q.parse("1/3"), b = q.parse("-2/6");
  CHECK((a + b).is_zero());
  CHECK((a * q.from_int(3)).is_one());
  CHECK((a / a).is_one());
  CHECK(q.parse("4/6").to_string() == "2/3");
}

TEST_CASE("rationals promote past 64 bits and come back") {
  Field q = Field::rationals();
  Scalar big = q.from_int(INT64_MAX);
  Scalar sq = big * big;
  CHECK(sq.to_string() == "85070591730234615847396907784232501249");
  CHECK((sq / big) == big);
  CHECK((sq - sq).is_zero());
  CHECK(((sq + q.one()) - sq).is_one());
}

TEST_CASE("prime field residues") {
  Field f = Field::prime(7);
  CHECK(f.from_int(-1).to_string() == "6");
  CHECK((f.from_int(3) * f.from_int(5)).to_string() == "1");
  CHECK((f.from_int(3).inverse() * f.from_int(3)).is_one());
  CHECK(f.parse("1/2") == f.from_int(4));
  CHECK_THROWS_AS(Field::prime(9), InputError);
  CHECK_THROWS_AS(f.parse("1/7"), InputError);
  CHECK_THROWS_AS(f.zero().inverse(), InputError);
}

TEST_CASE("mixing fields is rejected") {
  Scalar a = Field::prime(5).one();
  Scalar b = Field::rationals().one();
  CHECK_THROWS_AS(a + b, InputError);
}
