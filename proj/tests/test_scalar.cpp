#include <doctest.h>

#include "dext/scalar.hpp"

using namespace dext;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  Field q = Field::rationals();
  Scalar a = Scalar::fraction(q, 6, 4);
  CHECK(a.to_string() == "3/2");
  Scalar b = Scalar::fraction(q, 1, -2);
  CHECK(b.to_string() == "-1/2");
  CHECK((a * b).to_string() == "-3/4");
  CHECK((a - a).is_zero());
  CHECK(Scalar::fraction(q, -4, -8) == Scalar::fraction(q, 1, 2));
}

TEST_CASE("field axioms hold exactly") {
  for (Field f : {Field::rationals(), Field::prime(7)}) {
    Scalar a = Scalar::fraction(f, 2, 3);
    Scalar b = Scalar::from_int(f, 5);
    Scalar c = Scalar::fraction(f, -1, 4);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a + (-a) == Scalar::zero(f));
    CHECK(a * a.inverse() == Scalar::one(f));
  }
}

TEST_CASE("prime field values live in [0, p)") {
  Field f7 = Field::prime(7);
  CHECK(Scalar::from_int(f7, -1).residue() == 6);
  CHECK(Scalar::from_int(f7, 14).is_zero());
  CHECK(Scalar::fraction(f7, 1, 2).residue() == 4);  // 2 * 4 = 8 = 1 mod 7
  CHECK_THROWS_AS(Scalar::fraction(f7, 1, 7), std::domain_error);
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), std::domain_error);
}

TEST_CASE("modulus must be a prime below 2^31") {
  CHECK_THROWS_AS(Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK(Field::prime(2147483647).prime_modulus() == 2147483647u);  // 2^31 - 1
  CHECK(Field::prime(2).prime_modulus() == 2u);
}

TEST_CASE("fields never mix") {
  Scalar a = Scalar::one(Field::rationals());
  Scalar b = Scalar::one(Field::prime(5));
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK(a != b);
}

TEST_CASE("field spec round-trip") {
  CHECK(Field::from_string("q") == Field::rationals());
  CHECK(Field::from_string("fp:11") == Field::prime(11));
  CHECK(Field::prime(11).to_string() == "fp:11");
  CHECK_THROWS_AS(Field::from_string("fp:9"), std::invalid_argument);
  CHECK_THROWS_AS(Field::from_string("r"), std::invalid_argument);
}
