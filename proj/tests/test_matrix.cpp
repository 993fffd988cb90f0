#include <doctest.h>

#include <random>

#include "dext/matrix.hpp"

using namespace dext;

namespace {

const Field Q = Field::rationals();

Matrix from_ints(std::size_t r, std::size_t c,
                 std::initializer_list<long long> vals, const Field& f = Q) {
  Matrix m(r, c, f);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(f, *it++);
  return m;
}

}  // namespace

TEST_CASE("rref of the identity and of zero") {
  auto r = Matrix::identity(3, Q).rref();
  CHECK(r.rank == 3);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.reduced == Matrix::identity(3, Q));

  auto z = Matrix(2, 4, Q).rref();
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
}

TEST_CASE("rank of a dependent-row matrix") {
  // [[1,2],[2,4]]: second row is twice the first
  CHECK(from_ints(2, 2, {1, 2, 2, 4}).rank() == 1);
}

TEST_CASE("solve: identity, inconsistent, diagonal") {
  Matrix id = Matrix::identity(2, Q);
  std::vector<Scalar> b{Scalar::from_int(Q, 7), Scalar::from_int(Q, -3)};
  CHECK(*id.solve(b) == b);

  Matrix zero(1, 1, Q);
  CHECK(!zero.solve({Scalar::one(Q)}).has_value());

  Matrix diag = from_ints(2, 2, {2, 0, 0, 3});
  auto x = diag.solve({Scalar::one(Q), Scalar::one(Q)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar::fraction(Q, 1, 2));
  CHECK((*x)[1] == Scalar::fraction(Q, 1, 3));
}

TEST_CASE("solve sets free variables to zero") {
  Matrix m = from_ints(1, 2, {1, 1});
  auto x = m.solve({Scalar::from_int(Q, 5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar::from_int(Q, 5));
  CHECK((*x)[1].is_zero());
}

TEST_CASE("kernel bases") {
  CHECK(Matrix::identity(3, Q).kernel_basis().empty());
  CHECK(Matrix(2, 3, Q).kernel_basis().size() == 3);

  auto k = from_ints(1, 2, {1, 1}).kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(!k[0][0].is_zero());
}

TEST_CASE("solve validates dimensions") {
  CHECK_THROWS_AS(Matrix(2, 2, Q).solve({Scalar::one(Q)}),
                  DimensionMismatch);
}

TEST_CASE("inverse is exact and two-sided") {
  Matrix m = from_ints(3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 1});
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(3, Q));
  CHECK(*inv * m == Matrix::identity(3, Q));
  CHECK(!from_ints(2, 2, {1, 2, 2, 4}).inverse().has_value());
}

TEST_CASE("properties on random small matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 6), val(-4, 4);
  for (Field f : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = dim(rng), c = dim(rng);
      Matrix m(r, c, f);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          m.at(i, j) = Scalar::from_int(f, val(rng));
      // rank(M) = rank(M^T)
      CHECK(m.rank() == m.transpose().rank());
      // kernel vectors satisfy M v = 0 exactly, and count cols - rank
      auto kernel = m.kernel_basis();
      CHECK(kernel.size() == c - m.rank());
      for (const auto& v : kernel) {
        for (const Scalar& y : m.apply(v)) CHECK(y.is_zero());
      }
      // M * solve(M, b) = b whenever solve succeeds
      std::vector<Scalar> b(r, Scalar::zero(f));
      for (auto& s : b) s = Scalar::from_int(f, val(rng));
      if (auto x = m.solve(b)) CHECK(m.apply(*x) == b);
    }
  }
}
