#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "qhg/errors.hpp"

using namespace qhg;
using fx::q;

namespace {

// 2x2 matrices on E11, E12, E21, E22 with the conjugate transpose.
StructureAlgebra matrix_units() {
  std::vector<std::vector<Vector>> mult(4, std::vector<Vector>(4, zero_vector(4)));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          if (b == c) mult[2 * a + b][2 * c + d] = basis_vector(4, 2 * a + d);
  const Matrix star{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  return StructureAlgebra({"E11", "E12", "E21", "E22"}, mult, star);
}

StructureAlgebra polynomial_mod_x2() {
  std::vector<std::vector<Vector>> mult{{{q(1), q(0)}, {q(0), q(1)}}, {{q(0), q(1)}, {q(0), q(0)}}};
  return StructureAlgebra({"1", "x"}, mult);
}

}  // namespace

TEST_CASE("matrix algebra structure") {
  const StructureAlgebra m = matrix_units();
  CHECK(m.check_associativity().ok());
  CHECK(m.check_nondegenerate().ok());
  REQUIRE(m.find_unit());
  CHECK(*m.find_unit() == Vector{q(1), q(0), q(0), q(1)});
  CHECK(m.check_star().ok());
  CHECK(m.multiply(basis_vector(4, 1), basis_vector(4, 2)) == basis_vector(4, 0));
}

TEST_CASE("products match explicit 2x2 matrix multiplication") {
  const StructureAlgebra m = matrix_units();
  std::mt19937 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = fx::random_vector(rng, 4, true), y = fx::random_vector(rng, 4, true);
    const Matrix mx{{x[0], x[1]}, {x[2], x[3]}}, my{{y[0], y[1]}, {y[2], y[3]}};
    const Matrix p = mx * my;
    CHECK(m.multiply(x, y) == Vector{p(0, 0), p(0, 1), p(1, 0), p(1, 1)});
    CHECK(m.left_mult_matrix(x) * y == m.multiply(x, y));
    CHECK(m.right_mult_matrix(y) * x == m.multiply(x, y));
    const Matrix a = mx.conj_transpose();
    CHECK(m.apply_star(x) == Vector{a(0, 0), a(0, 1), a(1, 0), a(1, 1)});
  }
}

TEST_CASE("tensor square multiplies factorwise") {
  const StructureAlgebra m = matrix_units();
  std::mt19937 rng(2);
  const Vector a = fx::random_vector(rng, 4), b = fx::random_vector(rng, 4), c = fx::random_vector(rng, 4),
               d = fx::random_vector(rng, 4);
  CHECK(m.multiply_tensor(tensor(a, b), tensor(c, d)) == tensor(m.multiply(a, c), m.multiply(b, d)));
  CHECK(m.tensor_square().multiply(tensor(a, b), tensor(c, d)) == tensor(m.multiply(a, c), m.multiply(b, d)));
  CHECK(m.apply_star_tensor(tensor(a, b)) == tensor(m.apply_star(a), m.apply_star(b)));
}

TEST_CASE("non-associative table is reported with a witness") {
  auto mult = matrix_units().mult_table();
  mult[0][1] = basis_vector(4, 2);
  const StructureAlgebra bad({"E11", "E12", "E21", "E22"}, mult);
  const Report r = bad.check_associativity();
  REQUIRE_FALSE(r.ok());
  CHECK(r.first_failure()->name == "associativity");
  CHECK_FALSE(r.first_failure()->witness.empty());
}

TEST_CASE("degenerate product") {
  std::vector<std::vector<Vector>> mult(2, std::vector<Vector>(2, zero_vector(2)));
  mult[0][0] = basis_vector(2, 0);
  const StructureAlgebra a({"e", "n"}, mult);
  CHECK(a.check_associativity().ok());
  CHECK_FALSE(a.check_nondegenerate().ok());
  CHECK_FALSE(a.find_unit());
}

TEST_CASE("star checks") {
  const StructureAlgebra p = polynomial_mod_x2();
  CHECK_FALSE(p.has_star());
  CHECK_THROWS_AS(p.star_matrix(), StarAbsent);
  CHECK(p.with_star(Matrix::identity(2)).check_star().ok());
  const StructureAlgebra bad = matrix_units().with_star(Matrix::identity(4));
  CHECK_FALSE(bad.check_star().ok());
}

TEST_CASE("shape mismatch") {
  std::vector<std::vector<Vector>> mult(2, std::vector<Vector>(2, zero_vector(3)));
  CHECK_THROWS_AS(StructureAlgebra({"a", "b"}, mult), DimensionMismatch);
}
