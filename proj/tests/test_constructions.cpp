#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "qhg/errors.hpp"

using namespace qhg;
using fx::q;

TEST_CASE("permutation groups") {
  const FiniteGroup& s3 = fx::s3();
  CHECK(s3.order() == 6);
  CHECK(s3.labels() == std::vector<std::string>{"e", "(23)", "(12)", "(123)", "(132)", "(13)"});
  CHECK(s3.identity() == 0);
  // (12)(23) = (123) with (pq)(x) = p(q(x))
  CHECK(s3.labels()[s3.mul(s3.index_of("(12)"), s3.index_of("(23)"))] == "(123)");
  CHECK(s3.inverse(s3.index_of("(123)")) == s3.index_of("(132)"));
  CHECK(fx::d4().order() == 8);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(cyclic_group(5).order() == 5);
  CHECK(cycle_notation({1, 0, 3, 2}) == "(12)(34)");
  CHECK(cycle_notation({0, 1, 2}) == "e");
  CHECK_THROWS_AS(s3.index_of("(1234)"), SchemaError);
}

TEST_CASE("group table validation") {
  CHECK_NOTHROW(FiniteGroup({"e", "a"}, {{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {{0, 1}, {1, 1}}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup({"e", "a"}, {{0, 2}, {1, 0}}), NotAGroup);
  // right-zero semigroup
  CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 1}, {0, 1}}), NotAGroup);
}

TEST_CASE("subgroups and double cosets") {
  const FiniteGroup& s3 = fx::s3();
  CHECK(subgroup_check(s3, fx::s3_h12()));
  CHECK_FALSE(subgroup_check(s3, fx::members(s3, {"e", "(12)", "(23)"})));
  CHECK_THROWS_AS(require_subgroup(s3, fx::members(s3, {"(12)"})), NotASubgroup);
  CHECK(is_normal(s3, fx::s3_a3()));
  CHECK_FALSE(is_normal(s3, fx::s3_h12()));
  for (const auto& [g, h] : std::vector<std::pair<FiniteGroup, Subgroup>>{
           {fx::s3(), fx::s3_h12()}, {fx::s3(), fx::s3_a3()}, {fx::d4(), fx::d4_h2()}}) {
    const auto lib = double_cosets(g, h);
    const auto brute = fx::brute_double_cosets(g, h);
    CHECK(lib.size() == brute.size());
    CHECK(lib[0][0] == g.identity());
    std::size_t total = 0;
    for (const auto& c : lib) total += c.size();
    CHECK(total == g.order());
    for (auto k : fx::match_cosets(g, h, brute)) CHECK(k < brute.size());
  }
  CHECK(double_cosets(fx::d4(), fx::d4_h2()).size() == 3);
}

TEST_CASE("double-coset data on indicators") {
  const HypergroupData d = double_coset_data(fx::d4(), fx::d4_h2());
  CHECK(d.counit == Vector{q(1), q(0), q(0)});
  CHECK(d.left_integral == fx::brute_coset_sizes(fx::d4(), fx::d4_h2()));
  CHECK(d.alg.star_matrix() == Matrix::identity(3));
  CHECK_THROWS_AS(double_coset_data(fx::s3(), fx::members(fx::s3(), {"e", "(12)", "(23)"})), NotASubgroup);
}

TEST_CASE("function algebra and group algebra") {
  const QuantumHypergroup k = function_algebra(cyclic_group(3));
  CHECK(k.dim() == 3);
  CHECK(k.coproduct_is_homomorphism());
  CHECK(k.left_integral() == Vector{q(1), q(1), q(1)});
  const QuantumHypergroup c = group_algebra_hopf(fx::s3());
  CHECK(c.alg().labels()[2] == "λ(12)");
  CHECK(c.derived().antipode * basis_vector(6, 3) == basis_vector(6, 4));
  CHECK(c.left_integral() == basis_vector(6, 0));
  for (std::size_t p = 0; p < 6; ++p)
    CHECK(comult_apply(c.data(), basis_vector(6, p)) == tensor(basis_vector(6, p), basis_vector(6, p)));
}

TEST_CASE("hecke units are group-like projections") {
  const QuantumHypergroup c = group_algebra_hopf(fx::s3());
  const Vector u = hecke_unit(c, fx::s3(), fx::s3_h12());
  CHECK(u[0] == q(1, 2));
  CHECK(u[fx::s3().index_of("(12)")] == q(1, 2));
  CHECK(check_group_like_projection(c, u).ok());
  const Vector not_u = basis_vector(6, 2);
  CHECK_FALSE(check_group_like_projection(c, not_u).ok());
}

TEST_CASE("compressions") {
  for (const auto& [g, h, dim] : std::vector<std::tuple<FiniteGroup, Subgroup, std::size_t>>{
           {fx::s3(), fx::s3_h12(), 2}, {fx::s3(), fx::s3_a3(), 2}, {fx::d4(), fx::d4_h2(), 3}}) {
    const QuantumHypergroup c = group_algebra_hopf(g);
    const Vector u = hecke_unit(c, g, h);
    const QuantumHypergroup comp = group_like_projection_compression(c, u);
    CHECK(comp.dim() == dim);
    CHECK(comp.report().ok());
    CHECK(comp.coproduct_is_homomorphism() == is_normal(g, h));
    // compressed unit is u itself
    const Matrix basis = compression_basis(c, u);
    CHECK(basis * comp.unit() == u);
    CHECK(integral_positivity(comp.alg(), comp.left_integral()));
  }
}

TEST_CASE("Sweedler presentation") {
  const QuantumHypergroup h = sweedler_fixture();
  const auto& a = h.alg();
  const Vector one = basis_vector(4, 0), g = basis_vector(4, 1), x = basis_vector(4, 2), gx = basis_vector(4, 3);
  CHECK(a.multiply(g, g) == one);
  CHECK(is_zero(a.multiply(x, x)));
  CHECK(a.multiply(x, g) == q(-1) * gx);
  CHECK(comult_apply(h.data(), g) == tensor(g, g));
  CHECK(comult_apply(h.data(), x) == tensor(x, one) + tensor(g, x));
  CHECK(h.left_integral() == Vector{q(0), q(0), q(0), q(1)});
  CHECK(h.derived().antipode * x == q(-1) * gx);
}
