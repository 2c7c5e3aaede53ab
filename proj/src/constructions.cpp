#include "qhg/constructions.hpp"

#include "qhg/errors.hpp"

namespace qhg {

namespace {

std::vector<std::vector<Vector>> zero_table(std::size_t n) {
  return std::vector<std::vector<Vector>>(n, std::vector<Vector>(n, zero_vector(n)));
}

void require(const Report& r) { throw_if_failed(r); }

}  // namespace

HypergroupData double_coset_data(const FiniteGroup& g, const Subgroup& h) {
  const Subgroup sub = require_subgroup(g, h);
  const auto cosets = double_cosets(g, sub);
  const std::size_t n = cosets.size();
  const std::size_t order = g.order();
  std::vector<std::size_t> owner(order);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t x : cosets[c]) owner[x] = c;

  std::vector<std::string> labels;
  for (const auto& c : cosets) labels.push_back("H" + g.labels()[c.front()] + "H");
  auto mult = zero_table(n);
  for (std::size_t i = 0; i < n; ++i) mult[i][i][i] = 1;

  // counts[p][q][i] = #{h : p h q ∈ D_i}
  auto counts = [&](std::size_t p, std::size_t q) {
    std::vector<std::size_t> c(n, 0);
    for (std::size_t a : sub) ++c[owner[g.mul(g.mul(p, a), q)]];
    return c;
  };
  const Scalar weight(1, static_cast<long>(sub.size()));
  Matrix comult(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const auto ref = counts(cosets[k].front(), cosets[l].front());
      for (std::size_t p : cosets[k])
        for (std::size_t q : cosets[l])
          if (counts(p, q) != ref)
            throw ValidationError({"double-coset-constancy", "Δ(f)(p,q) constant on HpH × HqH", false,
                                   "pair (" + g.labels()[p] + "," + g.labels()[q] + ")"});
      for (std::size_t i = 0; i < n; ++i)
        if (ref[i] != 0) comult(pair_index(n, k, l), i) = weight * Scalar(static_cast<long>(ref[i]));
    }

  Vector counit(n), phi(n);
  Matrix antipode(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    counit[i] = i == owner[g.identity()] ? 1 : 0;
    phi[i] = Scalar(static_cast<long>(cosets[i].size()));
    antipode(owner[g.inverse(cosets[i].front())], i) = 1;
  }
  StructureAlgebra alg(std::move(labels), std::move(mult), Matrix::identity(n));
  return HypergroupData{std::move(alg), std::move(comult), std::move(counit), std::move(phi), std::move(antipode)};
}

QuantumHypergroup double_coset_hypergroup(const FiniteGroup& g, const Subgroup& h) {
  return QuantumHypergroup::create(double_coset_data(g, h));
}

QuantumHypergroup function_algebra(const FiniteGroup& g) { return double_coset_hypergroup(g, {g.identity()}); }

QuantumHypergroup group_algebra_hopf(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  auto mult = zero_table(n);
  Matrix comult(n * n, n);
  Matrix antipode(n, n);
  Matrix star(n, n);
  Vector counit(n, Scalar(1)), phi(n);
  for (std::size_t p = 0; p < n; ++p) {
    labels.push_back("λ" + g.labels()[p]);
    for (std::size_t q = 0; q < n; ++q) mult[p][q][g.mul(p, q)] = 1;
    comult(pair_index(n, p, p), p) = 1;
    antipode(g.inverse(p), p) = 1;
    star(g.inverse(p), p) = 1;
  }
  phi[g.identity()] = 1;
  StructureAlgebra alg(std::move(labels), std::move(mult), std::move(star));
  return QuantumHypergroup::create(
      HypergroupData{std::move(alg), std::move(comult), std::move(counit), std::move(phi), std::move(antipode)});
}

Report check_group_like_projection(const QuantumHypergroup& b, const Vector& u) {
  Report r;
  const StructureAlgebra& alg = b.alg();
  r.add("projection-idempotent", "u² = u", alg.multiply(u, u) == u);
  if (alg.has_star()) r.add("projection-self-adjoint", "u* = u", alg.apply_star(u) == u);
  const Vector lhs = alg.multiply_tensor(b.comult() * u, tensor(b.unit(), u));
  r.add("projection-group-like", "Δ(u)(1⊗u) = u⊗u", lhs == tensor(u, u));
  return r;
}

Vector hecke_unit(const QuantumHypergroup& group_algebra, const FiniteGroup& g, const Subgroup& h) {
  const Subgroup sub = require_subgroup(g, h);
  if (group_algebra.dim() != g.order()) throw DimensionMismatch("hecke_unit: algebra is not the group algebra of G");
  Vector u(g.order());
  const Scalar w(1, static_cast<long>(sub.size()));
  for (std::size_t a : sub) u[a] = w;
  require(check_group_like_projection(group_algebra, u));
  return u;
}

Matrix compression_basis(const QuantumHypergroup& b, const Vector& u) {
  const StructureAlgebra& alg = b.alg();
  const Matrix m = alg.left_mult_matrix(u) * alg.right_mult_matrix(u);
  std::vector<Vector> cols;
  for (std::size_t c : column_space_pivots(m)) cols.push_back(m.column(c));
  return Matrix::from_columns(cols, b.dim());
}

QuantumHypergroup group_like_projection_compression(const QuantumHypergroup& b, const Vector& u) {
  if (u.size() != b.dim()) throw DimensionMismatch("compression: u must have length dim");
  require(check_group_like_projection(b, u));
  const StructureAlgebra& alg = b.alg();
  const std::size_t n = b.dim();
  const Matrix proj = alg.left_mult_matrix(u) * alg.right_mult_matrix(u);
  const auto pivots = column_space_pivots(proj);
  const Matrix c = compression_basis(b, u);
  const std::size_t m = c.cols();

  std::vector<std::string> labels;
  for (std::size_t p : pivots) labels.push_back("u" + alg.labels()[p] + "u");
  std::vector<Vector> cols(m);
  for (std::size_t i = 0; i < m; ++i) cols[i] = c.column(i);

  Matrix products(n, m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) products.set_column(pair_index(m, i, j), alg.multiply(cols[i], cols[j]));
  const auto coeffs = solve_linear(c, products);
  if (!coeffs) throw Error("compression: uBu is not closed under multiplication");
  auto mult = zero_table(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mult[i][j] = coeffs->column(pair_index(m, i, j));

  const Matrix cut = kron(proj, proj) * b.comult() * c;
  const auto comult = solve_linear(kron(c, c), cut);
  if (!comult) throw Error("compression: (u⊗u)Δ(b)(u⊗u) leaves uBu⊗uBu");

  std::optional<Matrix> star;
  if (alg.has_star()) {
    const auto k = solve_linear(c, alg.star_matrix() * c.conj());
    if (!k) throw Error("compression: uBu is not closed under the involution");
    star = *k;
  }
  StructureAlgebra small(std::move(labels), std::move(mult), std::move(star));
  return QuantumHypergroup::create(HypergroupData{std::move(small), *comult, compose(b.counit(), c),
                                                  compose(b.left_integral(), c), std::nullopt});
}

HypergroupData sweedler_data() {
  // Index of g^a x^b is a + 2b.
  const std::size_t n = 4;
  auto index = [](int a, int b) { return static_cast<std::size_t>(a + 2 * b); };
  auto mult = zero_table(n);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          if (b + d >= 2) continue;
          // x^b g^c = (-1)^{bc} g^c x^b
          mult[index(a, b)][index(c, d)][index((a + c) % 2, b + d)] = (b * c) % 2 == 0 ? 1 : -1;
        }
  StructureAlgebra alg({"1", "g", "x", "gx"}, mult);
  const Vector one = basis_vector(n, 0), g = basis_vector(n, 1), x = basis_vector(n, 2);
  Matrix comult(n * n, n);
  comult.set_column(0, tensor(one, one));
  comult.set_column(1, tensor(g, g));
  comult.set_column(2, tensor(x, one) + tensor(g, x));
  comult.set_column(3, alg.multiply_tensor(comult.column(1), comult.column(2)));
  Vector counit{1, 1, 0, 0};
  HypergroupData data{std::move(alg), std::move(comult), std::move(counit), zero_vector(n), std::nullopt};
  const auto space = integral_space(data, Side::Left);
  if (space.size() != 1) throw Error("sweedler: left integral space is not one-dimensional");
  Vector phi = space.front();
  for (const auto& s : phi)
    if (!s.is_zero()) {
      phi = (Scalar(1) / s) * phi;
      break;
    }
  data.left_integral = phi;
  return data;
}

QuantumHypergroup sweedler_fixture() { return QuantumHypergroup::create(sweedler_data()); }

}  // namespace qhg
