#include "qhg/hypergroup.hpp"

#include <sstream>

#include "qhg/errors.hpp"

namespace qhg {

namespace {

std::string basis_name(const StructureAlgebra& alg, std::size_t i) {
  return "e" + std::to_string(i) + " (" + alg.labels()[i] + ")";
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Empty when equal, otherwise names the first basis element (column) where
// the two linear maps differ.
std::string column_witness(const Matrix& a, const Matrix& b, const StructureAlgebra& alg) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (a.column(c) != b.column(c))
      return c < alg.dim() ? "at basis element " + basis_name(alg, c) : "at column " + std::to_string(c);
  return {};
}

std::string covector_witness(const Vector& a, const Vector& b, const StructureAlgebra& alg) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return "at basis element " + basis_name(alg, i) + ": " + a[i].to_string() + " vs " + b[i].to_string();
  return a.size() == b.size() ? std::string() : "length mismatch";
}

// Records a check and aborts the calling step when it fails.
void expect(Report& r, std::string name, std::string anchor, bool ok, std::string witness = {}) {
  r.add(name, anchor, ok, ok ? std::string() : witness);
  if (!ok) throw ValidationError(*r.first_failure());
}

void expect_all(Report& r, const Report& part) {
  for (const auto& c : part.checks()) expect(r, c.name, c.anchor, c.passed, c.witness);
}

void expect_equal(Report& r, std::string name, std::string anchor, const Matrix& lhs, const Matrix& rhs,
                  const StructureAlgebra& alg) {
  const std::string w = column_witness(lhs, rhs, alg);
  expect(r, std::move(name), std::move(anchor), w.empty(), w);
}

void record_equal(Report& r, std::string name, std::string anchor, const Matrix& lhs, const Matrix& rhs,
                  const StructureAlgebra& alg) {
  const std::string w = column_witness(lhs, rhs, alg);
  r.add(std::move(name), std::move(anchor), w.empty(), w);
}

const Vector& require_unit(const HypergroupData& h) {
  if (!h.alg.find_unit()) throw Error("operation requires a unital algebra");
  return *h.alg.find_unit();
}

// First (i, j) where f(e_i e_j) != g(e_i, e_j), or empty.
template <class Fn>
std::string first_bad_pair(std::size_t n, Fn&& ok) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!ok(i, j)) return pair_name(i, j);
  return {};
}

void check_shapes(const HypergroupData& h) {
  const std::size_t n = h.dim();
  if (h.comult.rows() != n * n || h.comult.cols() != n)
    throw DimensionMismatch("comult must be dim^2 x dim");
  if (h.counit.size() != n) throw DimensionMismatch("counit must have length dim");
  if (h.left_integral.size() != n) throw DimensionMismatch("left integral must have length dim");
  if (h.antipode && (h.antipode->rows() != n || h.antipode->cols() != n))
    throw DimensionMismatch("antipode must be dim x dim");
}

}  // namespace

Matrix slice_first(const Matrix& tensors, const Vector& f) {
  return kron(Matrix::row_matrix(f), Matrix::identity(f.size())) * tensors;
}

Matrix slice_second(const Matrix& tensors, const Vector& f) {
  return kron(Matrix::identity(f.size()), Matrix::row_matrix(f)) * tensors;
}

Vector multiply_out(const StructureAlgebra& alg, const Vector& t) {
  const std::size_t n = alg.dim();
  if (t.size() != n * n) throw DimensionMismatch("multiply_out: length must be dim^2");
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const Scalar& c = t[pair_index(n, k, l)];
      if (c.is_zero()) continue;
      const Vector& p = alg.mult(k, l);
      for (std::size_t a = 0; a < n; ++a)
        if (!p[a].is_zero()) out[a] += c * p[a];
    }
  return out;
}

Matrix outer(const Vector& u, const Vector& f) {
  Matrix m(u.size(), f.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j)
      if (!u[i].is_zero() && !f[j].is_zero()) m(i, j) = u[i] * f[j];
  return m;
}

Vector comult_apply(const HypergroupData& h, const Vector& a) {
  if (a.size() != h.dim()) throw DimensionMismatch("comult_apply: length must equal dim");
  return h.comult * a;
}

Report verify_comultiplication(const HypergroupData& h) {
  Report r;
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(n);
  const Matrix lhs = kron(h.comult, id) * h.comult;
  const Matrix rhs = kron(id, h.comult) * h.comult;
  record_equal(r, "coassociativity", "(Δ⊗ι)Δ = (ι⊗Δ)Δ", lhs, rhs, h.alg);
  r.add("comult-regular", "Δ(a)(b⊗1), (1⊗a)Δ(b) ∈ A⊗A", true,
        "automatic: A is finite-dimensional and unital, so M(A⊗A) = A⊗A");
  return r;
}

Report verify_counit(const HypergroupData& h) {
  Report r;
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(n);
  record_equal(r, "counit-left", "(ε⊗ι)Δ = ι", slice_first(h.comult, h.counit), id, h.alg);
  record_equal(r, "counit-right", "(ι⊗ε)Δ = ι", slice_second(h.comult, h.counit), id, h.alg);
  const std::string bad = first_bad_pair(n, [&](std::size_t i, std::size_t j) {
    return dot(h.counit, h.alg.mult(i, j)) == h.counit[i] * h.counit[j];
  });
  r.add("counit-multiplicative", "ε(ab) = ε(a)ε(b)", bad.empty(), bad);
  if (const auto& u = h.alg.find_unit()) {
    const Scalar v = dot(h.counit, *u);
    r.add("counit-unital", "ε(1) = 1", v.is_one(), v.is_one() ? "" : "ε(1) = " + v.to_string());
  } else {
    r.add("counit-unital", "ε(1) = 1", false, "algebra has no unit");
  }
  return r;
}

std::vector<Vector> counit_space(const HypergroupData& h) {
  const std::size_t n = h.dim();
  Matrix sys(n * n, n);
  Vector rhs(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < n; ++l) sys(j * n + k, l) = h.comult(pair_index(n, k, l), j);
      rhs[j * n + k] = j == k ? 1 : 0;
    }
  auto particular = solve_linear(sys, rhs);
  if (!particular) return {};
  std::vector<Vector> out{*particular};
  for (const auto& k : kernel(sys)) out.push_back(*particular + k);
  return out;
}

std::vector<Vector> integral_space(const HypergroupData& h, Side side) {
  const std::size_t n = h.dim();
  const Vector& u = require_unit(h);
  Matrix sys(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t row = j * n + k;
      for (std::size_t l = 0; l < n; ++l)
        sys(row, l) = side == Side::Left ? h.comult(pair_index(n, k, l), j) : h.comult(pair_index(n, l, k), j);
      sys(row, j) -= u[k];
    }
  return kernel(sys);
}

Matrix gram_matrix(const StructureAlgebra& alg, const Vector& f) {
  const std::size_t n = alg.dim();
  if (f.size() != n) throw DimensionMismatch("gram_matrix: covector length must equal dim");
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = dot(f, alg.mult(i, j));
  return g;
}

Report verify_faithful(const StructureAlgebra& alg, const Vector& f) {
  Report r;
  const Matrix g = gram_matrix(alg, f);
  const auto k = kernel(g);
  std::string w;
  if (!k.empty()) {
    std::ostringstream os;
    os << "f(aA) = 0 for a =";
    for (const auto& s : k.front()) os << ' ' << s;
    w = os.str();
  }
  r.add("faithful", "f(ab) = 0 ∀b ⇒ a = 0", k.empty(), w);
  return r;
}

std::vector<Vector> cointegral_space(const HypergroupData& h, Side side) {
  const std::size_t n = h.dim();
  Matrix sys(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vector ea = basis_vector(n, a);
    const Matrix m = side == Side::Left ? h.alg.left_mult_matrix(ea) : h.alg.right_mult_matrix(ea);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) sys(a * n + k, l) = m(k, l) - (k == l ? h.counit[a] : Scalar());
  }
  return kernel(sys);
}

bool coproduct_is_homomorphism(const HypergroupData& h) {
  const std::size_t n = h.dim();
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = h.comult.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h.comult * h.alg.mult(i, j) != h.alg.multiply_tensor(images[i], images[j])) return false;
  return true;
}

bool integral_positivity(const StructureAlgebra& alg, const Vector& f) {
  const std::size_t n = alg.dim();
  std::vector<Vector> stars(n);
  for (std::size_t i = 0; i < n; ++i) stars[i] = alg.apply_star(basis_vector(n, i));
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = dot(f, alg.multiply(stars[i], basis_vector(n, j)));
  if (!is_hermitian(g)) return false;
  return psd_check(g);
}

Matrix derive_antipode(const HypergroupData& h, Report& r) {
  const std::size_t n = h.dim();
  const Matrix gram = gram_matrix(h.alg, h.left_integral);
  // x_ij = (ι⊗φ)(Δ(e_i)(1⊗e_j)), y_ij = (ι⊗φ)((1⊗e_i)Δ(e_j)).
  Matrix x(n, n * n);
  Matrix y(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar xs;
        Scalar ys;
        for (std::size_t l = 0; l < n; ++l) {
          xs += h.comult(pair_index(n, k, l), i) * gram(l, j);
          ys += h.comult(pair_index(n, k, l), j) * gram(i, l);
        }
        x(k, pair_index(n, i, j)) = xs;
        y(k, pair_index(n, i, j)) = ys;
      }
  const std::size_t rk = rank(x);
  expect(r, "antipode-span", "sp{(ι⊗φ)(Δ(a)(1⊗b))} = A", rk == n,
         "span has dimension " + std::to_string(rk) + " < " + std::to_string(n));
  auto st = solve_linear(x.transpose(), y.transpose());
  std::string w;
  if (!st) {
    // Name the first pair whose value cannot be matched by any linear S.
    w = "no linear S maps every x_ij to y_ij";
  }
  expect(r, "antipode-consistent", "S((ι⊗φ)(Δ(a)(1⊗b))) = (ι⊗φ)((1⊗a)Δ(b))", st.has_value(), w);
  const Matrix s = st->transpose();
  expect(r, "antipode-bijective", "S is bijective", invert(s).has_value(), "S is singular");
  const std::string bad = first_bad_pair(n, [&](std::size_t i, std::size_t j) {
    return s * h.alg.mult(i, j) == h.alg.multiply(s.column(j), s.column(i));
  });
  expect(r, "antipode-antimultiplicative", "S(ab) = S(b)S(a)", bad.empty(), bad);
  return s;
}

Vector derive_right_integral(const HypergroupData& h, const Matrix& s, Report& r) {
  const std::size_t n = h.dim();
  const Vector psi = compose(h.left_integral, s);
  const Vector& u = require_unit(h);
  expect_equal(r, "right-integral-invariance", "(ψ⊗ι)Δ(a) = ψ(a)1", slice_first(h.comult, psi), outer(u, psi),
               h.alg);
  const Matrix rg = gram_matrix(h.alg, psi);
  const Matrix id = Matrix::identity(n);
  const std::string bad = first_bad_pair(n, [&](std::size_t a, std::size_t b) {
    // S((ψ⊗ι)((e_b⊗1)Δ(e_a))) against (ψ⊗ι)(Δ(e_b)(e_a⊗1)).
    Vector lhs_f(n), rhs_f(n);
    for (std::size_t k = 0; k < n; ++k) {
      lhs_f[k] = rg(b, k);
      rhs_f[k] = rg(k, a);
    }
    const Vector lhs = s * (kron(Matrix::row_matrix(lhs_f), id) * h.comult.column(a));
    const Vector rhs = kron(Matrix::row_matrix(rhs_f), id) * h.comult.column(b);
    return lhs == rhs;
  });
  expect(r, "right-integral-antipode", "S((ψ⊗ι)((b⊗1)Δ(a))) = (ψ⊗ι)(Δ(b)(a⊗1))", bad.empty(), bad);
  const bool faithful = invert(rg).has_value();
  expect(r, "right-integral-faithful", "ψ(ab) = 0 ∀b ⇒ a = 0", faithful, "Gram matrix of ψ is singular");
  const auto space = integral_space(h, Side::Right);
  bool contains = false;
  if (space.size() == 1) {
    // ψ must be a multiple of the basis vector.
    Matrix m = Matrix::from_columns({space.front()}, n);
    contains = solve_linear(m, psi).has_value();
  }
  expect(r, "right-integral-unique", "dim{right invariant functionals} = 1", contains,
         "right integral space has dimension " + std::to_string(space.size()));
  return psi;
}

std::pair<Vector, Vector> derive_modular_element(const HypergroupData& h, const Matrix& s, const Vector& psi,
                                                 Report& r) {
  const std::size_t n = h.dim();
  const Vector& phi = h.left_integral;
  const Vector& u = require_unit(h);
  const Matrix slices = slice_first(h.comult, phi);
  std::optional<Vector> delta;
  std::string w;
  for (std::size_t i = 0; i < n && w.empty(); ++i) {
    const Vector col = slices.column(i);
    if (phi[i].is_zero()) {
      if (!is_zero(col)) w = "nonzero slice at φ-null basis element " + basis_name(h.alg, i);
      continue;
    }
    const Vector cand = (Scalar(1) / phi[i]) * col;
    if (!delta) {
      delta = cand;
    } else if (*delta != cand) {
      w = "candidate from " + basis_name(h.alg, i) + " disagrees";
    }
  }
  expect(r, "modular-element-consistent", "(φ⊗ι)Δ(a) = φ(a)δ", w.empty() && delta.has_value(), w);
  const Vector d = *delta;
  const auto inv = solve_linear(h.alg.left_mult_matrix(d), u);
  const bool invertible = inv.has_value() && h.alg.multiply(*inv, d) == u;
  expect(r, "modular-element-invertible", "δδ⁻¹ = δ⁻¹δ = 1", invertible, "δ has no two-sided inverse");
  const Vector dinv = *inv;
  expect_equal(r, "modular-right-slice", "(ι⊗ψ)Δ(a) = ψ(a)δ⁻¹", slice_second(h.comult, psi), outer(dinv, psi),
               h.alg);
  const Vector lhs = compose(phi, s);
  const Vector rhs = compose(phi, h.alg.right_mult_matrix(d));
  const std::string cw = covector_witness(lhs, rhs, h.alg);
  expect(r, "modular-phi-antipode", "φ(S(a)) = φ(aδ)", cw.empty(), cw);
  const Scalar ed = dot(h.counit, d);
  expect(r, "modular-counit", "ε(δ) = 1", ed.is_one(), "ε(δ) = " + ed.to_string());
  expect(r, "modular-antipode", "S(δ) = δ⁻¹", s * d == dinv, "S(δ) differs from δ⁻¹");
  return {d, dinv};
}

Matrix derive_sigma(const HypergroupData& h, Report& r) {
  const std::size_t n = h.dim();
  const Matrix gram = gram_matrix(h.alg, h.left_integral);
  const auto ginv = invert(gram);
  expect(r, "sigma-gram-invertible", "det[φ(e_i e_j)] ≠ 0", ginv.has_value(), "Gram matrix of φ is singular");
  const Matrix sigma = *ginv * gram.transpose();
  const std::string bad_def = first_bad_pair(n, [&](std::size_t a, std::size_t b) {
    return gram(a, b) == dot(h.left_integral, h.alg.multiply(basis_vector(n, b), sigma.column(a)));
  });
  expect(r, "sigma-defining", "φ(ab) = φ(bσ(a))", bad_def.empty(), bad_def);
  const std::string bad_mul = first_bad_pair(n, [&](std::size_t i, std::size_t j) {
    return sigma * h.alg.mult(i, j) == h.alg.multiply(sigma.column(i), sigma.column(j));
  });
  expect(r, "sigma-multiplicative", "σ(ab) = σ(a)σ(b)", bad_mul.empty(), bad_mul);
  expect(r, "sigma-bijective", "σ is bijective", invert(sigma).has_value(), "σ is singular");
  const std::string inv_w = covector_witness(compose(h.left_integral, sigma), h.left_integral, h.alg);
  expect(r, "sigma-invariance", "φ∘σ = φ", inv_w.empty(), inv_w);
  return sigma;
}

Matrix derive_sigma_prime(const HypergroupData& h, const Matrix& s, const Matrix& sigma, const Vector& psi,
                          Report& r) {
  const std::size_t n = h.dim();
  const Matrix sp = *invert(s) * *invert(sigma) * s;
  const Matrix rg = gram_matrix(h.alg, psi);
  const std::string bad_def = first_bad_pair(n, [&](std::size_t a, std::size_t b) {
    return rg(a, b) == dot(psi, h.alg.multiply(basis_vector(n, b), sp.column(a)));
  });
  expect(r, "sigma-prime-defining", "ψ(ab) = ψ(bσ′(a))", bad_def.empty(), bad_def);
  const std::string bad_mul = first_bad_pair(n, [&](std::size_t i, std::size_t j) {
    return sp * h.alg.mult(i, j) == h.alg.multiply(sp.column(i), sp.column(j));
  });
  expect(r, "sigma-prime-multiplicative", "σ′(ab) = σ′(a)σ′(b)", bad_mul.empty(), bad_mul);
  expect(r, "sigma-prime-bijective", "σ′ is bijective", invert(sp).has_value(), "σ′ is singular");
  const std::string inv_w = covector_witness(compose(psi, sp), psi, h.alg);
  expect(r, "sigma-prime-invariance", "ψ∘σ′ = ψ", inv_w.empty(), inv_w);
  return sp;
}

Scalar derive_scaling_constant(const HypergroupData& h, const Matrix& s, Report& r) {
  const Vector& phi = h.left_integral;
  const Vector lhs = compose(phi, s * s);
  std::optional<Scalar> tau;
  for (std::size_t i = 0; i < phi.size() && !tau; ++i)
    if (!phi[i].is_zero()) tau = lhs[i] / phi[i];
  const bool ok = tau.has_value() && lhs == *tau * phi;
  expect(r, "scaling-constant", "φ∘S² = τφ", ok, "φ∘S² is not a multiple of φ");
  return *tau;
}

Report verify_structural_relations(const HypergroupData& h, const DerivedData& d) {
  Report r;
  const std::size_t n = h.dim();
  const StructureAlgebra& alg = h.alg;
  const Matrix& s = d.antipode;
  const Matrix s2 = s * s;
  const Matrix s2inv = d.antipode_inv * d.antipode_inv;
  const Matrix& sg = d.sigma;
  const Matrix& sp = d.sigma_prime;

  const std::string ew = covector_witness(compose(h.counit, s), h.counit, alg);
  r.add("antipode-counit", "ε∘S = ε", ew.empty(), ew);
  record_equal(r, "antipode-flips-comult", "Δ∘S = ζ(S⊗S)Δ", h.comult * s, flip_matrix(n) * kron(s, s) * h.comult,
               alg);
  record_equal(r, "modular-sigma-antipode", "σ∘S∘σ′ = S", sg * s * sp, s, alg);
  const Matrix conj_by_delta = alg.left_mult_matrix(d.modular) * alg.right_mult_matrix(d.modular_inv) * sg;
  record_equal(r, "modular-sigma-conjugate", "σ′(a) = δσ(a)δ⁻¹", sp, conj_by_delta, alg);
  const Vector delta_over_tau = (Scalar(1) / d.scaling) * d.modular;
  r.add("modular-sigma-delta", "σ(δ) = δ/τ", sg * d.modular == delta_over_tau);
  r.add("modular-sigma-prime-delta", "σ′(δ) = δ/τ", sp * d.modular == delta_over_tau);
  record_equal(r, "modular-sigma-commute", "σσ′ = σ′σ", sg * sp, sp * sg, alg);
  record_equal(r, "modular-sigma-square-antipode", "σS² = S²σ", sg * s2, s2 * sg, alg);
  record_equal(r, "modular-sigma-prime-square-antipode", "σ′S² = S²σ′", sp * s2, s2 * sp, alg);
  record_equal(r, "modular-comult-sigma", "Δ∘σ = (S²⊗σ)∘Δ", h.comult * sg, kron(s2, sg) * h.comult, alg);
  record_equal(r, "modular-comult-sigma-prime", "Δ∘σ′ = (σ′⊗S⁻²)∘Δ", h.comult * sp, kron(sp, s2inv) * h.comult,
               alg);
  record_equal(r, "modular-comult-square-antipode", "Δ∘S² = (σ⊗σ′⁻¹)∘Δ", h.comult * s2,
               kron(sg, d.sigma_prime_inv) * h.comult, alg);
  return r;
}

Report verify_hopf_conditions(const HypergroupData& h, const DerivedData& d) {
  Report r;
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(n);
  const Matrix s_left = kron(d.antipode, id);
  const Matrix s_right = kron(id, d.antipode);
  const std::string bad_l = first_bad_pair(n, [&](std::size_t x, std::size_t y) {
    const Vector t = kron(id, h.alg.right_mult_matrix(basis_vector(n, y))) * h.comult.column(x);
    return multiply_out(h.alg, s_left * t) == h.counit[x] * basis_vector(n, y);
  });
  r.add("hopf-antipode-left", "m((S⊗ι)(Δ(x)(1⊗y))) = ε(x)y", bad_l.empty(), bad_l);
  const std::string bad_r = first_bad_pair(n, [&](std::size_t x, std::size_t y) {
    const Vector t = kron(h.alg.left_mult_matrix(basis_vector(n, x)), id) * h.comult.column(y);
    return multiply_out(h.alg, s_right * t) == h.counit[y] * basis_vector(n, x);
  });
  r.add("hopf-antipode-right", "m((ι⊗S)((x⊗1)Δ(y))) = ε(y)x", bad_r.empty(), bad_r);
  return r;
}

Report verify_star_axioms(const HypergroupData& h, const DerivedData& d) {
  const StructureAlgebra& alg = h.alg;
  const Matrix& k = alg.star_matrix();
  Report r;
  const std::size_t n = h.dim();
  std::string w;
  for (std::size_t j = 0; j < n && w.empty(); ++j) {
    const Vector ej = basis_vector(n, j);
    if (h.comult * alg.apply_star(ej) != alg.apply_star_tensor(h.comult * ej)) w = "at basis element " + basis_name(alg, j);
  }
  r.add("comult-star", "Δ(a*) = Δ(a)*", w.empty(), w);
  const std::string ew = covector_witness(compose(h.counit, k), conj(h.counit), alg);
  r.add("counit-star", "ε(a*) = conj ε(a)", ew.empty(), ew);
  const std::string pw = covector_witness(compose(h.left_integral, k), conj(h.left_integral), alg);
  r.add("left-integral-self-adjoint", "φ(a*) = conj φ(a)", pw.empty(), pw);
  w.clear();
  for (std::size_t j = 0; j < n && w.empty(); ++j) {
    const Vector ej = basis_vector(n, j);
    if (alg.apply_star(d.antipode * alg.apply_star(d.antipode * ej)) != ej) w = "at basis element " + basis_name(alg, j);
  }
  r.add("star-antipode", "S(S(x)*)* = x", w.empty(), w);
  r.add("star-modular", "δ* = δ", alg.apply_star(d.modular) == d.modular);
  const Scalar t2 = d.scaling * d.scaling.conj();
  r.add("star-scaling", "τ·conj(τ) = 1", t2.is_one(), t2.is_one() ? "" : "|τ|² = " + t2.to_string());
  return r;
}

TypeFlags classify_type(const HypergroupData& h) {
  TypeFlags t;
  const auto& u = h.alg.find_unit();
  t.compact = u.has_value() && h.comult * *u == tensor(*u, *u);
  const auto coint = cointegral_space(h, Side::Left);
  t.discrete = !coint.empty();
  t.finite = t.compact && t.discrete;
  for (const auto& c : coint)
    if (dot(h.left_integral, c).is_zero())
      throw ValidationError({"cointegral-integral-nonzero", "φ(h) ≠ 0 for a left co-integral h", false,
                             "φ vanishes on a left co-integral"});
  return t;
}

PipelineResult run_pipeline(const HypergroupData& h, Level level) {
  PipelineResult out;
  Report& r = out.report;
  try {
    try {
      check_shapes(h);
      r.add("structure-map-dimensions", "Δ: A → A⊗A, ε, φ ∈ A′", true);
    } catch (const DimensionMismatch& e) {
      expect(r, "structure-map-dimensions", "Δ: A → A⊗A, ε, φ ∈ A′", false, e.what());
    }
    const StructureAlgebra& alg = h.alg;
    const std::size_t n = h.dim();

    expect_all(r, alg.check_associativity());
    expect_all(r, alg.check_nondegenerate());
    expect(r, "algebra-unit", "A has a unit", alg.find_unit().has_value(), "no u with ua = a = au for all a");
    if (alg.has_star())
      expect_all(r, alg.check_star());

    expect_all(r, verify_comultiplication(h));
    expect_all(r, verify_counit(h));
    const auto counits = counit_space(h);
    expect(r, "counit-unique", "(ι⊗ε′)Δ = ι ⇒ ε′ = ε", counits.size() == 1 && counits.front() == h.counit,
           "counit solution set has " + std::to_string(counits.size()) + " spanning elements");

    expect(r, "left-integral-nonzero", "φ ≠ 0", !is_zero(h.left_integral), "φ = 0");
    expect_equal(r, "left-integral-invariance", "(ι⊗φ)Δ(a) = φ(a)1", slice_second(h.comult, h.left_integral),
                 outer(*alg.find_unit(), h.left_integral), alg);
    const Report faithful = verify_faithful(alg, h.left_integral);
    for (const auto& c : faithful.checks())
      expect(r, "left-integral-faithful", "φ(ab) = 0 ∀b ⇒ a = 0", c.passed, c.witness);
    const auto lspace = integral_space(h, Side::Left);
    expect(r, "left-integral-unique", "dim{left invariant functionals} = 1", lspace.size() == 1,
           "left integral space has dimension " + std::to_string(lspace.size()));

    if (level == Level::Axioms) {
      // Definition-level existence of the antipode is part of the axioms.
      derive_antipode(h, r);
      return out;
    }

    DerivedData d;
    d.gram = gram_matrix(alg, h.left_integral);
    d.antipode = derive_antipode(h, r);
    d.antipode_inv = *invert(d.antipode);
    if (h.antipode) {
      const std::string w = column_witness(*h.antipode, d.antipode, alg);
      expect(r, "antipode-matches-claimed", "S = supplied antipode", w.empty(), w);
    }
    const Vector& u = *alg.find_unit();
    expect(r, "unit-comult", "Δ(1) = 1⊗1", h.comult * u == tensor(u, u), "Δ(1) ≠ 1⊗1");
    d.right_integral = derive_right_integral(h, d.antipode, r);
    d.right_gram = gram_matrix(alg, d.right_integral);
    std::tie(d.modular, d.modular_inv) = derive_modular_element(h, d.antipode, d.right_integral, r);
    d.sigma = derive_sigma(h, r);
    d.sigma_inv = *invert(d.sigma);
    d.sigma_prime = derive_sigma_prime(h, d.antipode, d.sigma, d.right_integral, r);
    d.sigma_prime_inv = *invert(d.sigma_prime);
    d.scaling = derive_scaling_constant(h, d.antipode, r);
    expect_all(r, verify_structural_relations(h, d));

    try {
      out.type = classify_type(h);
    } catch (const ValidationError& e) {
      expect(r, e.record().name, e.record().anchor, false, e.record().witness);
    }
    r.add("cointegral-integral-nonzero", "φ(h) ≠ 0 for a left co-integral h", true);
    expect(r, "type-finite", "compact ∧ discrete", out.type.finite,
           std::string("compact=") + (out.type.compact ? "yes" : "no") + " discrete=" + (out.type.discrete ? "yes" : "no"));

    out.homomorphic = coproduct_is_homomorphism(h);
    if (out.homomorphic)
      expect_all(r, verify_hopf_conditions(h, d));

    if (alg.has_star())
      expect_all(r, verify_star_axioms(h, d));
    (void)n;
    out.derived = std::move(d);
  } catch (const ValidationError&) {
    out.derived.reset();
  }
  return out;
}

QuantumHypergroup QuantumHypergroup::create(HypergroupData data) {
  PipelineResult res = run_pipeline(data, Level::Derived);
  if (!res.derived) {
    if (const auto* f = res.report.first_failure()) throw ValidationError(*f);
    throw Error("pipeline aborted without a failure record");
  }
  return QuantumHypergroup(std::move(data), std::move(*res.derived), std::move(res.report), res.type, res.homomorphic);
}

}  // namespace qhg
