#include "qhg/algebra.hpp"

#include <sstream>

#include "qhg/errors.hpp"

namespace qhg {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

}  // namespace

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vector>> mult,
                                   std::optional<Matrix> star)
    : labels_(std::move(labels)), mult_(std::move(mult)), star_(std::move(star)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw DimensionMismatch("algebra: dimension must be positive");
  if (mult_.size() != n) throw DimensionMismatch("algebra: mult table has wrong number of rows");
  for (const auto& row : mult_) {
    if (row.size() != n) throw DimensionMismatch("algebra: mult table has wrong number of columns");
    for (const auto& v : row)
      if (v.size() != n) throw DimensionMismatch("algebra: product vector has wrong length");
  }
  if (star_ && (star_->rows() != n || star_->cols() != n))
    throw DimensionMismatch("algebra: star matrix must be dim x dim");
  unit_ = solve_unit();
}

Vector StructureAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("multiply: vector length must equal dim");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      const Vector& p = mult_[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  }
  return out;
}

Vector StructureAlgebra::multiply_tensor(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n * n || y.size() != n * n) throw DimensionMismatch("multiply_tensor: length must be dim^2");
  Vector out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& xij = x[pair_index(n, i, j)];
      if (xij.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar& ykl = y[pair_index(n, k, l)];
          if (ykl.is_zero()) continue;
          const Scalar c = xij * ykl;
          const Vector& left = mult_[i][k];
          const Vector& right = mult_[j][l];
          for (std::size_t a = 0; a < n; ++a) {
            if (left[a].is_zero()) continue;
            const Scalar ca = c * left[a];
            for (std::size_t b = 0; b < n; ++b)
              if (!right[b].is_zero()) out[pair_index(n, a, b)] += ca * right[b];
          }
        }
    }
  return out;
}

Matrix StructureAlgebra::left_mult_matrix(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(x, basis_vector(dim(), j)));
  return m;
}

Matrix StructureAlgebra::right_mult_matrix(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(basis_vector(dim(), j), x));
  return m;
}

Report StructureAlgebra::check_associativity() const {
  Report r;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = basis_vector(n, k);
        const Vector lhs = multiply(mult_[i][j], ek);
        const Vector rhs = multiply(basis_vector(n, i), mult_[j][k]);
        if (lhs != rhs) {
          r.add("associativity", "(ab)c = a(bc)", false, "basis triple " + triple(i, j, k));
          return r;
        }
      }
  r.add("associativity", "(ab)c = a(bc)", true);
  return r;
}

Report StructureAlgebra::check_nondegenerate() const {
  Report r;
  const std::size_t n = dim();
  // a -> (a e_j)_j and a -> (e_j a)_j, stacked over j.
  Matrix right_stack(n * n, n);
  Matrix left_stack(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        right_stack(j * n + k, i) = mult_[i][j][k];
        left_stack(j * n + k, i) = mult_[j][i][k];
      }
  auto describe = [&](const std::vector<Vector>& ker) {
    std::ostringstream os;
    os << "nonzero annihilator:";
    for (const auto& s : ker.front()) os << ' ' << s;
    return os.str();
  };
  const auto kr = kernel(right_stack);
  r.add("nondegenerate-left", "aA = 0 ⇒ a = 0", kr.empty(), kr.empty() ? "" : describe(kr));
  const auto kl = kernel(left_stack);
  r.add("nondegenerate-right", "Aa = 0 ⇒ a = 0", kl.empty(), kl.empty() ? "" : describe(kl));
  return r;
}

std::optional<Vector> StructureAlgebra::solve_unit() const {
  const std::size_t n = dim();
  Matrix sys(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t row = j * n + k;
      for (std::size_t i = 0; i < n; ++i) {
        sys(row, i) = mult_[i][j][k];
        sys(n * n + row, i) = mult_[j][i][k];
      }
      rhs[row] = rhs[n * n + row] = j == k ? 1 : 0;
    }
  return solve_linear(sys, rhs);
}

StructureAlgebra StructureAlgebra::tensor_square() const {
  const std::size_t n = dim();
  std::vector<std::string> labels;
  labels.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back(labels_[i] + "⊗" + labels_[j]);
  std::vector<std::vector<Vector>> mult(n * n, std::vector<Vector>(n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          mult[pair_index(n, i, j)][pair_index(n, k, l)] = tensor(mult_[i][k], mult_[j][l]);
  std::optional<Matrix> star;
  if (star_) star = kron(*star_, *star_);
  return StructureAlgebra(std::move(labels), std::move(mult), std::move(star));
}

const Matrix& StructureAlgebra::star_matrix() const {
  if (!star_) throw StarAbsent();
  return *star_;
}

Vector StructureAlgebra::apply_star(const Vector& x) const { return star_matrix() * conj(x); }

Vector StructureAlgebra::apply_star_tensor(const Vector& x) const {
  const Matrix& k = star_matrix();
  return kron(k, k) * conj(x);
}

Report StructureAlgebra::check_star() const {
  const Matrix& k = star_matrix();
  Report r;
  const std::size_t n = dim();
  // x** = K conj(K) x.
  r.add("star-involutive", "(x*)* = x", k * k.conj() == Matrix::identity(n));
  bool conj_linear = true;
  for (std::size_t j = 0; j < n && conj_linear; ++j) {
    const Vector e = basis_vector(n, j);
    conj_linear = apply_star(Scalar::i() * e) == Scalar(-1) * (Scalar::i() * apply_star(e));
  }
  r.add("star-conjugate-linear", "(λx)* = conj(λ)x*", conj_linear);
  std::string witness;
  for (std::size_t i = 0; i < n && witness.empty(); ++i)
    for (std::size_t j = 0; j < n && witness.empty(); ++j) {
      const Vector lhs = apply_star(mult_[i][j]);
      const Vector rhs = multiply(apply_star(basis_vector(n, j)), apply_star(basis_vector(n, i)));
      if (lhs != rhs) witness = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  r.add("star-antimultiplicative", "(xy)* = y*x*", witness.empty(), witness);
  return r;
}

StructureAlgebra StructureAlgebra::with_star(Matrix k) const { return StructureAlgebra(labels_, mult_, std::move(k)); }

}  // namespace qhg
