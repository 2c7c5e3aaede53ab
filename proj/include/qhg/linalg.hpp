#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qhg/scalar.hpp"

namespace qhg {

/// Element of A (or a covector on A): coefficients against the basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Vector conj(const Vector& v);
/// Bilinear sum a_i b_i (no conjugation); the evaluation of a covector.
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

/// Canonical A⊗A layout: (i, j) -> i*n + j, first factor is the slow index.
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }
/// Flattened x⊗y.
Vector tensor(const Vector& x, const Vector& y);

/// Dense row-major matrix of exact scalars with explicit dimensions.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  /// 1 x n matrix holding a covector.
  static Matrix row_matrix(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix conj_transpose() const;
  Matrix conj() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Covector times matrix: (f∘M)_j = Σ_k f_k M_kj.
Vector compose(const Vector& covector, const Matrix& m);

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free (Bareiss over the Gaussian integers) elimination followed by
/// exact back-substitution to reduced row echelon form.
Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One exact solution of M x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& rhs);

/// One exact solution of M X = B (column by column), or nullopt.
std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& rhs);

/// Basis of the right nullspace; empty iff M is injective.
std::vector<Vector> kernel(const Matrix& m);

/// Exact inverse, or nullopt when singular. Throws DimensionMismatch when not square.
std::optional<Matrix> invert(const Matrix& m);

/// Kronecker product matching the canonical tensor layout:
/// kron(M, N) * tensor(x, y) == tensor(M x, N y).
Matrix kron(const Matrix& m, const Matrix& n);

/// Permutation x⊗y -> y⊗x on the flattened n^2 space.
Matrix flip_matrix(std::size_t n);

/// Indices of pivot columns: the columns of M at these indices form a basis
/// of its column space.
std::vector<std::size_t> column_space_pivots(const Matrix& m);

bool is_hermitian(const Matrix& g);

/// Exact positive-semidefiniteness by pivoted LDL^H. Throws NotHermitian.
bool psd_check(const Matrix& g);

}  // namespace qhg
