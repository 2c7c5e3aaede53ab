#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhg/linalg.hpp"
#include "qhg/report.hpp"

namespace qhg {

/// Finite-dimensional associative algebra presented by structure constants:
/// mult(i, j) holds the coefficients of e_i e_j. An optional *-involution is
/// stored as x -> K conj(x).
class StructureAlgebra {
 public:
  StructureAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vector>> mult,
                   std::optional<Matrix> star = std::nullopt);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& mult(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  const std::vector<std::vector<Vector>>& mult_table() const { return mult_; }

  Vector multiply(const Vector& x, const Vector& y) const;
  /// Product in A⊗A on the canonical flattened layout: (a⊗b)(c⊗d) = ac⊗bd.
  Vector multiply_tensor(const Vector& x, const Vector& y) const;

  /// Matrix of y -> x y.
  Matrix left_mult_matrix(const Vector& x) const;
  /// Matrix of y -> y x.
  Matrix right_mult_matrix(const Vector& x) const;

  Report check_associativity() const;
  Report check_nondegenerate() const;

  /// The unit, computed once at construction.
  const std::optional<Vector>& find_unit() const { return unit_; }

  StructureAlgebra tensor_square() const;

  bool has_star() const { return star_.has_value(); }
  /// Throws StarAbsent when no involution is attached.
  const Matrix& star_matrix() const;
  Vector apply_star(const Vector& x) const;
  /// Componentwise involution on A⊗A: (a⊗b)* = a*⊗b*.
  Vector apply_star_tensor(const Vector& x) const;
  Report check_star() const;

  StructureAlgebra with_star(Matrix k) const;

 private:
  std::optional<Vector> solve_unit() const;

  std::vector<std::string> labels_;
  std::vector<std::vector<Vector>> mult_;
  std::optional<Matrix> star_;
  std::optional<Vector> unit_;
};

}  // namespace qhg
