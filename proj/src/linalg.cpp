#include "qhg/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qhg/errors.hpp"

namespace qhg {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionMismatch(what);
}

// Gaussian integer used inside the fraction-free elimination.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
};

// Exact quotient a / b in Z[i]; Bareiss guarantees divisibility.
GaussInt exact_div(const GaussInt& a, const GaussInt& b) {
  if (sgn(b.im) == 0 && b.re == 1) return a;
  const mpz_class n = b.re * b.re + b.im * b.im;
  GaussInt t{a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im};
  if (!mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t()))
    throw std::logic_error("Bareiss step produced an inexact Gaussian-integer division");
  mpz_divexact(t.re.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(t.im.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  return t;
}

// Clears denominators row by row so the matrix lives over Z[i].
std::vector<std::vector<GaussInt>> integer_rows(const Matrix& m) {
  std::vector<std::vector<GaussInt>> out(m.rows(), std::vector<GaussInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& s = m(r, c);
      out[r][c].re = l / s.re().get_den() * s.re().get_num();
      out[r][c].im = l / s.im().get_den() * s.im().get_num();
    }
  }
  return out;
}

}  // namespace

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector add: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "vector sub: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x *= s;
  return out;
}

Vector conj(const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  require(a.size() == b.size(), "dot: length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vector tensor(const Vector& x, const Vector& y) {
  Vector out(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "matrix literal: ragged rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "from_rows: length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::row_matrix(const Vector& v) { return from_rows({v}, v.size()); }

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  require(v.size() == rows_, "set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t(*this);
  for (auto& x : t.data_) x = x.conj();
  return t;
}

Matrix Matrix::conj_transpose() const { return transpose().conj(); }

bool Matrix::is_zero() const { return qhg::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix add: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sub: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix product: inner dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

Vector operator*(const Matrix& m, const Vector& v) {
  require(m.cols_ == v.size(), "matrix-vector product: dimension mismatch");
  Vector out(m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

Vector compose(const Vector& covector, const Matrix& m) {
  require(covector.size() == m.rows(), "compose: dimension mismatch");
  Vector out(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (covector[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) out[j] += covector[k] * m(k, j);
  }
  return out;
}

Echelon row_reduce(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto a = integer_rows(m);

  // Fraction-free forward elimination.
  std::vector<std::size_t> pivots;
  GaussInt prev{1, 0};
  std::size_t k = 0;
  for (std::size_t col = 0; col < cols && k < rows; ++col) {
    std::size_t p = k;
    while (p < rows && a[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[k]);
    const GaussInt pivot = a[k][col];
    for (std::size_t i = k + 1; i < rows; ++i) {
      const GaussInt lead = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = exact_div(pivot * a[i][j] - lead * a[k][j], prev);
      }
      a[i][col] = GaussInt{};
    }
    prev = pivot;
    pivots.push_back(col);
    ++k;
  }

  // Back-substitution over Q(i).
  Matrix r(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = Scalar(mpq_class(a[i][j].re), mpq_class(a[i][j].im));
  for (std::size_t pi = pivots.size(); pi-- > 0;) {
    const std::size_t pc = pivots[pi];
    const Scalar inv = Scalar(1) / r(pi, pc);
    for (std::size_t j = pc; j < cols; ++j)
      if (!r(pi, j).is_zero()) r(pi, j) *= inv;
    for (std::size_t i = 0; i < pi; ++i) {
      const Scalar f = r(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < cols; ++j)
        if (!r(pi, j).is_zero()) r(i, j) -= f * r(pi, j);
    }
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<Vector> solve_linear(const Matrix& m, const Vector& rhs) {
  require(rhs.size() == m.rows(), "solve_linear: rhs length mismatch");
  Matrix b(m.rows(), 1);
  b.set_column(0, rhs);
  auto x = solve_linear(m, b);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& rhs) {
  require(rhs.rows() == m.rows(), "solve_linear: rhs rows mismatch");
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + rhs.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) aug(r, n + c) = rhs(r, c);
  }
  const Echelon e = row_reduce(aug);
  Matrix x(n, rhs.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= n) return std::nullopt;
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(e.pivots[k], c) = e.reduced(k, n + c);
  }
  return x;
}

std::vector<Vector> kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> invert(const Matrix& m) {
  require(m.is_square(), "invert: matrix not square");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_linear(m, Matrix::identity(m.rows()));
}

Matrix kron(const Matrix& m, const Matrix& n) {
  Matrix out(m.rows() * n.rows(), m.cols() * n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& mij = m(i, j);
      if (mij.is_zero()) continue;
      for (std::size_t k = 0; k < n.rows(); ++k)
        for (std::size_t l = 0; l < n.cols(); ++l)
          if (!n(k, l).is_zero()) out(i * n.rows() + k, j * n.cols() + l) = mij * n(k, l);
    }
  return out;
}

Matrix flip_matrix(std::size_t n) {
  Matrix z(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(pair_index(n, j, i), pair_index(n, i, j)) = 1;
  return z;
}

std::vector<std::size_t> column_space_pivots(const Matrix& m) { return row_reduce(m).pivots; }

bool is_hermitian(const Matrix& g) { return g.is_square() && g == g.conj_transpose(); }

bool psd_check(const Matrix& g) {
  if (!is_hermitian(g)) throw NotHermitian();
  Matrix a = g;
  std::vector<std::size_t> live(a.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  while (!live.empty()) {
    // Diagonal entries of a Hermitian matrix are real.
    std::optional<std::size_t> pick;
    for (std::size_t idx = 0; idx < live.size(); ++idx) {
      const mpq_class& d = a(live[idx], live[idx]).re();
      if (sgn(d) < 0) return false;
      if (sgn(d) > 0 && !pick) pick = idx;
    }
    if (!pick) {
      // All remaining pivots vanish: PSD forces the whole block to vanish.
      for (auto r : live)
        for (auto c : live)
          if (!a(r, c).is_zero()) return false;
      return true;
    }
    const std::size_t p = live[*pick];
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(*pick));
    const Scalar d = a(p, p);
    for (auto r : live) {
      if (a(r, p).is_zero()) continue;
      const Scalar f = a(r, p) / d;
      for (auto c : live) a(r, c) -= f * a(p, c);
    }
  }
  return true;
}

}  // namespace qhg
