#include "symlinv/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "symlinv/errors.hpp"

namespace symlinv {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer factorial(long n) {
  if (n < 0) throw RangeError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) m(i, j) += aik * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix difference size mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- elimination

Echelon reduced_row_echelon(const Matrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  // Scale each row by the lcm of its denominators to work over Z.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m[r][c] = a(r, c).get_num() * (lcm / a(r, c).get_den());
    }
  }

  // Bareiss forward pass: after step k each remaining entry is a (k+1)-minor,
  // so division by the previous pivot is exact.
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Back substitution over Q.
  std::vector<Vector> out(r, Vector(cols));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i][j] = Rational(m[i][j]);
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = pivots[i];
    const Rational inv = 1 / out[i][pc];
    for (std::size_t j = pc; j < cols; ++j)
      if (out[i][j] != 0) out[i][j] *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      const Rational f = out[k][pc];
      if (f == 0) continue;
      for (std::size_t j = pc; j < cols; ++j)
        if (out[i][j] != 0) out[k][j] -= f * out[i][j];
    }
  }
  return Echelon{Matrix::from_rows(out, cols), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return reduced_row_echelon(a).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& a) {
  const Echelon e = reduced_row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: A.rows != length(b)");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const Echelon e = reduced_row_echelon(aug);
  SolveResult result;
  result.kernel = kernel_basis(a);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return result;  // 0 = 1 row
  Vector x = zero_vector(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(i, a.cols());
  result.solution = std::move(x);
  return result;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = reduced_row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
  return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const Echelon e = reduced_row_echelon(Matrix::from_rows(vectors, ambient_dim));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.basis_.push_back(e.rref.row(i));
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(unit_vector(ambient_dim, i));
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) {
    if (i >= ambient_dim) throw RangeError("coordinate index out of range");
    vs.push_back(unit_vector(ambient_dim, i));
  }
  return span(ambient_dim, vs);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
  if (symlinv::is_zero(v)) return true;
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, ambient_)) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Matrix Subspace::annihilator() const {
  if (basis_.empty()) return Matrix::identity(ambient_);
  return Matrix::from_rows(kernel_basis(basis_matrix()), ambient_);
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("sum: ambient dimension mismatch");
  std::vector<Vector> vs = u.basis();
  vs.insert(vs.end(), w.basis().begin(), w.basis().end());
  return Subspace::span(u.ambient_dim(), vs);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw DimensionMismatch("intersect: ambient dimension mismatch");
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || w.dim() == 0) return Subspace(n);
  // v = U^T c lies in W iff annihilator(W) U^T c = 0.
  const Matrix ut = u.basis_matrix().transpose();
  const Matrix constraints = w.annihilator() * ut;
  std::vector<Vector> vs;
  for (const Vector& c : kernel_basis(constraints)) vs.push_back(ut.apply(c));
  return Subspace::span(n, vs);
}

Subspace image(const Matrix& t, const Subspace& v) {
  if (t.cols() != v.ambient_dim()) throw DimensionMismatch("image: map domain mismatch");
  std::vector<Vector> vs;
  for (const Vector& b : v.basis()) vs.push_back(t.apply(b));
  return Subspace::span(t.rows(), vs);
}

Subspace preimage(const Matrix& t, const Subspace& w) {
  if (t.rows() != w.ambient_dim()) throw DimensionMismatch("preimage: map codomain mismatch");
  if (w.dim() == w.ambient_dim()) return Subspace::whole(t.cols());
  return Subspace::span(t.cols(), kernel_basis(w.annihilator() * t));
}

}  // namespace symlinv
