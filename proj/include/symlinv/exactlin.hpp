#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symlinv {

// Arbitrary precision integers and rationals. mpq_class keeps values in
// lowest terms with a positive denominator after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "num/den" or "num" (optional sign). Throws DomainError on junk or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);

Integer factorial(long n);
/// binom(n, k), zero when k < 0 or k > n.
Integer binomial(long n, long k);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Rows given explicitly; every row must have `cols` entries.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix rref;                      // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row-echelon form. The forward pass is fraction-free (Bareiss) on
/// row-wise integer rescalings, back substitution is done over the rationals.
Echelon reduced_row_echelon(const Matrix& a);
std::size_t rank(const Matrix& a);
std::vector<Vector> kernel_basis(const Matrix& a);

struct SolveResult {
  std::optional<Vector> solution;  // empty when the system is inconsistent
  std::vector<Vector> kernel;
  bool consistent() const { return solution.has_value(); }
};

/// Solves A x = b. Underdetermined systems return one particular solution
/// (free variables set to zero) together with a kernel basis.
SolveResult solve(const Matrix& a, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// A linear subspace of Q^n, stored as the rows of its reduced row-echelon
/// basis. The echelon form is canonical so == is subspace equality.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient_dim);
  static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Linear constraints whose common kernel is this subspace.
  Matrix annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
/// T(V) for T: Q^cols -> Q^rows.
Subspace image(const Matrix& t, const Subspace& v);
/// {v : T v in W}.
Subspace preimage(const Matrix& t, const Subspace& w);

}  // namespace symlinv
