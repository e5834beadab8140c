#include "symlinv/sl2rep.hpp"

#include <utility>

#include "symlinv/errors.hpp"

namespace symlinv {

namespace {

void check_length(int m, const Vector& c, const char* what) {
  if (m < 0) throw RangeError(std::string(what) + ": negative highest weight");
  if (c.size() != static_cast<std::size_t>(m) + 1)
    throw DimensionMismatch(std::string(what) + ": coefficient vector must have length m+1");
}

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

RepVector::RepVector(int m_, Vector c) : m(m_), coeffs(std::move(c)) {
  check_length(m, coeffs, "RepVector");
}
RepVector RepVector::zero(int m) { return RepVector(m, zero_vector(sz(m) + 1)); }
RepVector RepVector::basis(int m, int i) {
  if (i < 0 || i > m) throw RangeError("basis index out of range");
  return RepVector(m, unit_vector(sz(m) + 1, sz(i)));
}

DualRepVector::DualRepVector(int m_, Vector c) : m(m_), coeffs(std::move(c)) {
  check_length(m, coeffs, "DualRepVector");
}
DualRepVector DualRepVector::zero(int m) { return DualRepVector(m, zero_vector(sz(m) + 1)); }
DualRepVector DualRepVector::basis(int m, int i) {
  if (i < 0 || i > m) throw RangeError("basis index out of range");
  return DualRepVector(m, unit_vector(sz(m) + 1, sz(i)));
}

EndoElement::EndoElement(int n_, Matrix c) : n(n_), coeffs(std::move(c)) {
  if (n < 0) throw RangeError("EndoElement: negative highest weight");
  if (coeffs.rows() != sz(n) + 1 || coeffs.cols() != sz(n) + 1)
    throw DimensionMismatch("EndoElement: grid must be (n+1)x(n+1)");
}
EndoElement EndoElement::zero(int n) { return EndoElement(n, Matrix(sz(n) + 1, sz(n) + 1)); }
EndoElement EndoElement::identity(int n) { return EndoElement(n, Matrix::identity(sz(n) + 1)); }
EndoElement EndoElement::unit(int n, int i, int j) {
  if (i < 0 || i > n || j < 0 || j > n) throw RangeError("matrix unit index out of range");
  EndoElement e = zero(n);
  e.coeffs(sz(i), sz(j)) = 1;
  return e;
}
EndoElement EndoElement::diagonal(const Vector& diag) {
  if (diag.empty()) throw DimensionMismatch("diagonal must be non-empty");
  const int n = static_cast<int>(diag.size()) - 1;
  EndoElement e = zero(n);
  for (std::size_t i = 0; i < diag.size(); ++i) e.coeffs(i, i) = diag[i];
  return e;
}

Vector EndoElement::flatten() const {
  Vector v;
  v.reserve(coeffs.rows() * coeffs.cols());
  for (std::size_t i = 0; i < coeffs.rows(); ++i)
    for (std::size_t j = 0; j < coeffs.cols(); ++j) v.push_back(coeffs(i, j));
  return v;
}

EndoElement EndoElement::unflatten(int n, const Vector& v) {
  const std::size_t d = sz(n) + 1;
  if (v.size() != d * d) throw DimensionMismatch("unflatten: length must be (n+1)^2");
  EndoElement e = zero(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) e.coeffs(i, j) = v[i * d + j];
  return e;
}

// L g_i = (m-i) g_{i+1}, R g_i = i g_{i-1}, H g_i = (m-2i) g_i.
RepVector lower(const RepVector& v) {
  RepVector out = RepVector::zero(v.m);
  for (int i = 0; i < v.m; ++i) out.coeffs[sz(i + 1)] += (v.m - i) * v.coeffs[sz(i)];
  return out;
}

RepVector raise(const RepVector& v) {
  RepVector out = RepVector::zero(v.m);
  for (int i = 1; i <= v.m; ++i) out.coeffs[sz(i - 1)] += i * v.coeffs[sz(i)];
  return out;
}

RepVector weight_op(const RepVector& v) {
  RepVector out = v;
  for (int i = 0; i <= v.m; ++i) out.coeffs[sz(i)] *= (v.m - 2 * i);
  return out;
}

// L g_i^dual = -(m+1-i) g_{i-1}^dual, R g_i^dual = -(i+1) g_{i+1}^dual.
DualRepVector lower(const DualRepVector& v) {
  DualRepVector out = DualRepVector::zero(v.m);
  for (int i = 1; i <= v.m; ++i) out.coeffs[sz(i - 1)] -= (v.m + 1 - i) * v.coeffs[sz(i)];
  return out;
}

DualRepVector raise(const DualRepVector& v) {
  DualRepVector out = DualRepVector::zero(v.m);
  for (int i = 0; i < v.m; ++i) out.coeffs[sz(i + 1)] -= (i + 1) * v.coeffs[sz(i)];
  return out;
}

DualRepVector weight_op(const DualRepVector& v) {
  DualRepVector out = v;
  for (int i = 0; i <= v.m; ++i) out.coeffs[sz(i)] *= -(v.m - 2 * i);
  return out;
}

RepVector apply(Sl2Op x, const RepVector& v) {
  switch (x) {
    case Sl2Op::L: return lower(v);
    case Sl2Op::R: return raise(v);
    case Sl2Op::H: return weight_op(v);
  }
  throw DomainError("unknown sl2 operator");
}

DualRepVector apply(Sl2Op x, const DualRepVector& v) {
  switch (x) {
    case Sl2Op::L: return lower(v);
    case Sl2Op::R: return raise(v);
    case Sl2Op::H: return weight_op(v);
  }
  throw DomainError("unknown sl2 operator");
}

Matrix action_matrix(Sl2Op x, int m) {
  Matrix a(sz(m) + 1, sz(m) + 1);
  for (int j = 0; j <= m; ++j) {
    const RepVector img = apply(x, RepVector::basis(m, j));
    for (int i = 0; i <= m; ++i) a(sz(i), sz(j)) = img.coeffs[sz(i)];
  }
  return a;
}

DualRepVector duality_iso(const RepVector& v) {
  const int n = v.m;
  DualRepVector out = DualRepVector::zero(n);
  for (int i = 0; i <= n; ++i) {
    Rational c = v.coeffs[sz(i)] / Rational(binomial(n, i));
    if ((n - i) % 2 != 0) c = -c;
    out.coeffs[sz(n - i)] = c;
  }
  return out;
}

RepVector duality_iso_inverse(const DualRepVector& v) {
  const int n = v.m;
  RepVector out = RepVector::zero(n);
  for (int j = 0; j <= n; ++j) {
    Rational c = v.coeffs[sz(j)] * Rational(binomial(n, j));
    if (j % 2 != 0) c = -c;
    out.coeffs[sz(n - j)] = c;
  }
  return out;
}

EndoElement act_on_end(Sl2Op x, const EndoElement& t) {
  const int n = t.n;
  EndoElement out = EndoElement::zero(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Rational& c = t.coeffs(sz(i), sz(j));
      if (c == 0) continue;
      const RepVector left = apply(x, RepVector::basis(n, i));
      const DualRepVector right = apply(x, DualRepVector::basis(n, j));
      for (int a = 0; a <= n; ++a) {
        if (left.coeffs[sz(a)] != 0) out.coeffs(sz(a), sz(j)) += c * left.coeffs[sz(a)];
        if (right.coeffs[sz(a)] != 0) out.coeffs(sz(i), sz(a)) += c * right.coeffs[sz(a)];
      }
    }
  }
  return out;
}

EndoElement highest_weight_vector(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw RangeError("highest_weight_vector: need 0 <= k <= n");
  EndoElement v = EndoElement::zero(n);
  for (int i = 0; i <= n - k; ++i) v.coeffs(sz(i), sz(k + i)) = Rational(binomial(k + i, i));
  return v;
}

EndoDecomposition::EndoDecomposition(int n) : n_(n) {
  if (n < 0) throw RangeError("EndoDecomposition: negative n");
  std::vector<Vector> columns;
  for (int j = 0; j <= n; ++j) {
    EndoElement v = highest_weight_vector(n, j);
    for (int i = 0; i <= 2 * j; ++i) {
      columns.push_back(v.flatten());
      v = act_on_end(Sl2Op::L, v);
    }
  }
  const std::size_t d = (sz(n) + 1) * (sz(n) + 1);
  auto inv = inverse(Matrix::from_columns(columns, d));
  if (!inv) throw InternalConsistencyError("the basis {L^i v_2j} of End(V_n) is singular");
  inverse_ = std::move(*inv);
}

Vector EndoDecomposition::coordinates(const EndoElement& t) const {
  if (t.n != n_) throw DimensionMismatch("EndoDecomposition: weight mismatch");
  return inverse_.apply(t.flatten());
}

Vector EndoDecomposition::project(const EndoElement& t, int k) const {
  if (k < 0 || k > n_) throw RangeError("brute_force_project: need 0 <= k <= n");
  const Vector all = coordinates(t);
  const std::size_t off = block_offset(k);
  return Vector(all.begin() + static_cast<std::ptrdiff_t>(off),
                all.begin() + static_cast<std::ptrdiff_t>(off + 2 * sz(k) + 1));
}

Vector brute_force_project(const EndoElement& t, int k) {
  return EndoDecomposition(t.n).project(t, k);
}

}  // namespace symlinv
