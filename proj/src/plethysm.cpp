#include "symlinv/plethysm.hpp"

#include <cstdlib>

#include "symlinv/errors.hpp"

namespace symlinv {

namespace {

const Rational kZero(0);

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

bool valid_cg_triple(int m, int n, int p) {
  if (m < 0 || n < 0 || p < 0) return false;
  if (p > m + n || p < std::abs(m - n)) return false;
  return (m + n - p) % 2 == 0;
}

CgTable::CgTable(int m, int n, int p)
    : m_(m), n_(n), p_(p), s_((m + n - p) / 2),
      values_(sz(m + 1) * sz(n + 1) * sz(p + 1), Rational(0)) {}

std::size_t CgTable::index(int u, int v, int w) const {
  return (sz(u) * sz(n_ + 1) + sz(v)) * sz(p_ + 1) + sz(w);
}

const Rational& CgTable::at(int u, int v, int w) const {
  if (u < 0 || u > m_ || v < 0 || v > n_ || w < 0 || w > p_) return kZero;
  return values_[index(u, v, w)];
}

CgTable CgTable::build(int m, int n, int p) {
  if (!valid_cg_triple(m, n, p)) {
    throw DomainError("invalid Clebsch-Gordan triple (m,n,p) = (" + std::to_string(m) + "," +
                      std::to_string(n) + "," + std::to_string(p) + ")");
  }
  CgTable t(m, n, p);
  // Initial layer w = 0, u + v = s.
  for (int u = 0; u <= std::min(m, t.s_); ++u) {
    const int v = t.s_ - u;
    if (v > n) continue;
    Rational c(factorial(m - u) * factorial(n - v));
    if (u % 2 != 0) c = -c;
    t.values_[t.index(u, v, 0)] = c;
  }
  // w C^{u,v,w} = u C^{u-1,v,w-1} + v C^{u,v-1,w-1}, ascending in w.
  for (int w = 1; w <= p; ++w) {
    for (int u = 0; u <= m; ++u) {
      const int v = t.s_ + w - u;
      if (v < 0 || v > n) continue;
      Rational c = u * t.at(u - 1, v, w - 1) + v * t.at(u, v - 1, w - 1);
      t.values_[t.index(u, v, w)] = c / w;
    }
  }
  return t;
}

Rational cg_coefficient(int m, int n, int p, int u, int v, int w) {
  const CgTable t = CgTable::build(m, n, p);
  if (u < 0 || u > m || v < 0 || v > n || w < 0 || w > p) {
    throw RangeError("cg_coefficient: index out of range");
  }
  return t.at(u, v, w);
}

Rational b_coefficient(int n, int k, int i) {
  if (n < 0 || k < 0 || k > n || i < 0 || i > n) {
    throw RangeError("b_coefficient: need 0 <= k <= n and 0 <= i <= n");
  }
  Integer sum = 0;
  for (int a = 0; a <= k; ++a) {
    const int b = k - a;
    const Integer bi = binomial(i, a) * binomial(n - i, b);
    if (bi == 0) continue;
    Integer term = bi * factorial(n - i + a) * factorial(i + b);
    if (a % 2 != 0) term = -term;
    sum += term;
  }
  return Rational(sum * binomial(n, i));
}

Vector b_row(int n, int k) {
  Vector row;
  for (int i = 0; i <= n; ++i) row.push_back(b_coefficient(n, k, i));
  return row;
}

Rational b_special(int n, int k, int i) {
  if (n < 0 || i < 0 || i > n) throw RangeError("b_special: need 0 <= i <= n");
  const Integer sign = (i % 2 == 0) ? 1 : -1;
  const Integer bin = binomial(n, i);
  if (k == n) {
    const Integer f = factorial(n);
    return Rational(sign * f * f * bin);
  }
  if (k == n - 1 && n >= 1) {
    return Rational(sign * factorial(n) * factorial(n - 1) * bin * (n - 2 * i));
  }
  if (k == n - 2 && n >= 2) {
    const Integer nn = n;
    const Integer ii = i;
    const Integer cubic = nn * nn * nn - (4 * ii + 1) * nn * nn + (4 * ii * ii + 2 * ii) * nn -
                          2 * ii * ii;
    // The cubic is always even; halving it matches the three-term sum over a.
    return Rational(sign * bin * factorial(n - 2) * factorial(n - 1) * cubic / 2);
  }
  throw DomainError("b_special: k must be one of n, n-1, n-2 (with k >= 0)");
}

Vector project_endomorphism(const EndoElement& t, int k) {
  const int n = t.n;
  if (k < 0 || k > n) throw RangeError("project_endomorphism: need 0 <= k <= n");
  const CgTable cg = CgTable::build(n, n, 2 * k);
  Vector out = zero_vector(sz(2 * k + 1));
  // g_i (x) g_j^dual -> (-1)^j binom(n,j) sum_w C^{i,n-j,w} g_{2k,w}.
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Rational& c = t.coeffs(sz(i), sz(j));
      if (c == 0) continue;
      Rational scale = c * Rational(binomial(n, j));
      if (j % 2 != 0) scale = -scale;
      for (int w = 0; w <= 2 * k; ++w) {
        const Rational& x = cg.at(i, n - j, w);
        if (x != 0) out[sz(w)] += scale * x;
      }
    }
  }
  return out;
}

DiagonalProjection project_endomorphism_diagonal(int n, int k, const Vector& diag) {
  if (n < 0) throw RangeError("project_endomorphism_diagonal: negative n");
  if (diag.size() != sz(n) + 1) throw DimensionMismatch("diagonal must have length n+1");
  if (k < 0 || k > n) throw RangeError("project_endomorphism_diagonal: need 0 <= k <= n");
  const Vector full = project_endomorphism(EndoElement::diagonal(diag), k);
  DiagonalProjection out{0, true};
  for (int i = 0; i <= n; ++i) out.middle_coeff += b_coefficient(n, k, i) * diag[sz(i)];
  if (out.middle_coeff != full[sz(k)]) {
    throw InternalConsistencyError("closed form B_{n,k,i} disagrees with the CG projection");
  }
  for (int u = k + 1; u <= 2 * k; ++u) out.tail_zero = out.tail_zero && full[sz(u)] == 0;
  return out;
}

}  // namespace symlinv
