#pragma once

// Hand-rolled generators and independent oracles shared by the test suites.
// Oracles deliberately avoid the library code paths they check.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "symlinv/exactlin.hpp"
#include "symlinv/monomial.hpp"
#include "symlinv/weylhecke.hpp"

namespace testsupport {

using symlinv::EigenMonomial;
using symlinv::Integer;
using symlinv::Matrix;
using symlinv::Rational;
using symlinv::Vector;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// num/den with |num| <= bound and 1 <= den <= bound.
  Rational rational(long bound = 9) {
    Rational q(integer(-bound, bound), integer(1, bound));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(long bound = 9) {
    Rational q = 0;
    while (q == 0) q = rational(bound);
    return q;
  }
  Vector vector(std::size_t n, long bound = 9) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(bound));
    return v;
  }
  Matrix matrix(std::size_t r, std::size_t c, long bound = 5, int zero_bias = 0) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = integer(0, zero_bias) == 0 ? rational(bound) : Rational(0);
    return m;
  }
  /// Monomial in the given symbols with small integer or half-integer exponents.
  EigenMonomial monomial(const std::vector<std::string>& symbols, long bound = 3) {
    EigenMonomial m;
    for (const auto& s : symbols) m = m * EigenMonomial::symbol(s, Rational(integer(-2 * bound, 2 * bound)) / 2);
    return m;
  }
  symlinv::WeylElement weyl(int g) {
    const auto& all = symlinv::weyl_group(g);
    return all[static_cast<std::size_t>(integer(0, static_cast<long>(all.size()) - 1))];
  }

 private:
  std::mt19937_64 rng_;
};

/// Textbook Gaussian elimination over Q, used as an oracle for rank.
inline std::size_t naive_rank(Matrix a) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(rank, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(rank, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// a = lambda * b for a single nonzero lambda (both nonzero).
inline bool proportional(const Vector& a, const Vector& b, Rational* scalar = nullptr) {
  if (a.size() != b.size()) return false;
  Rational lambda = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) {
      lambda = a[i] / b[i];
      break;
    }
  }
  if (lambda == 0) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != lambda * b[i]) return false;
  if (scalar) *scalar = lambda;
  return true;
}

/// Displayed U_{p,i} eigenvalue families, transcribed directly:
/// alpha_i = p^{c_i} sigma^{-2} prod_{nu(j)>i} chi_j^{-1} prod_{nu(j)<=i, flag} chi_j^{-2}, i < g;
/// alpha_g = p^{c_g} sigma^{-1} prod_{flag} chi_j^{-1}; flag means eps(nu(j)) = -1.
inline EigenMonomial displayed_alpha(int g, int i, const symlinv::CharacterData& chi,
                                     const symlinv::WeylElement& w) {
  auto flag = [&](int j) { return w.eps[static_cast<std::size_t>(w.nu[static_cast<std::size_t>(j - 1)] - 1)] == -1; };
  auto nu = [&](int j) { return w.nu[static_cast<std::size_t>(j - 1)]; };
  Rational c = 0;
  EigenMonomial out;
  if (i == g) {
    for (int j = 1; j <= g; ++j)
      if (flag(j)) {
        c += g + 1 - j;
        out = out / chi.chi[static_cast<std::size_t>(j - 1)];
      }
    c -= Rational(g * (g + 1)) / 4;
    return EigenMonomial::p_power(c) * chi.sigma.inverse() * out;
  }
  for (int j = 1; j <= g; ++j) {
    const auto& x = chi.chi[static_cast<std::size_t>(j - 1)];
    if (nu(j) > i) {
      c += g + 1 - j;
      out = out / x;
    } else if (flag(j)) {
      c += 2 * (g + 1 - j);
      out = out / x.pow(2);
    }
  }
  c -= Rational(g * (g + 1)) / 2;
  return EigenMonomial::p_power(c) * chi.sigma.pow(-2) * out;
}

/// Orders d for which r^d = 1 merges the top i-subset sum with another i-subset sum,
/// found by testing every d up to the largest exponent difference.
inline std::set<long> brute_obstruction_orders(const std::vector<long>& e) {
  std::set<long> out;
  long spread = 0;
  for (long a : e)
    for (long b : e) spread = std::max(spread, std::abs(a - b));
  const long max_d = spread * static_cast<long>(e.size()) + 1;
  const std::size_t n = e.size();
  for (long d = 1; d <= max_d; ++d) {
    bool hit = false;
    for (std::size_t i = 1; i < n && !hit; ++i) {
      long top = 0;
      for (std::size_t j = 0; j < i; ++j) top += e[j];
      for (unsigned long mask = 0; mask < (1UL << n) && !hit; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != i || mask == (1UL << i) - 1) continue;
        long s = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (mask & (1UL << j)) s += e[j];
        if (top != s && (top - s) % d == 0) hit = true;
      }
    }
    if (hit) out.insert(d);
  }
  return out;
}

}  // namespace testsupport
