#pragma once

#include <vector>

#include "symlinv/exactlin.hpp"
#include "symlinv/sl2rep.hpp"

namespace symlinv {

/// Inverse Clebsch-Gordan coefficients C_{m,n,p}^{u,v,w}: the matrix entries
/// of the equivariant projection psi_{m,n,p}: V_m (x) V_n -> V_p.
/// Values vanish off the stratum u + v - w = (m + n - p)/2.
class CgTable {
 public:
  /// Throws DomainError unless p is in {m+n, m+n-2, ..., |m-n|}.
  static CgTable build(int m, int n, int p);

  int m() const { return m_; }
  int n() const { return n_; }
  int p() const { return p_; }
  /// (m + n - p)/2.
  int stratum() const { return s_; }

  /// Zero for out-of-range indices as well as off the stratum.
  const Rational& at(int u, int v, int w) const;

 private:
  CgTable(int m, int n, int p);
  std::size_t index(int u, int v, int w) const;

  int m_, n_, p_, s_;
  std::vector<Rational> values_;
};

bool valid_cg_triple(int m, int n, int p);

Rational cg_coefficient(int m, int n, int p, int u, int v, int w);

/// B_{n,k,i} = sum_{a+b=k} (-1)^a binom(n,i) binom(i,a) binom(n-i,b) (n-i+a)! (i+b)!.
Rational b_coefficient(int n, int k, int i);
/// (B_{n,k,0}, ..., B_{n,k,n}).
Vector b_row(int n, int k);
/// Closed forms for k in {n, n-1, n-2}; DomainError otherwise. For k = n-2 the
/// value is (-1)^i binom(n,i) (n-2)!(n-1)! c(n,i)/2 with
/// c(n,i) = n^3 - (4i+1)n^2 + (4i^2+2i)n - 2i^2.
Rational b_special(int n, int k, int i);

/// psi_{n,n,2k}((1 (x) phi_n^{-1}) T) in the basis g_{2k,0..2k}.
Vector project_endomorphism(const EndoElement& t, int k);

struct DiagonalProjection {
  Rational middle_coeff;  // coefficient of g_{2k,k}: sum_i B_{n,k,i} diag_i
  bool tail_zero;         // coefficients of g_{2k,u}, u > k, vanish
};

/// Projection of the upper-triangular endomorphism with the given diagonal
/// (strictly upper part zero) to V_{2k}.
DiagonalProjection project_endomorphism_diagonal(int n, int k, const Vector& diag);

}  // namespace symlinv
