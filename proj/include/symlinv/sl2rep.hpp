#pragma once

#include <cstddef>
#include <memory>

#include "symlinv/exactlin.hpp"

namespace symlinv {

// Sym^m V with basis g_{m,i} = e_1^{m-i} e_2^i, i = 0..m.
struct RepVector {
  int m = 0;
  Vector coeffs;  // length m+1

  RepVector() = default;
  RepVector(int m_, Vector c);
  static RepVector zero(int m);
  static RepVector basis(int m, int i);
  friend bool operator==(const RepVector&, const RepVector&) = default;
};

// (Sym^m V)^dual in the dual basis g_{m,i}^dual.
struct DualRepVector {
  int m = 0;
  Vector coeffs;  // length m+1

  DualRepVector() = default;
  DualRepVector(int m_, Vector c);
  static DualRepVector zero(int m);
  static DualRepVector basis(int m, int i);
  friend bool operator==(const DualRepVector&, const DualRepVector&) = default;
};

// Element of V_n (x) V_n^dual = End(V_n). Entry (i, j) is the coefficient of
// g_{n,i} (x) g_{n,j}^dual, i.e. the matrix unit E_ij; it has weight 2(j - i).
struct EndoElement {
  int n = 0;
  Matrix coeffs;  // (n+1) x (n+1)

  EndoElement() = default;
  EndoElement(int n_, Matrix c);
  static EndoElement zero(int n);
  static EndoElement identity(int n);
  static EndoElement unit(int n, int i, int j);
  static EndoElement diagonal(const Vector& diag);

  /// Row-major flattening, index i*(n+1)+j.
  Vector flatten() const;
  static EndoElement unflatten(int n, const Vector& v);
  friend bool operator==(const EndoElement&, const EndoElement&) = default;
};

enum class Sl2Op { L, R, H };

RepVector lower(const RepVector& v);
RepVector raise(const RepVector& v);
RepVector weight_op(const RepVector& v);
DualRepVector lower(const DualRepVector& v);
DualRepVector raise(const DualRepVector& v);
DualRepVector weight_op(const DualRepVector& v);
inline DualRepVector lower_dual(const DualRepVector& v) { return lower(v); }
inline DualRepVector raise_dual(const DualRepVector& v) { return raise(v); }

RepVector apply(Sl2Op x, const RepVector& v);
DualRepVector apply(Sl2Op x, const DualRepVector& v);

/// Matrix of X on Sym^m V in the g-basis (column j is the image of g_{m,j}).
Matrix action_matrix(Sl2Op x, int m);

/// phi_n: g_{n,i} -> (-1)^{n-i} binom(n,i)^{-1} g_{n,n-i}^dual.
DualRepVector duality_iso(const RepVector& v);
/// phi_n^{-1}: g_{n,j}^dual -> (-1)^j binom(n,j) g_{n,n-j}.
RepVector duality_iso_inverse(const DualRepVector& v);

/// Leibniz action on V_n (x) V_n^dual; equals the commutator [rho(X), T].
EndoElement act_on_end(Sl2Op x, const EndoElement& t);

/// v_{2k} = sum_{i=0}^{n-k} binom(k+i, i) g_{n,i} (x) g_{n,k+i}^dual.
EndoElement highest_weight_vector(int n, int k);

/// Decomposition of End(V_n) in the basis {L^i v_{2j} : 0 <= j <= n, 0 <= i <= 2j}.
/// The change of basis is inverted once at construction.
class EndoDecomposition {
 public:
  explicit EndoDecomposition(int n);
  int n() const { return n_; }
  /// Coordinates of t on L^0 v_{2k}, ..., L^{2k} v_{2k}.
  Vector project(const EndoElement& t, int k) const;
  /// All (n+1)^2 coordinates, blocks ordered by j = 0..n.
  Vector coordinates(const EndoElement& t) const;
  std::size_t block_offset(int k) const { return static_cast<std::size_t>(k) * static_cast<std::size_t>(k); }

 private:
  int n_;
  Matrix inverse_;
};

/// One-shot form of EndoDecomposition::project.
Vector brute_force_project(const EndoElement& t, int k);

}  // namespace symlinv
