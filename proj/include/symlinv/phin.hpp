#pragma once

#include <string>
#include <vector>

#include "symlinv/exactlin.hpp"
#include "symlinv/monomial.hpp"

namespace symlinv {

enum class PhiNCase { steinberg, crystalline_split, crystalline_nonsplit };

std::string to_string(PhiNCase c);
/// Accepts "steinberg", "crystalline_split", "crystalline_nonsplit".
PhiNCase parse_phin_case(const std::string& name);

struct PhiNParams {
  Rational L = 1;  // Fontaine-Mazur L-invariant, steinberg only, nonzero
  Rational k = 2;  // weight entering phi(f_i) = alpha^{2i} p^{i(k-1)}, crystalline_split only
  ValuationTable valuations;  // overrides for declared symbol valuations
};

/// D_st(V_{2n,v}) with basis f_n, ..., f_{-n} where f_i = e_1^{n+i} e_2^{n-i}.
/// Coordinate position q holds f_{n-q}, so f_n comes first.
struct PhiNModule {
  PhiNCase kind = PhiNCase::steinberg;
  int n = 0;
  std::vector<EigenMonomial> phi;  // eigenvalue on each coordinate position
  Matrix N;                        // column q is N(f_{n-q})
  Subspace fil0{0};
  Rational L = 1;
  ValuationTable valuations;

  std::size_t dim() const { return static_cast<std::size_t>(2 * n + 1); }
  /// Position of f_i.
  std::size_t position(int i) const;
  /// Index i of the basis vector at a position.
  int label(std::size_t position) const { return n - static_cast<int>(position); }
  /// Span of the listed f_i.
  Subspace span_of(const std::vector<int>& labels) const;
  /// Coordinates of a degree-2n binary form given by its e_1-exponent coefficients.
  Vector from_form(const Vector& e1_coeffs) const;
};

PhiNModule build_case(PhiNCase kind, int n, const PhiNParams& params = {});

/// Coordinate spans of eigenvectors closed under N, sorted by dimension then
/// lexicographically by position. Requires pairwise distinct phi-eigenvalues.
std::vector<Subspace> stable_submodules(const PhiNModule& m);

/// Stable submodules D with dim D = dim - dim Fil^0 and D meet Fil^0 = 0.
std::vector<Subspace> regular_submodules(const PhiNModule& m);

struct BenoisFiltration {
  Subspace d_minus1{0};
  Subspace d0{0};
  Subspace d1{0};
};

/// D_{-1} = (1 - p^{-1} phi^{-1}) D + N(D^{phi=1}),
/// D_1 = D + D_st^{phi=1} meet N^{-1}(D^{phi=p^{-1}}).
/// Throws PreconditionError unless D is phi- and N-stable.
BenoisFiltration benois_filtration(const PhiNModule& m, const Subspace& d);

struct Gr1Data {
  std::size_t rank;
  std::vector<EigenMonomial> eigenvalues;  // phi on D_1/D_0, with multiplicity
};

Gr1Data gr1_data(const PhiNModule& m, const Subspace& d);

/// The phi-eigenspace for a given monomial (coordinate subspace).
Subspace eigenspace(const PhiNModule& m, const EigenMonomial& lambda);

}  // namespace symlinv
