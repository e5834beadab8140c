#pragma once

#include <set>
#include <string>
#include <vector>

#include "symlinv/exactlin.hpp"
#include "symlinv/monomial.hpp"

namespace symlinv {

/// Element (nu, eps) of W = S_g semidirect (Z/2)^g, acting on torus exponents by
/// b_j = a_{nu(j)} if eps(nu(j)) = 1 and b_j = a_0 - a_{nu(j)} otherwise.
struct WeylElement {
  int g = 0;
  std::vector<int> nu;   // nu[j-1] = nu(j), a permutation of 1..g
  std::vector<int> eps;  // eps[i-1] = eps(i) in {-1, +1}

  static WeylElement identity(int g);
  /// Validates that nu is a permutation and eps is a sign vector.
  static WeylElement make(std::vector<int> nu, std::vector<int> eps);
  int nu_of(int j) const { return nu.at(static_cast<std::size_t>(j - 1)); }
  int eps_of(int i) const { return eps.at(static_cast<std::size_t>(i - 1)); }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.nu != b.nu ? a.nu < b.nu : a.eps < b.eps;
  }
};

/// The 2^g g! elements, ordered by (nu, eps). Built once per g and cached.
const std::vector<WeylElement>& weyl_group(int g);

/// The product with action(w1 * w2) = action(w1) o action(w2).
WeylElement compose(const WeylElement& w1, const WeylElement& w2);
WeylElement inverse(const WeylElement& w);

struct TorusExponent {
  Vector a;  // a_1..a_g
  Rational a0 = 0;
  friend bool operator==(const TorusExponent&, const TorusExponent&) = default;
};

TorusExponent operator+(const TorusExponent& s, const TorusExponent& t);

/// beta_j: a = (0,...,0,-1,...,-1) with j trailing -1 and a0 = -2 for j >= 1;
/// beta_0: a = 0, a0 = -1.
TorusExponent beta(int g, int j);

struct CharacterData {
  std::vector<EigenMonomial> chi;  // chi_j(p), j = 1..g
  EigenMonomial sigma;             // sigma(p)
  friend bool operator==(const CharacterData&, const CharacterData&) = default;
};

/// chi_j = symbol "chi_j", sigma = symbol "sigma".
CharacterData generic_characters(int g);

TorusExponent weyl_conjugate(const WeylElement& w, const TorusExponent& t);

/// p^{g(g+1)/4 a0 - sum_j (g+1-j) b_j} sigma^{a0} prod_j chi_j^{b_j}, where b is
/// the conjugated exponent vector weyl_conjugate(w, t).
EigenMonomial hecke_diagonal(int g, const CharacterData& chi, const TorusExponent& t,
                             const WeylElement& w);

/// c_i for 1 <= i < g and the c_g variant for i = g.
Rational c_constant(int g, int i, const WeylElement& w);

/// alpha_i = eigenvalue of [Iw beta_{g-i} Iw], i = 1..g.
std::vector<EigenMonomial> up_eigenvalues(int g, const CharacterData& chi, const WeylElement& w);

/// Weights (mu_1..mu_g; mu_0).
struct GspWeights {
  Vector mu;
  Rational mu0 = 0;
};

/// v_p(lambda(t)) = sum_j mu_j a_j + a0 (mu_0 - sum_j mu_j)/2.
Rational lambda_valuation(const GspWeights& mu, const TorusExponent& t);

/// theta_i = p^{v_p(lambda(beta_{g-i}))} alpha_i.
std::vector<EigenMonomial> normalized_eigenvalues(int g, const CharacterData& chi,
                                                  const GspWeights& mu, const WeylElement& w);

/// Inverts normalized_eigenvalues using chi_1 ... chi_g sigma^2 = p^{mu_0}. The
/// result is checked by a forward round trip; InversionError if it fails.
CharacterData recover_characters(int g, const std::vector<EigenMonomial>& theta,
                                 const GspWeights& mu, const WeylElement& w);

struct HilbertWeights {
  std::vector<Rational> k;  // k_1..k_d
  Rational w = 0;
};

/// sum_i ((w + k_i - 2)/2 + s_i) < min_i k_i - 1.
bool slope_check_hilbert(const HilbertWeights& weights, const std::vector<Rational>& slopes);

struct GspSlopeSides {
  Rational lhs;
  Rational rhs;
};

/// LHS = sum_v (v_p(lambda_v(t)) + slope_v);
/// RHS = min over v, i of (mu_{v,i} - mu_{v,i+1} + 1)(a_i - a_{i+1}) and 2(2 mu_{v,g} + 1) a_g.
/// Requires a_1 >= ... >= a_g and 2 a_g >= a_0.
GspSlopeSides gsp_slope_sides(const std::vector<GspWeights>& weights, const TorusExponent& t,
                              const std::vector<Rational>& slopes);
bool slope_check_gsp(const std::vector<GspWeights>& weights, const TorusExponent& t,
                     const std::vector<Rational>& slopes);

/// Smallest |m| (tried in the order 0, 1, -1, 2, -2, ...) for which the twist
/// by |.|^m passes; the twist shifts each place's LHS term by -m a0/2.
long twist_search(const std::vector<GspWeights>& weights, const TorusExponent& t,
                  const std::vector<Rational>& slopes);

struct ObstructionOrders {
  std::set<long> orders;     // d > 0 with r^d = 1 causing a collision
  bool unconditional;        // some collision holds for every r
  bool sufficient(long big_n) const;  // every order divides big_n
};

/// For each i, the differences between the sum of the first i exponents and
/// the sum of every other i-subset; returns all divisors of those differences.
ObstructionOrders refinement_obstruction_orders(const std::vector<long>& exponents);

}  // namespace symlinv
