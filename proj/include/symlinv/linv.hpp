#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symlinv/exactlin.hpp"

namespace symlinv {

enum class Family { hilbert, gsp4_spin, gsp_std, unitary };
enum class Theorem { A, B, C, D1, D2 };

std::string to_string(Family f);
std::string to_string(Theorem t);
Family parse_family(const std::string& name);
Theorem parse_theorem(const std::string& name);

/// Linear form over named symbols; the key "" holds the constant term.
/// Zero coefficients are never stored.
using LinearForm = std::map<std::string, Rational>;

LinearForm scaled(const LinearForm& f, const Rational& c);
LinearForm operator+(const LinearForm& f, const LinearForm& g);
/// The form without its constant term.
LinearForm homogeneous_part(const LinearForm& f);
/// Substitutes values; symbols without a value are an error.
Rational evaluate(const LinearForm& f, const std::map<std::string, Rational>& values);
std::string to_string(const LinearForm& f);

/// Weight form kappa_i over "u_1".."u_g" and "u_0", with a constant term.
using WeightLinearForm = LinearForm;
/// Integer combination of the logarithmic derivatives "a_1".."a_g"; pure
/// p-power factors of F_i have already been dropped.
using HeckeLogForm = LinearForm;

struct FamilyParams {
  int n = 1;  // genus for gsp_std; unitary has 4n graded pieces
};

/// Selects the plethysm row B_{m,k,0..m}.
struct BRow {
  int m = 1;
  int k = 1;
};

struct GradedPiece {
  WeightLinearForm kappa;
  HeckeLogForm log_f;
};

struct TriangulationData {
  Family family = Family::hilbert;
  FamilyParams params;
  std::vector<GradedPiece> pieces;
  BRow default_b_row;
  int direction_dim = 1;     // number of coordinates u_1..u_d
  int gradient_count = 1;    // number of symbols a_1..a_r
};

TriangulationData family_data(Family family, const FamilyParams& params = {});

struct Direction {
  Vector u;  // u_1..u_d
  Rational u0 = 0;
};

struct PlaceInput {
  std::map<std::string, Rational> gradients;  // "a_j" -> logarithmic derivative
  std::optional<Direction> direction;         // overrides the global direction
};

struct PlaceTerm {
  Rational numerator;    // sum_i B_{i-1} (log F_i)
  Rational denominator;  // sum_i B_{i-1} (directional derivative of kappa_i)
  Rational value;        // -numerator / denominator
  /// (a_v, b_v) = (-numerator, denominator), the rank-1 coordinates.
  std::pair<Rational, Rational> pair() const { return {-numerator, denominator}; }
};

struct LInvariant {
  Rational value;
  std::vector<PlaceTerm> per_place;
};

/// prod_v -(sum_i B_{i-1} log F_i) / (sum_i B_{i-1} grad_u kappa_i).
/// SingularDirectionError names the first place with a vanishing denominator.
LInvariant generic_l_invariant(const TriangulationData& data, const Vector& b,
                               const Direction& u, const std::vector<PlaceInput>& places);
LInvariant generic_l_invariant(const TriangulationData& data, const BRow& row,
                               const Direction& u, const std::vector<PlaceInput>& places);

/// prod_v a_v / b_v; DivisionByZero carries the index of a zero b_v.
Rational rank1_combine(const std::vector<std::pair<Rational, Rational>>& coords);

/// Family, parameters and B-row a theorem is derived from.
struct TheoremSetup {
  Family family;
  BRow row;
};
TheoremSetup theorem_setup(Theorem which, const FamilyParams& params);

/// Literal evaluation of the closed forms. Theorem A is stated for the
/// direction (1; -1) only and rejects any other.
LInvariant theorem_evaluator(Theorem which, const FamilyParams& params, const Direction& u,
                             const std::vector<PlaceInput>& places);

/// Single-place formula num/den with num over "a_j" and den over "u_j", "u_0".
struct RatioForm {
  LinearForm num;
  LinearForm den;
};

/// The generic formula for one place: num = -sum B log F, den = sum B grad kappa.
RatioForm symbolic_specialize(Family family, const FamilyParams& params, const BRow& row);
RatioForm theorem_symbolic(Theorem which, const FamilyParams& params);

enum class ClassKind { exact, sign_flip, proportional, mismatch };
std::string to_string(ClassKind k);

struct Classification {
  ClassKind kind;
  Rational scalar;  // generic = scalar * theorem per place; 0 for mismatch
};

/// Theorem A is compared after substituting the direction (1; -1).
Classification compare_to_theorem(Theorem which, const FamilyParams& params = {});

}  // namespace symlinv
