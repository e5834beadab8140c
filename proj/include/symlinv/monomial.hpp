#pragma once

#include <map>
#include <string>

#include "symlinv/exactlin.hpp"

namespace symlinv {

// Declared p-adic valuations of formal symbols. "p" defaults to 1, every
// other undeclared symbol to 0.
using ValuationTable = std::map<std::string, Rational>;

/// Laurent monomial in formal symbols with exact rational exponents.
/// Zero exponents are never stored, so structural equality is monomial
/// equality: distinct exponent maps never coincide.
class EigenMonomial {
 public:
  EigenMonomial() = default;
  static EigenMonomial one() { return {}; }
  static EigenMonomial symbol(const std::string& name, const Rational& exponent = 1);
  static EigenMonomial p_power(const Rational& exponent) { return symbol("p", exponent); }

  const std::map<std::string, Rational>& exponents() const { return exps_; }
  Rational exponent(const std::string& name) const;
  bool is_one() const { return exps_.empty(); }

  Rational valuation(const ValuationTable& table = {}) const;

  EigenMonomial pow(const Rational& e) const;
  EigenMonomial inverse() const { return pow(-1); }

  friend EigenMonomial operator*(const EigenMonomial& a, const EigenMonomial& b);
  friend EigenMonomial operator/(const EigenMonomial& a, const EigenMonomial& b);
  friend bool operator==(const EigenMonomial& a, const EigenMonomial& b) = default;

  /// "1", or factors like "p^(-3/2)*sigma^-1*x" in symbol order.
  std::string to_string() const;

 private:
  void set(const std::string& name, const Rational& e);
  std::map<std::string, Rational> exps_;
};

}  // namespace symlinv
