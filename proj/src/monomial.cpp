#include "symlinv/monomial.hpp"

namespace symlinv {

EigenMonomial EigenMonomial::symbol(const std::string& name, const Rational& exponent) {
  EigenMonomial m;
  m.set(name, exponent);
  return m;
}

void EigenMonomial::set(const std::string& name, const Rational& e) {
  if (e == 0) {
    exps_.erase(name);
  } else {
    exps_[name] = e;
  }
}

Rational EigenMonomial::exponent(const std::string& name) const {
  auto it = exps_.find(name);
  return it == exps_.end() ? Rational(0) : it->second;
}

Rational EigenMonomial::valuation(const ValuationTable& table) const {
  Rational v = 0;
  for (const auto& [name, e] : exps_) {
    auto it = table.find(name);
    if (it != table.end()) {
      v += e * it->second;
    } else if (name == "p") {
      v += e;
    }
  }
  return v;
}

EigenMonomial EigenMonomial::pow(const Rational& e) const {
  EigenMonomial m;
  if (e == 0) return m;
  for (const auto& [name, x] : exps_) m.exps_[name] = x * e;
  return m;
}

EigenMonomial operator*(const EigenMonomial& a, const EigenMonomial& b) {
  EigenMonomial m = a;
  for (const auto& [name, e] : b.exps_) m.set(name, m.exponent(name) + e);
  return m;
}

EigenMonomial operator/(const EigenMonomial& a, const EigenMonomial& b) {
  return a * b.inverse();
}

std::string EigenMonomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : exps_) {
    if (!out.empty()) out += "*";
    out += name;
    if (e == 1) continue;
    if (e.get_den() == 1) {
      out += "^" + symlinv::to_string(e);
    } else {
      out += "^(" + symlinv::to_string(e) + ")";
    }
  }
  return out;
}

}  // namespace symlinv
