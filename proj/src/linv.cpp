#include "symlinv/linv.hpp"

#include "symlinv/errors.hpp"
#include "symlinv/plethysm.hpp"

namespace symlinv {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::string u_sym(int j) { return "u_" + std::to_string(j); }
std::string a_sym(int j) { return "a_" + std::to_string(j); }

void add_term(LinearForm& f, const std::string& key, const Rational& c) {
  if (c == 0) return;
  Rational& slot = f[key];
  slot += c;
  if (slot == 0) f.erase(key);
}

LinearForm form(std::initializer_list<std::pair<std::string, Rational>> terms) {
  LinearForm f;
  for (const auto& [k, c] : terms) add_term(f, k, c);
  return f;
}

std::optional<Rational> proportionality(const LinearForm& f, const LinearForm& g) {
  if (g.empty()) return std::nullopt;
  const auto& [key, gc] = *g.begin();
  auto it = f.find(key);
  const Rational lambda = it == f.end() ? Rational(0) : it->second / gc;
  if (lambda == 0 || !(scaled(g, lambda) == f)) return std::nullopt;
  return lambda;
}

std::map<std::string, Rational> direction_values(const TriangulationData& data, const Direction& u,
                                                 std::size_t place) {
  if (u.u.size() != sz(data.direction_dim)) {
    throw DimensionMismatch("direction at place " + std::to_string(place) + " needs " +
                            std::to_string(data.direction_dim) + " coordinates");
  }
  if (data.family == Family::gsp4_spin && !(u.u[0] >= u.u[1] && u.u[1] >= 0)) {
    throw DomainError("gsp4_spin directions must satisfy u_1 >= u_2 >= 0");
  }
  std::map<std::string, Rational> vals;
  for (int j = 1; j <= data.direction_dim; ++j) vals[u_sym(j)] = u.u[sz(j - 1)];
  vals["u_0"] = u.u0;
  return vals;
}

std::map<std::string, Rational> gradient_values(const TriangulationData& data, const PlaceInput& in,
                                                std::size_t place) {
  std::map<std::string, Rational> vals;
  for (int j = 1; j <= data.gradient_count; ++j) {
    auto it = in.gradients.find(a_sym(j));
    if (it == in.gradients.end()) {
      throw DomainError("place " + std::to_string(place) + " is missing gradient " + a_sym(j));
    }
    vals[a_sym(j)] = it->second;
  }
  for (const auto& [key, _] : in.gradients) {
    if (!vals.count(key)) {
      throw DomainError("place " + std::to_string(place) + " has unknown gradient '" + key + "'");
    }
  }
  return vals;
}

LInvariant combine(std::vector<PlaceTerm> terms) {
  LInvariant out{1, std::move(terms)};
  for (const auto& t : out.per_place) out.value *= t.value;
  return out;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::hilbert: return "hilbert";
    case Family::gsp4_spin: return "gsp4_spin";
    case Family::gsp_std: return "gsp_std";
    case Family::unitary: return "unitary";
  }
  return "unknown";
}

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::A: return "A";
    case Theorem::B: return "B";
    case Theorem::C: return "C";
    case Theorem::D1: return "D1";
    case Theorem::D2: return "D2";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "hilbert") return Family::hilbert;
  if (name == "gsp4_spin") return Family::gsp4_spin;
  if (name == "gsp_std") return Family::gsp_std;
  if (name == "unitary") return Family::unitary;
  throw DomainError("unknown family '" + name + "'");
}

Theorem parse_theorem(const std::string& name) {
  if (name == "A") return Theorem::A;
  if (name == "B") return Theorem::B;
  if (name == "C") return Theorem::C;
  if (name == "D1") return Theorem::D1;
  if (name == "D2") return Theorem::D2;
  throw DomainError("unknown theorem '" + name + "'");
}

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::exact: return "exact";
    case ClassKind::sign_flip: return "sign_flip";
    case ClassKind::proportional: return "proportional";
    case ClassKind::mismatch: return "mismatch";
  }
  return "unknown";
}

LinearForm scaled(const LinearForm& f, const Rational& c) {
  LinearForm out;
  if (c == 0) return out;
  for (const auto& [k, v] : f) out[k] = v * c;
  return out;
}

LinearForm operator+(const LinearForm& f, const LinearForm& g) {
  LinearForm out = f;
  for (const auto& [k, v] : g) add_term(out, k, v);
  return out;
}

LinearForm homogeneous_part(const LinearForm& f) {
  LinearForm out = f;
  out.erase("");
  return out;
}

Rational evaluate(const LinearForm& f, const std::map<std::string, Rational>& values) {
  Rational r = 0;
  for (const auto& [k, c] : f) {
    if (k.empty()) {
      r += c;
      continue;
    }
    auto it = values.find(k);
    if (it == values.end()) throw DomainError("no value for symbol '" + k + "'");
    r += c * it->second;
  }
  return r;
}

std::string to_string(const LinearForm& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : f) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (k.empty()) {
      out += symlinv::to_string(mag);
    } else {
      if (mag != 1) out += symlinv::to_string(mag) + "*";
      out += k;
    }
  }
  return out;
}

TriangulationData family_data(Family family, const FamilyParams& params) {
  TriangulationData d;
  d.family = family;
  d.params = params;
  switch (family) {
    case Family::hilbert: {
      // kappa_1 = (w - k)/2, kappa_2 = (w + k - 2)/2; F_1 ~ a^{-1}, F_2 ~ a.
      d.direction_dim = 1;
      d.gradient_count = 1;
      d.default_b_row = {1, 1};
      const Rational h(1, 2);
      d.pieces.push_back({form({{"u_0", h}, {"u_1", -h}}), form({{"a_1", -1}})});
      d.pieces.push_back({form({{"u_0", h}, {"u_1", h}, {"", -1}}), form({{"a_1", 1}})});
      break;
    }
    case Family::gsp4_spin: {
      d.direction_dim = 2;
      d.gradient_count = 2;
      d.default_b_row = {3, 3};
      const Rational h(1, 2);
      d.pieces.push_back({form({{"u_0", h}, {"u_1", -h}, {"u_2", -h}}), form({{"a_2", -1}})});
      d.pieces.push_back({form({{"u_0", h}, {"u_1", -h}, {"u_2", h}, {"", 1}}),
                          form({{"a_2", 1}, {"a_1", -1}})});
      d.pieces.push_back({form({{"u_0", h}, {"u_1", h}, {"u_2", -h}, {"", 2}}),
                          form({{"a_1", 1}, {"a_2", -1}})});
      d.pieces.push_back({form({{"u_0", h}, {"u_1", h}, {"u_2", h}, {"", 3}}), form({{"a_2", 1}})});
      break;
    }
    case Family::gsp_std: {
      const int n = params.n;
      if (n < 2) throw DomainError("gsp_std needs genus n >= 2");
      d.direction_dim = n;
      d.gradient_count = n;
      d.default_b_row = {2 * n, 2 * n - 1};
      d.pieces.resize(sz(2 * n + 1));
      // kappa_{n+1+-s} = +-(mu_{n+1-s} + s); F_{n+1+-s} from i = n+1-s.
      for (int s = 1; s <= n; ++s) {
        const int i = n + 1 - s;
        LinearForm kappa = form({{u_sym(i), 1}, {"", s}});
        LinearForm logf;
        if (s == n) {
          logf = form({{a_sym(1), 1}});
        } else if (s == 1) {
          logf = form({{a_sym(n - 1), 1}, {a_sym(n), -2}});
        } else {
          logf = form({{a_sym(i - 1), 1}, {a_sym(i), -1}});
        }
        d.pieces[sz(n + s)] = {kappa, logf};
        d.pieces[sz(n - s)] = {scaled(kappa, -1), scaled(logf, -1)};
      }
      break;
    }
    case Family::unitary: {
      const int n = params.n;
      if (n < 1) throw DomainError("unitary family needs n >= 1");
      d.direction_dim = 4 * n;
      d.gradient_count = 4 * n;
      d.default_b_row = {4 * n - 1, 4 * n - 1};
      // kappa_i = -mu_i + i, F_i = p^{(4n-1)/2 - i} a_i.
      for (int i = 1; i <= 4 * n; ++i) {
        d.pieces.push_back({form({{u_sym(i), -1}, {"", i}}), form({{a_sym(i), 1}})});
      }
      break;
    }
  }
  return d;
}

LInvariant generic_l_invariant(const TriangulationData& data, const Vector& b, const Direction& u,
                               const std::vector<PlaceInput>& places) {
  if (b.size() != data.pieces.size()) {
    throw DimensionMismatch("B-row length must equal the number of graded pieces");
  }
  if (places.empty()) throw DomainError("need at least one place");
  std::vector<PlaceTerm> terms;
  for (std::size_t v = 0; v < places.size(); ++v) {
    const Direction& dir = places[v].direction ? *places[v].direction : u;
    const auto uvals = direction_values(data, dir, v);
    const auto avals = gradient_values(data, places[v], v);
    PlaceTerm t{0, 0, 0};
    for (std::size_t i = 0; i < b.size(); ++i) {
      t.numerator += b[i] * evaluate(data.pieces[i].log_f, avals);
      t.denominator += b[i] * evaluate(homogeneous_part(data.pieces[i].kappa), uvals);
    }
    if (t.denominator == 0) {
      throw SingularDirectionError(
          "weight-direction denominator vanishes at place " + std::to_string(v), v);
    }
    t.value = -t.numerator / t.denominator;
    terms.push_back(t);
  }
  return combine(std::move(terms));
}

LInvariant generic_l_invariant(const TriangulationData& data, const BRow& row, const Direction& u,
                               const std::vector<PlaceInput>& places) {
  return generic_l_invariant(data, b_row(row.m, row.k), u, places);
}

Rational rank1_combine(const std::vector<std::pair<Rational, Rational>>& coords) {
  Rational r = 1;
  for (std::size_t v = 0; v < coords.size(); ++v) {
    if (coords[v].second == 0) {
      throw DivisionByZero("b_v vanishes at place " + std::to_string(v), v);
    }
    r *= coords[v].first / coords[v].second;
  }
  return r;
}

TheoremSetup theorem_setup(Theorem which, const FamilyParams& params) {
  const int n = params.n;
  switch (which) {
    case Theorem::A: return {Family::hilbert, {1, 1}};
    case Theorem::B: return {Family::gsp4_spin, {3, 3}};
    case Theorem::C:
      if (n < 2) throw DomainError("theorem C needs n >= 2");
      return {Family::gsp_std, {2 * n, 2 * n - 1}};
    case Theorem::D1:
      if (n < 1) throw DomainError("theorem D needs n >= 1");
      return {Family::unitary, {4 * n - 1, 4 * n - 1}};
    case Theorem::D2:
      if (n < 1) throw DomainError("theorem D needs n >= 1");
      return {Family::unitary, {4 * n - 1, 4 * n - 3}};
  }
  throw DomainError("unknown theorem");
}

RatioForm theorem_symbolic(Theorem which, const FamilyParams& params) {
  const int n = params.n;
  RatioForm r;
  switch (which) {
    case Theorem::A:
      r.num = form({{"a_1", -2}});
      r.den = form({{"", 1}});
      break;
    case Theorem::B:
      r.num = form({{"a_2", -4}, {"a_1", 3}});
      r.den = form({{"u_1", 1}, {"u_2", -2}});
      break;
    case Theorem::C: {
      if (n < 2) throw DomainError("theorem C needs n >= 2");
      auto bc = [n](int i) {
        Rational x(binomial(2 * n, n + i) * i);
        return i % 2 == 0 ? x : Rational(-x);
      };
      LinearForm num = form({{a_sym(1), bc(n)}});
      num = num + scaled(form({{a_sym(n - 1), 1}, {a_sym(n), -2}}), bc(1));
      for (int i = 2; i <= n - 1; ++i) {
        num = num + scaled(form({{a_sym(i - 1), 1}, {a_sym(i), -1}}), bc(i));
      }
      r.num = scaled(num, -1);
      for (int i = 1; i <= n; ++i) r.den = r.den + form({{u_sym(i), bc(n + 1 - i)}});
      break;
    }
    case Theorem::D1:
    case Theorem::D2: {
      if (n < 1) throw DomainError("theorem D needs n >= 1");
      const int big = 4 * n - 1;
      auto bd = [&](int i) -> Rational {
        const Integer sign = i % 2 == 0 ? 1 : -1;
        if (which == Theorem::D1) return Rational(sign * binomial(big, i));
        const Integer nn = big;
        const Integer ii = i;
        const Integer cubic =
            nn * nn * nn - (4 * ii + 1) * nn * nn + (4 * ii * ii + 2 * ii) * nn - 2 * ii * ii;
        return Rational(sign * binomial(big, i) * cubic);
      };
      for (int i = 1; i <= 4 * n; ++i) {
        r.num = r.num + form({{a_sym(i), -bd(i - 1)}});
        r.den = r.den + form({{u_sym(i), bd(i - 1)}});
      }
      break;
    }
  }
  return r;
}

LInvariant theorem_evaluator(Theorem which, const FamilyParams& params, const Direction& u,
                             const std::vector<PlaceInput>& places) {
  const TheoremSetup setup = theorem_setup(which, params);
  const TriangulationData data = family_data(setup.family, params);
  const RatioForm r = theorem_symbolic(which, params);
  if (places.empty()) throw DomainError("need at least one place");
  std::vector<PlaceTerm> terms;
  for (std::size_t v = 0; v < places.size(); ++v) {
    const Direction& dir = places[v].direction ? *places[v].direction : u;
    const auto uvals = direction_values(data, dir, v);
    if (which == Theorem::A && !(dir.u[0] == 1 && dir.u0 == -1)) {
      throw DomainError("theorem A is stated for the direction (1; -1) only");
    }
    const auto avals = gradient_values(data, places[v], v);
    PlaceTerm t{-evaluate(r.num, avals), evaluate(r.den, uvals), 0};
    if (t.denominator == 0) {
      throw SingularDirectionError(
          "weight-direction denominator vanishes at place " + std::to_string(v), v);
    }
    t.value = -t.numerator / t.denominator;
    terms.push_back(t);
  }
  return combine(std::move(terms));
}

RatioForm symbolic_specialize(Family family, const FamilyParams& params, const BRow& row) {
  const TriangulationData data = family_data(family, params);
  const Vector b = b_row(row.m, row.k);
  if (b.size() != data.pieces.size()) {
    throw DimensionMismatch("B-row length must equal the number of graded pieces");
  }
  RatioForm r;
  for (std::size_t i = 0; i < b.size(); ++i) {
    r.num = r.num + scaled(data.pieces[i].log_f, -b[i]);
    r.den = r.den + scaled(homogeneous_part(data.pieces[i].kappa), b[i]);
  }
  return r;
}

Classification compare_to_theorem(Theorem which, const FamilyParams& params) {
  const TheoremSetup setup = theorem_setup(which, params);
  RatioForm gen = symbolic_specialize(setup.family, params, setup.row);
  const RatioForm thm = theorem_symbolic(which, params);
  if (which == Theorem::A) {
    gen.den = form({{"", evaluate(gen.den, {{"u_1", 1}, {"u_0", -1}})}});
  }
  const auto lambda = proportionality(gen.num, thm.num);
  const auto mu = proportionality(gen.den, thm.den);
  if (!lambda || !mu) return {ClassKind::mismatch, 0};
  const Rational c = *lambda / *mu;
  if (c == 1) return {ClassKind::exact, c};
  if (c == -1) return {ClassKind::sign_flip, c};
  return {ClassKind::proportional, c};
}

}  // namespace symlinv
