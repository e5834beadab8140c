#include "symlinv/weylhecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

#include "symlinv/errors.hpp"

namespace symlinv {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void check_genus(int g) {
  if (g < 1) throw DomainError("genus g must be at least 1");
}

void check_compatible(int g, const TorusExponent& t) {
  if (t.a.size() != sz(g)) throw DimensionMismatch("torus exponent has the wrong length");
}

void check_characters(int g, const CharacterData& chi) {
  if (chi.chi.size() != sz(g)) throw DimensionMismatch("character data has the wrong length");
}

void check_weights(int g, const GspWeights& mu) {
  if (mu.mu.size() != sz(g)) throw DimensionMismatch("weight vector has the wrong length");
}

}  // namespace

WeylElement WeylElement::identity(int g) {
  check_genus(g);
  WeylElement w;
  w.g = g;
  w.nu.resize(sz(g));
  std::iota(w.nu.begin(), w.nu.end(), 1);
  w.eps.assign(sz(g), 1);
  return w;
}

WeylElement WeylElement::make(std::vector<int> nu, std::vector<int> eps) {
  if (nu.empty() || nu.size() != eps.size())
    throw DomainError("Weyl element needs nu and eps of the same positive length");
  std::vector<int> sorted = nu;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw DomainError("nu must be a permutation of 1..g");
  for (int e : eps)
    if (e != 1 && e != -1) throw DomainError("eps entries must be +1 or -1");
  WeylElement w;
  w.g = static_cast<int>(nu.size());
  w.nu = std::move(nu);
  w.eps = std::move(eps);
  return w;
}

const std::vector<WeylElement>& weyl_group(int g) {
  check_genus(g);
  if (g > 8) throw UnsupportedInput("weyl_group: genus too large to enumerate");
  static std::mutex mutex;
  static std::map<int, std::vector<WeylElement>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  std::vector<WeylElement> all;
  std::vector<int> nu(sz(g));
  std::iota(nu.begin(), nu.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1U << g); ++mask) {
      std::vector<int> eps(sz(g));
      for (int i = 0; i < g; ++i) eps[sz(i)] = (mask & (1U << (g - 1 - i))) ? -1 : 1;
      all.push_back(WeylElement::make(nu, eps));
    }
  } while (std::next_permutation(nu.begin(), nu.end()));
  std::sort(all.begin(), all.end());
  return cache.emplace(g, std::move(all)).first->second;
}

// nu = nu2 o nu1, eps(i) = eps1(nu2^{-1}(i)) eps2(i).
WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
  if (w1.g != w2.g) throw DimensionMismatch("compose: genus mismatch");
  const int g = w1.g;
  std::vector<int> nu2_inv(sz(g));
  for (int j = 1; j <= g; ++j) nu2_inv[sz(w2.nu_of(j) - 1)] = j;
  WeylElement w;
  w.g = g;
  w.nu.resize(sz(g));
  w.eps.resize(sz(g));
  for (int j = 1; j <= g; ++j) w.nu[sz(j - 1)] = w2.nu_of(w1.nu_of(j));
  for (int i = 1; i <= g; ++i) w.eps[sz(i - 1)] = w1.eps_of(nu2_inv[sz(i - 1)]) * w2.eps_of(i);
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement inv;
  inv.g = w.g;
  inv.nu.resize(sz(w.g));
  inv.eps.resize(sz(w.g));
  for (int j = 1; j <= w.g; ++j) inv.nu[sz(w.nu_of(j) - 1)] = j;
  for (int i = 1; i <= w.g; ++i) inv.eps[sz(i - 1)] = w.eps_of(w.nu_of(i));
  return inv;
}

TorusExponent operator+(const TorusExponent& s, const TorusExponent& t) {
  if (s.a.size() != t.a.size()) throw DimensionMismatch("torus exponents differ in length");
  TorusExponent r = s;
  for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] += t.a[j];
  r.a0 += t.a0;
  return r;
}

TorusExponent beta(int g, int j) {
  check_genus(g);
  if (j < 0 || j > g) throw RangeError("beta_j needs 0 <= j <= g");
  TorusExponent t{zero_vector(sz(g)), 0};
  if (j == 0) {
    t.a0 = -1;
    return t;
  }
  for (int l = g - j; l < g; ++l) t.a[sz(l)] = -1;
  t.a0 = -2;
  return t;
}

CharacterData generic_characters(int g) {
  check_genus(g);
  CharacterData c;
  for (int j = 1; j <= g; ++j) c.chi.push_back(EigenMonomial::symbol("chi_" + std::to_string(j)));
  c.sigma = EigenMonomial::symbol("sigma");
  return c;
}

TorusExponent weyl_conjugate(const WeylElement& w, const TorusExponent& t) {
  check_compatible(w.g, t);
  TorusExponent out{zero_vector(sz(w.g)), t.a0};
  for (int j = 1; j <= w.g; ++j) {
    const int k = w.nu_of(j);
    const Rational& ak = t.a[sz(k - 1)];
    out.a[sz(j - 1)] = w.eps_of(k) == 1 ? ak : t.a0 - ak;
  }
  return out;
}

EigenMonomial hecke_diagonal(int g, const CharacterData& chi, const TorusExponent& t,
                             const WeylElement& w) {
  check_genus(g);
  if (w.g != g) throw DimensionMismatch("Weyl element genus mismatch");
  check_compatible(g, t);
  check_characters(g, chi);
  const TorusExponent b = weyl_conjugate(w, t);
  Rational p_exp = Rational(g * (g + 1)) / 4 * t.a0;
  for (int j = 1; j <= g; ++j) p_exp -= (g + 1 - j) * b.a[sz(j - 1)];
  EigenMonomial out = EigenMonomial::p_power(p_exp) * chi.sigma.pow(t.a0);
  for (int j = 1; j <= g; ++j) out = out * chi.chi[sz(j - 1)].pow(b.a[sz(j - 1)]);
  return out;
}

Rational c_constant(int g, int i, const WeylElement& w) {
  check_genus(g);
  if (w.g != g) throw DimensionMismatch("Weyl element genus mismatch");
  if (i < 1 || i > g) throw RangeError("c_constant needs 1 <= i <= g");
  Rational c = 0;
  if (i == g) {
    for (int j = 1; j <= g; ++j)
      if (w.eps_of(w.nu_of(j)) == -1) c += g + 1 - j;
    return c - Rational(g * (g + 1)) / 4;
  }
  for (int j = 1; j <= g; ++j) {
    const int k = w.nu_of(j);
    if (k > i) {
      c += g + 1 - j;
    } else if (w.eps_of(k) == -1) {
      c += 2 * (g + 1 - j);
    }
  }
  return c - Rational(g * (g + 1)) / 2;
}

std::vector<EigenMonomial> up_eigenvalues(int g, const CharacterData& chi, const WeylElement& w) {
  std::vector<EigenMonomial> out;
  for (int i = 1; i <= g; ++i) out.push_back(hecke_diagonal(g, chi, beta(g, g - i), w));
  return out;
}

Rational lambda_valuation(const GspWeights& mu, const TorusExponent& t) {
  if (mu.mu.size() != t.a.size()) throw DimensionMismatch("weights and torus exponent differ in length");
  Rational v = 0;
  Rational total = 0;
  for (std::size_t j = 0; j < mu.mu.size(); ++j) {
    v += mu.mu[j] * t.a[j];
    total += mu.mu[j];
  }
  return v + t.a0 * (mu.mu0 - total) / 2;
}

std::vector<EigenMonomial> normalized_eigenvalues(int g, const CharacterData& chi,
                                                  const GspWeights& mu, const WeylElement& w) {
  check_weights(g, mu);
  std::vector<EigenMonomial> alpha = up_eigenvalues(g, chi, w);
  for (int i = 1; i <= g; ++i) {
    auto& a = alpha[sz(i - 1)];
    a = EigenMonomial::p_power(lambda_valuation(mu, beta(g, g - i))) * a;
  }
  return alpha;
}

CharacterData recover_characters(int g, const std::vector<EigenMonomial>& theta,
                                 const GspWeights& mu, const WeylElement& w) {
  if (g < 2) throw DomainError("recover_characters needs genus at least 2");
  if (w.g != g) throw DimensionMismatch("Weyl element genus mismatch");
  if (theta.size() != sz(g)) throw DimensionMismatch("need one eigenvalue per i = 1..g");
  check_weights(g, mu);

  std::vector<EigenMonomial> alpha(sz(g));
  std::vector<Rational> c(sz(g) + 1);
  for (int i = 1; i <= g; ++i) {
    alpha[sz(i - 1)] =
        EigenMonomial::p_power(-lambda_valuation(mu, beta(g, g - i))) * theta[sz(i - 1)];
    c[sz(i)] = c_constant(g, i, w);
  }
  auto a = [&](int i) -> const EigenMonomial& { return alpha[sz(i - 1)]; };

  // y_i = chi_{nu^{-1}(i)}(p)^{eps(i)}.
  std::vector<EigenMonomial> y(sz(g) + 1);
  y[1] = EigenMonomial::p_power(mu.mu0 - c[1]) * a(1);
  for (int i = 2; i < g; ++i) y[sz(i)] = EigenMonomial::p_power(c[sz(i - 1)] - c[sz(i)]) * a(i) / a(i - 1);
  y[sz(g)] = EigenMonomial::p_power(c[sz(g - 1)] - 2 * c[sz(g)]) * a(g).pow(2) / a(g - 1);

  CharacterData out;
  out.chi.resize(sz(g));
  const WeylElement winv = inverse(w);
  for (int i = 1; i <= g; ++i) {
    out.chi[sz(winv.nu_of(i) - 1)] = y[sz(i)].pow(w.eps_of(i));
  }
  EigenMonomial sigma = EigenMonomial::p_power(c[sz(g)]) * a(g).inverse();
  for (int k = 1; k <= g; ++k)
    if (w.eps_of(k) == -1) sigma = sigma / out.chi[sz(winv.nu_of(k) - 1)];
  out.sigma = sigma;

  if (normalized_eigenvalues(g, out, mu, w) != theta) {
    throw InversionError("recovered characters do not reproduce the eigenvalues");
  }
  return out;
}

bool slope_check_hilbert(const HilbertWeights& weights, const std::vector<Rational>& slopes) {
  if (weights.k.empty()) throw DomainError("need at least one place");
  if (slopes.size() != weights.k.size()) throw DimensionMismatch("need one slope per place");
  for (const auto& k : weights.k) {
    if (k < 2) throw DomainError("weights k_i must be at least 2");
    const Rational diff = k - weights.w;
    if (diff.get_den() != 1 || diff.get_num() % 2 != 0)
      throw DomainError("weights must satisfy k_i = w mod 2");
  }
  Rational lhs = 0;
  for (std::size_t i = 0; i < slopes.size(); ++i) lhs += (weights.w + weights.k[i] - 2) / 2 + slopes[i];
  const Rational kmin = *std::min_element(weights.k.begin(), weights.k.end());
  return lhs < kmin - 1;
}

GspSlopeSides gsp_slope_sides(const std::vector<GspWeights>& weights, const TorusExponent& t,
                              const std::vector<Rational>& slopes) {
  if (weights.empty()) throw DomainError("need at least one place");
  if (slopes.size() != weights.size()) throw DimensionMismatch("need one slope per place");
  const std::size_t g = t.a.size();
  if (g == 0) throw DomainError("torus exponent must have g >= 1 entries");
  for (std::size_t i = 0; i + 1 < g; ++i)
    if (t.a[i] < t.a[i + 1]) throw PreconditionError("t is not dominant: need a_1 >= ... >= a_g");
  if (2 * t.a[g - 1] < t.a0) throw PreconditionError("t is not dominant: need 2 a_g >= a_0");

  GspSlopeSides s{0, 0};
  bool first = true;
  for (std::size_t v = 0; v < weights.size(); ++v) {
    const GspWeights& mu = weights[v];
    if (mu.mu.size() != g) throw DimensionMismatch("weights and torus exponent differ in length");
    s.lhs += lambda_valuation(mu, t) + slopes[v];
    auto take = [&](const Rational& x) {
      if (first || x < s.rhs) s.rhs = x;
      first = false;
    };
    for (std::size_t i = 0; i + 1 < g; ++i) take((mu.mu[i] - mu.mu[i + 1] + 1) * (t.a[i] - t.a[i + 1]));
    take(2 * (2 * mu.mu[g - 1] + 1) * t.a[g - 1]);
  }
  return s;
}

bool slope_check_gsp(const std::vector<GspWeights>& weights, const TorusExponent& t,
                     const std::vector<Rational>& slopes) {
  const GspSlopeSides s = gsp_slope_sides(weights, t, slopes);
  return s.lhs < s.rhs;
}

long twist_search(const std::vector<GspWeights>& weights, const TorusExponent& t,
                  const std::vector<Rational>& slopes) {
  const GspSlopeSides s = gsp_slope_sides(weights, t, slopes);
  if (s.lhs < s.rhs) return 0;
  if (t.a0 == 0) throw DomainError("twisting cannot change the slope inequality when a_0 = 0");
  // LHS(m) = LHS - m * places * a0 / 2.
  const Rational per_m = Rational(static_cast<long>(slopes.size())) * t.a0 / 2;
  Rational bound_q = abs(Rational(s.lhs - s.rhs) / per_m) + 1;
  Integer bound = bound_q.get_num() / bound_q.get_den() + 1;
  for (long k = 1; Integer(k) <= bound; ++k) {
    for (long m : {k, -k}) {
      if (s.lhs - m * per_m < s.rhs) return m;
    }
  }
  throw InternalConsistencyError("twist_search exceeded its analytic bound");
}

bool ObstructionOrders::sufficient(long big_n) const {
  if (big_n <= 0) throw DomainError("sufficiency check needs a positive N");
  if (unconditional) return false;
  return std::all_of(orders.begin(), orders.end(), [big_n](long d) { return big_n % d == 0; });
}

ObstructionOrders refinement_obstruction_orders(const std::vector<long>& exponents) {
  const std::size_t len = exponents.size();
  if (len > 24) throw UnsupportedInput("too many exponents for subset enumeration");
  ObstructionOrders out{{}, false};
  std::set<long> diffs;
  for (std::size_t i = 1; i < len; ++i) {
    long top = 0;
    for (std::size_t j = 0; j < i; ++j) top += exponents[j];
    const unsigned long top_mask = (1UL << i) - 1;
    for (unsigned long mask = 0; mask < (1UL << len); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountl(mask)) != i || mask == top_mask) continue;
      long s = 0;
      for (std::size_t j = 0; j < len; ++j)
        if (mask & (1UL << j)) s += exponents[j];
      const long d = std::labs(top - s);
      if (d == 0) {
        out.unconditional = true;
      } else {
        diffs.insert(d);
      }
    }
  }
  for (long d : diffs)
    for (long q = 1; q <= d; ++q)
      if (d % q == 0) out.orders.insert(q);
  return out;
}

}  // namespace symlinv
