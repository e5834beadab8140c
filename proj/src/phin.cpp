#include "symlinv/phin.hpp"

#include <algorithm>

#include "symlinv/errors.hpp"

namespace symlinv {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

// Coefficients of (c1 e_1 + c2 e_2)^a indexed by e_1-exponent.
Vector binomial_power(const Rational& c1, const Rational& c2, int a) {
  Vector out = zero_vector(sz(a) + 1);
  for (int j = 0; j <= a; ++j) {
    Rational t(binomial(a, j));
    for (int r = 0; r < j; ++r) t *= c1;
    for (int r = 0; r < a - j; ++r) t *= c2;
    out[sz(j)] = t;
  }
  return out;
}

// Span of x^a e_1^b e_2^c, a >= n, a + b + c = 2n, with x = c1 e_1 + c2 e_2.
Subspace divisible_forms(const PhiNModule& m, const Rational& c1, const Rational& c2) {
  const int n = m.n;
  std::vector<Vector> gens;
  for (int a = n; a <= 2 * n; ++a) {
    const Vector xa = binomial_power(c1, c2, a);
    for (int b = 0; b <= 2 * n - a; ++b) {
      Vector form = zero_vector(sz(2 * n) + 1);
      for (int j = 0; j <= a; ++j) form[sz(j + b)] += xa[sz(j)];
      gens.push_back(m.from_form(form));
    }
  }
  return Subspace::span(m.dim(), gens);
}

bool distinct_eigenvalues(const PhiNModule& m) {
  for (std::size_t i = 0; i < m.phi.size(); ++i)
    for (std::size_t j = i + 1; j < m.phi.size(); ++j)
      if (m.phi[i] == m.phi[j]) return false;
  return true;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  // Coordinate subspaces: compare pivot positions lexicographically.
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const auto pa = std::find_if(a.basis()[r].begin(), a.basis()[r].end(),
                                 [](const Rational& x) { return x != 0; }) - a.basis()[r].begin();
    const auto pb = std::find_if(b.basis()[r].begin(), b.basis()[r].end(),
                                 [](const Rational& x) { return x != 0; }) - b.basis()[r].begin();
    if (pa != pb) return pa < pb;
  }
  return false;
}

}  // namespace

std::string to_string(PhiNCase c) {
  switch (c) {
    case PhiNCase::steinberg: return "steinberg";
    case PhiNCase::crystalline_split: return "crystalline_split";
    case PhiNCase::crystalline_nonsplit: return "crystalline_nonsplit";
  }
  return "unknown";
}

PhiNCase parse_phin_case(const std::string& name) {
  if (name == "steinberg") return PhiNCase::steinberg;
  if (name == "crystalline_split") return PhiNCase::crystalline_split;
  if (name == "crystalline_nonsplit") return PhiNCase::crystalline_nonsplit;
  throw DomainError("unknown (phi,N)-module case '" + name + "'");
}

std::size_t PhiNModule::position(int i) const {
  if (i < -n || i > n) throw RangeError("basis label f_i needs -n <= i <= n");
  return sz(n - i);
}

Subspace PhiNModule::span_of(const std::vector<int>& labels) const {
  std::vector<std::size_t> idx;
  for (int i : labels) idx.push_back(position(i));
  return Subspace::coordinate(dim(), idx);
}

Vector PhiNModule::from_form(const Vector& e1_coeffs) const {
  if (e1_coeffs.size() != dim()) throw DimensionMismatch("binary form must have degree 2n");
  Vector v = zero_vector(dim());
  // e_1^x e_2^{2n-x} = f_{x-n}, which sits at position 2n - x.
  for (std::size_t x = 0; x < dim(); ++x) v[dim() - 1 - x] = e1_coeffs[x];
  return v;
}

PhiNModule build_case(PhiNCase kind, int n, const PhiNParams& params) {
  if (n < 0) throw RangeError("build_case: n must be non-negative");
  PhiNModule m;
  m.kind = kind;
  m.n = n;
  m.N = Matrix(m.dim(), m.dim());
  m.L = params.L;
  switch (kind) {
    case PhiNCase::steinberg: {
      if (params.L == 0) throw DomainError("steinberg case requires a nonzero L-invariant");
      for (std::size_t q = 0; q < m.dim(); ++q) m.phi.push_back(EigenMonomial::p_power(-m.label(q)));
      // N f_i = (n - i) f_{i+1}; f_i sits at position n - i.
      for (std::size_t q = 1; q < m.dim(); ++q) m.N(q - 1, q) = Rational(static_cast<long>(q));
      m.fil0 = divisible_forms(m, -params.L, 1);
      break;
    }
    case PhiNCase::crystalline_split: {
      m.valuations["alpha"] = 0;
      for (std::size_t q = 0; q < m.dim(); ++q) {
        const int i = m.label(q);
        m.phi.push_back(EigenMonomial::symbol("alpha", 2 * i) *
                        EigenMonomial::p_power(i * (params.k - 1)));
      }
      std::vector<int> labels;
      for (int i = 0; i >= -n; --i) labels.push_back(i);
      m.fil0 = m.span_of(labels);
      break;
    }
    case PhiNCase::crystalline_nonsplit: {
      m.valuations["r"] = 0;
      for (std::size_t q = 0; q < m.dim(); ++q) m.phi.push_back(EigenMonomial::symbol("r", m.label(q)));
      m.fil0 = divisible_forms(m, 1, 1);
      break;
    }
  }
  for (const auto& [sym, v] : params.valuations) m.valuations[sym] = v;
  if (m.fil0.dim() != sz(n) + 1) throw InternalConsistencyError("Fil^0 must be (n+1)-dimensional");
  return m;
}

Subspace eigenspace(const PhiNModule& m, const EigenMonomial& lambda) {
  std::vector<std::size_t> idx;
  for (std::size_t q = 0; q < m.dim(); ++q)
    if (m.phi[q] == lambda) idx.push_back(q);
  return Subspace::coordinate(m.dim(), idx);
}

std::vector<Subspace> stable_submodules(const PhiNModule& m) {
  if (!distinct_eigenvalues(m)) {
    throw UnsupportedInput("stable_submodules requires pairwise distinct phi-eigenvalues");
  }
  const std::size_t d = m.dim();
  if (d > 20) throw UnsupportedInput("stable_submodules: module too large to enumerate");
  std::vector<Subspace> out;
  for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
    bool closed = true;
    std::vector<std::size_t> idx;
    for (std::size_t q = 0; q < d && closed; ++q) {
      if (!(mask & (1UL << q))) continue;
      idx.push_back(q);
      for (std::size_t r = 0; r < d; ++r)
        if (m.N(r, q) != 0 && !(mask & (1UL << r))) closed = false;
    }
    if (closed) out.push_back(Subspace::coordinate(d, idx));
  }
  std::sort(out.begin(), out.end(), subspace_less);
  return out;
}

std::vector<Subspace> regular_submodules(const PhiNModule& m) {
  const std::size_t target = m.dim() - m.fil0.dim();
  std::vector<Subspace> out;
  for (Subspace& s : stable_submodules(m)) {
    if (s.dim() == target && intersect(s, m.fil0).dim() == 0) out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<EigenMonomial> distinct_values(const PhiNModule& m) {
  std::vector<EigenMonomial> vals;
  for (const auto& x : m.phi)
    if (std::find(vals.begin(), vals.end(), x) == vals.end()) vals.push_back(x);
  return vals;
}

}  // namespace

BenoisFiltration benois_filtration(const PhiNModule& m, const Subspace& d) {
  if (d.ambient_dim() != m.dim()) throw DimensionMismatch("D does not live in D_st");
  const std::vector<EigenMonomial> vals = distinct_values(m);
  Subspace phi_parts(m.dim());
  for (const auto& lambda : vals) phi_parts = sum(phi_parts, intersect(d, eigenspace(m, lambda)));
  if (!(phi_parts == d)) throw PreconditionError("D is not phi-stable");
  if (!d.contains(image(m.N, d))) throw PreconditionError("D is not N-stable");

  const EigenMonomial one = EigenMonomial::one();
  const EigenMonomial p_inv = EigenMonomial::p_power(-1);
  const Subspace e_one = eigenspace(m, one);

  // (1 - p^{-1} phi^{-1}) acts on D meet E_lambda by a scalar vanishing iff lambda = p^{-1}.
  Subspace dm1(m.dim());
  for (const auto& lambda : vals) {
    if (lambda == p_inv) continue;
    dm1 = sum(dm1, intersect(d, eigenspace(m, lambda)));
  }
  dm1 = sum(dm1, image(m.N, intersect(d, e_one)));

  const Subspace d_pinv = intersect(d, eigenspace(m, p_inv));
  const Subspace d1 = sum(d, intersect(e_one, preimage(m.N, d_pinv)));
  return BenoisFiltration{dm1, d, d1};
}

Gr1Data gr1_data(const PhiNModule& m, const Subspace& d) {
  const BenoisFiltration f = benois_filtration(m, d);
  Gr1Data out{f.d1.dim() - f.d0.dim(), {}};
  for (const auto& lambda : distinct_values(m)) {
    const Subspace e = eigenspace(m, lambda);
    const std::size_t mult = intersect(f.d1, e).dim() - intersect(f.d0, e).dim();
    for (std::size_t r = 0; r < mult; ++r) out.eigenvalues.push_back(lambda);
  }
  return out;
}

}  // namespace symlinv
