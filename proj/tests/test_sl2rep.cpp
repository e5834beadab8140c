#include <doctest.h>

#include "support.hpp"
#include "symlinv/errors.hpp"
#include "symlinv/sl2rep.hpp"

using namespace symlinv;
using testsupport::Gen;

namespace {

// rho(X) on Sym^m written straight from L g_i = (m-i) g_{i+1}, R g_i = i g_{i-1}.
Matrix rho(Sl2Op x, int m) {
  const auto d = static_cast<std::size_t>(m + 1);
  Matrix r(d, d);
  for (int i = 0; i <= m; ++i) {
    const auto c = static_cast<std::size_t>(i);
    if (x == Sl2Op::L && i < m) r(c + 1, c) = m - i;
    if (x == Sl2Op::R && i > 0) r(c - 1, c) = i;
    if (x == Sl2Op::H) r(c, c) = m - 2 * i;
  }
  return r;
}

RepVector random_rep(Gen& gen, int m) { return RepVector(m, gen.vector(static_cast<std::size_t>(m + 1))); }

RepVector sub(const RepVector& a, const RepVector& b) {
  Vector c = a.coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs[i];
  return RepVector(a.m, c);
}
DualRepVector sub(const DualRepVector& a, const DualRepVector& b) {
  Vector c = a.coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs[i];
  return DualRepVector(a.m, c);
}

}  // namespace

TEST_CASE("lowering and raising examples") {
  CHECK(lower(RepVector::basis(2, 2)) == RepVector::zero(2));
  for (int m = 0; m < 5; ++m) CHECK(raise(RepVector::basis(m, 0)) == RepVector::zero(m));
  CHECK(lower(RepVector::basis(3, 1)) == RepVector(3, {0, 0, 2, 0}));
  for (int n = 0; n < 5; ++n) CHECK(lower_dual(DualRepVector::basis(n, 0)) == DualRepVector::zero(n));
  CHECK(lower_dual(DualRepVector::basis(2, 1)) == DualRepVector(2, {-2, 0, 0}));
  CHECK(raise_dual(DualRepVector::basis(2, 1)) == DualRepVector(2, {0, 0, -2}));
  CHECK_THROWS_AS(RepVector(2, {1, 2}), DimensionMismatch);
  CHECK_THROWS_AS(RepVector::basis(2, 3), RangeError);
}

TEST_CASE("action matrices match the displayed formulas") {
  for (int m = 0; m <= 6; ++m)
    for (Sl2Op x : {Sl2Op::L, Sl2Op::R, Sl2Op::H}) CHECK(action_matrix(x, m) == rho(x, m));
}

TEST_CASE("duality isomorphism examples") {
  CHECK(duality_iso(RepVector::basis(1, 0)) == DualRepVector(1, {0, -1}));
  CHECK(duality_iso(RepVector::basis(2, 1)) == DualRepVector(2, {0, Rational(-1, 2), 0}));
  Gen gen(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto v = random_rep(gen, static_cast<int>(gen.integer(0, 10)));
    CHECK(duality_iso_inverse(duality_iso(v)) == v);
  }
}

TEST_CASE("property: sl2 bracket [R, L] = H on V_m, duals and endomorphisms") {
  Gen gen(22);
  for (int m = 0; m <= 10; ++m) {
    const auto v = random_rep(gen, m);
    CHECK(sub(raise(lower(v)), lower(raise(v))) == weight_op(v));
    const DualRepVector d(m, gen.vector(static_cast<std::size_t>(m + 1)));
    CHECK(sub(raise(lower(d)), lower(raise(d))) == weight_op(d));
  }
  for (int n = 0; n <= 6; ++n) {
    const EndoElement t(n, gen.matrix(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1)));
    const auto rl = act_on_end(Sl2Op::R, act_on_end(Sl2Op::L, t));
    const auto lr = act_on_end(Sl2Op::L, act_on_end(Sl2Op::R, t));
    CHECK(EndoElement(n, rl.coeffs - lr.coeffs) == act_on_end(Sl2Op::H, t));
  }
}

TEST_CASE("property: duality_iso intertwines L and R") {
  Gen gen(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto v = random_rep(gen, static_cast<int>(gen.integer(0, 10)));
    CHECK(duality_iso(lower(v)) == lower(duality_iso(v)));
    CHECK(duality_iso(raise(v)) == raise(duality_iso(v)));
    CHECK(duality_iso(weight_op(v)) == weight_op(duality_iso(v)));
  }
}

TEST_CASE("property: act_on_end equals the matrix commutator") {
  Gen gen(24);
  for (int n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto d = static_cast<std::size_t>(n + 1);
      const Matrix t = gen.matrix(d, d, 5, 1);
      for (Sl2Op x : {Sl2Op::L, Sl2Op::R, Sl2Op::H}) {
        const Matrix r = rho(x, n);
        CHECK(act_on_end(x, EndoElement(n, t)).coeffs == r * t - t * r);
      }
    }
  }
}

TEST_CASE("act_on_end examples") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(act_on_end(Sl2Op::L, EndoElement::identity(n)) == EndoElement::zero(n));
    CHECK(act_on_end(Sl2Op::R, EndoElement::identity(n)) == EndoElement::zero(n));
  }
  // rho(R) on V_1 is the unit E_01, which commutes with itself.
  CHECK(act_on_end(Sl2Op::R, EndoElement::unit(1, 0, 1)) == EndoElement::zero(1));
  // [E_10, E_01] = E_11 - E_00.
  CHECK(act_on_end(Sl2Op::L, EndoElement::unit(1, 0, 1)).coeffs == Matrix::from_rows({{-1, 0}, {0, 1}}, 2));

  // Weight bookkeeping: E_ij has weight 2(j-i); L lowers by 2, R raises by 2.
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const auto e = EndoElement::unit(n, i, j);
        CHECK(act_on_end(Sl2Op::H, e) == EndoElement(n, Rational(2 * (j - i)) * e.coeffs));
        const auto l = act_on_end(Sl2Op::L, e);
        CHECK(act_on_end(Sl2Op::H, l) == EndoElement(n, Rational(2 * (j - i) - 2) * l.coeffs));
        const auto r = act_on_end(Sl2Op::R, e);
        CHECK(act_on_end(Sl2Op::H, r) == EndoElement(n, Rational(2 * (j - i) + 2) * r.coeffs));
      }
}

TEST_CASE("highest weight vectors") {
  for (int n = 0; n <= 5; ++n) CHECK(highest_weight_vector(n, n) == EndoElement::unit(n, 0, n));
  CHECK(highest_weight_vector(1, 0) == EndoElement::identity(1));
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto v = highest_weight_vector(n, k);
      CHECK(act_on_end(Sl2Op::R, v) == EndoElement::zero(n));
      CHECK(act_on_end(Sl2Op::H, v) == EndoElement(n, Rational(2 * k) * v.coeffs));
    }
  CHECK_THROWS_AS(highest_weight_vector(2, 3), RangeError);
}

TEST_CASE("property: {L^i v_2j} is a basis of End(V_n)") {
  for (int n = 0; n <= 8; ++n) {
    std::vector<Vector> cols;
    for (int j = 0; j <= n; ++j) {
      auto v = highest_weight_vector(n, j);
      for (int i = 0; i <= 2 * j; ++i) {
        cols.push_back(v.flatten());
        v = act_on_end(Sl2Op::L, v);
      }
      // L^{2j+1} v_2j = 0 closes the string.
      CHECK(v == EndoElement::zero(n));
    }
    const auto d = static_cast<std::size_t>((n + 1) * (n + 1));
    CHECK(cols.size() == d);
    CHECK(testsupport::naive_rank(Matrix::from_columns(cols, d)) == d);
  }
}

TEST_CASE("brute force projection examples") {
  for (int n = 0; n <= 5; ++n) {
    const EndoDecomposition dec(n);
    for (int k = 0; k <= n; ++k) {
      const auto v = dec.project(highest_weight_vector(n, k), k);
      CHECK(v == unit_vector(static_cast<std::size_t>(2 * k + 1), 0));
      if (k >= 1) CHECK(is_zero(dec.project(EndoElement::identity(n), k)));
    }
    CHECK(dec.block_offset(n) + static_cast<std::size_t>(2 * n + 1) ==
          static_cast<std::size_t>((n + 1) * (n + 1)));
  }
  CHECK(brute_force_project(EndoElement::identity(3), 0) == Vector{1});
}

TEST_CASE("property: projections reassemble the endomorphism") {
  Gen gen(25);
  for (int n = 0; n <= 5; ++n) {
    const EndoDecomposition dec(n);
    const auto d = static_cast<std::size_t>(n + 1);
    const EndoElement t(n, gen.matrix(d, d));
    Matrix acc(d, d);
    for (int k = 0; k <= n; ++k) {
      const auto c = dec.project(t, k);
      auto v = highest_weight_vector(n, k);
      for (int i = 0; i <= 2 * k; ++i) {
        acc = acc + c[static_cast<std::size_t>(i)] * v.coeffs;
        v = act_on_end(Sl2Op::L, v);
      }
    }
    CHECK(acc == t.coeffs);
  }
}
