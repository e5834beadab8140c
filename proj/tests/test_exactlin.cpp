#include <doctest.h>

#include "support.hpp"
#include "symlinv/errors.hpp"
#include "symlinv/exactlin.hpp"
#include "symlinv/monomial.hpp"

using namespace symlinv;
using testsupport::Gen;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(parse_rational("4/-6")) == "-2/3");
  CHECK(to_string(Rational(10) / 5) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("solve examples") {
  auto r = solve(Matrix::identity(1), {Rational(5)});
  REQUIRE(r.consistent());
  CHECK(*r.solution == Vector{5});

  r = solve(Matrix(2, 2), {0, 0});
  REQUIRE(r.consistent());
  CHECK(*r.solution == Vector{0, 0});
  CHECK(r.kernel.size() == 2);

  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}}, 2);
  r = solve(a, {5, 11});
  REQUIRE(r.consistent());
  CHECK(*r.solution == Vector{1, 2});

  CHECK_FALSE(solve(Matrix::from_rows({{1, 1}, {1, 1}}, 2), {0, 1}).consistent());
  CHECK_THROWS_AS(solve(a, {1}), DimensionMismatch);
}

TEST_CASE("inverse") {
  const Matrix a = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(a * *inv == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}}, 2)));
}

TEST_CASE("subspace examples") {
  const Subspace v = Subspace::span(3, {{1, 2, 3}, {0, 1, 1}});
  CHECK(sum(v, Subspace(3)) == v);
  CHECK(intersect(Subspace::coordinate(2, {0}), Subspace::coordinate(2, {1})).dim() == 0);
  CHECK(Subspace::span(2, {{2, 4}}) == Subspace::span(2, {{-1, -2}}));
  CHECK(v.contains(Vector{1, 3, 4}));
  CHECK_FALSE(v.contains(Vector{0, 0, 1}));
  CHECK(Subspace::whole(3).contains(v));
  CHECK_FALSE(v.contains(Subspace::whole(3)));

  // Superdiagonal shift on (x0, x1, x2): x1 -> x0, x2 -> x1.
  const Matrix n = Matrix::from_rows({{0, 2, 0}, {0, 0, 1}, {0, 0, 0}}, 3);
  CHECK(preimage(n, Subspace::coordinate(3, {0})) == Subspace::coordinate(3, {0, 1}));
  CHECK(image(n, Subspace::whole(3)) == Subspace::coordinate(3, {0, 1}));
}

TEST_CASE("property: solve then substitute reproduces b") {
  Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(gen.integer(1, 6));
    const auto c = static_cast<std::size_t>(gen.integer(1, 6));
    const Matrix a = gen.matrix(r, c, 5, 2);
    // Build a consistent right-hand side from a random preimage.
    const Vector b = a.apply(gen.vector(c));
    const auto res = solve(a, b);
    REQUIRE(res.consistent());
    CHECK(a.apply(*res.solution) == b);
    for (const auto& k : res.kernel) CHECK(is_zero(a.apply(k)));
    CHECK(res.kernel.size() + rank(a) == c);
  }
}

TEST_CASE("property: rank agrees with naive elimination") {
  Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = gen.matrix(static_cast<std::size_t>(gen.integer(1, 7)),
                                static_cast<std::size_t>(gen.integer(1, 7)), 4, 3);
    CHECK(rank(a) == testsupport::naive_rank(a));
  }
}

TEST_CASE("property: dimension formula for sum and intersection") {
  Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 8));
    auto random_space = [&] {
      std::vector<Vector> vs;
      const long k = gen.integer(0, static_cast<long>(n));
      for (long i = 0; i < k; ++i) vs.push_back(gen.vector(n, 3));
      return Subspace::span(n, vs);
    };
    const Subspace u = random_space();
    const Subspace w = random_space();
    const Subspace s = sum(u, w);
    const Subspace i = intersect(u, w);
    CHECK(s.dim() + i.dim() == u.dim() + w.dim());
    CHECK(s.contains(u));
    CHECK(s.contains(w));
    CHECK(u.contains(i));
    CHECK(w.contains(i));
  }
}

TEST_CASE("property: echelon canonicalization is idempotent") {
  Gen gen(14);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = gen.matrix(static_cast<std::size_t>(gen.integer(1, 6)),
                                static_cast<std::size_t>(gen.integer(1, 6)), 5, 2);
    const Echelon e1 = reduced_row_echelon(a);
    const Echelon e2 = reduced_row_echelon(e1.rref);
    CHECK(e1.rref == e2.rref);
    CHECK(e1.pivots == e2.pivots);
    const Subspace s = Subspace::span(a.cols(), [&] {
      std::vector<Vector> rows;
      for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
      return rows;
    }());
    CHECK(Subspace::span(a.cols(), s.basis()) == s);
  }
}

TEST_CASE("property: preimage and image are adjoint to containment") {
  Gen gen(15);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 6));
    const Matrix t = gen.matrix(n, n, 3, 2);
    const Subspace w = Subspace::span(n, {gen.vector(n, 3), gen.vector(n, 3)});
    const Subspace pre = preimage(t, w);
    CHECK(w.contains(image(t, pre)));
    for (const auto& b : kernel_basis(t)) CHECK(pre.contains(b));
  }
}

TEST_CASE("monomials") {
  const auto a = EigenMonomial::symbol("alpha", 2) * EigenMonomial::p_power(Rational(-3, 2));
  CHECK(a.exponent("alpha") == 2);
  CHECK(a.valuation() == Rational(-3, 2));
  CHECK(a.valuation({{"alpha", Rational(1, 3)}}) == Rational(-5, 6));
  CHECK((a / a).is_one());
  CHECK(a.inverse() * a == EigenMonomial::one());
  CHECK(EigenMonomial::symbol("x", 0).is_one());
  CHECK(EigenMonomial::one().to_string() == "1");
  CHECK(a.to_string() == "alpha^2*p^(-3/2)");

  Gen gen(16);
  const ValuationTable table{{"x", Rational(1, 2)}, {"y", -3}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto m1 = gen.monomial({"p", "x", "y"});
    const auto m2 = gen.monomial({"p", "x", "y"});
    CHECK((m1 * m2).valuation(table) == m1.valuation(table) + m2.valuation(table));
    CHECK((m1 == m2) == (m1.exponents() == m2.exponents()));
  }
}
