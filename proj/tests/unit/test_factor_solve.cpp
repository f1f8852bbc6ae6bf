#include "freeop/errors.hpp"
#include "freeop/poly/solve.hpp"
#include "freeop/poly/upoly.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace freeop;

namespace {

UPoly up(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return UPoly(v);
}

UPoly multiply_back(const UFactorization& f) {
  UPoly out = UPoly::constant(f.unit);
  for (const auto& [p, m] : f.factors) {
    for (int k = 0; k < m; ++k) out = out * p;
  }
  return out;
}

Ideal make(const VariableList& vars, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, vars));
  return Ideal(vars, ps);
}

}  // namespace

TEST(Factor, Cyclotomics) {
  // x^12 - 1 splits into the cyclotomic polynomials of 1, 2, 3, 4, 6, 12.
  std::vector<Rational> c(13);
  c[0] = -1;
  c[12] = 1;
  const UFactorization f = factor(UPoly(c));
  EXPECT_EQ(f.factors.size(), 6u);
  EXPECT_EQ(multiply_back(f), UPoly(c));
  EXPECT_TRUE(is_irreducible(up({1, 0, 0, 0, 1})));
  EXPECT_TRUE(is_irreducible(up({1, 0, -10, 0, 1})));
  EXPECT_FALSE(is_irreducible(up({-4, 0, 1})));
}

TEST(FactorProperty, RandomProductsOfKnownIrreducibles) {
  const std::vector<UPoly> pool{up({-1, 1}), up({2, 1}), up({-2, 0, 1}), up({1, 1, 1}), up({3, 0, 1}),
                                up({1, 0, 0, 0, 1}), up({-5, 0, 1}), up({1, -1, 0, 1})};
  oracle::Gen gen(7);
  for (int trial = 0; trial < 25; ++trial) {
    UPoly f = UPoly::constant(Rational(gen.integer(1, 4)) / Rational(gen.integer(1, 3)));
    std::vector<int> chosen;
    const int n = gen.integer(1, 4);
    for (int k = 0; k < n; ++k) {
      const int i = gen.integer(0, static_cast<int>(pool.size()) - 1);
      chosen.push_back(i);
      f = f * pool[i];
    }
    const UFactorization fac = factor(f);
    EXPECT_EQ(multiply_back(fac), f) << f.to_string();
    int total = 0;
    for (const auto& [p, m] : fac.factors) {
      EXPECT_TRUE(is_irreducible(p)) << p.to_string();
      total += m;
    }
    EXPECT_EQ(total, n) << f.to_string();
  }
}

TEST(Factor, RationalRootsAndSquarefree) {
  const UPoly f = up({-1, 1}) * up({-1, 1}) * up({3, 2});
  EXPECT_EQ(rational_roots(f), (std::vector<Rational>{Rational(-3, 2), 1}));
  EXPECT_EQ(squarefree_part(f), (up({-1, 1}) * up({3, 2})).monic());
}

TEST(Solve, ZeroDimensionalPoints) {
  const VariableList v{"x", "y"};
  const ZeroDimSolution s = solve_zero_dim(make(v, {"x^2 - 1", "y - x"}));
  EXPECT_EQ(s.points, (std::vector<Point>{{-1, -1}, {1, 1}}));
  EXPECT_FALSE(s.has_nonrational);
  const ZeroDimSolution t = solve_zero_dim(make(v, {"x^2 - 2", "y"}));
  EXPECT_TRUE(t.points.empty());
  EXPECT_TRUE(t.has_nonrational);
  EXPECT_THROW(solve_zero_dim(make(v, {"x"})), InputError);
}

// Points chosen at random are recovered from the ideal <f(x), y - g(x)>
// with f vanishing on their x-coordinates and g interpolating y.
TEST(SolveProperty, RecoversInterpolatedPoints) {
  oracle::Gen gen(99);
  const VariableList v{"x", "y"};
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Point> pts;
    std::vector<int> xs;
    while (xs.size() < 3) {
      const int x = gen.integer(-4, 4);
      if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    Polynomial f(v, Rational(1)), g(v);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Rational yi = gen.coefficient();
      pts.push_back({xs[i], yi});
      Polynomial basis(v, Rational(1));
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j == i) continue;
        basis *= (Polynomial::variable(v, "x") - Polynomial(v, Rational(xs[j]))) * (Rational(1) / Rational(xs[i] - xs[j]));
      }
      g += basis * yi;
      f *= Polynomial::variable(v, "x") - Polynomial(v, Rational(xs[i]));
    }
    std::sort(pts.begin(), pts.end());
    const Ideal i(v, {f, Polynomial::variable(v, "y") - g});
    EXPECT_EQ(solve_zero_dim(i).points, pts) << "trial " << trial;
  }
}

TEST(SolveProperty, JacobianRankMatchesBareiss) {
  oracle::Gen gen(3);
  const VariableList v{"x", "y", "z"};
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(gen.polynomial(v, 3, 4));
    const Point p{gen.integer(-2, 2), gen.integer(-2, 2), gen.integer(-2, 2)};
    std::vector<std::vector<Rational>> m;
    for (const auto& g : gens) {
      std::vector<Rational> row;
      for (const auto& x : v) row.push_back(g.partial_derivative(x).evaluate(p));
      m.push_back(row);
    }
    EXPECT_EQ(jacobian_rank_at(gens, v, p), oracle::bareiss_rank(m)) << "trial " << trial;
  }
}

TEST(Solve, SmoothPoints) {
  const VariableList v{"x", "y"};
  const Ideal cusp = make(v, {"y^2 - x^3"});
  EXPECT_FALSE(is_smooth_point(cusp, {0, 0}));
  EXPECT_TRUE(is_smooth_point(cusp, {1, 1}));
  EXPECT_THROW(is_smooth_point(cusp, {1, 0}), InputError);
}

TEST(Solve, SamplingStaysOnTheVariety) {
  const VariableList v{"x", "y"};
  const Ideal circle = make(v, {"x^2 + y^2 - 1"});
  const auto pts = sample_rational_points(circle, 4);
  EXPECT_EQ(pts.size(), 4u);
  for (const auto& p : pts) EXPECT_EQ(circle.generators()[0].evaluate(p), 0);
  const auto filtered = sample_rational_points(circle, 4, [](const Point& p) { return p[1] != 0; });
  for (const auto& p : filtered) EXPECT_NE(p[1], 0);
}

TEST(Primality, SupportedCases) {
  const VariableList v{"x", "y"};
  EXPECT_EQ(check_prime(Ideal::zero(v)).status, Primality::prime);
  EXPECT_EQ(check_prime(make(v, {"1"})).status, Primality::not_prime);
  EXPECT_EQ(check_prime(make(v, {"y - x^2"})).status, Primality::prime);
  EXPECT_EQ(check_prime(make(v, {"x*y"})).status, Primality::not_prime);
  EXPECT_EQ(check_prime(make(v, {"x^2 + y^2 - 1"})).status, Primality::prime);
  EXPECT_EQ(check_prime(make(v, {"x^2 - 2", "y^2 - 3"})).status, Primality::prime);
  EXPECT_EQ(check_prime(make(v, {"x^2 - 1", "y"})).status, Primality::not_prime);
  EXPECT_EQ(check_prime(make(v, {"x - 1", "y + 2"})).status, Primality::prime);
}
