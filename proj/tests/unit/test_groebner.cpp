#include "freeop/errors.hpp"
#include "freeop/poly/groebner.hpp"
#include "freeop/poly/ideal.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace freeop;

namespace {

Ideal make(const VariableList& vars, std::initializer_list<const char*> gens, IdealOptions opts = {}) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, vars));
  return Ideal(vars, ps, opts);
}

}  // namespace

TEST(Polynomial, ParsePrintRoundTrip) {
  const VariableList v{"x", "y"};
  for (const char* s : {"-x^2 + y", "1/2*x - 3/4*y^2 + 1", "(x + y)^3 - x*y", "0", "-7/3"}) {
    const Polynomial p = parse_polynomial(s, v);
    EXPECT_EQ(parse_polynomial(p.to_string(), v), p) << s;
  }
  EXPECT_EQ(parse_polynomial("(x+1)^2", v).to_string(), "x^2 + 2*x + 1");
}

TEST(Polynomial, ParseErrorsCarryPosition) {
  const VariableList v{"x"};
  try {
    parse_polynomial("x + z", v);
    FAIL() << "unknown variable accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
    EXPECT_EQ(e.token(), "z");
  }
  EXPECT_THROW(parse_polynomial("2x", v), ParseError);
  EXPECT_THROW(parse_polynomial("x +", v), ParseError);
}

TEST(Polynomial, SubstituteAndEvaluate) {
  const VariableList v{"x", "y"};
  const Polynomial f = parse_polynomial("x^2*y - y + 3", v);
  const Polynomial g = f.substitute({{"y", parse_polynomial("x + 1", v)}});
  EXPECT_EQ(g.embed(v), parse_polynomial("x^3 + x^2 - x + 2", v));
  EXPECT_EQ(f.evaluate(std::map<std::string, Rational>{{"x", 2}, {"y", Rational(1, 2)}}), Rational(9, 2));
}

TEST(Groebner, ParabolaEliminationGivesQuartic) {
  const VariableList v{"x", "y", "z"};
  const Ideal i = make(v, {"y - x^2", "y^2 - z"});
  const Ideal e = i.eliminate({"x", "z"});
  ASSERT_EQ(e.groebner_basis().size(), 1u);
  EXPECT_EQ(e.groebner_basis()[0].embed({"x", "z"}), parse_polynomial("x^4 - z", {"x", "z"}));
}

TEST(Groebner, Cyclic4HasKnownBasisSize) {
  const VariableList v{"a", "b", "c", "d"};
  const Ideal i = make(v, {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"});
  // The reduced grevlex basis of cyclic-4 has 7 elements.
  EXPECT_EQ(i.groebner_basis().size(), 7u);
  EXPECT_FALSE(i.is_unit());
  EXPECT_EQ(i.krull_dimension(), 1);
}

TEST(Groebner, UnitIdealAndRadical) {
  const VariableList v{"x", "y"};
  EXPECT_TRUE(make(v, {"x", "x - 1"}).is_unit());
  const Ideal sq = make(v, {"x^2", "y^3"});
  EXPECT_FALSE(sq.contains(parse_polynomial("x", v)));
  EXPECT_TRUE(sq.radical_contains(parse_polynomial("x + y", v)));
  EXPECT_FALSE(sq.radical_contains(parse_polynomial("x + 1", v)));
}

TEST(Groebner, BudgetExhaustionThrows) {
  const VariableList v{"a", "b", "c", "d"};
  IdealOptions tight;
  tight.budget.max_basis_size = 3;
  const Ideal i = make(v, {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"},
                       tight);
  EXPECT_THROW(i.groebner_basis(), BudgetExhausted);
}

TEST(Groebner, DimensionAndIndependentSets) {
  const VariableList v{"x", "y", "z"};
  EXPECT_EQ(make(v, {}).krull_dimension(), 3);
  EXPECT_EQ(make(v, {"x*y"}).krull_dimension(), 2);
  EXPECT_EQ(make(v, {"x - 1", "y - 2", "z^2 - 3"}).krull_dimension(), 0);
  EXPECT_THROW(make(v, {"1"}).krull_dimension(), InputError);
  const VariableList free = make(v, {"y - x^2"}).maximal_independent_set();
  EXPECT_EQ(free.size(), 2u);
}

TEST(Groebner, StandardMonomialsOfQuotient) {
  const VariableList v{"e1", "e2"};
  EXPECT_EQ(make(v, {"e1^2", "e1*e2", "e2^2"}).standard_monomials().size(), 3u);
  try {
    make(v, {"e1^2"}).standard_monomials();
    FAIL() << "infinite quotient accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("e2"), std::string::npos);
  }
}

// Every generator reduces to zero against the basis, every basis element
// reduces to zero against a basis for another order, and every S-polynomial
// of the basis reduces to zero (Buchberger's criterion).
TEST(GroebnerProperty, CrossMembershipOnRandomIdeals) {
  oracle::Gen gen(20240611);
  const VariableList v{"x", "y", "z"};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    const int n = gen.integer(1, 3);
    for (int k = 0; k < n; ++k) gens.push_back(gen.polynomial(v, 3, 3));
    const Ideal grevlex(v, gens);
    const Ideal lex = grevlex.with_options({GroebnerBudget{}, MonomialOrder::lex()});
    const auto& g1 = grevlex.groebner_basis();
    const auto& g2 = lex.groebner_basis();
    for (const auto& g : gens) EXPECT_TRUE(grevlex.contains(g)) << "trial " << trial;
    for (const auto& g : g1) EXPECT_TRUE(lex.contains(g)) << "trial " << trial;
    for (const auto& g : g2) EXPECT_TRUE(grevlex.contains(g)) << "trial " << trial;
    for (std::size_t i = 0; i < g1.size(); ++i) {
      for (std::size_t j = i + 1; j < g1.size(); ++j) {
        const Polynomial s = s_polynomial(g1[i], g1[j], MonomialOrder::grevlex());
        EXPECT_TRUE(reduce(s, g1, MonomialOrder::grevlex()).is_zero()) << "trial " << trial;
      }
    }
  }
}

TEST(GroebnerProperty, ConcurrentBasisRequestsAgree) {
  const VariableList v{"x", "y", "z"};
  const Ideal i = make(v, {"x^2 + y*z - 1", "y^2 - x*z", "z^3 - x"});
  std::vector<std::vector<Polynomial>> seen(4);
  std::vector<std::thread> workers;
  for (std::size_t k = 0; k < seen.size(); ++k) {
    workers.emplace_back([&, k] { seen[k] = i.groebner_basis(); });
  }
  for (auto& w : workers) w.join();
  for (const auto& s : seen) EXPECT_EQ(s, seen[0]);
}
