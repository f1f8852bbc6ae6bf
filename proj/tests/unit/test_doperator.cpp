#include "fixtures.hpp"
#include "freeop/dring/doperator.hpp"
#include "freeop/errors.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace freeop;
using fixtures::poly;
using fixtures::tensor;

namespace {

TensorElement reduced(const DOperator& d, const TensorElement& t) {
  return tensor_map(t, [&](const Polynomial& p) { return d.reduce(p); });
}

std::map<std::string, std::vector<Polynomial>> image_table(const DOperator& d) {
  std::map<std::string, std::vector<Polynomial>> out;
  for (const auto& [v, t] : d.image_map()) out[v] = t;
  return out;
}

}  // namespace

// d(fg) agrees with the structure-constant product of d(f), d(g), and with
// the expansion through the regular representation of D.
TEST(DOperatorProperty, ProductRuleMatchesOracle) {
  oracle::Gen gen(1234);
  for (const auto& fx : fixtures::doperator_fixtures()) {
    const DOperator& d = fx.op;
    const auto images = image_table(d);
    const auto reducer = [&](const Polynomial& p) { return d.reduce(p); };
    for (int trial = 0; trial < 50; ++trial) {
      const Polynomial f = gen.polynomial(d.variables(), 3, 4);
      const Polynomial g = gen.polynomial(d.variables(), 3, 4);
      const TensorElement lhs = d.apply(f * g);
      EXPECT_EQ(lhs, tensor_mul(d.algebra(), d.apply(f), d.apply(g), reducer)) << fx.name;
      EXPECT_EQ(lhs, reduced(d, oracle::expand(d.algebra(), f * g, images, d.variables()))) << fx.name;
      EXPECT_TRUE(product_rule_check(d, f, g)) << fx.name;
    }
  }
}

TEST(DOperator, ConstantsGoToTheUnit) {
  for (const auto& fx : fixtures::doperator_fixtures()) {
    const TensorElement one = fx.op.apply(Polynomial(fx.op.variables(), Rational(3)));
    for (std::size_t k = 0; k < one.size(); ++k) {
      EXPECT_EQ(one[k], Polynomial(fx.op.variables(), 3 * fx.op.algebra().unit()[k])) << fx.name;
    }
  }
}

TEST(DOperator, SectionAndWellDefinednessErrors) {
  const auto dual = fixtures::standard_algebras()[0].algebra;
  const VariableList xy{"x", "y"};
  const Ideal parabola = fixtures::ideal(xy, {"y - x^2"});
  try {
    make_doperator(dual, parabola, {tensor({"x + 1", "1"}, xy), tensor({"y", "2*x"}, xy)});
    FAIL() << "section property not checked";
  } catch (const VerificationError& e) {
    EXPECT_NE(std::string(e.what()).find("x"), std::string::npos);
  }
  // y' = x is incompatible with y = x^2 when x' = 1.
  EXPECT_THROW(make_doperator(dual, parabola, {tensor({"x", "1"}, xy), tensor({"y", "x"}, xy)}), VerificationError);
  EXPECT_THROW(make_doperator(dual, parabola, {tensor({"x", "1"}, xy)}), InputError);
  EXPECT_THROW(make_doperator(dual, parabola, {tensor({"x"}, xy), tensor({"y"}, xy)}), InputError);
  EXPECT_THROW(make_doperator(fixtures::gaussian(), Ideal::zero({"x"}), {tensor({"x", "0"}, {"x"})}), InputError);
}

TEST(DOperator, ApplyRejectsForeignVariables) {
  const auto fx = fixtures::doperator_fixtures()[0];
  EXPECT_THROW(fx.op.apply(poly("w", {"w"})), InputError);
}

TEST(DOperator, DIdealOnLines) {
  const auto dual = fixtures::standard_algebras()[0].algebra;
  const VariableList xy{"x", "y"};
  const DOperator d = make_doperator(dual, Ideal::zero(xy), {tensor({"x", "x"}, xy), tensor({"y", "y"}, xy)});
  EXPECT_TRUE(is_d_ideal(d, fixtures::ideal(xy, {"x*y"})).is_d_ideal);
  EXPECT_TRUE(is_d_ideal(d, fixtures::ideal(xy, {"x"})).is_d_ideal);
  const DIdealReport r = is_d_ideal(d, fixtures::ideal(xy, {"x - 1"}));
  EXPECT_FALSE(r.is_d_ideal);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->second, 1u);
}

TEST(DOperator, AssociatedEndomorphisms) {
  const auto fx = fixtures::doperator_fixtures()[2];
  const auto d = fx.op.algebra();
  for (std::size_t i = 0; i < d.components().size(); ++i) {
    const AssociatedHom h = associated_hom(fx.op, i);
    ASSERT_TRUE(h.is_endomorphism());
    if (i == 0) EXPECT_EQ(h.as_substitution().at("x"), poly("x", fx.op.variables()));
  }
  // The other components are x -> x + 1 and x -> 2x in some order.
  std::set<std::string> seen;
  for (std::size_t i = 1; i < 3; ++i) seen.insert(associated_hom(fx.op, i).as_substitution().at("x").to_string());
  EXPECT_EQ(seen, (std::set<std::string>{"x + 1", "2*x"}));
  EXPECT_THROW(associated_hom(fx.op, 7), InputError);
}

TEST(DOperator, LocalizationExtendsUniquely) {
  const VariableList x{"x"};
  const DOperator d = make_doperator(split_algebra(2), Ideal::zero(x), {tensor({"x", "2*x"}, x)});
  const DOperator dq = localize_dstructure(d, poly("x", x));
  ASSERT_EQ(dq.variables(), (VariableList{"x", "w"}));
  const VariableList xw{"x", "w"};
  EXPECT_EQ(dq.image("w"), tensor({"w", "1/2*w"}, xw));
  // d(x w) = d(1).
  EXPECT_EQ(dq.apply(poly("x*w", xw)), tensor_scalar(dq.algebra(), Polynomial(xw, Rational(1))));

  const DOperator shift = make_doperator(split_algebra(2), Ideal::zero(x), {tensor({"x", "x + 1"}, x)});
  EXPECT_THROW(localize_dstructure(shift, poly("x", x)), VerificationError);

  const auto par = fixtures::doperator_fixtures()[0];
  const DOperator pq = localize_dstructure(par.op, poly("x", par.op.variables()), "u");
  const VariableList xyu{"x", "y", "u"};
  // u = 1/x, so u' = -u^2.
  EXPECT_EQ(pq.image("u"), tensor({"u", "-u^2"}, xyu));
  EXPECT_THROW(localize_dstructure(par.op, poly("x^2 - y", par.op.variables())), InputError);
}

TEST(DOperator, LocalizationOverTruncatedAlgebra) {
  const auto fx = fixtures::doperator_fixtures()[4];
  const DOperator dq = localize_dstructure(fx.op, poly("x", fx.op.variables()), "u");
  oracle::Gen gen(8);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial f = gen.polynomial(dq.variables(), 2, 3);
    const Polynomial g = gen.polynomial(dq.variables(), 2, 3);
    EXPECT_TRUE(product_rule_check(dq, f, g));
  }
  // (1/x)^(1) = -1/x^2 and the Hasse-Schmidt second component is 1/x^3.
  EXPECT_EQ(dq.image("u"), tensor({"u", "-u^2", "u^3"}, dq.variables()));
}

TEST(DOperator, InverseInQuotient) {
  const VariableList x{"x"};
  const Ideal j = fixtures::ideal(x, {"x^2 - 2"});
  const auto inv = inverse_in_quotient(j, poly("x + 1", x));
  ASSERT_TRUE(inv.has_value());
  EXPECT_TRUE(j.contains(*inv * poly("x + 1", x) - Polynomial(x, Rational(1))));
  EXPECT_FALSE(inverse_in_quotient(fixtures::ideal(x, {"x^2 - 1"}), poly("x - 1", x)).has_value());
}
