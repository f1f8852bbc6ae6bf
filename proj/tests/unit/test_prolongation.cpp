#include "fixtures.hpp"
#include "freeop/errors.hpp"
#include "freeop/prolongation/prolongation.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace freeop;
using fixtures::poly;
using fixtures::tensor;

namespace {

const VariableList xy{"x", "y"};

std::vector<Polynomial> components_of(const ProlongedVariety& tau) {
  std::vector<Polynomial> out;
  for (const auto& g : tau.generators()) out.insert(out.end(), g.components.begin(), g.components.end());
  return out;
}

}  // namespace

TEST(Prolongation, TangentBundleOfParabola) {
  const auto dual = fixtures::standard_algebras()[0].algebra;
  const ProlongedVariety tau = prolong(BaseDStructure::trivial(dual), fixtures::ideal(xy, {"y - x^2"}));
  const VariableList pv{"x_0", "y_0", "x_1", "y_1"};
  EXPECT_EQ(tau.prolonged_variables(), pv);
  EXPECT_EQ(components_of(tau), (std::vector<Polynomial>{poly("y_0 - x_0^2", pv), poly("y_1 - 2*x_0*x_1", pv)}));
}

TEST(Prolongation, SplitAlgebraGivesTwoCopies) {
  const ProlongedVariety tau = prolong(BaseDStructure::trivial(split_algebra(2)), fixtures::ideal(xy, {"y - x^2"}));
  const VariableList pv{"x_0", "y_0", "x_1", "y_1"};
  EXPECT_EQ(components_of(tau), (std::vector<Polynomial>{poly("y_0 - x_0^2", pv), poly("y_1 - x_1^2", pv)}));
}

// Each f^(j) is the j-th coordinate of f evaluated at sum_j x_j e_j,
// computed here by the regular-representation oracle.
TEST(ProlongationProperty, ComponentsMatchMatrixExpansion) {
  oracle::Gen gen(77);
  for (const auto& [name, D, count] : fixtures::standard_algebras()) {
    const VariableList pv = prolonged_variables(xy, D.dim());
    std::map<std::string, std::vector<Polynomial>> images;
    for (const auto& v : xy) {
      for (std::size_t j = 0; j < D.dim(); ++j) images[v].push_back(Polynomial::variable(pv, prolonged_name(v, j)));
    }
    for (int trial = 0; trial < 10; ++trial) {
      const Polynomial f = gen.polynomial(xy, 3, 3);
      if (f.is_zero()) continue;
      const ProlongedVariety tau = prolong(BaseDStructure::trivial(D), Ideal(xy, {f}));
      EXPECT_EQ(tau.generators()[0].components, oracle::expand(D, f, images, pv)) << name << " " << f.to_string();
    }
  }
}

TEST(ProlongationProperty, NablaLandsInTheProlongation) {
  std::size_t pairs = 0;
  for (const auto& fx : fixtures::doperator_fixtures()) {
    const ProlongedVariety tau = prolong(BaseDStructure::trivial(fx.op.algebra()), fx.op.ideal());
    for (const auto& a : fx.points) {
      const Point p = nabla(fx.op, a);
      for (const auto& g : tau.ideal().generators()) EXPECT_EQ(g.evaluate(p), 0) << fx.name;
      ++pairs;
    }
    // Generic form: substituting the images for the coordinates kills every
    // f^(j) modulo I.
    const auto sub = section_substitution(fx.op.variables(), fx.op.images());
    for (const auto& g : tau.ideal().generators()) {
      EXPECT_TRUE(fx.op.ideal().contains(g.substitute(sub).embed(fx.op.variables()))) << fx.name;
    }
  }
  EXPECT_GE(pairs, 10u);
}

TEST(Prolongation, NablaOffTheVarietyThrows) {
  const auto fx = fixtures::doperator_fixtures()[0];
  EXPECT_THROW(nabla(fx.op, {1, 2}), InputError);
  EXPECT_THROW(nabla(fx.op, {1}), InputError);
}

TEST(Prolongation, NablaOverTheConstants) {
  EXPECT_EQ(nabla_constant(fixtures::standard_algebras()[0].algebra, {3}), (Point{3, 0}));
  EXPECT_EQ(nabla_constant(split_algebra(2), {3, Rational(1, 2)}), (Point{3, Rational(1, 2), 3, Rational(1, 2)}));
}

TEST(Prolongation, PiHatRecoversTheEndomorphisms) {
  const auto fx = fixtures::doperator_fixtures()[2];
  const ProlongedVariety tau = prolong(BaseDStructure::trivial(fx.op.algebra()), fx.op.ideal());
  for (std::size_t i = 0; i < 3; ++i) {
    const PiHat ph = pi_hat(tau, i);
    const auto sigma = associated_hom(fx.op, i).as_substitution();
    for (const auto& a : fx.points) {
      const Point image = ph.apply(nabla(fx.op, a));
      Point expected;
      for (const auto& v : fx.op.variables()) expected.push_back(sigma.at(v).evaluate(a));
      EXPECT_EQ(image, expected);
    }
  }
  const AlphaHat alpha = alpha_hat(tau);
  EXPECT_EQ(alpha.factors.size(), 3u);
  EXPECT_EQ(alpha.apply(nabla(fx.op, {1, 1})).size(), 6u);
}

TEST(Prolongation, ParametricBase) {
  const auto dual = fixtures::standard_algebras()[0].algebra;
  const VariableList t{"t"};
  const BaseDStructure base(dual, t, {tensor({"t", "1"}, t)});
  const VariableList xt{"x", "t"};
  const ProlongedVariety tau = prolong(base, fixtures::ideal(xt, {"x - t^2"}));
  const VariableList pv{"x_0", "x_1", "t"};
  EXPECT_EQ(tau.prolonged_variables(), pv);
  EXPECT_EQ(components_of(tau), (std::vector<Polynomial>{poly("x_0 - t^2", pv), poly("x_1 - 2*t", pv)}));

  const BaseDStructure shift(split_algebra(2), t, {tensor({"t", "t + 1"}, t)});
  const Ideal tw = twist(shift, fixtures::ideal(xt, {"x - t^2"}), 1);
  EXPECT_TRUE(tw.equals(fixtures::ideal(xt, {"x - t^2 - 2*t - 1"})));
}

TEST(Prolongation, NameCollisionIsAnInputError) {
  const VariableList v{"x", "x_1"};
  EXPECT_THROW(prolong(BaseDStructure::trivial(split_algebra(2)), fixtures::ideal(v, {"x - x_1"})), InputError);
}

TEST(Prolongation, ExtendByPoint) {
  const auto dual = fixtures::standard_algebras()[0].algebra;
  const BaseDStructure base = BaseDStructure::trivial(dual);
  const Ideal parabola = fixtures::ideal(xy, {"y - x^2"});
  const DOperator d = extend_by_point(base, parabola, {poly("x", xy), poly("y", xy), poly("1", xy), poly("2*x", xy)});
  EXPECT_EQ(d.images(), fixtures::doperator_fixtures()[0].op.images());
  EXPECT_THROW(extend_by_point(base, parabola, {poly("x", xy), poly("y", xy), poly("1", xy), poly("x", xy)}),
               VerificationError);
}
