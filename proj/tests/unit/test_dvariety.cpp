#include "fixtures.hpp"
#include "freeop/dvariety/dvariety.hpp"
#include "freeop/dvariety/weil.hpp"
#include "freeop/errors.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace freeop;
using fixtures::poly;
using fixtures::tensor;

namespace {

const VariableList x1{"x"};
const VariableList xy{"x", "y"};

FiniteDimAlgebra dual() { return fixtures::standard_algebras()[0].algebra; }

DVariety euler() { return make_dvariety(BaseDStructure::trivial(dual()), Ideal::zero(x1), {tensor({"x", "x"}, x1)}); }

DVariety flow() {
  return make_dvariety(BaseDStructure::trivial(dual()), fixtures::ideal(xy, {"y - x^2"}),
                       {tensor({"x", "1"}, xy), tensor({"y", "2*x"}, xy)});
}

DVariety zero_section() {
  return make_dvariety(BaseDStructure::trivial(dual()), fixtures::ideal(xy, {"x^2 + y^2 - 1"}),
                       {tensor({"x", "0"}, xy), tensor({"y", "0"}, xy)});
}

}  // namespace

TEST(DVariety, EulerHasOnlyZero) {
  const SharpPoints s = rational_sharp_points(euler());
  EXPECT_EQ(s.dimension, 0);
  EXPECT_EQ(s.points, (std::vector<Point>{{0}}));
  EXPECT_TRUE(is_sharp_point(euler(), Point{0}));
  EXPECT_FALSE(is_sharp_point(euler(), Point{Rational(1, 3)}));
}

TEST(DVariety, ParabolaFlowHasNoSharpPoints) {
  const Ideal locus = sharp_locus(flow());
  EXPECT_TRUE(locus.is_unit());
  EXPECT_EQ(locus.to_string(), "<1>");
  const SharpPoints s = rational_sharp_points(flow());
  EXPECT_EQ(s.dimension, -1);
  EXPECT_TRUE(s.points.empty());
}

TEST(DVariety, ZeroSectionOfCircleIsAllSharp) {
  const DVariety dv = zero_section();
  const SharpPoints s = rational_sharp_points(dv);
  EXPECT_EQ(s.dimension, 1);
  EXPECT_NE(std::find(s.points.begin(), s.points.end(), Point{1, 0}), s.points.end());
  for (const auto& p : s.points) EXPECT_TRUE(is_sharp_point(dv, p));
  EXPECT_THROW(is_sharp_point(dv, Point{1, 1}), InputError);
}

TEST(DVariety, ParametricSharpLocus) {
  const VariableList t{"t"};
  const BaseDStructure base(dual(), t, {tensor({"t", "1"}, t)});
  const VariableList xt{"x", "t"};
  const DVariety dv = make_dvariety(base, Ideal::zero(xt), {tensor({"x", "t*x"}, xt)});
  EXPECT_TRUE(sharp_locus(dv).equals(fixtures::ideal(sharp_locus(dv).variables(), {"x"})));
  EXPECT_TRUE(is_sharp_point(dv, std::vector<Polynomial>{Polynomial(xt)}));
}

TEST(DVariety, SectionMustLandInTheProlongation) {
  EXPECT_THROW(make_dvariety(BaseDStructure::trivial(dual()), fixtures::ideal(xy, {"x^2 + y^2 - 1"}),
                             {tensor({"x", "1"}, xy), tensor({"y", "0"}, xy)}),
               VerificationError);
  EXPECT_THROW(make_dvariety(BaseDStructure::trivial(dual()), Ideal::zero(x1), {tensor({"x + 1", "0"}, x1)}),
               VerificationError);
}

TEST(DVariety, OperatorMatchesSection) {
  for (const DVariety& dv : {euler(), flow(), zero_section()}) {
    EXPECT_EQ(dv.op().images(), dv.section());
  }
}

TEST(DVariety, OpenSubvarieties) {
  const DVariety same = open_dsubvariety(flow(), poly("1", xy));
  EXPECT_TRUE(same.ideal().equals(flow().ideal()));
  EXPECT_EQ(same.section(), flow().section());

  // Removing the only sharp point leaves none.
  const DVariety punctured = open_dsubvariety(euler(), poly("x", x1));
  EXPECT_TRUE(sharp_locus(punctured).is_unit());
  const DVariety shifted = open_dsubvariety(euler(), poly("x - 1", x1));
  EXPECT_EQ(rational_sharp_points(shifted).points.size(), 1u);
}

TEST(DVariety, DIdealFixture) {
  const DOperator d = make_doperator(dual(), Ideal::zero(xy), {tensor({"x", "x"}, xy), tensor({"y", "y"}, xy)});
  const DIdealFixtureReport r =
      dideal_fixture_check(d, fixtures::ideal(xy, {"x*y"}), {fixtures::ideal(xy, {"x"}), fixtures::ideal(xy, {"y"})});
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.covers);
  const DIdealFixtureReport partial = dideal_fixture_check(d, fixtures::ideal(xy, {"x*y"}), {fixtures::ideal(xy, {"x"})});
  EXPECT_FALSE(partial.covers);
  EXPECT_THROW(dideal_fixture_check(d, fixtures::ideal(xy, {"x - 1"}), {}), InputError);
}

namespace {

struct DescentCase {
  const char* name;
  Rational square;
  WeilDescent w;
};

DescentCase descent_i() {
  const VariableList xa{"x", "a"};
  FieldExtension ext{"a", UPoly({Rational(1), Rational(0), Rational(1)}), tensor({"a", "0"}, {"a"})};
  return {"i", Rational(-1),
          weil_descent(dual(), ext, fixtures::ideal(xa, {"x - a"}), {tensor({"x", "0"}, xa)})};
}

DescentCase descent_sqrt2() {
  const VariableList xa{"x", "a"};
  FieldExtension ext{"a", UPoly({Rational(-2), Rational(0), Rational(1)}), tensor({"a", "0"}, {"a"})};
  return {"sqrt2", Rational(2), weil_descent(dual(), ext, Ideal::zero(xa), {tensor({"x", "a*x"}, xa)})};
}

}  // namespace

TEST(WeilDescent, NamingAndTables) {
  const DescentCase c = descent_i();
  EXPECT_EQ(descended_name("x", "a", 1), "x_a1");
  EXPECT_EQ(c.w.descended.variables(), (VariableList{"x_a0", "x_a1"}));
  EXPECT_EQ(c.w.descend_table.at("x_a1"), (std::pair<std::string, std::size_t>{"x", 1}));
  EXPECT_EQ(c.w.descend_point({{0, 1}}), (Point{0, 1}));
  EXPECT_EQ(c.w.ascend_point({0, 1}), (ExtensionPoint{{0, 1}}));
}

// Over a box of points p + q a, sharpness over L is decided directly in
// Q(a) (the derivation is zero on L, so nabla(x) = (x, 0)) and compared
// with the descended variety over Q.
TEST(WeilDescentProperty, SharpPointsAgreeOnBothSides) {
  for (const DescentCase& c : {descent_i(), descent_sqrt2()}) {
    const oracle::Quadratic q{c.square};
    const auto& vars_a = c.w.ideal_over_extension.variables();
    std::size_t oracle_count = 0;
    for (int p = -2; p <= 2; ++p) {
      for (int r = -2; r <= 2; ++r) {
        const std::vector<oracle::Quadratic::Elt> pt{{p, r}, {0, 1}};
        bool on = true;
        for (const auto& g : c.w.ideal_over_extension.generators()) on &= q.evaluate(g.embed(vars_a), pt) == oracle::Quadratic::Elt{0, 0};
        const bool sharp = on && q.evaluate(c.w.section_over_extension[0][1].embed(vars_a), pt) == oracle::Quadratic::Elt{0, 0};
        const ExtensionPoint ep{{p, r}};
        EXPECT_EQ(c.w.on_variety_over_extension(ep), on) << c.name;
        EXPECT_EQ(c.w.is_sharp_over_extension(ep), sharp) << c.name;
        if (on) EXPECT_EQ(is_sharp_point(c.w.descended, c.w.descend_point(ep)), sharp) << c.name;
        oracle_count += sharp;
      }
    }
    const SharpPoints s = rational_sharp_points(c.w.descended);
    EXPECT_EQ(s.dimension, 0) << c.name;
    EXPECT_EQ(s.points.size(), oracle_count) << c.name;
    for (const auto& p : s.points) {
      EXPECT_EQ(c.w.descend_point(c.w.ascend_point(p)), p) << c.name;
      EXPECT_TRUE(c.w.is_sharp_over_extension(c.w.ascend_point(p))) << c.name;
    }
  }
}

TEST(WeilDescent, RejectsBadExtensions) {
  const VariableList xa{"x", "a"};
  FieldExtension reducible{"a", UPoly({Rational(-1), Rational(0), Rational(1)}), tensor({"a", "0"}, {"a"})};
  EXPECT_THROW(weil_descent(dual(), reducible, Ideal::zero(xa), {tensor({"x", "0"}, xa)}), InputError);
  // d(a) = (a, 1) is not compatible with a^2 = -1.
  FieldExtension bad{"a", UPoly({Rational(1), Rational(0), Rational(1)}), tensor({"a", "1"}, {"a"})};
  EXPECT_THROW(weil_descent(dual(), bad, Ideal::zero(xa), {tensor({"x", "0"}, xa)}), VerificationError);
}
