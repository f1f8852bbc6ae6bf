#include "fixtures.hpp"
#include "freeop/dvariety/dvariety.hpp"
#include "freeop/errors.hpp"
#include "freeop/ucd/ucd.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace freeop;
using fixtures::poly;
using fixtures::tensor;

namespace {

const VariableList x1{"x"};
const VariableList y01{"x_0", "x_1"};

FiniteDimAlgebra dual() { return fixtures::standard_algebras()[0].algebra; }

UcdInstance line_instance(const char* y, std::optional<Point> witness = Point{0, 0}) {
  UcdInstance inst{BaseDStructure::trivial(dual()), Ideal::zero(x1), fixtures::ideal(y01, {y}), std::nullopt,
                   std::move(witness), false, false};
  return inst;
}

}  // namespace

TEST(Ucd, RiccatiVerifies) {
  const HypothesisReport r = check_instance(line_instance("x_1 - x_0^2"));
  EXPECT_EQ(r.overall(), HypothesisStatus::verified);
  EXPECT_EQ(r.exit_code(), 0);
  for (const char* name : {"containment", "dominance_0", "smooth_witness", "irreducible_X", "irreducible_Y", "nonempty_U"}) {
    ASSERT_NE(r.find(name), nullptr) << name;
    EXPECT_EQ(r.find(name)->status, HypothesisStatus::verified) << name;
  }
}

TEST(Ucd, BrokenDominanceIsRefutedWithWitness) {
  const HypothesisReport r = check_instance(line_instance("x_0"));
  EXPECT_EQ(r.overall(), HypothesisStatus::refuted);
  EXPECT_EQ(r.exit_code(), 2);
  const Hypothesis* dom = r.find("dominance_0");
  ASSERT_NE(dom, nullptr);
  EXPECT_EQ(dom->status, HypothesisStatus::refuted);
  ASSERT_TRUE(dom->witness.has_value());
  EXPECT_TRUE(dom->witness->equals(fixtures::ideal(y01, {"x_0"})));
}

TEST(Ucd, OtherRefutations) {
  // Witness off Y, h vanishing on Y, Y not inside tau X.
  EXPECT_EQ(check_instance(line_instance("x_1 - x_0^2", Point{1, 2})).find("smooth_witness")->status,
            HypothesisStatus::refuted);
  UcdInstance vanishing = line_instance("x_1 - x_0^2");
  vanishing.h = poly("x_1 - x_0^2", y01);
  EXPECT_EQ(check_instance(vanishing).find("nonempty_U")->status, HypothesisStatus::refuted);
  UcdInstance outside = line_instance("x_1");
  outside.x = fixtures::ideal(x1, {"x^2 - 1"});
  outside.smooth_witness.reset();
  EXPECT_EQ(check_instance(outside).find("containment")->status, HypothesisStatus::refuted);
  // Y = V((x_1 - x_0)^2) is irreducible but its ideal is not radical.
  UcdInstance nonradical = line_instance("x_1^2 - 2*x_0*x_1 + x_0^2");
  nonradical.h = poly("x_1 - x_0", y01);
  EXPECT_EQ(check_instance(nonradical).find("nonempty_U")->status, HypothesisStatus::refuted);
}

TEST(Ucd, AssertionsAndUndetermined) {
  // The tangent bundle of the circle: irreducible, but outside what the
  // primality check can certify.
  const VariableList xy{"x", "y"};
  const VariableList pv{"x_0", "y_0", "x_1", "y_1"};
  UcdInstance inst{BaseDStructure::trivial(dual()), fixtures::ideal(xy, {"x^2 + y^2 - 1"}),
                   fixtures::ideal(pv, {"x_0^2 + y_0^2 - 1", "x_0*x_1 + y_0*y_1"}), std::nullopt, std::nullopt, false, false};
  const HypothesisReport plain = check_instance(inst);
  ASSERT_EQ(plain.find("irreducible_Y")->status, HypothesisStatus::undetermined);
  EXPECT_EQ(plain.find("smooth_witness")->status, HypothesisStatus::undetermined);
  EXPECT_EQ(plain.exit_code(), 3);
  inst.assert_y_irreducible = true;
  inst.smooth_witness = Point{1, 0, 0, 1};
  const HypothesisReport r = check_instance(inst);
  EXPECT_EQ(r.find("irreducible_Y")->status, HypothesisStatus::asserted);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Ucd, MismatchedCoordinatesAreInputErrors) {
  UcdInstance inst = line_instance("x_1 - x_0^2");
  inst.y = fixtures::ideal({"x_0", "x_2"}, {"x_2"});
  EXPECT_THROW(check_instance(inst), InputError);
}

TEST(Ucd, SearchOnRiccati) {
  const NablaSearch s = find_nabla_point(line_instance("x_1 - x_0^2"));
  EXPECT_EQ(s.status, SearchStatus::found);
  EXPECT_EQ(s.points, (std::vector<Point>{{0}}));
  UcdInstance open = line_instance("x_1 - x_0^2");
  open.h = poly("x_0", y01);
  EXPECT_EQ(find_nabla_point(open).status, SearchStatus::none_found);
}

TEST(Ucd, SearchRefusesParametricBase) {
  const VariableList t{"t"};
  const VariableList xt{"x", "t"};
  UcdInstance inst{BaseDStructure(dual(), t, {tensor({"t", "1"}, t)}), Ideal::zero(xt),
                   fixtures::ideal({"x_0", "x_1", "t"}, {"x_1 - t"}), std::nullopt, std::nullopt, false, false};
  EXPECT_THROW(find_nabla_point(inst), InputError);
}

// For Y = V(x_1 - g(x_0)) over the dual numbers nabla(a) = (a, 0), so the
// search must return exactly the rational roots of g, which are also the
// sharp points of the D-variety x' = g(x). Adding h can only remove points.
TEST(UcdProperty, SearchAgreesWithRootsAndSharpPoints) {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Rational> roots_in;
    UPoly g = UPoly::constant(Rational(gen.integer(1, 3)));
    const int n = gen.integer(1, 3);
    for (int k = 0; k < n; ++k) {
      const Rational r = gen.integer(-3, 3);
      roots_in.push_back(r);
      g = g * UPoly({-r, Rational(1)});
    }
    if (gen.integer(0, 1)) g = g * UPoly({Rational(2), Rational(0), Rational(1)});
    const std::vector<Rational> roots = rational_roots(g);

    const Polynomial gy = g.to_polynomial(y01, "x_0");
    UcdInstance inst{BaseDStructure::trivial(dual()), Ideal::zero(x1), Ideal(y01, {Polynomial::variable(y01, "x_1") - gy}),
                     std::nullopt, std::nullopt, false, false};
    const NablaSearch s = find_nabla_point(inst);
    std::vector<Point> expected;
    for (const auto& r : roots) expected.push_back({r});
    EXPECT_EQ(s.points, expected) << g.to_string();

    const DVariety dv = make_dvariety(BaseDStructure::trivial(dual()), Ideal::zero(x1),
                                      {TensorElement{Polynomial::variable(x1, "x"), g.to_polynomial(x1, "x")}});
    EXPECT_EQ(rational_sharp_points(dv).points, expected) << g.to_string();

    inst.h = Polynomial::variable(y01, "x_0") - Polynomial(y01, roots.front());
    const NablaSearch smaller = find_nabla_point(inst);
    EXPECT_EQ(smaller.points.size() + 1, s.points.size());
    for (const auto& p : smaller.points) EXPECT_NE(std::find(s.points.begin(), s.points.end(), p), s.points.end());
  }
}

TEST(Ucd, CircleSearchIsPositiveDimensional) {
  const VariableList xy{"x", "y"};
  const VariableList pv{"x_0", "y_0", "x_1", "y_1"};
  UcdInstance inst{BaseDStructure::trivial(dual()), fixtures::ideal(xy, {"x^2 + y^2 - 1"}),
                   fixtures::ideal(pv, {"x_0^2 + y_0^2 - 1", "x_1", "y_1"}), std::nullopt, Point{1, 0, 0, 0}, false, false};
  const NablaSearch s = find_nabla_point(inst);
  EXPECT_EQ(s.status, SearchStatus::positive_dimensional);
  EXPECT_EQ(s.dimension, 1);
  EXPECT_FALSE(s.points.empty());
  EXPECT_EQ(check_instance(inst).exit_code(), 0);
}

TEST(Ucd, DifferenceLargeCounts) {
  const DOperator shift = make_doperator(split_algebra(2), Ideal::zero(x1), {tensor({"x", "x + 1"}, x1)});
  const DifferenceLargeReport r = check_difference_large_instance(shift, {{3, 4}, {1, 3}, {Rational(-1, 2), Rational(1, 2)}});
  EXPECT_EQ(r.passed, 2u);
  EXPECT_FALSE(r.points[1].passed);
  EXPECT_FALSE(r.points[1].failure.empty());
  const DOperator local = make_doperator(dual(), Ideal::zero(x1), {tensor({"x", "1"}, x1)});
  EXPECT_THROW(check_difference_large_instance(local, {{0, 0}}), InputError);
}
