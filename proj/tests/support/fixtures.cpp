#include "fixtures.hpp"

#include "freeop/poly/poly_parser.hpp"

namespace fixtures {

Polynomial poly(const std::string& text, const VariableList& vars) { return parse_polynomial(text, vars); }

TensorElement tensor(std::initializer_list<const char*> components, const VariableList& vars) {
  TensorElement t;
  for (const char* c : components) t.push_back(poly(c, vars));
  return t;
}

Ideal ideal(const VariableList& vars, std::initializer_list<const char*> generators) {
  std::vector<Polynomial> ps;
  for (const char* g : generators) ps.push_back(poly(g, vars));
  return Ideal(vars, ps);
}

std::vector<NamedAlgebra> standard_algebras() {
  const VariableList e{"e"};
  const VariableList e12{"e1", "e2"};
  const FiniteDimAlgebra dual = from_presentation(e, {poly("e^2", e)});
  return {
      {"dual", dual, 1},
      {"square_zero", from_presentation(e12, {poly("e1^2", e12), poly("e1*e2", e12), poly("e2^2", e12)}), 1},
      {"split3", split_algebra(3), 3},
      {"dual_times_q", direct_product(dual, split_algebra(1)), 2},
      {"truncated", from_presentation(e, {poly("e^3", e)}), 1},
  };
}

FiniteDimAlgebra gaussian() {
  const VariableList y{"y"};
  return from_presentation(y, {poly("y^2 + 1", y)});
}

std::vector<OpFixture> doperator_fixtures() {
  const auto algebras = standard_algebras();
  const VariableList xy{"x", "y"};
  const VariableList xyz{"x", "y", "z"};
  const Ideal parabola = ideal(xy, {"y - x^2"});
  std::vector<Point> parabola_points;
  for (int k = -2; k <= 2; ++k) parabola_points.push_back({k, k * k});
  const std::vector<Point> space_points{{0, 0, 0}, {1, -1, 2}, {Rational(1, 2), 3, -2}};

  std::vector<OpFixture> out;
  out.push_back({"dual/parabola",
                 make_doperator(algebras[0].algebra, parabola, {tensor({"x", "1"}, xy), tensor({"y", "2*x"}, xy)}),
                 parabola_points});
  out.push_back({"square_zero/affine3",
                 make_doperator(algebras[1].algebra, Ideal::zero(xyz),
                                {tensor({"x", "y", "1"}, xyz), tensor({"y", "x*z", "0"}, xyz),
                                 tensor({"z", "0", "x^2 - y"}, xyz)}),
                 space_points});
  // Idempotent coordinates: sigma_1(x) = x + 1, sigma_2(x) = 2x.
  out.push_back({"split3/parabola",
                 make_doperator(algebras[2].algebra, parabola,
                                {tensor({"x", "x + 1", "2*x"}, xy), tensor({"y", "y + 2*x + 1", "4*y"}, xy)}),
                 parabola_points});
  out.push_back({"dual_times_q/parabola",
                 make_doperator(algebras[3].algebra, parabola,
                                {tensor({"x", "1", "x + 1"}, xy), tensor({"y", "2*x", "y + 2*x + 1"}, xy)}),
                 parabola_points});
  // Hasse-Schmidt style: (x + e)^2 = x^2 + 2x e + e^2.
  out.push_back({"truncated/parabola",
                 make_doperator(algebras[4].algebra, parabola,
                                {tensor({"x", "1", "0"}, xy), tensor({"y", "2*x", "1"}, xy)}),
                 parabola_points});
  return out;
}

}  // namespace fixtures
