#pragma once

// Small algebras and D-operators shared by the unit tests and the
// acceptance binary.

#include "freeop/dring/doperator.hpp"
#include "freeop/poly/solve.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace freeop;

struct NamedAlgebra {
  std::string name;
  FiniteDimAlgebra algebra;
  /// Expected number of local components.
  std::size_t components;
};

/// Dual numbers, Q[e1,e2]/(e1,e2)^2, Q^3, dual numbers x Q, Q[e]/(e^3).
std::vector<NamedAlgebra> standard_algebras();
/// Q[y]/(y^2 + 1).
FiniteDimAlgebra gaussian();

struct OpFixture {
  std::string name;
  DOperator op;
  /// Rational points of the ring's variety, in its variable order.
  std::vector<Point> points;
};

/// One valid D-operator per standard algebra, each on at most three
/// variables.
std::vector<OpFixture> doperator_fixtures();

Polynomial poly(const std::string& text, const VariableList& vars);
TensorElement tensor(std::initializer_list<const char*> components, const VariableList& vars);
Ideal ideal(const VariableList& vars, std::initializer_list<const char*> generators);

}  // namespace fixtures
