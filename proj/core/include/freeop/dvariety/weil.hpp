#pragma once

#include "freeop/dvariety/dvariety.hpp"

#include <map>
#include <string>
#include <vector>

namespace freeop {

/// L = Q(a) = Q[a]/(m) with a D-structure extending the trivial one on Q.
struct FieldExtension {
  std::string generator = "a";
  UPoly modulus;
  /// Components of d(a), polynomials in `generator`.
  TensorElement d_generator;
};

/// Element of L as coefficients of 1, a, ..., a^(deg m - 1).
using ExtensionElement = std::vector<Rational>;
using ExtensionPoint = std::vector<ExtensionElement>;

struct WeilDescent {
  FieldExtension extension;
  /// Coordinates of V over L.
  VariableList variables;
  /// V over L as an ideal in variables + generator (with m adjoined).
  Ideal ideal_over_extension;
  std::vector<TensorElement> section_over_extension;
  /// The D-operator of (L, d) on Q[a]/(m).
  DOperator extension_op;
  /// (V^W, s^W) over Q; coordinates x_a0, x_a1, ... per original x.
  DVariety descended;
  /// x -> sum_c x_ac a^c.
  std::map<std::string, Polynomial> ascend_table;
  /// x_ac -> (x, c): coefficient of a^c in x.
  std::map<std::string, std::pair<std::string, std::size_t>> descend_table;

  Point descend_point(const ExtensionPoint& point) const;
  ExtensionPoint ascend_point(const Point& point) const;
  /// Direct check over L: a in V(L) and nabla(a) = s(a), computed in
  /// Q[a]/(m) with the extension operator on coefficients.
  bool is_sharp_over_extension(const ExtensionPoint& point) const;
  bool on_variety_over_extension(const ExtensionPoint& point) const;
};

/// Descends (V, s) over L to (V^W, s^W) over Q. Throws InputError if m is
/// reducible or constant, VerificationError if d(a) is incompatible with m
/// or (V, s) is not a D-variety over L, or if the descended section fails
/// its own checks.
WeilDescent weil_descent(const FiniteDimAlgebra& algebra, FieldExtension extension, const Ideal& ideal,
                         const std::vector<TensorElement>& section);

/// "x_ac": the coefficient of a^c in x.
std::string descended_name(const std::string& var, const std::string& generator, std::size_t c);

}  // namespace freeop
