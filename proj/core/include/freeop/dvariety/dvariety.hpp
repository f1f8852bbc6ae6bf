#pragma once

#include "freeop/prolongation/prolongation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freeop {

/// A D-variety (V, s): V = V(I) over the base, s a section of
/// pi_hat: tau V -> V given by one TensorElement per coordinate of V.
/// Equivalently a D-ring structure on K[V], kept alongside as op().
class DVariety {
 public:
  const BaseDStructure& base() const { return op_base_; }
  const Ideal& ideal() const { return op_.ideal(); }
  /// Coordinates of V (ring variables other than the parameters).
  const VariableList& variables() const { return vars_; }
  const std::vector<TensorElement>& section() const { return section_; }
  const DOperator& op() const { return op_; }

 private:
  friend DVariety make_dvariety(const BaseDStructure&, const Ideal&, const std::vector<TensorElement>&);
  explicit DVariety(BaseDStructure base) : op_base_(std::move(base)) {}
  BaseDStructure op_base_;
  VariableList vars_;
  std::vector<TensorElement> section_;
  DOperator op_;
};

/// Checks that component 0 of s is the identity mod I and that s maps V
/// into tau V (every f^(j) vanishes on s modulo I), then cross-checks by
/// building the equivalent DOperator. Throws VerificationError naming the
/// offending coordinate or generator/component.
DVariety make_dvariety(const BaseDStructure& base, const Ideal& ideal, const std::vector<TensorElement>& section);

/// Sharp points with coordinates in Q: I + <s^(i)(x) - b_i x : i >= 1>.
/// With parameters, every condition must hold identically in t, so each
/// generator contributes its coefficients as a polynomial in t.
Ideal sharp_locus(const DVariety& dv);

/// Checks nabla(a) = s(a) for a point with coordinates in Q[t] (rationals
/// over the trivial base), after checking a lies on V. Throws InputError
/// for a point of the wrong length or off the variety.
bool is_sharp_point(const DVariety& dv, const std::vector<Polynomial>& point);
bool is_sharp_point(const DVariety& dv, const Point& point);

struct SharpPoints {
  Ideal locus;
  /// -1 when the locus is empty.
  int dimension = -1;
  /// All rational sharp points when dimension == 0, sample points when the
  /// locus is positive-dimensional.
  std::vector<Point> points;
  bool has_nonrational = false;
};

/// Enumerates rational sharp points of a zero-dimensional locus; for a
/// positive-dimensional one, samples points by fixing a maximal independent
/// set of coordinates to small integers. Over Q an empty answer says nothing
/// about larger D-fields.
SharpPoints rational_sharp_points(const DVariety& dv, std::size_t max_samples = 5);

/// The D-subvariety on V - V(q), via localize_dstructure; the new
/// coordinate is the inverse of q.
DVariety open_dsubvariety(const DVariety& dv, const Polynomial& q, std::string inverse_name = "");

struct PrimeCheck {
  Ideal prime;
  bool contains_j = false;
  bool is_d_ideal = false;
  bool passed() const { return contains_j && is_d_ideal; }
};

struct DIdealFixtureReport {
  std::vector<PrimeCheck> primes;
  /// The product of the supplied primes lies in rad(J), so they cover V(J).
  bool covers = false;
  bool passed() const;
};

/// For a radical D-ideal J with supplied minimal primes, every prime should
/// itself be a D-ideal. Throws InputError when J is not a D-ideal.
DIdealFixtureReport dideal_fixture_check(const DOperator& d, const Ideal& j, const std::vector<Ideal>& primes);

}  // namespace freeop
