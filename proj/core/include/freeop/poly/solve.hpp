#pragma once

#include "freeop/poly/ideal.hpp"

#include <functional>
#include <string>
#include <vector>

namespace freeop {

/// A point with coordinates listed in some ideal's variable order.
using Point = std::vector<Rational>;

/// Rank of the Jacobian matrix of `gens` (rows) with respect to `vars`
/// (columns) at `point`, by exact elimination.
std::size_t jacobian_rank_at(const std::vector<Polynomial>& gens, const VariableList& vars, const Point& point);

/// Generators of I vanish at the point; throws InputError otherwise.
void require_on_variety(const Ideal& ideal, const Point& point);

/// Jacobian criterion: rank equals #vars - dim I. Throws InputError when the
/// point is not on V(I).
bool is_smooth_point(const Ideal& ideal, const Point& point);

struct ZeroDimSolution {
  /// Rational points of V(I), lexicographically sorted.
  std::vector<Point> points;
  /// Some triangular univariate had an irreducible factor of degree > 1.
  bool has_nonrational = false;
};

/// Rational points of a zero-dimensional ideal via a lex basis and
/// back-substitution. Throws InputError when dim I > 0; the unit ideal has
/// no points.
ZeroDimSolution solve_zero_dim(const Ideal& ideal);

/// Up to max_samples rational points of V(I), found by fixing a maximal
/// independent set of coordinates to 0, 1, -1, ..., 3, -3 (smallest total
/// first) and solving the zero-dimensional fibres. Points failing `accept`
/// are skipped. Sorted; not exhaustive.
std::vector<Point> sample_rational_points(const Ideal& ideal, std::size_t max_samples,
                                          const std::function<bool(const Point&)>& accept = {});

enum class Primality { prime, not_prime, undetermined };

struct PrimalityResult {
  Primality status;
  std::string reason;
};

/// Decides primality in the supported cases: generators solved for a
/// variable are substituted away first; then the zero ideal, principal
/// ideals with an irreducible specialization certificate, and
/// zero-dimensional ideals via minimal polynomials of random elements of the
/// quotient. Everything else is undetermined.
PrimalityResult check_prime(const Ideal& ideal);

std::string to_string(Primality p);

}  // namespace freeop
