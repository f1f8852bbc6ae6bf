#pragma once

#include "freeop/linalg.hpp"
#include "freeop/poly/polynomial.hpp"
#include "freeop/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace freeop {

/// Dense univariate polynomial over Q; coefficient i belongs to x^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  UPoly monic() const;
  UPoly derivative() const;
  Rational evaluate(const Rational& x) const;

  UPoly& operator+=(const UPoly& rhs);
  UPoly& operator-=(const UPoly& rhs);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);
  bool operator==(const UPoly& rhs) const { return c_ == rhs.c_; }

  /// Quotient and remainder; `divisor` must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly operator%(const UPoly& divisor) const { return divmod(divisor).second; }
  UPoly operator/(const UPoly& divisor) const { return divmod(divisor).first; }

  /// Multivariate view in `var`, which must be listed in `vars`.
  Polynomial to_polynomial(const VariableList& vars, const std::string& var) const;
  /// Requires `p` to involve at most the variable `var`.
  static UPoly from_polynomial(const Polynomial& p, const std::string& var);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Irreducible factorization over Q: leading coefficient times monic
/// irreducible factors with multiplicities, factors sorted by degree and
/// then coefficients.
struct UFactorization {
  Rational unit;
  std::vector<std::pair<UPoly, int>> factors;
};

UFactorization factor(const UPoly& f);
bool is_irreducible(const UPoly& f);
/// Product of the distinct monic irreducible factors.
UPoly squarefree_part(const UPoly& f);
/// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const UPoly& f);

/// Monic minimal polynomial of a square matrix, found as the first linear
/// dependency among I, M, M^2, ...
UPoly minimal_polynomial(const Matrix& m);

/// Factorization of a polynomial in a single variable, factors returned as
/// multivariate polynomials over f's own variable list.
struct PolyFactorization {
  Rational unit;
  std::vector<std::pair<Polynomial, int>> factors;
};
PolyFactorization factor_univariate(const Polynomial& f);

}  // namespace freeop
