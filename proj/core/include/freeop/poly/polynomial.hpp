#pragma once

#include "freeop/poly/monomial_order.hpp"
#include "freeop/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freeop {

using VariableList = std::vector<std::string>;

/// Variables of `a` followed by those of `b` not already present.
VariableList union_variables(const VariableList& a, const VariableList& b);

/// Sparse multivariate polynomial over Q.
///
/// A polynomial carries the ordered list of variables its exponent vectors
/// refer to. Binary operations on polynomials with different variable lists
/// first extend both to the union of the lists. No zero coefficient is ever
/// stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  Polynomial() = default;
  explicit Polynomial(VariableList vars);
  Polynomial(VariableList vars, const Rational& constant);

  static Polynomial variable(VariableList vars, const std::string& name);
  static Polynomial monomial(VariableList vars, Exponent exponent, const Rational& coefficient);

  const VariableList& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_coefficient() const;
  Rational coefficient(const Exponent& e) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  std::uint32_t degree(std::string_view var) const;
  /// Variables that occur with a nonzero exponent, in list order.
  VariableList support() const;

  /// Adds c*x^e to the polynomial (merging with an existing term).
  void add_term(const Exponent& e, const Rational& c);

  /// Same polynomial over a different variable list. Every variable in the
  /// support must appear in `vars`.
  Polynomial embed(const VariableList& vars) const;
  Polynomial rename(const std::map<std::string, std::string>& names) const;

  /// Ring homomorphism sending each listed variable to a polynomial; other
  /// variables are left alone.
  Polynomial substitute(const std::map<std::string, Polynomial>& assignment) const;
  Polynomial partial_derivative(std::string_view var) const;

  /// Every variable in the support must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Point given in the polynomial's own variable order.
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial pow(unsigned n) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Equal as polynomials, independent of the variable lists.
  bool operator==(const Polynomial& rhs) const;

  /// Leading exponent under `order`; requires a nonzero polynomial.
  const Exponent& leading_exponent(const MonomialOrder& order) const;

  /// Canonical text: terms in decreasing `order`, `*` between factors.
  std::string to_string(const MonomialOrder& order = MonomialOrder::grevlex()) const;

 private:
  VariableList vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses a polynomial in the given variables. Coefficients may be
/// rationals written with `/`; `^` takes a non-negative integer; implicit
/// multiplication is rejected.
Polynomial parse_polynomial(std::string_view text, const VariableList& vars);

}  // namespace freeop
