#include "freeop/poly/upoly.hpp"

#include "freeop/errors.hpp"

#include <algorithm>
#include <sstream>

namespace freeop {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && freeop::is_zero(c_.back())) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (freeop::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(UPoly a, const Rational& c) {
  if (freeop::is_zero(c)) return {};
  for (auto& x : a.c_) x *= c;
  return a;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> quot(degree() - dd + 1);
  const Rational inv = 1 / divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    if (freeop::is_zero(rem[i])) continue;
    Rational q = rem[i] * inv;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

Polynomial UPoly::to_polynomial(const VariableList& vars, const std::string& var) const {
  Polynomial x = Polynomial::variable(vars, var);
  Polynomial out(vars);
  for (int i = degree(); i >= 0; --i) {
    out *= x;
    out += Polynomial(vars, c_[i]);
  }
  return out;
}

UPoly UPoly::from_polynomial(const Polynomial& p, const std::string& var) {
  const auto idx = p.index_of(var);
  std::vector<Rational> c;
  for (const auto& [e, coef] : p.terms()) {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (idx && i == *idx) {
        d = e[i];
      } else if (e[i] != 0) {
        throw InputError("polynomial '" + p.to_string() + "' is not univariate in '" + var + "'");
      }
    }
    if (c.size() <= d) c.resize(d + 1);
    c[d] += coef;
  }
  return UPoly(std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
  return to_polynomial({var}, var).to_string();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() <= 0) return UPoly::constant(1);
  return (f / gcd(f, f.derivative())).monic();
}

std::vector<Rational> rational_roots(const UPoly& f) {
  std::vector<Rational> roots;
  if (f.is_zero()) return roots;
  for (const auto& [g, mult] : factor(f).factors) {
    if (g.degree() == 1) roots.push_back(-g.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_irreducible(const UPoly& f) {
  if (f.degree() <= 0) return false;
  const auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

UPoly minimal_polynomial(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("minimal polynomial of a non-square matrix");
  if (n == 0) return UPoly::constant(1);
  std::vector<RationalVector> powers;
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    RationalVector flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) flat.push_back(power(r, c));
    }
    // Solve sum_{i<k} c_i M^i = -M^k; the first solvable k gives the answer.
    if (k > 0) {
      RationalVector rhs = flat;
      for (auto& x : rhs) x = -x;
      if (auto sol = Matrix::from_columns(powers, n * n).solve(rhs)) {
        sol->push_back(Rational(1));
        return UPoly(std::move(*sol));
      }
    }
    powers.push_back(std::move(flat));
    power = power * m;
  }
  throw InputError("minimal polynomial search exceeded the matrix size");
}

PolyFactorization factor_univariate(const Polynomial& f) {
  const auto support = f.support();
  if (support.size() > 1) throw InputError("factor_univariate needs a univariate polynomial, got '" + f.to_string() + "'");
  if (support.empty()) return {f.constant_coefficient(), {}};
  const auto fac = factor(UPoly::from_polynomial(f, support.front()));
  PolyFactorization out{fac.unit, {}};
  for (const auto& [g, m] : fac.factors) out.factors.emplace_back(g.to_polynomial(f.variables(), support.front()), m);
  return out;
}

}  // namespace freeop
