#pragma once

// Reference implementations used to cross-check the library. They share no
// code with the algorithms under test beyond Polynomial arithmetic itself.

#include "freeop/algebra/algebra.hpp"
#include "freeop/poly/polynomial.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using freeop::Polynomial;
using freeop::Rational;
using freeop::VariableList;

/// Square matrix with polynomial entries.
struct PolyMatrix {
  std::size_t n = 0;
  std::vector<Polynomial> entries;

  PolyMatrix(std::size_t n, const VariableList& vars);
  Polynomial& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator*(const PolyMatrix& o) const;
};

/// Regular representation: u in S (x) D becomes the matrix of v -> u*v,
/// built from the multiplication table alone. Commutativity of D makes this
/// an injective ring map, and M(u) applied to the unit recovers u.
PolyMatrix regular_matrix(const freeop::FiniteDimAlgebra& D, const std::vector<Polynomial>& u, const VariableList& vars);

/// f evaluated at the matrices of `images`, read back as a tuple via the
/// unit vector. Computes d(f) from d(x) without the tensor code.
std::vector<Polynomial> expand(const freeop::FiniteDimAlgebra& D, const Polynomial& f,
                               const std::map<std::string, std::vector<Polynomial>>& images, const VariableList& vars);

/// Rank by fraction-free Bareiss elimination.
std::size_t bareiss_rank(std::vector<std::vector<Rational>> m);

/// Q(a) with a^2 = r, as pairs (p, q) meaning p + q a.
struct Quadratic {
  Rational r;
  using Elt = std::pair<Rational, Rational>;
  Elt mul(const Elt& x, const Elt& y) const { return {x.first * y.first + r * x.second * y.second, x.first * y.second + x.second * y.first}; }
  Elt add(const Elt& x, const Elt& y) const { return {x.first + y.first, x.second + y.second}; }
  /// f over variables `xs` followed by the generator, at the given point.
  Elt evaluate(const Polynomial& f, const std::vector<Elt>& point) const;
};

/// Seeded source of small random polynomials and points.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational coefficient();
  Polynomial polynomial(const VariableList& vars, int max_degree, int max_terms);
  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
