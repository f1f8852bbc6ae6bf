#include "oracle.hpp"

#include <cassert>

namespace oracle {

PolyMatrix::PolyMatrix(std::size_t size, const VariableList& vars) : n(size), entries(size * size, Polynomial(vars)) {}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  PolyMatrix out = *this;
  for (std::size_t i = 0; i < entries.size(); ++i) out.entries[i] += o.entries[i];
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  PolyMatrix out(n, entries.empty() ? VariableList{} : entries[0].variables());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  }
  return out;
}

PolyMatrix regular_matrix(const freeop::FiniteDimAlgebra& D, const std::vector<Polynomial>& u, const VariableList& vars) {
  const std::size_t n = D.dim();
  PolyMatrix m(n, vars);
  // Column j is u * e_j = sum_i u_i e_i e_j = sum_{i,k} u_i a_ijk e_k.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (D.a(i, j, k) != 0) m.at(k, j) += u[i].embed(vars) * D.a(i, j, k);
      }
    }
  }
  return m;
}

std::vector<Polynomial> expand(const freeop::FiniteDimAlgebra& D, const Polynomial& f,
                               const std::map<std::string, std::vector<Polynomial>>& images, const VariableList& vars) {
  const std::size_t n = D.dim();
  PolyMatrix identity(n, vars);
  for (std::size_t i = 0; i < n; ++i) identity.at(i, i) = Polynomial(vars, Rational(1));
  std::vector<PolyMatrix> mats;
  for (const auto& v : f.variables()) {
    auto it = images.find(v);
    if (it != images.end()) {
      mats.push_back(regular_matrix(D, it->second, vars));
    } else {
      // A variable without an image is a scalar: v * 1_D.
      std::vector<Polynomial> scalar;
      for (std::size_t j = 0; j < n; ++j) scalar.push_back(Polynomial::variable(vars, v) * D.unit()[j]);
      mats.push_back(regular_matrix(D, scalar, vars));
    }
  }
  PolyMatrix total(n, vars);
  for (const auto& [exp, c] : f.terms()) {
    PolyMatrix term = identity;
    for (std::size_t v = 0; v < exp.size(); ++v) {
      for (std::uint32_t e = 0; e < exp[v]; ++e) term = term * mats[v];
    }
    for (auto& p : term.entries) p *= Polynomial(vars, c);
    total = total + term;
  }
  std::vector<Polynomial> out(n, Polynomial(vars));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (D.unit()[j] != 0) out[k] += total.at(k, j) * D.unit()[j];
    }
  }
  return out;
}

std::size_t bareiss_rank(std::vector<std::vector<Rational>> m) {
  // Clear denominators row by row so every step stays integral.
  for (auto& row : m) {
    mpz_class l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (auto& q : row) q *= l;
  }
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  Rational prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
        assert(m[r][k].get_den() == 1);
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

Quadratic::Elt Quadratic::evaluate(const Polynomial& f, const std::vector<Elt>& point) const {
  Elt total{0, 0};
  for (const auto& [exp, c] : f.terms()) {
    Elt term{c, 0};
    for (std::size_t v = 0; v < exp.size(); ++v) {
      for (std::uint32_t e = 0; e < exp[v]; ++e) term = mul(term, point[v]);
    }
    total = add(total, term);
  }
  return total;
}

Rational Gen::coefficient() {
  const int num = integer(-5, 5);
  const int den = integer(1, 3);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Polynomial Gen::polynomial(const VariableList& vars, int max_degree, int max_terms) {
  Polynomial p(vars);
  const int terms = integer(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    freeop::Exponent e(vars.size(), 0);
    int budget = integer(0, max_degree);
    for (int k = 0; k < budget; ++k) ++e[integer(0, static_cast<int>(vars.size()) - 1)];
    p.add_term(e, coefficient());
  }
  return p;
}

}  // namespace oracle
