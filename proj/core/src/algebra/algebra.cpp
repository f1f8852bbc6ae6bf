#include "freeop/algebra/algebra.hpp"

#include "freeop/errors.hpp"
#include "freeop/poly/ideal.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace freeop {

FiniteDimAlgebra::FiniteDimAlgebra(std::vector<std::string> basis_names, StructureConstants a, AlgebraElement unit)
    : names_(std::move(basis_names)), unit_(std::move(unit)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("an algebra needs at least one basis element");
  if (unit_.size() != n) {
    throw InputError("unit has " + std::to_string(unit_.size()) + " coordinates, expected " + std::to_string(n));
  }
  if (a.size() != n) throw InputError("structure constants have the wrong first dimension");
  a_.reserve(n * n * n);
  for (const auto& row : a) {
    if (row.size() != n) throw InputError("structure constants have the wrong second dimension");
    for (const auto& col : row) {
      if (col.size() != n) throw InputError("structure constants have the wrong third dimension");
      a_.insert(a_.end(), col.begin(), col.end());
    }
  }
}

StructureConstants FiniteDimAlgebra::structure_constants() const {
  const std::size_t n = dim();
  StructureConstants out(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out[i][j][k] = a(i, j, k);
    }
  }
  return out;
}

void FiniteDimAlgebra::require_element(const AlgebraElement& u) const {
  if (u.size() != dim()) {
    throw InputError("element has " + std::to_string(u.size()) + " coordinates, algebra has dimension " +
                     std::to_string(dim()));
  }
}

AlgebraElement FiniteDimAlgebra::basis_element(std::size_t i) const {
  AlgebraElement e(dim());
  e.at(i) = 1;
  return e;
}

AlgebraElement FiniteDimAlgebra::mul(const AlgebraElement& u, const AlgebraElement& v) const {
  require_element(u);
  require_element(v);
  const std::size_t n = dim();
  AlgebraElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (freeop::is_zero(u[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (freeop::is_zero(v[j])) continue;
      const Rational c = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!freeop::is_zero(a(i, j, k))) out[k] += c * a(i, j, k);
      }
    }
  }
  return out;
}

AlgebraElement FiniteDimAlgebra::pow(const AlgebraElement& u, unsigned n) const {
  AlgebraElement out = unit_;
  for (unsigned i = 0; i < n; ++i) out = mul(out, u);
  return out;
}

Matrix FiniteDimAlgebra::multiplication_matrix(const AlgebraElement& u) const {
  std::vector<RationalVector> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(u, basis_element(j)));
  return Matrix::from_columns(cols, dim());
}

Rational FiniteDimAlgebra::trace(const AlgebraElement& u) const {
  const Matrix m = multiplication_matrix(u);
  Rational t = 0;
  for (std::size_t i = 0; i < dim(); ++i) t += m(i, i);
  return t;
}

FiniteDimAlgebra FiniteDimAlgebra::with_decomposition() const {
  if (is_decomposed()) return *this;
  FiniteDimAlgebra out = *this;
  out.components_ = local_decompose(*this);
  const Matrix& first = out.components_.front().residue_projection;
  bool is_pi = first.rows() == 1;
  for (std::size_t k = 0; k < dim() && is_pi; ++k) is_pi = first(0, k) == (k == 0 ? 1 : 0);
  if (is_pi) out.pi_index_ = 0;
  return out;
}

std::string AlgebraViolation::describe() const {
  std::ostringstream os;
  auto idx = [&](std::size_t i) { return indices.at(i); };
  switch (kind) {
    case Kind::commutativity:
      os << "commutativity: a[" << idx(0) << "][" << idx(1) << "][" << idx(2) << "] = " << lhs << " but a["
         << idx(1) << "][" << idx(0) << "][" << idx(2) << "] = " << rhs;
      break;
    case Kind::associativity:
      os << "associativity: coefficient " << idx(3) << " of (e" << idx(0) << "*e" << idx(1) << ")*e" << idx(2)
         << " is " << lhs << " but of e" << idx(0) << "*(e" << idx(1) << "*e" << idx(2) << ") is " << rhs;
      break;
    case Kind::unit:
      os << "unit law: coefficient " << idx(1) << " of 1*e" << idx(0) << " is " << lhs << ", expected " << rhs;
      break;
  }
  return os.str();
}

AlgebraReport check_algebra(const FiniteDimAlgebra& A) {
  AlgebraReport report;
  const std::size_t n = A.dim();
  using Kind = AlgebraViolation::Kind;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (A.a(i, j, k) != A.a(j, i, k)) {
          report.violations.push_back({Kind::commutativity, {i, j, k}, A.a(i, j, k), A.a(j, i, k)});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < n; ++t) {
          Rational left = 0, right = 0;
          for (std::size_t m = 0; m < n; ++m) {
            left += A.a(i, j, m) * A.a(m, k, t);
            right += A.a(j, k, m) * A.a(i, m, t);
          }
          if (left != right) report.violations.push_back({Kind::associativity, {i, j, k, t}, left, right});
        }
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Rational left = 0;
      for (std::size_t i = 0; i < n; ++i) left += A.unit()[i] * A.a(i, j, k);
      const Rational expected = j == k ? 1 : 0;
      if (left != expected) report.violations.push_back({Kind::unit, {j, k}, left, expected});
    }
  }
  return report;
}

FiniteDimAlgebra from_presentation(const std::vector<std::string>& generators, const std::vector<Polynomial>& relations) {
  const Ideal ideal(generators, relations);
  if (ideal.is_unit()) throw InputError("the relations generate the unit ideal; the quotient is the zero ring");
  const auto standard = ideal.standard_monomials();
  const std::size_t n = standard.size();
  std::map<Exponent, std::size_t> position;
  std::vector<std::string> names;
  std::vector<Polynomial> basis;
  for (std::size_t i = 0; i < n; ++i) {
    position[standard[i]] = i;
    basis.push_back(Polynomial::monomial(generators, standard[i], Rational(1)));
    names.push_back(basis.back().to_string());
  }
  auto coords = [&](const Polynomial& p) {
    AlgebraElement v(n);
    const Polynomial reduced = ideal.normal_form(p);
    for (const auto& [e, c] : reduced.terms()) v[position.at(e)] = c;
    return v;
  };
  StructureConstants a(n, std::vector<std::vector<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = j < i ? a[j][i] : coords(basis[i] * basis[j]);
  }
  return FiniteDimAlgebra(std::move(names), std::move(a), coords(Polynomial(generators, Rational(1))));
}

FiniteDimAlgebra split_algebra(std::size_t n) {
  std::vector<std::string> names;
  StructureConstants a(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i));
    a[i][i][i] = 1;
  }
  return FiniteDimAlgebra(std::move(names), std::move(a), AlgebraElement(n, Rational(1)));
}

FiniteDimAlgebra direct_product(const FiniteDimAlgebra& x, const FiniteDimAlgebra& y) {
  const std::size_t p = x.dim(), q = y.dim(), n = p + q;
  std::vector<std::string> names;
  for (const auto& s : x.basis_names()) names.push_back(s + "_1");
  for (const auto& s : y.basis_names()) names.push_back(s + "_2");
  StructureConstants a(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t k = 0; k < p; ++k) a[i][j][k] = x.a(i, j, k);
    }
  }
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t k = 0; k < q; ++k) a[p + i][p + j][p + k] = y.a(i, j, k);
    }
  }
  AlgebraElement unit = x.unit();
  unit.insert(unit.end(), y.unit().begin(), y.unit().end());
  return FiniteDimAlgebra(std::move(names), std::move(a), std::move(unit));
}

namespace {

// Basis of the span of the given vectors (rows of the echelon form).
std::vector<AlgebraElement> span_basis(const std::vector<AlgebraElement>& vectors, std::size_t n) {
  if (vectors.empty()) return {};
  std::vector<std::size_t> pivots;
  const Matrix r = Matrix::from_columns(vectors, n).transpose().rref(&pivots);
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    AlgebraElement row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = r(i, c);
    out.push_back(std::move(row));
  }
  return out;
}

// a^{-1} mod m for coprime a, m.
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = a % m, t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return (t0 * Rational(1 / r0.leading())) % m;
}

AlgebraElement evaluate_at(const FiniteDimAlgebra& A, const UPoly& p, const AlgebraElement& u) {
  AlgebraElement acc = A.zero();
  for (int i = p.degree(); i >= 0; --i) {
    acc = A.mul(acc, u);
    for (std::size_t k = 0; k < A.dim(); ++k) acc[k] += p.coeff(i) * A.unit()[k];
  }
  return acc;
}

AlgebraElement combine(const FiniteDimAlgebra& A, const std::vector<int>& coeffs) {
  AlgebraElement u = A.zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) u[i] = coeffs[i];
  return u;
}

}  // namespace

std::vector<LocalComponent> local_decompose(const FiniteDimAlgebra& A) {
  const std::size_t n = A.dim();

  // Nilradical = kernel of the trace form (characteristic 0).
  Matrix trace_form(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) trace_form(i, j) = A.trace(A.mul(A.basis_element(i), A.basis_element(j)));
  }
  const std::vector<AlgebraElement> nilradical = trace_form.kernel();
  const std::size_t semisimple_dim = n - nilradical.size();

  // u generates the semisimple quotient iff the square-free part of its
  // minimal polynomial has degree dim(A/N). Coefficients are drawn from a
  // range wide enough that a random element separates n factors with high
  // probability (Q^16 needs 16 distinct coordinates).
  std::mt19937_64 rng(0xD1A6);
  const int bound = static_cast<int>(std::max<std::size_t>(5, n * n));
  std::uniform_int_distribution<int> small(-bound, bound);
  std::optional<AlgebraElement> primitive;
  UPoly reduced_minpoly;
  for (std::size_t attempt = 0; attempt < 100 && !primitive; ++attempt) {
    AlgebraElement u;
    if (attempt < n) {
      u = A.basis_element(attempt);
    } else {
      std::vector<int> c(n);
      for (auto& x : c) x = small(rng);
      u = combine(A, c);
    }
    UPoly s = squarefree_part(minimal_polynomial(A.multiplication_matrix(u)));
    if (static_cast<std::size_t>(s.degree()) == semisimple_dim) {
      primitive = u;
      reduced_minpoly = s;
    }
  }
  if (!primitive) {
    throw InputError("no primitive element of the semisimple quotient found in 100 attempts");
  }
  const AlgebraElement& u = *primitive;

  std::vector<LocalComponent> components;
  for (const auto& [p, mult] : factor(reduced_minpoly).factors) {
    const UPoly cofactor = reduced_minpoly / p;
    const UPoly e_poly = (cofactor * inverse_mod(cofactor, p)) % reduced_minpoly;
    AlgebraElement e = evaluate_at(A, e_poly, u);
    // Lift the idempotent through the nilradical.
    for (std::size_t step = 0; A.mul(e, e) != e; ++step) {
      if (step > n) throw VerificationError("idempotent lifting did not converge");
      const AlgebraElement e2 = A.mul(e, e);
      const AlgebraElement e3 = A.mul(e2, e);
      for (std::size_t k = 0; k < n; ++k) e[k] = 3 * e2[k] - 2 * e3[k];
    }

    LocalComponent c;
    c.idempotent = e;
    std::vector<AlgebraElement> part;
    for (std::size_t k = 0; k < n; ++k) part.push_back(A.mul(e, A.basis_element(k)));
    c.dim = span_basis(part, n).size();
    std::vector<AlgebraElement> nil_part;
    for (const auto& v : nilradical) nil_part.push_back(A.mul(e, v));
    c.max_ideal_basis = span_basis(nil_part, n);
    c.residue_dim = p.degree();
    c.residue_poly = c.residue_dim == 1 ? UPoly::x() : p;

    // B_i = span(e u^c, c < d) + m_i; read off the first d coordinates.
    std::vector<AlgebraElement> columns;
    const AlgebraElement eu = A.mul(e, u);
    AlgebraElement power = e;
    for (int k = 0; k < c.residue_dim; ++k) {
      columns.push_back(power);
      power = A.mul(power, eu);
    }
    columns.insert(columns.end(), c.max_ideal_basis.begin(), c.max_ideal_basis.end());
    const Matrix basis = Matrix::from_columns(columns, n);
    c.residue_projection = Matrix(c.residue_dim, n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto coords = basis.solve(part[k]);
      if (!coords) throw VerificationError("component basis does not span its factor");
      for (int r = 0; r < c.residue_dim; ++r) c.residue_projection(r, k) = (*coords)[r];
    }
    components.push_back(std::move(c));
  }

  auto is_pi = [n](const LocalComponent& c) {
    if (c.residue_dim != 1) return false;
    for (std::size_t k = 0; k < n; ++k) {
      if (c.residue_projection(0, k) != (k == 0 ? 1 : 0)) return false;
    }
    return true;
  };
  std::sort(components.begin(), components.end(), [&](const LocalComponent& x, const LocalComponent& y) {
    if (is_pi(x) != is_pi(y)) return is_pi(x);
    return x.idempotent > y.idempotent;
  });
  return components;
}

ResidueFieldReport check_assumption_res_field_k(const FiniteDimAlgebra& A) {
  const auto components = A.is_decomposed() ? A.components() : local_decompose(A);
  ResidueFieldReport report;
  report.local = components.size() == 1;
  report.holds = true;
  for (const auto& c : components) {
    report.residue_degrees.push_back(c.residue_dim);
    report.holds = report.holds && c.residue_dim == 1;
  }
  return report;
}

Matrix residue_projection(const FiniteDimAlgebra& A, std::size_t i) {
  const auto components = A.is_decomposed() ? A.components() : local_decompose(A);
  if (i >= components.size()) {
    throw InputError("component index " + std::to_string(i) + " out of range; the algebra has " +
                     std::to_string(components.size()) + " local components");
  }
  return components[i].residue_projection;
}

}  // namespace freeop
