#pragma once

#include "freeop/linalg.hpp"
#include "freeop/poly/upoly.hpp"
#include "freeop/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freeop {

/// Coordinates with respect to an algebra's basis.
using AlgebraElement = RationalVector;

/// Rank-3 table a[i][j][k]: e_i * e_j = sum_k a[i][j][k] e_k.
using StructureConstants = std::vector<std::vector<std::vector<Rational>>>;

/// One local factor B_i of D = B_0 x ... x B_t.
struct LocalComponent {
  AlgebraElement idempotent;
  std::size_t dim = 0;
  /// Basis of the maximal ideal m_i = e_i * nilradical.
  std::vector<AlgebraElement> max_ideal_basis;
  /// Monic irreducible P_i with B_i/m_i = Q[x]/(P_i); exactly x when the
  /// residue field is Q.
  UPoly residue_poly;
  int residue_dim = 0;
  /// residue_dim x dim(D) matrix of D -> B_i -> Q[x]/(P_i) in the bases
  /// (e_0..e_l) and (1, x, ..., x^(d-1)).
  Matrix residue_projection;
};

/// Commutative finite-dimensional Q-algebra given by structure constants and
/// the coordinates of its unit. The identities are not enforced at
/// construction so that invalid tables can still be inspected with
/// check_algebra; every other operation assumes a valid algebra.
class FiniteDimAlgebra {
 public:
  FiniteDimAlgebra() = default;
  /// Throws InputError when the table, unit, and names disagree in size.
  FiniteDimAlgebra(std::vector<std::string> basis_names, StructureConstants a, AlgebraElement unit);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Rational& a(std::size_t i, std::size_t j, std::size_t k) const { return a_[(i * dim() + j) * dim() + k]; }
  StructureConstants structure_constants() const;
  const AlgebraElement& unit() const { return unit_; }

  AlgebraElement zero() const { return AlgebraElement(dim()); }
  AlgebraElement basis_element(std::size_t i) const;
  AlgebraElement mul(const AlgebraElement& u, const AlgebraElement& v) const;
  AlgebraElement pow(const AlgebraElement& u, unsigned n) const;
  /// Matrix of v -> u*v.
  Matrix multiplication_matrix(const AlgebraElement& u) const;
  Rational trace(const AlgebraElement& u) const;

  /// Populated by with_decomposition().
  const std::vector<LocalComponent>& components() const { return components_; }
  bool is_decomposed() const { return !components_.empty(); }
  /// Component whose residue projection sends e_0 to 1 and every other basis
  /// vector to 0, if there is one.
  std::optional<std::size_t> pi_index() const { return pi_index_; }

  /// Copy carrying its local decomposition.
  FiniteDimAlgebra with_decomposition() const;

 private:
  void require_element(const AlgebraElement& u) const;

  std::vector<std::string> names_;
  std::vector<Rational> a_;
  AlgebraElement unit_;
  std::vector<LocalComponent> components_;
  std::optional<std::size_t> pi_index_;
};

struct AlgebraViolation {
  enum class Kind { commutativity, associativity, unit };
  Kind kind;
  /// (i,j,k) for commutativity, (i,j,k,n) for associativity, (j,k) for the
  /// unit law.
  std::vector<std::size_t> indices;
  Rational lhs;
  Rational rhs;

  std::string describe() const;
};

struct AlgebraReport {
  std::vector<AlgebraViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Every violated commutativity, associativity, and unit identity.
AlgebraReport check_algebra(const FiniteDimAlgebra& algebra);

/// Q[generators]/(relations) with the standard monomials (grevlex,
/// ascending, so e_0 = 1) as basis. Throws InputError naming a variable of
/// unbounded degree if the quotient is infinite-dimensional.
FiniteDimAlgebra from_presentation(const std::vector<std::string>& generators, const std::vector<Polynomial>& relations);

/// Q^n with componentwise product.
FiniteDimAlgebra split_algebra(std::size_t n);
/// A x B, basis of A then basis of B.
FiniteDimAlgebra direct_product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b);

/// Local factors: the component carrying pi first, the rest ordered by
/// idempotent coordinates, largest first. Throws InputError if no
/// primitive element of the semisimple quotient turns up in 100 attempts.
std::vector<LocalComponent> local_decompose(const FiniteDimAlgebra& algebra);

struct ResidueFieldReport {
  /// Every residue field is Q.
  bool holds = false;
  /// A single local component.
  bool local = false;
  std::vector<int> residue_degrees;
};
ResidueFieldReport check_assumption_res_field_k(const FiniteDimAlgebra& algebra);

/// Matrix of D -> Q[x]/(P_i); decomposes the algebra if needed. Throws
/// InputError for an index out of range.
Matrix residue_projection(const FiniteDimAlgebra& algebra, std::size_t i);

}  // namespace freeop
