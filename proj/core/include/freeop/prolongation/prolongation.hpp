#pragma once

#include "freeop/dring/doperator.hpp"
#include "freeop/poly/solve.hpp"

#include <map>
#include <string>
#include <vector>

namespace freeop {

/// Coefficient D-ring: Q, or Q[t] with declared images d(t_j) and no
/// relations among the parameters.
class BaseDStructure {
 public:
  /// Throws like make_doperator when an image is malformed.
  BaseDStructure(const FiniteDimAlgebra& algebra, VariableList parameters = {}, std::vector<TensorElement> images = {});
  static BaseDStructure trivial(const FiniteDimAlgebra& algebra) { return BaseDStructure(algebra); }

  const FiniteDimAlgebra& algebra() const { return op_.algebra(); }
  const VariableList& parameters() const { return op_.variables(); }
  const DOperator& op() const { return op_; }
  bool is_trivial() const { return parameters().empty(); }

 private:
  DOperator op_;
};

/// "x_j", the name of the j-th coordinate block copy of x.
std::string prolonged_name(const std::string& var, std::size_t j);
/// x_0 for every x, then x_1 for every x, ..., then the parameters.
VariableList prolonged_variables(const VariableList& vars, std::size_t dim, const VariableList& parameters = {});

struct ProlongedGenerator {
  Polynomial f;
  /// f^(0), ..., f^(l).
  std::vector<Polynomial> components;
};

/// tau X in coordinates: the ideal I' generated by every f^(j).
class ProlongedVariety {
 public:
  const BaseDStructure& base() const { return base_; }
  const Ideal& original() const { return original_; }
  /// Coordinates of X (ring variables that are not parameters).
  const VariableList& variables() const { return vars_; }
  const std::vector<ProlongedGenerator>& generators() const { return generators_; }
  const Ideal& ideal() const { return ideal_; }
  const VariableList& prolonged_variables() const { return ideal_.variables(); }

 private:
  friend ProlongedVariety prolong(const BaseDStructure&, const Ideal&);
  explicit ProlongedVariety(BaseDStructure base) : base_(std::move(base)) {}
  BaseDStructure base_;
  Ideal original_;
  VariableList vars_;
  std::vector<ProlongedGenerator> generators_;
  Ideal ideal_;
};

/// Expands f^d(sum_j x_j e_j) in R (x) D for every generator f of I, with
/// coefficients pushed through the base operator. Throws InputError when a
/// prolonged name collides with an existing variable.
ProlongedVariety prolong(const BaseDStructure& base, const Ideal& ideal);

/// (a, d_1(x)(a), ..., d_l(x)(a)) blockwise, from the images of d evaluated
/// at a point of V(I) given in d's variable order. Throws InputError off the
/// variety.
Point nabla(const DOperator& d, const Point& a);
/// (a, b_1 a, ..., b_l a): nabla for the trivial D-structure on Q.
Point nabla_constant(const FiniteDimAlgebra& algebra, const Point& a);

/// Linear map tau X -> X^{sigma_i}: each coordinate x goes to
/// sum_j pi_i(e_j) x_j, written in the residue basis 1, y, ..., y^(d-1).
struct PiHat {
  std::size_t component = 0;
  int residue_dim = 1;
  VariableList source;
  VariableList target;
  /// images[v][r]: coefficient of y^r in the image of target[v].
  std::vector<std::vector<Polynomial>> images;

  /// Target coordinate -> linear form in the prolonged variables; requires
  /// residue_dim == 1.
  std::map<std::string, Polynomial> as_substitution() const;
  /// Requires residue_dim == 1; `point` in source order.
  Point apply(const Point& point) const;
};

PiHat pi_hat(const ProlongedVariety& tau, std::size_t i);

/// The product of all pi_hat maps, tau_D X -> tau_E X with E = prod B_i/m_i.
struct AlphaHat {
  std::vector<PiHat> factors;
  Point apply(const Point& point) const;
};

AlphaHat alpha_hat(const ProlongedVariety& tau);

/// X^{sigma_i}: sigma_i applied to the coefficients (parameters) of the
/// generators. Needs residue degree 1 for component i.
Ideal twist(const BaseDStructure& base, const Ideal& ideal, std::size_t i);

/// Substitution x_j -> j-th component of the image of x.
std::map<std::string, Polynomial> section_substitution(const VariableList& vars,
                                                       const std::vector<TensorElement>& images);

/// Extends the base operator to Q[x, t]/I by d(x) = b, where b lists the
/// coordinates blockwise over Q[x, t] (the block j = 0 must be x itself).
/// Throws VerificationError naming the first f^(j) that b does not satisfy.
DOperator extend_by_point(const BaseDStructure& base, const Ideal& ideal, const std::vector<Polynomial>& b);

}  // namespace freeop
