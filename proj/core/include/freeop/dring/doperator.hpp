#pragma once

#include "freeop/algebra/algebra.hpp"
#include "freeop/dring/tensor.hpp"
#include "freeop/poly/ideal.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace freeop {

/// A D-ring structure d: R -> R (x) D on R = Q[vars]/I, given by the images
/// of the variables. Constants go to c * 1_D, so each component operator
/// d_i satisfies d_i(1) = b_i.
///
/// Only make_doperator creates these, after checking the section property
/// (component 0 of d(x) is x mod I) and well-definedness (every component
/// of d(f) lies in I for each generator f of I). The algebra is stored
/// decomposed.
class DOperator {
 public:
  const FiniteDimAlgebra& algebra() const { return algebra_; }
  const Ideal& ideal() const { return ideal_; }
  const VariableList& variables() const { return ideal_.variables(); }
  /// Images in normal form mod I, in variable order.
  const std::vector<TensorElement>& images() const { return images_; }
  const TensorElement& image(const std::string& var) const;
  std::map<std::string, TensorElement> image_map() const;

  Polynomial reduce(const Polynomial& f) const { return ideal_.normal_form(f); }
  /// d(f), components in normal form mod I. Throws InputError when f uses a
  /// variable outside the ring.
  TensorElement apply(const Polynomial& f) const;

 private:
  friend DOperator make_doperator(const FiniteDimAlgebra&, const Ideal&, const std::vector<TensorElement>&);
  FiniteDimAlgebra algebra_;
  Ideal ideal_;
  std::vector<TensorElement> images_;
};

/// Validates and builds a D-operator. Throws InputError for shape problems
/// (wrong number of images or components, an algebra without a residue
/// projection pi onto Q sending e_0 to 1) and VerificationError naming the
/// variable, generator, and component that break the section property or
/// well-definedness.
DOperator make_doperator(const FiniteDimAlgebra& algebra, const Ideal& ring, const std::vector<TensorElement>& images);

/// d(fg) = sum a_ijk d_i(f) d_j(g), compared componentwise mod I.
bool product_rule_check(const DOperator& d, const Polynomial& f, const Polynomial& g);

/// sigma_i = pi_i o d on the generators, valued in R[y]/(P_i): each image is
/// the coefficient vector of 1, y, ..., y^(deg P_i - 1).
struct AssociatedHom {
  std::size_t component = 0;
  UPoly residue_poly;
  VariableList variables;
  std::vector<std::vector<Polynomial>> images;

  bool is_endomorphism() const { return residue_poly.degree() == 1; }
  /// Variable -> polynomial substitution; requires is_endomorphism().
  std::map<std::string, Polynomial> as_substitution() const;
};

AssociatedHom associated_hom(const DOperator& d, std::size_t i);

struct DIdealReport {
  bool is_d_ideal = true;
  /// First failure: generator of J and the component index j with d_j(g)
  /// outside J + I.
  std::optional<std::pair<Polynomial, std::size_t>> witness;
};

/// J + I is closed under every d_j. Checking generators suffices: by the
/// product rule d_k(r g) = sum a_ijk d_i(r) d_j(g), which lies in J whenever
/// every d_j(g) does, and each d_k is additive.
DIdealReport is_d_ideal(const DOperator& d, const Ideal& j);

/// The unique extension of d to R_q = R[w]/(q w - 1). Non-constant q only;
/// a nonzero constant q returns d unchanged. `inverse_name` defaults to the
/// first of w, w1, w2, ... not already a ring variable.
///
/// d(w) = d(q)^{-1}: per local component with residue field Q, the scalar
/// part sigma_i(q) is inverted in R_q and the nilpotent rest by a finite
/// geometric series; components with larger residue fields fall back to
/// solving d(q) * Y = 1 by elimination. Throws InputError when q vanishes on
/// V(I), VerificationError when d(q) is not a unit of R_q (D) (possible only
/// for non-local D, when some sigma_i(q) is not invertible in R_q).
DOperator localize_dstructure(const DOperator& d, const Polynomial& q, std::string inverse_name = "");

/// Inverse of h in Q[vars]/J, if h is a unit there.
std::optional<Polynomial> inverse_in_quotient(const Ideal& j, const Polynomial& h);

}  // namespace freeop
