#pragma once

#include "freeop/algebra/algebra.hpp"
#include "freeop/poly/polynomial.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace freeop {

/// Element sum_j f_j (1 (x) e_j) of S (x)_Q D, one polynomial per basis
/// vector of D.
using TensorElement = std::vector<Polynomial>;

/// Applied to every coefficient after each multiplication; typically a
/// normal form modulo the ring's ideal.
using Reducer = std::function<Polynomial(const Polynomial&)>;

TensorElement tensor_zero(const FiniteDimAlgebra& D, const VariableList& vars);
/// c * 1_D.
TensorElement tensor_scalar(const FiniteDimAlgebra& D, const Polynomial& c);
TensorElement tensor_add(const TensorElement& a, const TensorElement& b);
TensorElement tensor_sub(const TensorElement& a, const TensorElement& b);
/// Product via the structure constants.
TensorElement tensor_mul(const FiniteDimAlgebra& D, const TensorElement& a, const TensorElement& b,
                         const Reducer& reduce = {});
TensorElement tensor_map(const TensorElement& a, const Reducer& f);

/// Image of f under the Q-algebra homomorphism Q[vars(f)] -> S (x) D
/// that sends each variable to `images[var]`. Every variable in the support
/// of f needs an image; `vars` is the variable list of S.
TensorElement tensor_evaluate(const FiniteDimAlgebra& D, const Polynomial& f,
                              const std::map<std::string, TensorElement>& images, const VariableList& vars,
                              const Reducer& reduce = {});

std::string to_string(const TensorElement& t);

}  // namespace freeop
