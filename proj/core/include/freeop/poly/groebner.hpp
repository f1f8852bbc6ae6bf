#pragma once

#include "freeop/poly/monomial_order.hpp"
#include "freeop/poly/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace freeop {

/// Resource caps for Buchberger's algorithm. Exceeding either raises
/// BudgetExhausted; the computation is never silently truncated.
struct GroebnerBudget {
  int max_degree = 40;
  std::size_t max_basis_size = 2000;

  bool operator==(const GroebnerBudget&) const = default;
};

/// Reduced Groebner basis of the ideal generated by `generators`, all over
/// the variable list `vars`. Buchberger's algorithm with the Gebauer-Moeller
/// pair criteria and the normal selection strategy. The result is monic,
/// sorted by decreasing leading monomial, and deterministic.
std::vector<Polynomial> reduced_groebner_basis(const VariableList& vars, const std::vector<Polynomial>& generators,
                                               const MonomialOrder& order, const GroebnerBudget& budget = {});

/// Fully reduced remainder of `f` modulo `basis` (which need not be a
/// Groebner basis, though the remainder is only canonical when it is).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// S-polynomial of two nonzero polynomials over the same variables.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

}  // namespace freeop
