#pragma once

#include "freeop/poly/groebner.hpp"
#include "freeop/poly/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace freeop {

struct IdealOptions {
  GroebnerBudget budget;
  /// Order used for membership and normal forms.
  MonomialOrder order = MonomialOrder::grevlex();
};

/// Ideal of Q[vars] given by generators, with Groebner bases memoised per
/// monomial order.
///
/// The cache is write-once per order: two threads racing on the same order
/// may both compute the basis, and both results are identical because the
/// reduced basis is unique. Copies share the cache, which is sound because
/// an Ideal never changes after construction.
class Ideal {
 public:
  Ideal() : Ideal(VariableList{}, {}) {}
  Ideal(VariableList vars, std::vector<Polynomial> generators, IdealOptions options = {});

  static Ideal zero(VariableList vars, IdealOptions options = {}) { return Ideal(std::move(vars), {}, options); }

  const VariableList& variables() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const IdealOptions& options() const { return options_; }

  const std::vector<Polynomial>& groebner_basis() const { return groebner_basis(options_.order); }
  const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order) const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  /// f in the radical of the ideal, via 1 - t*f and a test for the unit ideal.
  bool radical_contains(const Polynomial& f) const;
  bool is_unit() const;
  /// Every generator of `other` lies in this ideal.
  bool contains_ideal(const Ideal& other) const;
  bool equals(const Ideal& other) const { return contains_ideal(other) && other.contains_ideal(*this); }

  /// I intersected with Q[keep], computed with a block order that ranks the
  /// eliminated variables first.
  Ideal eliminate(const VariableList& keep) const;

  /// Largest set of variables independent modulo the grevlex leading-term
  /// ideal. Throws InputError for the unit ideal ("empty variety").
  int krull_dimension() const;
  VariableList maximal_independent_set() const;

  /// Monomials outside the leading-term ideal. Throws InputError naming a
  /// variable of unbounded degree when the quotient is infinite-dimensional.
  std::vector<Exponent> standard_monomials() const;

  Ideal with_generators(const std::vector<Polynomial>& extra) const;
  Ideal sum(const Ideal& other) const;
  Ideal embed(const VariableList& vars) const;
  Ideal with_options(IdealOptions options) const;

  /// "<g1, g2, ...>" using the ideal's order for term order.
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Polynomial>> bases;
  };

  VariableList vars_;
  std::vector<Polynomial> gens_;
  IdealOptions options_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace freeop
