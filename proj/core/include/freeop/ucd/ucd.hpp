#pragma once

#include "freeop/prolongation/prolongation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freeop {

/// Data for one instance of the uniform companion scheme: X in the
/// coordinates x, Y inside tau X in the prolonged coordinates, and the open
/// set U = Y - V(h).
struct UcdInstance {
  BaseDStructure base;
  Ideal x;
  /// Over prolonged_variables(x vars, dim D, parameters), in any order.
  Ideal y;
  std::optional<Polynomial> h;
  /// Coordinates of Y's variables in Y's order.
  std::optional<Point> smooth_witness;
  bool assert_x_irreducible = false;
  bool assert_y_irreducible = false;
};

enum class HypothesisStatus { verified, refuted, undetermined, asserted };

std::string to_string(HypothesisStatus s);

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::undetermined;
  /// Witness for a refutation, or why a check was undetermined.
  std::string detail;
  /// For a refuted dominance check: the closure of pi_hat_i(Y) pulled back
  /// to the coordinates of Y.
  std::optional<Ideal> witness;
};

struct HypothesisReport {
  std::vector<Hypothesis> hypotheses;
  /// refuted if anything is refuted, else undetermined if anything is,
  /// else verified (assertions count as verified).
  HypothesisStatus overall() const;
  /// 0 verified, 2 refuted, 3 undetermined.
  int exit_code() const;
  const Hypothesis* find(const std::string& name) const;
};

/// Runs, in order: containment of Y in tau X, dominance of every pi_hat_i
/// (elimination ideal against the sigma_i-twist of X), smoothness of the
/// witness, irreducibility of X and Y, and h not vanishing on Y. Throws
/// InputError when Y's variables do not match tau X.
HypothesisReport check_instance(const UcdInstance& inst);

enum class SearchStatus { found, none_found, positive_dimensional };

std::string to_string(SearchStatus s);

struct NablaSearch {
  SearchStatus status = SearchStatus::none_found;
  /// { a : nabla(a) in Y } in the x coordinates.
  Ideal locus;
  /// -1 when empty.
  int dimension = -1;
  /// Points a in X(Q) with nabla(a) in U; every one is re-verified by
  /// direct evaluation. All of them when the locus is finite, samples
  /// otherwise.
  std::vector<Point> points;
  bool has_nonrational = false;
};

/// Searches for a in X(Q) with nabla(a) in U over the trivial base, where
/// nabla(a) = (a, b_1 a, ..., b_l a). An empty answer is not a refutation:
/// Q is not large. Throws InputError over a parametric base.
NablaSearch find_nabla_point(const UcdInstance& inst, std::size_t max_samples = 5);

struct DifferencePointCheck {
  Point point;
  bool passed = false;
  /// First coordinate where sigma_i(pi_0(p)) != pi_i(p), e.g. "x, component 1".
  std::string failure;
};

struct DifferenceLargeReport {
  std::vector<DifferencePointCheck> points;
  std::size_t passed = 0;
};

/// For points of tau X (blockwise, in prolonged_variables order of d's
/// ring), checks sigma_i(pi_hat_0(p)) = pi_hat_i(p) for every component i,
/// with sigma_i the associated endomorphisms of d. Counts only; density is
/// never claimed. Throws InputError when D is local or some residue field is
/// not Q.
DifferenceLargeReport check_difference_large_instance(const DOperator& d, const std::vector<Point>& points);

}  // namespace freeop
