#include "freeop/ucd/ucd.hpp"

#include "freeop/errors.hpp"

#include <algorithm>
#include <map>

namespace freeop {

namespace {

std::string join(const VariableList& vars) {
  std::string out = "[";
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i];
  return out + "]";
}

bool same_set(VariableList a, VariableList b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void require_prolonged_coordinates(const ProlongedVariety& tau, const Ideal& y) {
  if (!same_set(tau.prolonged_variables(), y.variables())) {
    throw InputError("Y must live in the coordinates of tau X " + join(tau.prolonged_variables()) + ", got " +
                     join(y.variables()));
  }
}

Hypothesis hyp(std::string name, HypothesisStatus status, std::string detail) {
  Hypothesis h;
  h.name = std::move(name);
  h.status = status;
  h.detail = std::move(detail);
  return h;
}

std::map<std::string, Rational> assign(const VariableList& vars, const Point& p) {
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < vars.size(); ++i) out.emplace(vars[i], p[i]);
  return out;
}

Hypothesis check_containment(const ProlongedVariety& tau, const Ideal& y) {
  for (const auto& g : tau.generators()) {
    for (std::size_t j = 0; j < g.components.size(); ++j) {
      if (!y.contains(g.components[j].embed(y.variables()))) {
        return hyp("containment", HypothesisStatus::refuted,
                "f^(" + std::to_string(j) + ") for f = " + g.f.to_string() + " is not in I(Y)");
      }
    }
  }
  return hyp("containment", HypothesisStatus::verified, "");
}

Hypothesis check_dominance(const UcdInstance& inst, const ProlongedVariety& tau, std::size_t i) {
  Hypothesis h = hyp("dominance_" + std::to_string(i), HypothesisStatus::undetermined, "");
  const PiHat p = pi_hat(tau, i);
  if (p.residue_dim != 1) {
    h.detail = "component " + std::to_string(i) + " has residue degree " + std::to_string(p.residue_dim);
    return h;
  }
  const auto& xs = tau.variables();
  const VariableList all = union_variables(inst.y.variables(), xs);
  std::vector<Polynomial> gens;
  for (const auto& g : inst.y.generators()) gens.push_back(g.embed(all));
  for (std::size_t v = 0; v < xs.size(); ++v) {
    gens.push_back(Polynomial::variable(all, xs[v]) - p.images[v][0].embed(all));
  }
  const VariableList keep = union_variables(xs, inst.base.parameters());
  const Ideal image = Ideal(all, gens, inst.y.options()).eliminate(keep).embed(keep);
  const Ideal target = twist(inst.base, inst.x, i).embed(keep);
  if (image.equals(target)) {
    h.status = HypothesisStatus::verified;
    return h;
  }
  // Report the closure of pi_hat_i(Y) pulled back to the coordinates of Y.
  const auto substitution = p.as_substitution();
  std::vector<Polynomial> pulled;
  for (const auto& g : image.groebner_basis()) pulled.push_back(g.substitute(substitution).embed(inst.y.variables()));
  h.status = HypothesisStatus::refuted;
  h.witness = Ideal(inst.y.variables(), pulled, inst.y.options());
  h.detail = "elimination ideal " + image.to_string() + " differs from the twist " + target.to_string() +
             "; pulled back: " + h.witness->to_string();
  return h;
}

Hypothesis check_witness(const UcdInstance& inst) {
  Hypothesis h = hyp("smooth_witness", HypothesisStatus::undetermined, "");
  if (!inst.smooth_witness) {
    h.detail = "no witness supplied";
    return h;
  }
  if (!inst.base.is_trivial()) {
    h.detail = "rational witnesses over a parametric base are not supported";
    return h;
  }
  const Point& p = *inst.smooth_witness;
  const auto& vars = inst.y.variables();
  if (p.size() != vars.size()) {
    throw InputError("witness has " + std::to_string(p.size()) + " coordinates, Y has " + std::to_string(vars.size()));
  }
  for (const auto& g : inst.y.generators()) {
    const Rational value = g.evaluate(p);
    if (!freeop::is_zero(value)) {
      h.status = HypothesisStatus::refuted;
      h.detail = "witness is not on Y: " + g.to_string() + " evaluates to " + to_string(value);
      return h;
    }
  }
  if (is_smooth_point(inst.y, p)) {
    h.status = HypothesisStatus::verified;
  } else {
    h.status = HypothesisStatus::refuted;
    h.detail = "Jacobian rank " + std::to_string(jacobian_rank_at(inst.y.generators(), vars, p)) +
               " at the witness is below codim Y = " + std::to_string(vars.size() - inst.y.krull_dimension());
  }
  return h;
}

Hypothesis check_irreducible(const std::string& name, const Ideal& ideal, bool asserted) {
  const PrimalityResult r = check_prime(ideal);
  switch (r.status) {
    case Primality::prime:
      return hyp(name, HypothesisStatus::verified, r.reason);
    case Primality::not_prime:
      return hyp(name, HypothesisStatus::refuted, asserted ? r.reason + " (contradicts the assertion)" : r.reason);
    case Primality::undetermined:
      break;
  }
  if (asserted) return hyp(name, HypothesisStatus::asserted, r.reason);
  return hyp(name, HypothesisStatus::undetermined, r.reason);
}

Hypothesis check_open_set(const UcdInstance& inst) {
  if (!inst.h) return hyp("nonempty_U", HypothesisStatus::verified, "U = Y");
  for (const auto& v : inst.h->support()) {
    if (std::find(inst.y.variables().begin(), inst.y.variables().end(), v) == inst.y.variables().end()) {
      throw InputError("h uses '" + v + "', which is not a coordinate of Y");
    }
  }
  if (inst.y.radical_contains(inst.h->embed(inst.y.variables()))) {
    return hyp("nonempty_U", HypothesisStatus::refuted, "h = " + inst.h->to_string() + " vanishes on Y");
  }
  return hyp("nonempty_U", HypothesisStatus::verified, "");
}

}  // namespace

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::verified:
      return "verified";
    case HypothesisStatus::refuted:
      return "refuted";
    case HypothesisStatus::undetermined:
      return "undetermined";
    case HypothesisStatus::asserted:
      return "asserted";
  }
  return "?";
}

HypothesisStatus HypothesisReport::overall() const {
  bool undetermined = false;
  for (const auto& h : hypotheses) {
    if (h.status == HypothesisStatus::refuted) return HypothesisStatus::refuted;
    undetermined = undetermined || h.status == HypothesisStatus::undetermined;
  }
  return undetermined ? HypothesisStatus::undetermined : HypothesisStatus::verified;
}

int HypothesisReport::exit_code() const {
  switch (overall()) {
    case HypothesisStatus::refuted:
      return 2;
    case HypothesisStatus::undetermined:
      return 3;
    default:
      return 0;
  }
}

const Hypothesis* HypothesisReport::find(const std::string& name) const {
  for (const auto& h : hypotheses) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

HypothesisReport check_instance(const UcdInstance& inst) {
  const ProlongedVariety tau = prolong(inst.base, inst.x);
  require_prolonged_coordinates(tau, inst.y);

  HypothesisReport report;
  report.hypotheses.push_back(check_containment(tau, inst.y));
  for (std::size_t i = 0; i < inst.base.algebra().components().size(); ++i) {
    report.hypotheses.push_back(check_dominance(inst, tau, i));
  }
  report.hypotheses.push_back(check_witness(inst));
  report.hypotheses.push_back(check_irreducible("irreducible_X", inst.x, inst.assert_x_irreducible));
  report.hypotheses.push_back(check_irreducible("irreducible_Y", inst.y, inst.assert_y_irreducible));
  report.hypotheses.push_back(check_open_set(inst));
  return report;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none_found:
      return "none_found";
    case SearchStatus::positive_dimensional:
      return "positive_dimensional";
  }
  return "?";
}

NablaSearch find_nabla_point(const UcdInstance& inst, std::size_t max_samples) {
  if (!inst.base.is_trivial()) throw InputError("the nabla-point search needs the trivial base D-structure on Q");
  const ProlongedVariety tau = prolong(inst.base, inst.x);
  require_prolonged_coordinates(tau, inst.y);
  const FiniteDimAlgebra& D = inst.base.algebra();
  const auto& xs = tau.variables();

  // nabla(a) = (a, b_1 a, ..., b_l a) for a rational point a.
  std::map<std::string, Polynomial> graph;
  for (const auto& x : xs) {
    for (std::size_t j = 0; j < D.dim(); ++j) {
      graph.emplace(prolonged_name(x, j), Polynomial::variable(xs, x) * D.unit()[j]);
    }
  }
  std::vector<Polynomial> gens;
  for (const auto& g : inst.x.generators()) gens.push_back(g.embed(xs));
  for (const auto& g : inst.y.generators()) gens.push_back(g.substitute(graph).embed(xs));
  const Ideal raw(xs, gens, inst.y.options());

  NablaSearch out;
  out.locus = Ideal(xs, raw.groebner_basis(), raw.options());
  if (out.locus.is_unit()) return out;

  auto nabla_at = [&](const Point& a) {
    const Point n = nabla_constant(D, a);
    return assign(tau.prolonged_variables(), n);
  };
  auto in_u = [&](const Point& a) {
    return !inst.h || !freeop::is_zero(inst.h->evaluate(nabla_at(a)));
  };

  out.dimension = out.locus.krull_dimension();
  if (out.dimension == 0) {
    const ZeroDimSolution solved = solve_zero_dim(out.locus);
    out.has_nonrational = solved.has_nonrational;
    for (const auto& a : solved.points) {
      if (in_u(a)) out.points.push_back(a);
    }
    out.status = out.points.empty() ? SearchStatus::none_found : SearchStatus::found;
  } else {
    out.points = sample_rational_points(out.locus, max_samples, in_u);
    out.status = SearchStatus::positive_dimensional;
  }

  for (const auto& a : out.points) {
    const auto n = nabla_at(a);
    const auto on_x = assign(xs, a);
    for (const auto& g : inst.x.generators()) {
      if (!freeop::is_zero(g.evaluate(on_x))) throw VerificationError("search returned a point off X");
    }
    for (const auto& g : inst.y.generators()) {
      if (!freeop::is_zero(g.evaluate(n))) throw VerificationError("search returned a point with nabla(a) off Y");
    }
    if (!in_u(a)) throw VerificationError("search returned a point with h(nabla(a)) = 0");
  }
  return out;
}

DifferenceLargeReport check_difference_large_instance(const DOperator& d, const std::vector<Point>& points) {
  const FiniteDimAlgebra& D = d.algebra();
  const auto& components = D.components();
  if (components.size() < 2) throw InputError("the algebra is local: no associated endomorphisms");
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].residue_dim != 1) {
      throw InputError("component " + std::to_string(i) + " has residue degree " +
                       std::to_string(components[i].residue_dim) + ": sigma is not an endomorphism");
    }
  }
  const ProlongedVariety tau = prolong(BaseDStructure::trivial(D), d.ideal());
  const auto& xs = tau.variables();
  std::vector<PiHat> maps;
  std::vector<std::map<std::string, Polynomial>> sigmas;
  for (std::size_t i = 0; i < components.size(); ++i) {
    maps.push_back(pi_hat(tau, i));
    sigmas.push_back(associated_hom(d, i).as_substitution());
  }

  DifferenceLargeReport report;
  for (const auto& p : points) {
    if (p.size() != tau.prolonged_variables().size()) {
      throw InputError("point has " + std::to_string(p.size()) + " coordinates, tau X has " +
                       std::to_string(tau.prolonged_variables().size()));
    }
    DifferencePointCheck check{p, true, ""};
    const Point base_point = maps[0].apply(p);
    const auto at = assign(xs, base_point);
    for (std::size_t i = 1; i < components.size() && check.passed; ++i) {
      const Point image = maps[i].apply(p);
      for (std::size_t v = 0; v < xs.size(); ++v) {
        if (sigmas[i].at(xs[v]).evaluate(at) != image[v]) {
          check.passed = false;
          check.failure = xs[v] + ", component " + std::to_string(i);
          break;
        }
      }
    }
    report.passed += check.passed ? 1 : 0;
    report.points.push_back(std::move(check));
  }
  return report;
}

}  // namespace freeop
