#include "freeop/dvariety/dvariety.hpp"

#include "freeop/errors.hpp"

#include <algorithm>
#include <set>

namespace freeop {
namespace {

bool contains(const VariableList& vars, const std::string& v) {
  return std::find(vars.begin(), vars.end(), v) != vars.end();
}

// Coefficients of f viewed as a polynomial in `params` over Q[rest].
std::vector<Polynomial> coefficients_in_parameters(const Polynomial& f, const VariableList& params,
                                                   const VariableList& rest) {
  std::map<Exponent, Polynomial> by_monomial;
  const auto& vars = f.variables();
  for (const auto& [e, c] : f.terms()) {
    Exponent key(vars.size(), 0), value(vars.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) (contains(params, vars[i]) ? key : value)[i] = e[i];
    auto [it, inserted] = by_monomial.try_emplace(key, Polynomial(vars));
    it->second.add_term(value, c);
  }
  std::vector<Polynomial> out;
  for (const auto& [key, p] : by_monomial) out.push_back(p.embed(rest));
  return out;
}

}  // namespace

DVariety make_dvariety(const BaseDStructure& base, const Ideal& ideal, const std::vector<TensorElement>& section) {
  DVariety dv(base);
  const auto& params = base.parameters();
  const VariableList ring_vars = union_variables(ideal.variables(), params);
  for (const auto& v : ring_vars) {
    if (!contains(params, v)) dv.vars_.push_back(v);
  }
  const Ideal ring = ideal.embed(ring_vars);
  const FiniteDimAlgebra& D = base.algebra();
  if (section.size() != dv.vars_.size()) {
    throw InputError("section needs " + std::to_string(dv.vars_.size()) + " coordinate images, got " +
                     std::to_string(section.size()));
  }
  for (std::size_t v = 0; v < section.size(); ++v) {
    if (section[v].size() != D.dim()) {
      throw InputError("section image of '" + dv.vars_[v] + "' has " + std::to_string(section[v].size()) +
                       " components, the algebra has dimension " + std::to_string(D.dim()));
    }
    TensorElement reduced;
    for (const auto& c : section[v]) {
      for (const auto& w : c.support()) {
        if (!contains(ring_vars, w)) throw InputError("unknown variable '" + w + "' in the section");
      }
      reduced.push_back(ring.normal_form(c.embed(ring_vars)));
    }
    if (!ring.contains(reduced[0] - Polynomial::variable(ring_vars, dv.vars_[v]))) {
      throw VerificationError("section property fails for '" + dv.vars_[v] + "': component 0 of s(" + dv.vars_[v] +
                              ") is " + reduced[0].to_string() + ", not " + dv.vars_[v] + " modulo the ideal");
    }
    dv.section_.push_back(std::move(reduced));
  }

  const ProlongedVariety tau = prolong(base, ring);
  const auto substitution = section_substitution(dv.vars_, dv.section_);
  for (const auto& g : tau.generators()) {
    for (std::size_t j = 0; j < g.components.size(); ++j) {
      const Polynomial r = ring.normal_form(g.components[j].substitute(substitution).embed(ring_vars));
      if (!r.is_zero()) {
        throw VerificationError("s does not map V into tau V: f^(" + std::to_string(j) + ") for f = " +
                                g.f.to_string() + " reduces to " + r.to_string());
      }
    }
  }

  std::vector<TensorElement> images;
  for (const auto& v : ring_vars) {
    if (contains(params, v)) {
      TensorElement img;
      for (const auto& c : base.op().image(v)) img.push_back(c.embed(ring_vars));
      images.push_back(std::move(img));
    } else {
      images.push_back(dv.section_[std::find(dv.vars_.begin(), dv.vars_.end(), v) - dv.vars_.begin()]);
    }
  }
  try {
    dv.op_ = make_doperator(D, ring, images);
  } catch (const VerificationError& e) {
    throw VerificationError(std::string("cross-check against the D-ring structure failed: ") + e.what());
  }
  for (std::size_t v = 0; v < dv.vars_.size(); ++v) {
    const TensorElement& img = dv.op_.image(dv.vars_[v]);
    for (std::size_t j = 0; j < img.size(); ++j) {
      if (!(img[j] == dv.section_[v][j])) {
        throw VerificationError("cross-check against the D-ring structure failed for '" + dv.vars_[v] + "'");
      }
    }
  }
  return dv;
}

Ideal sharp_locus(const DVariety& dv) {
  const auto& params = dv.base().parameters();
  const auto& xs = dv.variables();
  const AlgebraElement& b = dv.base().algebra().unit();
  std::vector<Polynomial> conditions = dv.ideal().generators();
  for (std::size_t v = 0; v < xs.size(); ++v) {
    const Polynomial x = Polynomial::variable(dv.ideal().variables(), xs[v]);
    for (std::size_t i = 1; i < b.size(); ++i) conditions.push_back(dv.section()[v][i] - x * b[i]);
  }
  std::vector<Polynomial> gens;
  for (const auto& c : conditions) {
    for (auto& p : coefficients_in_parameters(c, params, xs)) {
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
  }
  const Ideal raw(xs, gens, dv.ideal().options());
  return Ideal(xs, raw.groebner_basis(), raw.options());
}

bool is_sharp_point(const DVariety& dv, const std::vector<Polynomial>& point) {
  const auto& xs = dv.variables();
  const auto& params = dv.base().parameters();
  if (point.size() != xs.size()) {
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, the variety has " +
                     std::to_string(xs.size()));
  }
  std::map<std::string, Polynomial> at;
  for (std::size_t v = 0; v < xs.size(); ++v) {
    for (const auto& w : point[v].support()) {
      if (!contains(params, w)) throw InputError("point coordinates may only involve the base parameters");
    }
    at.emplace(xs[v], point[v].embed(params));
  }
  for (const auto& g : dv.ideal().generators()) {
    if (!g.substitute(at).is_zero()) {
      throw InputError("point is not on the variety: generator '" + g.to_string() + "' does not vanish");
    }
  }
  for (std::size_t v = 0; v < xs.size(); ++v) {
    const TensorElement nabla_v = dv.base().op().apply(at.at(xs[v]));
    for (std::size_t j = 0; j < nabla_v.size(); ++j) {
      if (!(nabla_v[j] == dv.section()[v][j].substitute(at))) return false;
    }
  }
  return true;
}

bool is_sharp_point(const DVariety& dv, const Point& point) {
  std::vector<Polynomial> coords;
  for (const auto& c : point) coords.emplace_back(dv.base().parameters(), c);
  return is_sharp_point(dv, coords);
}

SharpPoints rational_sharp_points(const DVariety& dv, std::size_t max_samples) {
  SharpPoints out;
  out.locus = sharp_locus(dv);
  if (out.locus.is_unit()) return out;
  out.dimension = out.locus.krull_dimension();
  if (out.dimension == 0) {
    const auto solved = solve_zero_dim(out.locus);
    out.points = solved.points;
    out.has_nonrational = solved.has_nonrational;
    return out;
  }

  out.points = sample_rational_points(out.locus, max_samples);
  return out;
}

DVariety open_dsubvariety(const DVariety& dv, const Polynomial& q, std::string inverse_name) {
  if (dv.ideal().contains(q)) throw InputError("q = " + q.to_string() + " lies in the ideal of V; the open set is empty");
  const DOperator local = localize_dstructure(dv.op(), q, std::move(inverse_name));
  const auto& params = dv.base().parameters();
  std::vector<TensorElement> section;
  for (const auto& v : local.variables()) {
    if (!contains(params, v)) section.push_back(local.image(v));
  }
  return make_dvariety(dv.base(), local.ideal(), section);
}

bool DIdealFixtureReport::passed() const {
  return covers && std::all_of(primes.begin(), primes.end(), [](const PrimeCheck& p) { return p.passed(); });
}

DIdealFixtureReport dideal_fixture_check(const DOperator& d, const Ideal& j, const std::vector<Ideal>& primes) {
  const auto pre = is_d_ideal(d, j);
  if (!pre.is_d_ideal) {
    throw InputError("J is not a D-ideal: component " + std::to_string(pre.witness->second) + " of d(" +
                     pre.witness->first.to_string() + ") is not in J");
  }
  DIdealFixtureReport report;
  const VariableList& vars = d.variables();
  const Ideal ring_j = d.ideal().sum(j.embed(vars));
  for (const auto& p : primes) {
    const Ideal ring_p = d.ideal().sum(p.embed(vars));
    report.primes.push_back({p, ring_p.contains_ideal(ring_j), is_d_ideal(d, p).is_d_ideal});
  }
  // Every product of one generator from each prime must lie in rad(J).
  report.covers = !primes.empty();
  std::vector<Polynomial> products{Polynomial(vars, Rational(1))};
  for (const auto& p : primes) {
    std::vector<Polynomial> next;
    for (const auto& a : products) {
      for (const auto& g : p.generators()) next.push_back(a * g.embed(vars));
    }
    products = std::move(next);
  }
  for (const auto& f : products) {
    if (!report.covers) break;
    report.covers = ring_j.radical_contains(f);
  }
  return report;
}

}  // namespace freeop
