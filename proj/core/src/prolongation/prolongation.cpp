#include "freeop/prolongation/prolongation.hpp"

#include "freeop/errors.hpp"

#include <algorithm>

namespace freeop {

BaseDStructure::BaseDStructure(const FiniteDimAlgebra& algebra, VariableList parameters, std::vector<TensorElement> images)
    : op_(make_doperator(algebra, Ideal::zero(std::move(parameters)), images)) {}

std::string prolonged_name(const std::string& var, std::size_t j) { return var + "_" + std::to_string(j); }

VariableList prolonged_variables(const VariableList& vars, std::size_t dim, const VariableList& parameters) {
  VariableList out;
  for (std::size_t j = 0; j < dim; ++j) {
    for (const auto& v : vars) out.push_back(prolonged_name(v, j));
  }
  out.insert(out.end(), parameters.begin(), parameters.end());
  return out;
}

ProlongedVariety prolong(const BaseDStructure& base, const Ideal& ideal) {
  ProlongedVariety tau(base);
  const auto& params = base.parameters();
  for (const auto& v : ideal.variables()) {
    if (std::find(params.begin(), params.end(), v) == params.end()) tau.vars_.push_back(v);
  }
  tau.original_ = ideal.embed(union_variables(ideal.variables(), params));

  const FiniteDimAlgebra& D = base.algebra();
  const std::size_t n = D.dim();
  const VariableList pvars = prolonged_variables(tau.vars_, n, params);
  for (const auto& p : pvars) {
    const bool is_param = std::find(params.begin(), params.end(), p) != params.end();
    if (!is_param && std::find(tau.original_.variables().begin(), tau.original_.variables().end(), p) !=
                         tau.original_.variables().end()) {
      throw InputError("prolonged coordinate '" + p + "' collides with an existing variable");
    }
  }

  std::map<std::string, TensorElement> images;
  for (const auto& v : tau.vars_) {
    TensorElement t;
    for (std::size_t j = 0; j < n; ++j) t.push_back(Polynomial::variable(pvars, prolonged_name(v, j)));
    images.emplace(v, std::move(t));
  }
  for (const auto& t : params) {
    TensorElement img;
    for (const auto& c : base.op().image(t)) img.push_back(c.embed(pvars));
    images.emplace(t, std::move(img));
  }

  std::vector<Polynomial> all;
  for (const auto& f : tau.original_.generators()) {
    ProlongedGenerator g{f, tensor_evaluate(D, f, images, pvars)};
    all.insert(all.end(), g.components.begin(), g.components.end());
    tau.generators_.push_back(std::move(g));
  }
  tau.ideal_ = Ideal(pvars, all, ideal.options());
  return tau;
}

Point nabla(const DOperator& d, const Point& a) {
  require_on_variety(d.ideal(), a);
  const std::size_t n = d.variables().size();
  Point out(n * d.algebra().dim());
  for (std::size_t v = 0; v < n; ++v) {
    const TensorElement& img = d.images()[v];
    for (std::size_t j = 0; j < img.size(); ++j) out[j * n + v] = img[j].evaluate(a);
  }
  return out;
}

Point nabla_constant(const FiniteDimAlgebra& algebra, const Point& a) {
  Point out;
  for (const auto& b : algebra.unit()) {
    for (const auto& x : a) out.push_back(b * x);
  }
  return out;
}

std::map<std::string, Polynomial> PiHat::as_substitution() const {
  if (residue_dim != 1) throw InputError("pi_hat lands in a residue field larger than Q");
  std::map<std::string, Polynomial> out;
  for (std::size_t v = 0; v < target.size(); ++v) out.emplace(target[v], images[v][0]);
  return out;
}

Point PiHat::apply(const Point& point) const {
  if (residue_dim != 1) throw InputError("pi_hat lands in a residue field larger than Q");
  if (point.size() != source.size()) throw InputError("point has the wrong number of coordinates for tau X");
  Point out;
  for (const auto& img : images) out.push_back(img[0].evaluate(point));
  return out;
}

PiHat pi_hat(const ProlongedVariety& tau, std::size_t i) {
  const FiniteDimAlgebra& D = tau.base().algebra();
  const auto& components = D.components();
  if (i >= components.size()) {
    throw InputError("component index " + std::to_string(i) + " out of range; the algebra has " +
                     std::to_string(components.size()) + " local components");
  }
  const LocalComponent& c = components[i];
  PiHat out{i, c.residue_dim, tau.prolonged_variables(), tau.variables(), {}};
  for (const auto& v : tau.variables()) {
    std::vector<Polynomial> coords;
    for (std::size_t r = 0; r < c.residue_projection.rows(); ++r) {
      Polynomial acc(out.source);
      for (std::size_t j = 0; j < D.dim(); ++j) {
        acc += Polynomial::variable(out.source, prolonged_name(v, j)) * c.residue_projection(r, j);
      }
      coords.push_back(std::move(acc));
    }
    out.images.push_back(std::move(coords));
  }
  return out;
}

Point AlphaHat::apply(const Point& point) const {
  Point out;
  for (const auto& f : factors) {
    const Point part = f.apply(point);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

AlphaHat alpha_hat(const ProlongedVariety& tau) {
  AlphaHat out;
  for (std::size_t i = 0; i < tau.base().algebra().components().size(); ++i) out.factors.push_back(pi_hat(tau, i));
  return out;
}

Ideal twist(const BaseDStructure& base, const Ideal& ideal, std::size_t i) {
  if (base.is_trivial()) return ideal;
  const AssociatedHom sigma = associated_hom(base.op(), i);
  const auto substitution = sigma.as_substitution();
  const VariableList vars = union_variables(ideal.variables(), base.parameters());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.substitute(substitution).embed(vars));
  return Ideal(vars, gens, ideal.options());
}

std::map<std::string, Polynomial> section_substitution(const VariableList& vars,
                                                       const std::vector<TensorElement>& images) {
  std::map<std::string, Polynomial> out;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    for (std::size_t j = 0; j < images[v].size(); ++j) out.emplace(prolonged_name(vars[v], j), images[v][j]);
  }
  return out;
}

DOperator extend_by_point(const BaseDStructure& base, const Ideal& ideal, const std::vector<Polynomial>& b) {
  const ProlongedVariety tau = prolong(base, ideal);
  const Ideal& ring = tau.original();
  const auto& xs = tau.variables();
  const std::size_t n = xs.size(), l1 = base.algebra().dim();
  if (b.size() != n * l1) {
    throw InputError("point of tau X needs " + std::to_string(n * l1) + " coordinates, got " + std::to_string(b.size()));
  }
  std::vector<TensorElement> x_images(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < l1; ++j) x_images[v].push_back(b[j * n + v].embed(ring.variables()));
    if (!ring.contains(x_images[v][0] - Polynomial::variable(ring.variables(), xs[v]))) {
      throw VerificationError("block 0 of the point must be the generic point; got " + x_images[v][0].to_string() +
                              " for " + xs[v]);
    }
  }
  auto substitution = section_substitution(xs, x_images);
  for (const auto& g : tau.generators()) {
    for (std::size_t j = 0; j < g.components.size(); ++j) {
      const Polynomial r = ring.normal_form(g.components[j].substitute(substitution).embed(ring.variables()));
      if (!r.is_zero()) {
        throw VerificationError("point is not on tau X: f^(" + std::to_string(j) + ") for f = " + g.f.to_string() +
                                " reduces to " + r.to_string());
      }
    }
  }
  std::vector<TensorElement> images;
  for (const auto& v : ring.variables()) {
    auto it = std::find(xs.begin(), xs.end(), v);
    if (it != xs.end()) {
      images.push_back(x_images[it - xs.begin()]);
    } else {
      TensorElement img;
      for (const auto& c : base.op().image(v)) img.push_back(c.embed(ring.variables()));
      images.push_back(std::move(img));
    }
  }
  return make_doperator(base.algebra(), ring, images);
}

}  // namespace freeop
