#include "freeop/dring/doperator.hpp"

#include "freeop/errors.hpp"
#include "freeop/poly/groebner.hpp"

#include <algorithm>

namespace freeop {
namespace {

Polynomial in_ring(const Polynomial& f, const VariableList& vars) {
  for (const auto& v : f.support()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
      throw InputError("unknown variable '" + v + "' (ring variables are " + [&] {
        std::string s;
        for (const auto& w : vars) s += (s.empty() ? "" : ", ") + w;
        return s;
      }() + ")");
    }
  }
  return f.embed(vars);
}

Reducer reducer_for(const Ideal& ideal) {
  return [ideal](const Polynomial& p) { return ideal.normal_form(p); };
}

TensorElement constant_tensor(const AlgebraElement& coords, const VariableList& vars) {
  TensorElement out;
  for (const auto& c : coords) out.emplace_back(vars, c);
  return out;
}

}  // namespace

const TensorElement& DOperator::image(const std::string& var) const {
  const auto& vars = variables();
  auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) throw InputError("unknown variable '" + var + "'");
  return images_[it - vars.begin()];
}

std::map<std::string, TensorElement> DOperator::image_map() const {
  std::map<std::string, TensorElement> out;
  for (std::size_t i = 0; i < images_.size(); ++i) out.emplace(variables()[i], images_[i]);
  return out;
}

TensorElement DOperator::apply(const Polynomial& f) const {
  return tensor_evaluate(algebra_, in_ring(f, variables()), image_map(), variables(), reducer_for(ideal_));
}

DOperator make_doperator(const FiniteDimAlgebra& algebra, const Ideal& ring, const std::vector<TensorElement>& images) {
  DOperator d;
  d.algebra_ = algebra.with_decomposition();
  if (!d.algebra_.pi_index()) {
    throw InputError("the algebra has no residue projection onto Q sending e_0 to 1 and the other basis vectors to 0");
  }
  d.ideal_ = ring;
  const auto& vars = ring.variables();
  if (images.size() != vars.size()) {
    throw InputError("expected " + std::to_string(vars.size()) + " images, one per ring variable, got " +
                     std::to_string(images.size()));
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (images[i].size() != algebra.dim()) {
      throw InputError("image of '" + vars[i] + "' has " + std::to_string(images[i].size()) +
                       " components, the algebra has dimension " + std::to_string(algebra.dim()));
    }
    TensorElement reduced;
    for (const auto& c : images[i]) reduced.push_back(ring.normal_form(in_ring(c, vars)));
    d.images_.push_back(std::move(reduced));
  }

  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Polynomial x = Polynomial::variable(vars, vars[i]);
    if (!ring.contains(d.images_[i][0] - x)) {
      throw VerificationError("section property fails for '" + vars[i] + "': component 0 of d(" + vars[i] +
                              ") is " + d.images_[i][0].to_string() + ", not " + vars[i] + " modulo the ideal");
    }
  }
  const auto images_by_name = d.image_map();
  for (const auto& g : ring.generators()) {
    const TensorElement t = tensor_evaluate(d.algebra_, g, images_by_name, vars, reducer_for(ring));
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!t[j].is_zero()) {
        throw VerificationError("not well defined: component " + std::to_string(j) + " of d(" + g.to_string() +
                                ") is " + t[j].to_string() + ", which is not in the ideal");
      }
    }
  }
  return d;
}

bool product_rule_check(const DOperator& d, const Polynomial& f, const Polynomial& g) {
  const TensorElement lhs = d.apply(f * g);
  const TensorElement rhs =
      tensor_mul(d.algebra(), d.apply(f), d.apply(g), [&](const Polynomial& p) { return d.reduce(p); });
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    if (!(lhs[k] == rhs[k])) return false;
  }
  return true;
}

std::map<std::string, Polynomial> AssociatedHom::as_substitution() const {
  if (!is_endomorphism()) throw InputError("associated homomorphism has a residue field larger than Q");
  std::map<std::string, Polynomial> out;
  for (std::size_t i = 0; i < variables.size(); ++i) out.emplace(variables[i], images[i][0]);
  return out;
}

AssociatedHom associated_hom(const DOperator& d, std::size_t i) {
  const auto& components = d.algebra().components();
  if (i >= components.size()) {
    throw InputError("component index " + std::to_string(i) + " out of range; the algebra has " +
                     std::to_string(components.size()) + " local components");
  }
  const LocalComponent& c = components[i];
  AssociatedHom out{i, c.residue_poly, d.variables(), {}};
  for (const auto& img : d.images()) {
    std::vector<Polynomial> coords;
    for (std::size_t r = 0; r < c.residue_projection.rows(); ++r) {
      Polynomial acc(d.variables());
      for (std::size_t j = 0; j < img.size(); ++j) acc += img[j] * c.residue_projection(r, j);
      coords.push_back(d.reduce(acc));
    }
    out.images.push_back(std::move(coords));
  }
  return out;
}

DIdealReport is_d_ideal(const DOperator& d, const Ideal& j) {
  const Ideal total = d.ideal().sum(j.embed(union_variables(d.variables(), j.variables())));
  DIdealReport report;
  for (const auto& g : j.generators()) {
    const TensorElement t = d.apply(g);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (!total.contains(t[k])) {
        report.is_d_ideal = false;
        report.witness = std::make_pair(g, k);
        return report;
      }
    }
  }
  return report;
}

std::optional<Polynomial> inverse_in_quotient(const Ideal& j, const Polynomial& h) {
  const auto& vars = j.variables();
  std::string z = "_inv";
  while (std::find(vars.begin(), vars.end(), z) != vars.end()) z += "_";
  VariableList ext{z};
  ext.insert(ext.end(), vars.begin(), vars.end());
  std::vector<Polynomial> gens = j.generators();
  gens.push_back(Polynomial::variable(ext, z) * h.embed(ext) - Polynomial(ext, Rational(1)));
  const auto basis = reduced_groebner_basis(ext, gens, MonomialOrder::block(1), j.options().budget);
  const Polynomial nf = reduce(Polynomial::variable(ext, z), basis, MonomialOrder::block(1));
  if (nf.degree(z) != 0) return std::nullopt;
  const Polynomial inverse = j.normal_form(nf.embed(vars));
  // The block basis only sees the saturation J : h^infinity; confirm in J.
  if (!j.contains(inverse * h.embed(vars) - Polynomial(vars, Rational(1)))) return std::nullopt;
  return inverse;
}

namespace {

// d(q)^{-1} by elimination: unknown coordinates y_k with d(q) * Y = 1_D.
std::optional<TensorElement> invert_by_elimination(const FiniteDimAlgebra& D, const Ideal& ring,
                                                   const TensorElement& q) {
  const auto& vars = ring.variables();
  const std::size_t n = D.dim();
  VariableList ext;
  for (std::size_t k = 0; k < n; ++k) ext.push_back("_y" + std::to_string(k));
  ext.insert(ext.end(), vars.begin(), vars.end());
  TensorElement y;
  for (std::size_t k = 0; k < n; ++k) y.push_back(Polynomial::variable(ext, ext[k]));
  TensorElement qe;
  for (const auto& c : q) qe.push_back(c.embed(ext));
  const TensorElement lhs = tensor_sub(tensor_mul(D, qe, y), tensor_scalar(D, Polynomial(ext, Rational(1))));
  std::vector<Polynomial> gens = ring.generators();
  gens.insert(gens.end(), lhs.begin(), lhs.end());
  const auto basis = reduced_groebner_basis(ext, gens, MonomialOrder::block(n), ring.options().budget);
  TensorElement out;
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial nf = reduce(y[k], basis, MonomialOrder::block(n));
    for (std::size_t m = 0; m < n; ++m) {
      if (nf.degree(ext[m]) != 0) return std::nullopt;
    }
    out.push_back(ring.normal_form(nf.embed(vars)));
  }
  return out;
}

}  // namespace

DOperator localize_dstructure(const DOperator& d, const Polynomial& q_in, std::string inverse_name) {
  const auto& vars = d.variables();
  const Polynomial q = in_ring(q_in, vars);
  if (q.is_constant()) {
    if (q.is_zero()) throw InputError("cannot localize at 0");
    return d;
  }
  if (d.ideal().radical_contains(q)) {
    throw InputError("q = " + q.to_string() + " vanishes on the variety; the localization is the zero ring");
  }
  if (inverse_name.empty()) {
    inverse_name = "w";
    for (int k = 1; std::find(vars.begin(), vars.end(), inverse_name) != vars.end(); ++k) {
      inverse_name = "w" + std::to_string(k);
    }
  } else if (std::find(vars.begin(), vars.end(), inverse_name) != vars.end()) {
    throw InputError("inverse variable '" + inverse_name + "' is already a ring variable");
  }

  VariableList ext = vars;
  ext.push_back(inverse_name);
  const Polynomial w = Polynomial::variable(ext, inverse_name);
  const Ideal localized = d.ideal().embed(ext).with_generators({q.embed(ext) * w - Polynomial(ext, Rational(1))});
  const Reducer reduce = reducer_for(localized);
  const FiniteDimAlgebra& D = d.algebra();

  const TensorElement dq = tensor_map(d.apply(q), [&](const Polynomial& p) { return reduce(p.embed(ext)); });
  const auto& components = D.components();
  const bool split_residues =
      std::all_of(components.begin(), components.end(), [](const LocalComponent& c) { return c.residue_dim == 1; });

  TensorElement inverse = tensor_zero(D, ext);
  if (split_residues) {
    for (std::size_t i = 0; i < components.size(); ++i) {
      const LocalComponent& c = components[i];
      const TensorElement e = constant_tensor(c.idempotent, ext);
      const TensorElement part = tensor_mul(D, e, dq, reduce);
      Polynomial scalar(ext);
      for (std::size_t j = 0; j < part.size(); ++j) scalar += part[j] * c.residue_projection(0, j);
      scalar = reduce(scalar);
      std::optional<Polynomial> scalar_inv;
      if (localized.contains(scalar - q.embed(ext))) {
        scalar_inv = reduce(w);
      } else {
        scalar_inv = inverse_in_quotient(localized, scalar);
      }
      if (!scalar_inv) {
        throw VerificationError("d(q) is not a unit after localizing at q = " + q.to_string() + ": sigma_" +
                                std::to_string(i) + "(q) = " + scalar.to_string() + " is not invertible in R_q");
      }
      // part = scalar * e + nil with nil nilpotent; invert via a finite series.
      const TensorElement nil = tensor_sub(part, tensor_map(e, [&](const Polynomial& p) { return p * scalar; }));
      const TensorElement step = tensor_map(nil, [&](const Polynomial& p) { return reduce(-(p * *scalar_inv)); });
      TensorElement sum = e;
      TensorElement power = e;
      for (std::size_t k = 1; k <= c.dim; ++k) {
        power = tensor_mul(D, power, step, reduce);
        sum = tensor_add(sum, power);
      }
      inverse = tensor_add(inverse, tensor_map(sum, [&](const Polynomial& p) { return reduce(p * *scalar_inv); }));
    }
  } else {
    auto solved = invert_by_elimination(D, localized, dq);
    if (!solved) {
      throw VerificationError("d(q) is not a unit after localizing at q = " + q.to_string());
    }
    inverse = std::move(*solved);
  }

  const TensorElement check = tensor_mul(D, dq, inverse, reduce);
  const TensorElement one = tensor_scalar(D, Polynomial(ext, Rational(1)));
  for (std::size_t k = 0; k < check.size(); ++k) {
    if (!localized.contains(check[k] - one[k])) {
      throw VerificationError("computed inverse of d(q) fails d(q) * d(w) = 1 in component " + std::to_string(k));
    }
  }

  std::vector<TensorElement> images;
  for (const auto& img : d.images()) {
    images.push_back(tensor_map(img, [&](const Polynomial& p) { return reduce(p.embed(ext)); }));
  }
  images.push_back(inverse);
  return make_doperator(D, localized, images);
}

}  // namespace freeop
