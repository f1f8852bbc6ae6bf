#include "freeop/dvariety/weil.hpp"

#include "freeop/errors.hpp"

#include <algorithm>

namespace freeop {

std::string descended_name(const std::string& var, const std::string& generator, std::size_t c) {
  return var + "_" + generator + std::to_string(c);
}

namespace {

// Coefficient of a^c in p, as a polynomial over `rest`.
Polynomial coefficient_of_power(const Polynomial& p, const std::string& a, std::uint32_t c, const VariableList& rest) {
  const auto idx = p.index_of(a);
  Polynomial out(p.variables());
  for (const auto& [e, coef] : p.terms()) {
    const std::uint32_t deg = idx ? e[*idx] : 0;
    if (deg != c) continue;
    Exponent f = e;
    if (idx) f[*idx] = 0;
    out.add_term(f, coef);
  }
  return out.embed(rest);
}

Polynomial element_polynomial(const ExtensionElement& x, const std::string& a) {
  const VariableList vars{a};
  Polynomial out(vars);
  for (std::size_t c = 0; c < x.size(); ++c) out += Polynomial::monomial(vars, Exponent{static_cast<std::uint32_t>(c)}, x[c]);
  return out;
}

}  // namespace

WeilDescent weil_descent(const FiniteDimAlgebra& algebra, FieldExtension extension, const Ideal& ideal,
                         const std::vector<TensorElement>& section) {
  const std::string& a = extension.generator;
  if (extension.modulus.degree() < 1) throw InputError("the extension polynomial must be non-constant");
  extension.modulus = extension.modulus.monic();
  if (!is_irreducible(extension.modulus)) {
    throw InputError("extension polynomial " + extension.modulus.to_string(a) + " is reducible over Q");
  }
  const std::size_t deg = extension.modulus.degree();
  const VariableList avars{a};
  const Polynomial m = extension.modulus.to_polynomial(avars, a);

  struct Parts {
    VariableList variables;
    Ideal ideal_over_extension;
    std::vector<TensorElement> section_over_extension;
    DOperator extension_op;
    std::map<std::string, Polynomial> ascend_table;
    std::map<std::string, std::pair<std::string, std::size_t>> descend_table;
  } out;
  try {
    out.extension_op = make_doperator(algebra, Ideal(avars, {m}), {extension.d_generator});
  } catch (const VerificationError& e) {
    throw VerificationError(std::string("the D-structure on the extension field is invalid: ") + e.what());
  }

  for (const auto& v : ideal.variables()) {
    if (v != a) out.variables.push_back(v);
  }
  const auto& xs = out.variables;
  VariableList lvars = xs;
  lvars.push_back(a);
  out.ideal_over_extension = ideal.embed(lvars).with_generators({m});
  if (section.size() != xs.size()) {
    throw InputError("section needs " + std::to_string(xs.size()) + " coordinate images, got " +
                     std::to_string(section.size()));
  }
  std::vector<TensorElement> images = section;
  for (auto& img : images) {
    for (auto& c : img) c = c.embed(lvars);
  }
  TensorElement da;
  for (const auto& c : out.extension_op.image(a)) da.push_back(c.embed(lvars));
  images.push_back(da);
  try {
    make_doperator(algebra, out.ideal_over_extension, images);
    images.pop_back();
    out.section_over_extension = images;
  } catch (const VerificationError& e) {
    throw VerificationError(std::string("(V, s) is not a D-variety over the extension: ") + e.what());
  }

  // Descended coordinates and the substitution x -> sum_c x_ac a^c.
  VariableList dvars;
  for (const auto& x : xs) {
    for (std::size_t c = 0; c < deg; ++c) {
      const std::string name = descended_name(x, a, c);
      if (std::find(lvars.begin(), lvars.end(), name) != lvars.end()) {
        throw InputError("descended coordinate '" + name + "' collides with an existing variable");
      }
      dvars.push_back(name);
      out.descend_table.emplace(name, std::make_pair(x, c));
    }
  }
  VariableList mixed = dvars;
  mixed.push_back(a);
  for (const auto& x : xs) {
    Polynomial sum(mixed);
    for (std::size_t c = 0; c < deg; ++c) {
      sum += Polynomial::variable(mixed, descended_name(x, a, c)) *
             Polynomial::monomial(mixed, [&] {
               Exponent e(mixed.size(), 0);
               e.back() = static_cast<std::uint32_t>(c);
               return e;
             }(), Rational(1));
    }
    out.ascend_table.emplace(x, std::move(sum));
  }
  const Ideal mod_m(mixed, {m});
  auto expand = [&](const Polynomial& p) { return mod_m.normal_form(p.substitute(out.ascend_table).embed(mixed)); };

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    const Polynomial e = expand(g);
    for (std::size_t c = 0; c < deg; ++c) {
      Polynomial coef = coefficient_of_power(e, a, c, dvars);
      if (!coef.is_zero()) gens.push_back(std::move(coef));
    }
  }

  // Sharpness over L reads M * T = S with T[(c,i)] = d_i(x_ac),
  // S[(c',k)] = coefficient of a^c' in s^(k)(x), and
  // M[(c',k),(c,i)] = sum_j' coef_{a^c'}(d(a^c)_j') a_{i j' k}.
  const std::size_t n = algebra.dim();
  Matrix M(deg * n, deg * n);
  for (std::size_t c = 0; c < deg; ++c) {
    const TensorElement dpow = out.extension_op.apply(
        Polynomial::monomial(avars, Exponent{static_cast<std::uint32_t>(c)}, Rational(1)));
    for (std::size_t jp = 0; jp < n; ++jp) {
      for (std::size_t cp = 0; cp < deg; ++cp) {
        const Rational beta = dpow[jp].coefficient(Exponent{static_cast<std::uint32_t>(cp)});
        if (freeop::is_zero(beta)) continue;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t k = 0; k < n; ++k) M(cp * n + k, c * n + i) += beta * algebra.a(i, jp, k);
        }
      }
    }
  }
  const auto Minv = M.inverse();
  if (!Minv) throw VerificationError("the extension operator does not give a D-basis of L (x) D; cannot descend s");

  std::vector<TensorElement> descended_section;
  for (std::size_t v = 0; v < xs.size(); ++v) {
    std::vector<Polynomial> S(deg * n, Polynomial(dvars));
    for (std::size_t k = 0; k < n; ++k) {
      const Polynomial e = expand(section[v][k]);
      for (std::size_t cp = 0; cp < deg; ++cp) S[cp * n + k] = coefficient_of_power(e, a, cp, dvars);
    }
    for (std::size_t c = 0; c < deg; ++c) {
      TensorElement img;
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial t(dvars);
        for (std::size_t r = 0; r < deg * n; ++r) t += S[r] * (*Minv)(c * n + i, r);
        img.push_back(std::move(t));
      }
      descended_section.push_back(std::move(img));
    }
  }
  DVariety descended =
      make_dvariety(BaseDStructure::trivial(algebra), Ideal(dvars, gens, ideal.options()), descended_section);
  return WeilDescent{std::move(extension),
                     std::move(out.variables),
                     std::move(out.ideal_over_extension),
                     std::move(out.section_over_extension),
                     std::move(out.extension_op),
                     std::move(descended),
                     std::move(out.ascend_table),
                     std::move(out.descend_table)};
}

Point WeilDescent::descend_point(const ExtensionPoint& point) const {
  const std::size_t deg = extension.modulus.degree();
  if (point.size() != variables.size()) throw InputError("point has the wrong number of coordinates");
  Point out;
  for (const auto& x : point) {
    if (x.size() > deg) throw InputError("extension element has more coefficients than the degree of m");
    for (std::size_t c = 0; c < deg; ++c) out.push_back(c < x.size() ? x[c] : Rational(0));
  }
  return out;
}

ExtensionPoint WeilDescent::ascend_point(const Point& point) const {
  const std::size_t deg = extension.modulus.degree();
  if (point.size() != variables.size() * deg) throw InputError("point has the wrong number of coordinates");
  ExtensionPoint out;
  for (std::size_t v = 0; v < variables.size(); ++v) {
    out.emplace_back(point.begin() + v * deg, point.begin() + (v + 1) * deg);
  }
  return out;
}

bool WeilDescent::on_variety_over_extension(const ExtensionPoint& point) const {
  if (point.size() != variables.size()) throw InputError("point has the wrong number of coordinates");
  std::map<std::string, Polynomial> at;
  for (std::size_t v = 0; v < variables.size(); ++v) at.emplace(variables[v], element_polynomial(point[v], extension.generator));
  for (const auto& g : ideal_over_extension.generators()) {
    if (!extension_op.reduce(g.substitute(at).embed({extension.generator})).is_zero()) return false;
  }
  return true;
}

bool WeilDescent::is_sharp_over_extension(const ExtensionPoint& point) const {
  if (!on_variety_over_extension(point)) return false;
  const VariableList avars{extension.generator};
  std::map<std::string, Polynomial> at;
  for (std::size_t v = 0; v < variables.size(); ++v) at.emplace(variables[v], element_polynomial(point[v], extension.generator));
  for (std::size_t v = 0; v < variables.size(); ++v) {
    const TensorElement nabla_v = extension_op.apply(at.at(variables[v]));
    for (std::size_t j = 0; j < nabla_v.size(); ++j) {
      const Polynomial s = extension_op.reduce(section_over_extension[v][j].substitute(at).embed(avars));
      if (!(nabla_v[j] == s)) return false;
    }
  }
  return true;
}

}  // namespace freeop
