#include "freeop/poly/solve.hpp"

#include "freeop/errors.hpp"
#include "freeop/linalg.hpp"
#include "freeop/poly/upoly.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace freeop {

std::size_t jacobian_rank_at(const std::vector<Polynomial>& gens, const VariableList& vars, const Point& point) {
  if (point.size() != vars.size()) throw InputError("point has the wrong number of coordinates");
  Matrix jac(gens.size(), vars.size());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    const Polynomial g = gens[r].embed(vars);
    for (std::size_t c = 0; c < vars.size(); ++c) jac(r, c) = g.partial_derivative(vars[c]).evaluate(point);
  }
  return jac.rank();
}

void require_on_variety(const Ideal& ideal, const Point& point) {
  if (point.size() != ideal.variables().size()) {
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                     std::to_string(ideal.variables().size()) + " variables");
  }
  for (const auto& g : ideal.generators()) {
    if (!freeop::is_zero(g.evaluate(point))) {
      throw InputError("point is not on the variety: generator '" + g.to_string() + "' does not vanish");
    }
  }
}

bool is_smooth_point(const Ideal& ideal, const Point& point) {
  require_on_variety(ideal, point);
  const std::size_t codim = ideal.variables().size() - ideal.krull_dimension();
  return jacobian_rank_at(ideal.generators(), ideal.variables(), point) == codim;
}

ZeroDimSolution solve_zero_dim(const Ideal& ideal) {
  ZeroDimSolution out;
  if (ideal.is_unit()) return out;
  if (const int dim = ideal.krull_dimension(); dim > 0) {
    throw InputError("solving needs a zero-dimensional ideal; this one has dimension " + std::to_string(dim));
  }
  const auto& vars = ideal.variables();
  const auto& basis = ideal.groebner_basis(MonomialOrder::lex());
  const std::size_t n = vars.size();

  // Basis elements grouped by their lex-leading variable.
  std::vector<std::vector<const Polynomial*>> by_var(n);
  for (const auto& g : basis) {
    const Exponent& e = g.leading_exponent(MonomialOrder::lex());
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) {
        by_var[i].push_back(&g);
        break;
      }
    }
  }

  Point current(n);
  std::map<std::string, Polynomial> assigned;
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == 0) {
      out.points.push_back(current);
      return;
    }
    const std::size_t var = k - 1;
    UPoly fiber;
    for (const Polynomial* g : by_var[var]) {
      fiber = gcd(fiber, UPoly::from_polynomial(g->substitute(assigned), vars[var]));
    }
    for (const auto& [factor, mult] : factor(fiber).factors) {
      if (factor.degree() > 1) {
        out.has_nonrational = true;
        continue;
      }
      const Rational root = -factor.coeff(0);
      current[var] = root;
      assigned[vars[var]] = Polynomial(VariableList{}, root);
      extend(var);
      assigned.erase(vars[var]);
    }
  };
  extend(n);
  std::sort(out.points.begin(), out.points.end());
  return out;
}

namespace {

// Q[vars]/I is isomorphic to Q[vars - v]/I' whenever some generator reads
// c*v + h with c constant and h free of v; repeat until no such generator.
Ideal substitute_solved_variables(const Ideal& ideal) {
  VariableList vars = ideal.variables();
  std::vector<Polynomial> gens = ideal.generators();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t gi = 0; gi < gens.size() && !changed; ++gi) {
      const Polynomial& g = gens[gi];
      for (const auto& v : g.support()) {
        const std::size_t idx = *g.index_of(v);
        Rational c = 0;
        bool solvable = true;
        for (const auto& [e, coef] : g.terms()) {
          if (e[idx] == 0) continue;
          const bool pure = e[idx] == 1 && std::count(e.begin(), e.end(), 0u) == static_cast<long>(e.size()) - 1;
          if (!pure) {
            solvable = false;
            break;
          }
          c = coef;
        }
        if (!solvable) continue;
        const Polynomial x = Polynomial::variable(g.variables(), v);
        const Polynomial image = (x * c - g) * Rational(1 / c);
        VariableList rest;
        for (const auto& w : vars) {
          if (w != v) rest.push_back(w);
        }
        std::vector<Polynomial> next;
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (k == gi) continue;
          Polynomial p = gens[k].substitute({{v, image}}).embed(rest);
          if (!p.is_zero()) next.push_back(std::move(p));
        }
        vars = std::move(rest);
        gens = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return Ideal(vars, gens, ideal.options());
}

// x-coefficients of f, each a polynomial in the remaining variables.
std::vector<Polynomial> coefficients_in(const Polynomial& f, const std::string& x) {
  const std::size_t idx = *f.index_of(x);
  std::vector<Polynomial> coeffs(f.degree(x) + 1, Polynomial(f.variables()));
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    rest[idx] = 0;
    coeffs[e[idx]].add_term(rest, c);
  }
  return coeffs;
}

// Content of f with respect to x when it can be computed: 1 if some
// coefficient is a nonzero constant, a univariate gcd when every coefficient
// lives in the same single variable, nullopt otherwise.
std::optional<Polynomial> content_in(const Polynomial& f, const std::string& x) {
  const auto coeffs = coefficients_in(f, x);
  std::optional<std::string> common;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    if (c.is_constant()) return Polynomial(f.variables(), Rational(1));
    const auto support = c.support();
    if (support.size() != 1 || (common && *common != support.front())) return std::nullopt;
    common = support.front();
  }
  UPoly g;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) g = gcd(g, UPoly::from_polynomial(c, *common));
  }
  return g.to_polynomial(f.variables(), *common);
}

PrimalityResult principal_primality(const Polynomial& f) {
  const auto support = f.support();
  if (support.size() == 1) {
    const auto fac = factor_univariate(f);
    if (fac.factors.size() == 1 && fac.factors.front().second == 1) return {Primality::prime, "irreducible univariate generator"};
    return {Primality::not_prime, "generator factors over Q"};
  }
  std::mt19937_64 rng(20240229);
  std::uniform_int_distribution<int> small(-10, 10);
  for (const auto& x : support) {
    const auto content = content_in(f, x);
    if (!content) continue;
    if (!content->is_constant()) {
      return {Primality::not_prime, "generator has the nonconstant content '" + content->to_string() + "' in " + x};
    }
    // A factorization f = g*h specializes to one of the same x-degrees; an
    // irreducible specialization forces a factor free of x, which would
    // divide the content.
    const auto coeffs = coefficients_in(f, x);
    for (int attempt = 0; attempt < 30; ++attempt) {
      std::map<std::string, Polynomial> at;
      for (const auto& y : support) {
        if (y != x) at[y] = Polynomial(VariableList{}, Rational(attempt == 0 ? 0 : small(rng)));
      }
      if (coeffs.back().substitute(at).is_zero()) continue;
      if (is_irreducible(UPoly::from_polynomial(f.substitute(at), x))) {
        return {Primality::prime, "irreducible specialization in " + x + " with constant content"};
      }
    }
  }
  return {Primality::undetermined, "no irreducible specialization found for the principal generator"};
}

PrimalityResult zero_dim_primality(const Ideal& ideal) {
  const auto standard = ideal.standard_monomials();
  const std::size_t n = standard.size();
  const auto& vars = ideal.variables();
  std::map<Exponent, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position[standard[i]] = i;

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-5, 5);
  for (std::size_t attempt = 0; attempt < vars.size() + 20; ++attempt) {
    Polynomial u(vars);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const int c = attempt < vars.size() ? (i == attempt ? 1 : 0) : small(rng);
      u += Polynomial::variable(vars, vars[i]) * Rational(c);
    }
    Matrix mult(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial image = ideal.normal_form(u * Polynomial::monomial(vars, standard[j], Rational(1)));
      for (const auto& [e, c] : image.terms()) mult(position.at(e), j) = c;
    }
    const auto fac = factor(minimal_polynomial(mult));
    if (fac.factors.size() > 1 || fac.factors.front().second > 1) {
      return {Primality::not_prime, "quotient has zero divisors: the minimal polynomial of " + u.to_string() + " factors"};
    }
    if (static_cast<std::size_t>(fac.factors.front().first.degree()) == n) {
      return {Primality::prime, "quotient is a field generated by " + u.to_string()};
    }
  }
  return {Primality::undetermined, "no primitive element found for the zero-dimensional quotient"};
}

}  // namespace

std::vector<Point> sample_rational_points(const Ideal& ideal, std::size_t max_samples,
                                          const std::function<bool(const Point&)>& accept) {
  if (ideal.is_unit() || max_samples == 0) return {};
  std::set<Point> found;
  auto take = [&](const Ideal& fibre) {
    for (const auto& p : solve_zero_dim(fibre).points) {
      if (found.size() < max_samples && (!accept || accept(p))) found.insert(p);
    }
  };
  const VariableList free_vars = ideal.maximal_independent_set();
  const std::size_t k = free_vars.size();
  if (k == 0) {
    take(ideal);
    return {found.begin(), found.end()};
  }
  const std::vector<int> values{0, 1, -1, 2, -2, 3, -3};
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t total = 0; total <= k * (values.size() - 1) && found.size() < max_samples; ++total) {
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      std::size_t sum = 0;
      for (auto i : idx) sum += i;
      if (sum == total) {
        std::vector<Polynomial> extra;
        for (std::size_t i = 0; i < k; ++i) {
          extra.push_back(Polynomial::variable(ideal.variables(), free_vars[i]) -
                          Polynomial(ideal.variables(), Rational(values[idx[i]])));
        }
        const Ideal fibre = ideal.with_generators(extra);
        // Non-generic choices can leave a positive-dimensional fibre; skip those.
        if (!fibre.is_unit() && fibre.krull_dimension() == 0) take(fibre);
      }
      std::size_t pos = 0;
      while (pos < k && ++idx[pos] == values.size()) idx[pos++] = 0;
      if (pos == k) break;
    }
  }
  return {found.begin(), found.end()};
}

PrimalityResult check_prime(const Ideal& ideal) {
  const Ideal reduced = substitute_solved_variables(ideal);
  if (reduced.generators().empty()) return {Primality::prime, "coordinate ring is a polynomial ring"};
  if (reduced.is_unit()) return {Primality::not_prime, "unit ideal"};
  const auto& gb = reduced.groebner_basis();
  if (gb.size() == 1) return principal_primality(gb.front());
  if (reduced.krull_dimension() == 0) return zero_dim_primality(reduced);
  return {Primality::undetermined, "positive-dimensional ideal with more than one generator"};
}

std::string to_string(Primality p) {
  switch (p) {
    case Primality::prime:
      return "prime";
    case Primality::not_prime:
      return "not prime";
    case Primality::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

}  // namespace freeop
