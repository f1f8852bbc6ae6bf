#include "freeop/poly/polynomial.hpp"

#include "freeop/errors.hpp"
#include "freeop/poly/poly_parser.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace freeop {

VariableList union_variables(const VariableList& a, const VariableList& b) {
  VariableList out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

Polynomial::Polynomial(VariableList vars) : vars_(std::move(vars)) {}

Polynomial::Polynomial(VariableList vars, const Rational& constant) : vars_(std::move(vars)) {
  if (!freeop::is_zero(constant)) terms_.emplace(Exponent(vars_.size(), 0), constant);
}

Polynomial Polynomial::variable(VariableList vars, const std::string& name) {
  Polynomial p(std::move(vars));
  auto idx = p.index_of(name);
  if (!idx) throw InputError("unknown variable '" + name + "'");
  Exponent e(p.vars_.size(), 0);
  e[*idx] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(VariableList vars, Exponent exponent, const Rational& coefficient) {
  Polynomial p(std::move(vars));
  if (exponent.size() != p.vars_.size()) throw InputError("exponent length does not match variable count");
  p.add_term(exponent, coefficient);
  return p;
}

std::optional<std::size_t> Polynomial::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational Polynomial::constant_coefficient() const { return coefficient(Exponent(vars_.size(), 0)); }

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(freeop::total_degree(e)));
  return d;
}

std::uint32_t Polynomial::degree(std::string_view var) const {
  auto idx = index_of(var);
  if (!idx) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return d;
}

VariableList Polynomial::support() const {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  VariableList out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) out.push_back(vars_[i]);
  }
  return out;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (freeop::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (freeop::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial Polynomial::embed(const VariableList& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> target(vars_.size(), vars.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (vars[j] == vars_[i]) {
        target[i] = j;
        break;
      }
    }
  }
  Polynomial out(vars);
  for (const auto& [e, c] : terms_) {
    Exponent f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] == vars.size()) throw InputError("variable '" + vars_[i] + "' is not in the target ring");
      f[target[i]] = e[i];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Polynomial Polynomial::rename(const std::map<std::string, std::string>& names) const {
  Polynomial out = *this;
  for (auto& v : out.vars_) {
    if (auto it = names.find(v); it != names.end()) v = it->second;
  }
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& assignment) const {
  VariableList kept;
  std::vector<const Polynomial*> image(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (auto it = assignment.find(vars_[i]); it != assignment.end()) {
      image[i] = &it->second;
    } else {
      kept.push_back(vars_[i]);
    }
  }
  VariableList out_vars = kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (image[i]) out_vars = union_variables(out_vars, image[i]->variables());
  }
  // Cached powers of each substituted image, embedded in out_vars.
  std::vector<std::vector<Polynomial>> powers(vars_.size());
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.emplace_back(out_vars, Rational(1));
      cache.push_back(image[i]->embed(out_vars));
    }
    while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };
  Polynomial out(out_vars);
  for (const auto& [e, c] : terms_) {
    Exponent mono(out_vars.size(), 0);
    Polynomial term(out_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (image[i]) {
        term *= power_of(i, e[i]);
      } else {
        const auto pos = std::find(out_vars.begin(), out_vars.end(), vars_[i]) - out_vars.begin();
        mono[pos] += e[i];
      }
    }
    for (const auto& [te, tc] : term.terms_) out.add_term(add(te, mono), tc);
  }
  return out;
}

Polynomial Polynomial::partial_derivative(std::string_view var) const {
  Polynomial out(vars_);
  auto idx = index_of(var);
  if (!idx) return out;
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    Exponent f = e;
    f[*idx] -= 1;
    out.add_term(f, c * e[*idx]);
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values(vars_.size());
  std::vector<bool> known(vars_.size(), false);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (auto it = point.find(vars_[i]); it != point.end()) {
      values[i] = it->second;
      known[i] = true;
    }
  }
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0 && !known[i]) throw InputError("no value for variable '" + vars_[i] + "'");
    }
  }
  return evaluate(values);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw InputError("point dimension does not match variable count");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(vars_, Rational(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.vars_ != vars_) {
    auto vars = union_variables(vars_, rhs.vars_);
    *this = embed(vars);
    for (const auto& [e, c] : rhs.embed(vars).terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) {
    auto vars = union_variables(a.vars_, b.vars_);
    return a.embed(vars) * b.embed(vars);
  }
  Polynomial out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add(ea, eb), ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (freeop::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  if (vars_ == rhs.vars_) return terms_ == rhs.terms_;
  if (terms_.size() != rhs.terms_.size()) return false;
  auto vars = union_variables(vars_, rhs.vars_);
  return embed(vars).terms_ == rhs.embed(vars).terms_;
}

const Exponent& Polynomial::leading_exponent(const MonomialOrder& order) const {
  if (terms_.empty()) throw InputError("leading exponent of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (order.compare(it->first, best->first) > 0) best = it;
  }
  return best->first;
}

std::string Polynomial::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto* x, const auto* y) { return order.compare(x->first, y->first) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : sorted) {
    const Exponent& e = t->first;
    Rational c = t->second;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool is_const = freeop::total_degree(e) == 0;
    bool need_star = false;
    if (is_const || c != 1) {
      os << freeop::to_string(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

Polynomial parse_sum(TokenStream& in, const VariableList& vars);

Polynomial parse_primary(TokenStream& in, const VariableList& vars) {
  const Token& t = in.peek();
  if (t.kind == TokenKind::integer) {
    in.next();
    return Polynomial(vars, Rational(Integer(t.text, 10)));
  }
  if (t.kind == TokenKind::identifier) {
    if (std::find(vars.begin(), vars.end(), t.text) == vars.end()) {
      in.fail("unknown variable");
    }
    in.next();
    return Polynomial::variable(vars, t.text);
  }
  if (in.accept_symbol("(")) {
    Polynomial p = parse_sum(in, vars);
    in.expect_symbol(")");
    return p;
  }
  if (in.accept_symbol("-")) return -parse_primary(in, vars);
  in.fail("expected a polynomial");
}

Polynomial parse_power(TokenStream& in, const VariableList& vars) {
  Polynomial base = parse_primary(in, vars);
  if (in.accept_symbol("^")) {
    const Token& e = in.expect_integer();
    if (e.text.size() > 6) in.fail_at(e, "exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(e.text)));
  }
  return base;
}

Polynomial parse_product(TokenStream& in, const VariableList& vars) {
  Polynomial p = parse_power(in, vars);
  for (;;) {
    if (in.accept_symbol("*")) {
      p *= parse_power(in, vars);
    } else if (in.is_symbol("/")) {
      const Token& slash = in.next();
      Polynomial d = parse_power(in, vars);
      if (!d.is_constant() || d.is_zero()) in.fail_at(slash, "division is only allowed by a nonzero constant");
      p *= Rational(1) / d.constant_coefficient();
    } else {
      return p;
    }
  }
}

Polynomial parse_sum(TokenStream& in, const VariableList& vars) {
  Polynomial p(vars);
  bool negate = false;
  if (in.accept_symbol("-")) {
    negate = true;
  } else {
    in.accept_symbol("+");
  }
  Polynomial first = parse_product(in, vars);
  p += negate ? -first : first;
  for (;;) {
    if (in.accept_symbol("+")) {
      p += parse_product(in, vars);
    } else if (in.accept_symbol("-")) {
      p -= parse_product(in, vars);
    } else {
      return p;
    }
  }
}

}  // namespace

Polynomial parse_expression(TokenStream& in, const VariableList& vars) { return parse_sum(in, vars); }

Polynomial parse_polynomial(std::string_view text, const VariableList& vars) {
  TokenStream in(tokenize(text));
  Polynomial p = parse_expression(in, vars);
  if (!in.at_end()) {
    const TokenKind k = in.peek().kind;
    if (k == TokenKind::identifier || k == TokenKind::integer || in.is_symbol("(")) {
      in.fail("implicit multiplication is not allowed; write '*'");
    }
    in.fail("unexpected token after polynomial");
  }
  return p;
}

}  // namespace freeop
