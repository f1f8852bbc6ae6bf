#include "freeop/poly/ideal.hpp"

#include "freeop/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace freeop {

Ideal::Ideal(VariableList vars, std::vector<Polynomial> generators, IdealOptions options)
    : vars_(std::move(vars)), options_(options), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!g.is_zero()) gens_.push_back(g.embed(vars_));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order) const {
  const std::string key = order.name();
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->bases.find(key); it != cache_->bases.end()) return it->second;
  }
  auto basis = reduced_groebner_basis(vars_, gens_, order, options_.budget);
  std::lock_guard lock(cache_->mutex);
  return cache_->bases.try_emplace(key, std::move(basis)).first->second;
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  return reduce(f.embed(union_variables(vars_, f.variables())), groebner_basis(), options_.order).embed(vars_);
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::radical_contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  std::string aux = "_rad";
  while (std::find(vars_.begin(), vars_.end(), aux) != vars_.end()) aux += "_";
  VariableList vars = vars_;
  vars.push_back(aux);
  std::vector<Polynomial> gens = gens_;
  gens.push_back(Polynomial(vars, Rational(1)) - Polynomial::variable(vars, aux) * f.embed(vars));
  return Ideal(vars, gens, options_).is_unit();
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

Ideal Ideal::eliminate(const VariableList& keep) const {
  for (const auto& v : keep) {
    if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) {
      throw InputError("variable '" + v + "' to keep is not in the ring");
    }
  }
  VariableList ordered;
  for (const auto& v : vars_) {
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) ordered.push_back(v);
  }
  const std::size_t eliminated = ordered.size();
  ordered.insert(ordered.end(), keep.begin(), keep.end());
  if (eliminated == 0) return Ideal(keep, gens_, options_);

  const auto basis = reduced_groebner_basis(ordered, gens_, MonomialOrder::block(eliminated), options_.budget);
  std::vector<Polynomial> kept;
  for (const auto& g : basis) {
    bool only_keep = true;
    for (const auto& [e, c] : g.terms()) {
      for (std::size_t i = 0; i < eliminated; ++i) only_keep = only_keep && e[i] == 0;
    }
    if (only_keep) kept.push_back(g.embed(keep));
  }
  return Ideal(keep, kept, options_);
}

namespace {

std::vector<std::uint64_t> leading_supports(const std::vector<Polynomial>& gb, std::size_t nvars) {
  if (nvars > 64) throw InputError("dimension computation supports at most 64 variables");
  std::vector<std::uint64_t> masks;
  for (const auto& g : gb) {
    const Exponent& e = g.leading_exponent(MonomialOrder::grevlex());
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (e[i] != 0) m |= std::uint64_t{1} << i;
    }
    masks.push_back(m);
  }
  return masks;
}

void search_independent(const std::vector<std::uint64_t>& lead, std::size_t n, std::size_t i, std::uint64_t set,
                        int size, int& best, std::uint64_t& best_set) {
  if (size + static_cast<int>(n - i) <= best) return;
  if (i == n) {
    best = size;
    best_set = set;
    return;
  }
  const std::uint64_t with = set | (std::uint64_t{1} << i);
  const bool independent =
      std::none_of(lead.begin(), lead.end(), [&](std::uint64_t m) { return (m & ~with) == 0; });
  if (independent) search_independent(lead, n, i + 1, with, size + 1, best, best_set);
  search_independent(lead, n, i + 1, set, size, best, best_set);
}

}  // namespace

VariableList Ideal::maximal_independent_set() const {
  const auto& gb = groebner_basis(MonomialOrder::grevlex());
  if (gb.size() == 1 && gb.front().is_constant()) throw InputError("empty variety: the ideal is the unit ideal");
  const auto lead = leading_supports(gb, vars_.size());
  int best = -1;
  std::uint64_t best_set = 0;
  search_independent(lead, vars_.size(), 0, 0, 0, best, best_set);
  VariableList out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (best_set & (std::uint64_t{1} << i)) out.push_back(vars_[i]);
  }
  return out;
}

int Ideal::krull_dimension() const { return static_cast<int>(maximal_independent_set().size()); }

std::vector<Exponent> Ideal::standard_monomials() const {
  const auto& gb = groebner_basis();
  if (is_unit()) return {};
  const std::size_t n = vars_.size();
  std::vector<std::uint32_t> bound(n, 0);
  std::vector<Exponent> leads;
  for (const auto& g : gb) leads.push_back(g.leading_exponent(options_.order));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : leads) {
      bool pure = e[i] > 0;
      for (std::size_t j = 0; j < n && pure; ++j) pure = j == i || e[j] == 0;
      if (pure && (bound[i] == 0 || e[i] < bound[i])) bound[i] = e[i];
    }
    if (bound[i] == 0) {
      throw InputError("quotient is infinite-dimensional: variable '" + vars_[i] + "' has unbounded degree");
    }
  }
  std::vector<Exponent> out;
  Exponent cur(n, 0);
  for (;;) {
    const bool standard =
        std::none_of(leads.begin(), leads.end(), [&](const Exponent& l) { return divides(l, cur); });
    if (standard) out.push_back(cur);
    std::size_t k = 0;
    while (k < n) {
      if (++cur[k] < bound[k]) break;
      cur[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) { return options_.order.less(a, b); });
  return out;
}

Ideal Ideal::with_generators(const std::vector<Polynomial>& extra) const {
  VariableList vars = vars_;
  for (const auto& p : extra) vars = union_variables(vars, p.variables());
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(vars, gens, options_);
}

Ideal Ideal::sum(const Ideal& other) const {
  return Ideal(union_variables(vars_, other.vars_), gens_, options_).with_generators(other.gens_);
}

Ideal Ideal::embed(const VariableList& vars) const { return Ideal(vars, gens_, options_); }

Ideal Ideal::with_options(IdealOptions options) const { return Ideal(vars_, gens_, options); }

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string(options_.order);
  }
  if (gens_.empty()) os << "0";
  os << ">";
  return os.str();
}

}  // namespace freeop
