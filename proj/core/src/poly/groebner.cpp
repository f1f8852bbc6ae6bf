#include "freeop/poly/groebner.hpp"

#include "freeop/errors.hpp"

#include <algorithm>

namespace freeop {

namespace {

struct Term {
  Exponent e;
  Rational c;
};

// Terms in strictly decreasing order.
using Sorted = std::vector<Term>;

Sorted to_sorted(const Polynomial& p, const MonomialOrder& order) {
  Sorted s;
  s.reserve(p.size());
  for (const auto& [e, c] : p.terms()) s.push_back(Term{e, c});
  std::sort(s.begin(), s.end(), [&](const Term& a, const Term& b) { return order.compare(a.e, b.e) > 0; });
  return s;
}

Polynomial from_sorted(const VariableList& vars, const Sorted& s) {
  Polynomial p(vars);
  for (const auto& t : s) p.add_term(t.e, t.c);
  return p;
}

// (p[from..] - c * x^m * g), keeping the sorted invariant.
Sorted sub_mul(const Sorted& p, std::size_t from, const Rational& c, const Exponent& m, const Sorted& g,
               const MonomialOrder& order) {
  Sorted out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from;
  std::size_t j = 0;
  Exponent shifted;
  bool have_shifted = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have_shifted) {
      shifted = add(g[j].e, m);
      have_shifted = true;
    }
    int cmp;
    if (i == p.size()) {
      cmp = -1;
    } else if (j == g.size()) {
      cmp = 1;
    } else {
      cmp = order.compare(p[i].e, shifted);
    }
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(shifted), -c * g[j].c});
      ++j;
      have_shifted = false;
    } else {
      Rational v = p[i].c - c * g[j].c;
      if (!is_zero(v)) out.push_back(Term{p[i].e, std::move(v)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  return out;
}

const Sorted* find_reducer(const Exponent& e, const std::vector<const Sorted*>& basis) {
  for (const Sorted* g : basis) {
    if (divides(g->front().e, e)) return g;
  }
  return nullptr;
}

Sorted reduce_full(Sorted p, const std::vector<const Sorted*>& basis, const MonomialOrder& order) {
  Sorted r;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term& lt = p[pos];
    if (const Sorted* g = find_reducer(lt.e, basis)) {
      const Rational q = lt.c / g->front().c;
      const Exponent m = subtract(lt.e, g->front().e);
      p = sub_mul(p, pos, q, m, *g, order);
      pos = 0;
    } else {
      r.push_back(lt);
      ++pos;
    }
  }
  return r;
}

void make_monic(Sorted& p) {
  const Rational inv = Rational(1) / p.front().c;
  for (auto& t : p) t.c *= inv;
}

Sorted spoly(const Sorted& f, const Sorted& g, const MonomialOrder& order) {
  const Exponent l = lcm(f.front().e, g.front().e);
  // (l/LT(f)) f / lc(f) - (l/LT(g)) g / lc(g)
  Sorted a;
  const Exponent mf = subtract(l, f.front().e);
  const Rational cf = Rational(1) / f.front().c;
  a.reserve(f.size());
  for (const auto& t : f) a.push_back(Term{add(t.e, mf), t.c * cf});
  return sub_mul(a, 0, Rational(1) / g.front().c, subtract(l, g.front().e), g, order);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponent lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const GroebnerBudget& budget) : order_(order), budget_(budget) {}

  void add_generator(Sorted p) {
    p = reduce_full(std::move(p), active_basis(), order_);
    if (p.empty()) return;
    insert(std::move(p));
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it) {
        const int c = order_.compare(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
      }
      const Pair pr = *best;
      pairs_.erase(best);
      Sorted h = reduce_full(spoly(polys_[pr.i], polys_[pr.j], order_), active_basis(), order_);
      if (!h.empty()) insert(std::move(h));
    }
  }

  std::vector<Sorted> reduced() const {
    std::vector<Sorted> out;
    for (std::size_t k = 0; k < active_.size(); ++k) {
      std::vector<const Sorted*> others;
      for (std::size_t m = 0; m < active_.size(); ++m) {
        if (m != k) others.push_back(&polys_[active_[m]]);
      }
      Sorted r = reduce_full(polys_[active_[k]], others, order_);
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [&](const Sorted& a, const Sorted& b) { return order_.compare(a.front().e, b.front().e) > 0; });
    return out;
  }

 private:
  std::vector<const Sorted*> active_basis() const {
    std::vector<const Sorted*> b;
    b.reserve(active_.size());
    for (auto k : active_) b.push_back(&polys_[k]);
    return b;
  }

  const Exponent& lt(std::size_t k) const { return polys_[k].front().e; }

  void insert(Sorted h) {
    make_monic(h);
    int deg = 0;
    for (const auto& t : h) deg = std::max(deg, static_cast<int>(total_degree(t.e)));
    if (deg > budget_.max_degree) {
      throw BudgetExhausted("Groebner basis element of degree " + std::to_string(deg) + " exceeds the degree cap " +
                            std::to_string(budget_.max_degree));
    }
    if (polys_.size() + 1 > budget_.max_basis_size) {
      throw BudgetExhausted("Groebner basis size exceeds the cap " + std::to_string(budget_.max_basis_size));
    }
    polys_.push_back(std::move(h));
    update(polys_.size() - 1);
  }

  // Gebauer-Moeller installation of a new element (Becker-Weispfenning UPDATE).
  void update(std::size_t h) {
    const Exponent& lh = lt(h);
    std::vector<std::size_t> kept;
    for (std::size_t idx = 0; idx < active_.size(); ++idx) {
      const std::size_t g1 = active_[idx];
      bool keep = coprime(lh, lt(g1));
      if (!keep) {
        const Exponent l1 = lcm(lh, lt(g1));
        keep = true;
        for (std::size_t k = idx + 1; k < active_.size() && keep; ++k) {
          if (divides(lcm(lh, lt(active_[k])), l1)) keep = false;
        }
        for (std::size_t k = 0; k < kept.size() && keep; ++k) {
          if (divides(lcm(lh, lt(kept[k])), l1)) keep = false;
        }
      }
      if (keep) kept.push_back(g1);
    }
    std::vector<Pair> fresh;
    for (auto g : kept) {
      if (!coprime(lh, lt(g))) fresh.push_back(Pair{std::min(g, h), std::max(g, h), lcm(lh, lt(g))});
    }
    std::vector<Pair> remaining;
    for (auto& p : pairs_) {
      const bool drop = divides(lh, p.lcm) && lcm(lt(p.i), lh) != p.lcm && lcm(lh, lt(p.j)) != p.lcm;
      if (!drop) remaining.push_back(std::move(p));
    }
    for (auto& p : fresh) remaining.push_back(std::move(p));
    pairs_ = std::move(remaining);

    std::vector<std::size_t> next_active;
    for (auto g : active_) {
      if (!divides(lh, lt(g))) next_active.push_back(g);
    }
    next_active.push_back(h);
    active_ = std::move(next_active);
  }

  MonomialOrder order_;
  GroebnerBudget budget_;
  std::vector<Sorted> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> reduced_groebner_basis(const VariableList& vars, const std::vector<Polynomial>& generators,
                                               const MonomialOrder& order, const GroebnerBudget& budget) {
  Buchberger bb(order, budget);
  for (const auto& g : generators) {
    Polynomial e = g.embed(vars);
    if (e.is_zero()) continue;
    bb.add_generator(to_sorted(e, order));
  }
  bb.run();
  std::vector<Polynomial> out;
  for (const auto& s : bb.reduced()) out.push_back(from_sorted(vars, s));
  return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  VariableList vars = f.variables();
  for (const auto& b : basis) vars = union_variables(vars, b.variables());
  std::vector<Sorted> sorted;
  sorted.reserve(basis.size());
  for (const auto& b : basis) {
    if (!b.is_zero()) sorted.push_back(to_sorted(b.embed(vars), order));
  }
  std::vector<const Sorted*> ptrs;
  for (const auto& s : sorted) ptrs.push_back(&s);
  return from_sorted(vars, reduce_full(to_sorted(f.embed(vars), order), ptrs, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const VariableList vars = union_variables(f.variables(), g.variables());
  return from_sorted(vars, spoly(to_sorted(f.embed(vars), order), to_sorted(g.embed(vars), order), order));
}

}  // namespace freeop
