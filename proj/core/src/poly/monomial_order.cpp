#include "freeop/poly/monomial_order.hpp"

#include "freeop/errors.hpp"

#include <algorithm>
#include <numeric>

namespace freeop {

namespace {

// Grevlex on the index range [lo, hi).
int grevlex_range(const Exponent& a, const Exponent& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::from_name(const std::string& name) {
  if (name == "grevlex") return grevlex();
  if (name == "lex") return lex();
  if (name.rfind("block:", 0) == 0) {
    try {
      return block(static_cast<std::size_t>(std::stoul(name.substr(6))));
    } catch (const std::exception&) {
    }
  }
  throw InputError("unknown monomial order '" + name + "'");
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::grevlex:
      return grevlex_range(a, b, 0, a.size());
    case Kind::block: {
      const std::size_t k = std::min(block_, a.size());
      if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block:" + std::to_string(block_);
  }
  return "?";
}

std::uint32_t total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponent subtract(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

}  // namespace freeop
