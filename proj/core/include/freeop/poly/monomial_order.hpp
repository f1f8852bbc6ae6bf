#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace freeop {

/// Exponent vector of a monomial, one entry per ring variable.
using Exponent = std::vector<std::uint32_t>;

/// Monomial orders on exponent vectors. Variable 0 is the largest variable.
///
/// `block(k)` compares the first k variables by grevlex and breaks ties by
/// grevlex on the remaining ones, so it eliminates the first block.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder block(std::size_t first_block_size) { return MonomialOrder(Kind::block, first_block_size); }

  /// Parses "grevlex", "lex" or "block:<k>".
  static MonomialOrder from_name(const std::string& name);

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Exponent& a, const Exponent& b) const;
  bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

  std::string name() const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

// Exponent helpers shared by the polynomial and Groebner code.
std::uint32_t total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent add(const Exponent& a, const Exponent& b);
Exponent subtract(const Exponent& a, const Exponent& b);  // requires divides(b, a)
bool coprime(const Exponent& a, const Exponent& b);

}  // namespace freeop
