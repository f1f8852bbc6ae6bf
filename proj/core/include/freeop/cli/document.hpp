#pragma once

#include "freeop/poly/polynomial.hpp"
#include "freeop/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace freeop::cli {

struct AlgebraExpr;

/// `Q[e]/(e^2)`: generators and relations for from_presentation.
struct Presentation {
  VariableList generators;
  std::vector<Polynomial> relations;
};

/// `Q^n`, or plain `Q` for n = 1.
struct SplitPower {
  std::size_t n = 1;
};

struct Product {
  std::vector<AlgebraExpr> factors;
};

struct MulEntry {
  std::string left;
  std::string right;
  /// Linear form in the basis names.
  Polynomial value;
};

/// `algebra A { basis = [u, e]; unit = u; mul u*u = u; ... }`. Products
/// not listed are zero; listing one order of a pair fills in the other.
struct ExplicitAlgebra {
  VariableList basis;
  Polynomial unit;
  std::vector<MulEntry> products;
};

struct AlgebraExpr {
  /// Name of another algebra block, or one of the inline forms.
  std::variant<std::string, Presentation, SplitPower, Product, ExplicitAlgebra> form;
};

/// `Q[x, y]/(y - x^2)` or a reference to a ring/variety block.
struct RingExpr {
  std::string ref;
  VariableList variables;
  std::vector<Polynomial> relations;
};

/// `d x = (x, 1)`: the tuple of components of an image in R (x) D.
struct ImageEntry {
  std::string variable;
  std::vector<Polynomial> components;
};

/// Parameters t with images d(t); empty for the trivial D-structure on Q.
struct BaseSpec {
  VariableList parameters;
  std::vector<ImageEntry> images;
};

struct ExtensionSpec {
  std::string generator;
  Polynomial modulus;
  ImageEntry image;
};

struct AlgebraBlock {
  std::string name;
  AlgebraExpr algebra;
};

struct RingBlock {
  std::string name;
  bool is_variety = false;
  RingExpr ring;
};

struct DRingBlock {
  std::string name;
  AlgebraExpr algebra;
  RingExpr ring;
  std::vector<ImageEntry> images;
  /// Optional D-ideal fixture: J and its supplied minimal primes.
  std::optional<std::vector<Polynomial>> dideal;
  std::vector<std::vector<Polynomial>> primes;
};

struct DVarietyBlock {
  std::string name;
  AlgebraExpr algebra;
  BaseSpec base;
  /// Relations may also use the extension generator and the parameters.
  RingExpr variety;
  std::vector<ImageEntry> section;
  std::optional<ExtensionSpec> extension;
};

struct UcdBlock {
  std::string name;
  AlgebraExpr algebra;
  BaseSpec base;
  RingExpr x;
  /// Declared in the prolonged coordinates x_0, ..., x_l.
  RingExpr y;
  std::optional<Polynomial> h;
  std::optional<std::vector<Rational>> witness;
  bool assert_x_irreducible = false;
  bool assert_y_irreducible = false;
};

using Block = std::variant<AlgebraBlock, RingBlock, DRingBlock, DVarietyBlock, UcdBlock>;

struct Document {
  std::vector<Block> blocks;

  const Block* find(std::string_view name) const;
};

std::string block_name(const Block& block);
/// "algebra", "ring", "variety", "dring", "dvariety" or "ucd".
std::string block_keyword(const Block& block);

/// Throws ParseError with line and column for syntax errors, unresolved
/// references, duplicate names and arity mismatches.
Document parse_document(std::string_view text);

/// Canonical text: one block per paragraph, entries in a fixed order,
/// polynomials in their printed normal form. parse_document(print_document(d))
/// prints back to the same text.
std::string print_document(const Document& doc);

}  // namespace freeop::cli
