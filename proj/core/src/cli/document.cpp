#include "freeop/cli/document.hpp"

#include "freeop/errors.hpp"
#include "freeop/lexer.hpp"
#include "freeop/poly/poly_parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace freeop::cli {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool contains(const VariableList& vars, const std::string& v) {
  return std::find(vars.begin(), vars.end(), v) != vars.end();
}

/// `key [subject] = value` inside a brace block; the value is kept as raw
/// tokens so that entries can be interpreted in dependency order.
struct RawEntry {
  Token key;
  std::vector<Token> subject;
  std::vector<Token> value;
  Token terminator;
};

TokenStream stream_of(const std::vector<Token>& tokens, const Token& terminator) {
  std::vector<Token> copy = tokens;
  Token end = terminator;
  end.kind = TokenKind::end;
  copy.push_back(end);
  return TokenStream(std::move(copy));
}

void expect_end(TokenStream& in) {
  if (in.at_end()) return;
  if (in.peek().kind == TokenKind::identifier || in.peek().kind == TokenKind::integer || in.is_symbol("(")) {
    in.fail("unexpected token; missing ',' or '*'?");
  }
  in.fail("unexpected token");
}

VariableList parse_name_list(TokenStream& in, std::string_view open, std::string_view close) {
  VariableList out;
  in.expect_symbol(open);
  if (in.accept_symbol(close)) return out;
  for (;;) {
    const Token& t = in.expect_identifier();
    if (t.text == "Q") in.fail_at(t, "'Q' is reserved");
    if (contains(out, t.text)) in.fail_at(t, "duplicate name '" + t.text + "'");
    out.push_back(t.text);
    if (in.accept_symbol(close)) return out;
    if (!in.is_symbol(",")) in.fail("expected ',' or '" + std::string(close) + "'");
    in.next();
  }
}

std::vector<Polynomial> parse_tuple(TokenStream& in, const VariableList& vars) {
  std::vector<Polynomial> out;
  in.expect_symbol("(");
  if (in.accept_symbol(")")) return out;
  for (;;) {
    out.push_back(parse_expression(in, vars));
    if (in.accept_symbol(")")) return out;
    if (!in.is_symbol(",")) in.fail("expected ',' or ')'");
    in.next();
  }
}

Rational parse_rational(TokenStream& in) {
  const bool negative = in.accept_symbol("-");
  Rational q(in.expect_integer().text);
  if (in.accept_symbol("/")) {
    const Token& d = in.expect_integer();
    if (d.text.find_first_not_of('0') == std::string::npos) in.fail_at(d, "zero denominator");
    q /= Rational(d.text);
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::vector<Rational> parse_point(TokenStream& in) {
  std::vector<Rational> out;
  in.expect_symbol("(");
  if (in.accept_symbol(")")) return out;
  for (;;) {
    out.push_back(parse_rational(in));
    if (in.accept_symbol(")")) return out;
    if (!in.is_symbol(",")) in.fail("expected ',' or ')'");
    in.next();
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

std::string join(const std::vector<Polynomial>& polys) {
  std::vector<std::string> items;
  for (const auto& p : polys) items.push_back(p.to_string());
  return join(items);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : in_(tokenize(text)) {}

  Document parse_all() {
    while (!in_.at_end()) parse_one();
    return std::move(doc_);
  }

 private:
  TokenStream in_;
  Document doc_;
  std::map<std::string, std::string> kinds_;
  std::map<std::string, RingExpr> rings_;

  // Brace blocks ------------------------------------------------------------

  std::vector<RawEntry> read_entries() {
    std::vector<RawEntry> out;
    in_.expect_symbol("{");
    while (!in_.accept_symbol("}")) {
      if (in_.at_end()) in_.fail("unterminated block; expected '}'");
      RawEntry e;
      e.key = in_.expect_identifier();
      while (!in_.is_symbol("=")) {
        if (in_.at_end() || in_.is_symbol(";") || in_.is_symbol("}")) in_.fail("expected '='");
        e.subject.push_back(in_.next());
      }
      in_.next();
      int depth = 0;
      for (;;) {
        const Token& t = in_.peek();
        if (t.kind == TokenKind::end) in_.fail("unterminated block; expected '}'");
        if (depth == 0 && t.kind == TokenKind::symbol && (t.text == ";" || t.text == "," || t.text == "}")) break;
        if (t.kind == TokenKind::symbol && (t.text == "(" || t.text == "[")) ++depth;
        if (t.kind == TokenKind::symbol && (t.text == ")" || t.text == "]")) --depth;
        if (depth < 0) in_.fail("unbalanced bracket");
        e.value.push_back(in_.next());
      }
      e.terminator = in_.peek();
      if (!in_.is_symbol("}")) in_.next();
      if (e.value.empty()) in_.fail_at(e.terminator, "missing value for '" + e.key.text + "'");
      out.push_back(std::move(e));
    }
    in_.accept_symbol(";");
    return out;
  }

  static void reject_unknown(const std::vector<RawEntry>& entries, std::initializer_list<std::string_view> keys,
                             std::string_view block) {
    std::set<std::string> seen;
    for (const auto& e : entries) {
      if (std::find(keys.begin(), keys.end(), e.key.text) == keys.end()) {
        throw ParseError("unknown key in " + std::string(block) + " block", e.key.line, e.key.column, e.key.text);
      }
      std::string id = e.key.text;
      for (const auto& t : e.subject) id += " " + t.text;
      if (!seen.insert(id).second) {
        throw ParseError("duplicate entry '" + id + "'", e.key.line, e.key.column, e.key.text);
      }
    }
  }

  static const RawEntry* single(const std::vector<RawEntry>& entries, std::string_view key) {
    for (const auto& e : entries) {
      if (e.key.text == key) return &e;
    }
    return nullptr;
  }

  const RawEntry& required(const std::vector<RawEntry>& entries, std::string_view key, const Token& where) {
    const RawEntry* e = single(entries, key);
    if (!e) in_.fail_at(where, "missing '" + std::string(key) + "' entry");
    return *e;
  }

  static std::string subject_name(const RawEntry& e) {
    if (e.subject.size() != 1 || e.subject[0].kind != TokenKind::identifier) {
      throw ParseError("expected a single variable name after '" + e.key.text + "'", e.key.line, e.key.column,
                       e.subject.empty() ? e.key.text : e.subject[0].text);
    }
    return e.subject[0].text;
  }

  static void require_no_subject(const RawEntry& e) {
    if (!e.subject.empty()) {
      throw ParseError("expected '='", e.subject[0].line, e.subject[0].column, e.subject[0].text);
    }
  }

  template <class F>
  auto value_of(const RawEntry& e, F&& parse) {
    require_no_subject(e);
    TokenStream s = stream_of(e.value, e.terminator);
    auto out = parse(s);
    expect_end(s);
    return out;
  }

  ImageEntry image_of(const RawEntry& e, const VariableList& vars) {
    ImageEntry out{subject_name(e), {}};
    TokenStream s = stream_of(e.value, e.terminator);
    out.components = parse_tuple(s, vars);
    expect_end(s);
    return out;
  }

  static void check_arity(const std::vector<ImageEntry>& images, const std::vector<const RawEntry*>& raw) {
    for (std::size_t k = 1; k < images.size(); ++k) {
      if (images[k].components.size() != images[0].components.size()) {
        throw ParseError("arity mismatch: " + std::to_string(images[k].components.size()) + " components, expected " +
                             std::to_string(images[0].components.size()),
                         raw[k]->key.line, raw[k]->key.column, raw[k]->subject[0].text);
      }
    }
  }

  // Values ------------------------------------------------------------------

  AlgebraExpr parse_algebra_expr(TokenStream& s) {
    const Token& t = s.expect_identifier();
    if (t.text == "Q") {
      if (s.is_symbol("[")) {
        Presentation p;
        p.generators = parse_name_list(s, "[", "]");
        if (s.accept_symbol("/")) p.relations = parse_tuple(s, p.generators);
        return {std::move(p)};
      }
      if (s.accept_symbol("^")) {
        const Token& n = s.expect_integer();
        if (n.text.size() > 3 || std::stoul(n.text) == 0) s.fail_at(n, "expected a power between 1 and 999");
        return {SplitPower{std::stoul(n.text)}};
      }
      return {SplitPower{1}};
    }
    if (t.text == "product" && s.is_symbol("(")) {
      Product p;
      s.next();
      for (;;) {
        p.factors.push_back(parse_algebra_expr(s));
        if (s.accept_symbol(")")) break;
        if (!s.is_symbol(",")) s.fail("expected ',' or ')'");
        s.next();
      }
      if (p.factors.size() < 2) s.fail_at(t, "product needs at least two factors");
      return {std::move(p)};
    }
    auto it = kinds_.find(t.text);
    if (it == kinds_.end()) s.fail_at(t, "unresolved reference '" + t.text + "'");
    if (it->second != "algebra") s.fail_at(t, "'" + t.text + "' is a " + it->second + ", not an algebra");
    return {t.text};
  }

  /// Relations are parsed over the declared variables followed by `extra`.
  RingExpr parse_ring(TokenStream& s, const VariableList& extra) {
    const Token& t = s.expect_identifier();
    RingExpr out;
    if (t.text == "Q" && s.is_symbol("[")) {
      out.variables = parse_name_list(s, "[", "]");
      for (const auto& v : out.variables) {
        if (contains(extra, v)) s.fail_at(t, "variable '" + v + "' is already a parameter or extension generator");
      }
      if (s.accept_symbol("/")) out.relations = parse_tuple(s, union_variables(out.variables, extra));
      return out;
    }
    auto it = rings_.find(t.text);
    if (it == rings_.end()) {
      if (kinds_.count(t.text)) s.fail_at(t, "'" + t.text + "' is a " + kinds_.at(t.text) + ", not a ring or variety");
      s.fail_at(t, "unresolved reference '" + t.text + "'");
    }
    out = it->second;
    out.ref = t.text;
    for (const auto& v : out.variables) {
      if (contains(extra, v)) s.fail_at(t, "variable '" + v + "' is already a parameter or extension generator");
    }
    return out;
  }

  BaseSpec parse_base(const std::vector<RawEntry>& entries, const VariableList& reserved) {
    BaseSpec base;
    if (const RawEntry* p = single(entries, "params")) {
      base.parameters = value_of(*p, [](TokenStream& s) { return parse_name_list(s, "[", "]"); });
    }
    std::vector<const RawEntry*> raw;
    for (const auto& e : entries) {
      if (e.key.text != "d") continue;
      const std::string v = subject_name(e);
      if (contains(reserved, v)) continue;
      if (!contains(base.parameters, v)) {
        throw ParseError("'d' entries here are for parameters; '" + v + "' is not declared in params", e.key.line,
                         e.key.column, v);
      }
      base.images.push_back(image_of(e, base.parameters));
      raw.push_back(&e);
    }
    check_arity(base.images, raw);
    for (const auto& t : base.parameters) {
      if (std::none_of(base.images.begin(), base.images.end(), [&](const ImageEntry& i) { return i.variable == t; })) {
        throw ParseError("parameter '" + t + "' has no 'd' entry", single(entries, "params")->key.line,
                         single(entries, "params")->key.column, t);
      }
    }
    return base;
  }

  // Blocks ------------------------------------------------------------------

  AlgebraBlock parse_algebra_block(const std::string& name) {
    if (in_.accept_symbol("=")) {
      AlgebraBlock b{name, parse_algebra_expr(in_)};
      in_.accept_symbol(";");
      return b;
    }
    const Token where = in_.peek();
    const auto entries = read_entries();
    reject_unknown(entries, {"basis", "unit", "mul"}, "algebra");
    ExplicitAlgebra a;
    a.basis = value_of(required(entries, "basis", where), [](TokenStream& s) { return parse_name_list(s, "[", "]"); });
    a.unit = value_of(required(entries, "unit", where), [&](TokenStream& s) { return parse_expression(s, a.basis); });
    for (const auto& e : entries) {
      if (e.key.text != "mul") continue;
      TokenStream lhs = stream_of(e.subject, e.terminator);
      MulEntry m;
      m.left = lhs.expect_identifier().text;
      lhs.expect_symbol("*");
      m.right = lhs.expect_identifier().text;
      expect_end(lhs);
      for (const auto* n : {&m.left, &m.right}) {
        if (!contains(a.basis, *n)) throw ParseError("not a basis element", e.key.line, e.key.column, *n);
      }
      TokenStream rhs = stream_of(e.value, e.terminator);
      m.value = parse_expression(rhs, a.basis);
      expect_end(rhs);
      a.products.push_back(std::move(m));
    }
    return AlgebraBlock{name, AlgebraExpr{std::move(a)}};
  }

  DRingBlock parse_dring(const std::string& name) {
    const Token where = in_.peek();
    const auto entries = read_entries();
    reject_unknown(entries, {"algebra", "ring", "d", "dideal", "primes"}, "dring");
    DRingBlock b;
    b.name = name;
    b.algebra = value_of(required(entries, "algebra", where), [&](TokenStream& s) { return parse_algebra_expr(s); });
    b.ring = value_of(required(entries, "ring", where), [&](TokenStream& s) { return parse_ring(s, {}); });
    std::vector<const RawEntry*> raw;
    for (const auto& e : entries) {
      if (e.key.text != "d") continue;
      if (!contains(b.ring.variables, subject_name(e))) {
        throw ParseError("not a variable of the ring", e.key.line, e.key.column, subject_name(e));
      }
      b.images.push_back(image_of(e, b.ring.variables));
      raw.push_back(&e);
    }
    check_arity(b.images, raw);
    if (const RawEntry* e = single(entries, "dideal")) {
      b.dideal = value_of(*e, [&](TokenStream& s) { return parse_tuple(s, b.ring.variables); });
    }
    if (const RawEntry* e = single(entries, "primes")) {
      if (!b.dideal) throw ParseError("'primes' needs a 'dideal' entry", e->key.line, e->key.column, e->key.text);
      b.primes = value_of(*e, [&](TokenStream& s) {
        std::vector<std::vector<Polynomial>> out;
        s.expect_symbol("[");
        if (s.accept_symbol("]")) return out;
        for (;;) {
          out.push_back(parse_tuple(s, b.ring.variables));
          if (s.accept_symbol("]")) return out;
          if (!s.is_symbol(",")) s.fail("expected ',' or ']'");
          s.next();
        }
      });
    }
    return b;
  }

  DVarietyBlock parse_dvariety(const std::string& name) {
    const Token where = in_.peek();
    const auto entries = read_entries();
    reject_unknown(entries, {"algebra", "params", "d", "extension", "variety", "s"}, "dvariety");
    DVarietyBlock b;
    b.name = name;
    b.algebra = value_of(required(entries, "algebra", where), [&](TokenStream& s) { return parse_algebra_expr(s); });
    VariableList reserved;
    if (const RawEntry* e = single(entries, "extension")) {
      ExtensionSpec ext;
      value_of(*e, [&](TokenStream& s) {
        const Token& q = s.expect_identifier();
        if (q.text != "Q") s.fail_at(q, "expected 'Q[a]/(m)'");
        const VariableList gen = parse_name_list(s, "[", "]");
        if (gen.size() != 1) s.fail_at(q, "an extension has exactly one generator");
        ext.generator = gen[0];
        const auto rel = [&] {
          s.expect_symbol("/");
          return parse_tuple(s, gen);
        }();
        if (rel.size() != 1) s.fail_at(q, "an extension has exactly one defining polynomial");
        ext.modulus = rel[0];
        return 0;
      });
      reserved.push_back(ext.generator);
      bool found = false;
      for (const auto& d : entries) {
        if (d.key.text == "d" && subject_name(d) == ext.generator) {
          ext.image = image_of(d, {ext.generator});
          found = true;
        }
      }
      if (!found) {
        throw ParseError("extension generator '" + ext.generator + "' has no 'd' entry", e->key.line, e->key.column,
                         ext.generator);
      }
      b.extension = std::move(ext);
    }
    b.base = parse_base(entries, reserved);
    const VariableList extra = union_variables(reserved, b.base.parameters);
    b.variety = value_of(required(entries, "variety", where), [&](TokenStream& s) { return parse_ring(s, extra); });
    const VariableList all = union_variables(b.variety.variables, extra);
    std::vector<const RawEntry*> raw;
    for (const auto& e : entries) {
      if (e.key.text != "s") continue;
      if (!contains(b.variety.variables, subject_name(e))) {
        throw ParseError("not a coordinate of the variety", e.key.line, e.key.column, subject_name(e));
      }
      b.section.push_back(image_of(e, all));
      raw.push_back(&e);
    }
    check_arity(b.section, raw);
    return b;
  }

  UcdBlock parse_ucd(const std::string& name) {
    const Token where = in_.peek();
    const auto entries = read_entries();
    reject_unknown(entries, {"algebra", "params", "d", "X", "Y", "witness", "h", "assert_irreducible"}, "ucd");
    UcdBlock b;
    b.name = name;
    b.algebra = value_of(required(entries, "algebra", where), [&](TokenStream& s) { return parse_algebra_expr(s); });
    b.base = parse_base(entries, {});
    b.x = value_of(required(entries, "X", where), [&](TokenStream& s) { return parse_ring(s, b.base.parameters); });
    const RawEntry& y = required(entries, "Y", where);
    b.y = value_of(y, [&](TokenStream& s) { return parse_ring(s, b.base.parameters); });
    const VariableList yvars = union_variables(b.y.variables, b.base.parameters);
    if (const RawEntry* e = single(entries, "h")) {
      b.h = value_of(*e, [&](TokenStream& s) { return parse_expression(s, yvars); });
    }
    if (const RawEntry* e = single(entries, "witness")) {
      b.witness = value_of(*e, [](TokenStream& s) { return parse_point(s); });
      if (b.witness->size() != b.y.variables.size()) {
        throw ParseError("arity mismatch: witness has " + std::to_string(b.witness->size()) + " coordinates, Y has " +
                             std::to_string(b.y.variables.size()),
                         e->key.line, e->key.column, e->key.text);
      }
    }
    if (const RawEntry* e = single(entries, "assert_irreducible")) {
      const VariableList names = value_of(*e, [](TokenStream& s) { return parse_name_list(s, "[", "]"); });
      for (const auto& n : names) {
        if (n == "X") {
          b.assert_x_irreducible = true;
        } else if (n == "Y") {
          b.assert_y_irreducible = true;
        } else {
          throw ParseError("expected X or Y", e->key.line, e->key.column, n);
        }
      }
    }
    return b;
  }

 private:
  void parse_one() {
    const Token& kw = in_.expect_identifier();
    const Token& name = in_.expect_identifier();
    if (name.text == "Q" || name.text == "product") in_.fail_at(name, "'" + name.text + "' is reserved");
    if (kinds_.count(name.text)) in_.fail_at(name, "duplicate block name '" + name.text + "'");
    if (kw.text == "algebra") {
      doc_.blocks.emplace_back(parse_algebra_block(name.text));
    } else if (kw.text == "ring" || kw.text == "variety") {
      in_.expect_symbol("=");
      RingBlock b{name.text, kw.text == "variety", parse_ring(in_, {})};
      if (!b.ring.ref.empty()) in_.fail_at(name, "a ring block must spell out Q[...]");
      in_.accept_symbol(";");
      rings_[b.name] = b.ring;
      doc_.blocks.emplace_back(std::move(b));
    } else if (kw.text == "dring") {
      doc_.blocks.emplace_back(parse_dring(name.text));
    } else if (kw.text == "dvariety") {
      doc_.blocks.emplace_back(parse_dvariety(name.text));
    } else if (kw.text == "ucd") {
      doc_.blocks.emplace_back(parse_ucd(name.text));
    } else {
      in_.fail_at(kw, "unknown block keyword '" + kw.text + "'");
    }
    kinds_[name.text] = kw.text;
  }
};

// Printing --------------------------------------------------------------------

std::string print_algebra(const AlgebraExpr& a) {
  return std::visit(overloaded{
                        [](const std::string& ref) { return ref; },
                        [](const Presentation& p) {
                          std::string out = "Q[" + join(p.generators) + "]";
                          if (!p.relations.empty()) out += "/(" + join(p.relations) + ")";
                          return out;
                        },
                        [](const SplitPower& s) { return s.n == 1 ? std::string("Q") : "Q^" + std::to_string(s.n); },
                        [](const Product& p) {
                          std::vector<std::string> parts;
                          for (const auto& f : p.factors) parts.push_back(print_algebra(f));
                          return "product(" + join(parts) + ")";
                        },
                        [](const ExplicitAlgebra&) -> std::string {
                          throw InputError("explicit algebras can only be printed as blocks");
                        },
                    },
                    a.form);
}

std::string print_ring(const RingExpr& r) {
  if (!r.ref.empty()) return r.ref;
  std::string out = "Q[" + join(r.variables) + "]";
  if (!r.relations.empty()) out += "/(" + join(r.relations) + ")";
  return out;
}

std::string print_image(std::string_view key, const ImageEntry& e) {
  return "  " + std::string(key) + " " + e.variable + " = (" + join(e.components) + ");\n";
}

std::string print_base(const BaseSpec& base) {
  if (base.parameters.empty()) return "";
  std::string out = "  params = [" + join(base.parameters) + "];\n";
  for (const auto& e : base.images) out += print_image("d", e);
  return out;
}

}  // namespace

const Block* Document::find(std::string_view name) const {
  for (const auto& b : blocks) {
    if (block_name(b) == name) return &b;
  }
  return nullptr;
}

std::string block_name(const Block& block) {
  return std::visit([](const auto& b) { return b.name; }, block);
}

std::string block_keyword(const Block& block) {
  return std::visit(overloaded{
                        [](const AlgebraBlock&) { return std::string("algebra"); },
                        [](const RingBlock& b) { return std::string(b.is_variety ? "variety" : "ring"); },
                        [](const DRingBlock&) { return std::string("dring"); },
                        [](const DVarietyBlock&) { return std::string("dvariety"); },
                        [](const UcdBlock&) { return std::string("ucd"); },
                    },
                    block);
}

Document parse_document(std::string_view text) { return Parser(text).parse_all(); }

std::string print_document(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  for (const auto& block : doc.blocks) {
    if (!first) out << "\n";
    first = false;
    std::visit(overloaded{
                   [&](const AlgebraBlock& b) {
                     if (const auto* e = std::get_if<ExplicitAlgebra>(&b.algebra.form)) {
                       out << "algebra " << b.name << " {\n";
                       out << "  basis = [" << join(e->basis) << "];\n";
                       out << "  unit = " << e->unit.to_string() << ";\n";
                       for (const auto& m : e->products) {
                         out << "  mul " << m.left << "*" << m.right << " = " << m.value.to_string() << ";\n";
                       }
                       out << "}\n";
                     } else {
                       out << "algebra " << b.name << " = " << print_algebra(b.algebra) << ";\n";
                     }
                   },
                   [&](const RingBlock& b) {
                     out << (b.is_variety ? "variety " : "ring ") << b.name << " = " << print_ring(b.ring) << ";\n";
                   },
                   [&](const DRingBlock& b) {
                     out << "dring " << b.name << " {\n";
                     out << "  algebra = " << print_algebra(b.algebra) << ";\n";
                     out << "  ring = " << print_ring(b.ring) << ";\n";
                     for (const auto& e : b.images) out << print_image("d", e);
                     if (b.dideal) {
                       out << "  dideal = (" << join(*b.dideal) << ");\n";
                       if (!b.primes.empty()) {
                         std::vector<std::string> ps;
                         for (const auto& p : b.primes) ps.push_back("(" + join(p) + ")");
                         out << "  primes = [" << join(ps) << "];\n";
                       }
                     }
                     out << "}\n";
                   },
                   [&](const DVarietyBlock& b) {
                     out << "dvariety " << b.name << " {\n";
                     out << "  algebra = " << print_algebra(b.algebra) << ";\n";
                     out << print_base(b.base);
                     if (b.extension) {
                       out << "  extension = Q[" << b.extension->generator << "]/(" << b.extension->modulus.to_string()
                           << ");\n";
                       out << print_image("d", b.extension->image);
                     }
                     out << "  variety = " << print_ring(b.variety) << ";\n";
                     for (const auto& e : b.section) out << print_image("s", e);
                     out << "}\n";
                   },
                   [&](const UcdBlock& b) {
                     out << "ucd " << b.name << " {\n";
                     out << "  algebra = " << print_algebra(b.algebra) << ";\n";
                     out << print_base(b.base);
                     out << "  X = " << print_ring(b.x) << ";\n";
                     out << "  Y = " << print_ring(b.y) << ";\n";
                     if (b.witness) {
                       std::vector<std::string> cs;
                       for (const auto& c : *b.witness) cs.push_back(to_string(c));
                       out << "  witness = (" << join(cs) << ");\n";
                     }
                     if (b.h) out << "  h = " << b.h->to_string() << ";\n";
                     if (b.assert_x_irreducible || b.assert_y_irreducible) {
                       VariableList names;
                       if (b.assert_x_irreducible) names.push_back("X");
                       if (b.assert_y_irreducible) names.push_back("Y");
                       out << "  assert_irreducible = [" << join(names) << "];\n";
                     }
                     out << "}\n";
                   },
               },
               block);
  }
  return out.str();
}

}  // namespace freeop::cli
