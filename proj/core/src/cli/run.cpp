#include "freeop/cli/run.hpp"

#include "freeop/dvariety/weil.hpp"
#include "freeop/errors.hpp"
#include "freeop/ucd/ucd.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <regex>
#include <sstream>

namespace freeop::cli {

namespace {

using nlohmann::json;

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

const std::vector<std::pair<Command, std::string>>& command_table() {
  static const std::vector<std::pair<Command, std::string>> table{
      {Command::algebra_check, "algebra check"},     {Command::algebra_decompose, "algebra decompose"},
      {Command::dring_verify, "dring verify"},       {Command::prolong, "prolong"},
      {Command::dvariety_check, "dvariety check"},   {Command::dvariety_sharp, "dvariety sharp"},
      {Command::dvariety_descend, "dvariety descend"}, {Command::ucd_check, "ucd check"},
      {Command::ucd_search, "ucd search"},
  };
  return table;
}

/// Higher is more severe: input error, refuted, undetermined, ok.
int severity(int code) {
  switch (code) {
    case exit_input_error:
      return 3;
    case exit_refuted:
      return 2;
    case exit_undetermined:
      return 1;
    default:
      return 0;
  }
}

int worst(int a, int b) { return severity(a) >= severity(b) ? a : b; }

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string point_string(const Point& p) {
  std::vector<std::string> cs;
  for (const auto& c : p) cs.push_back(to_string(c));
  return "(" + join(cs) + ")";
}

json point_json(const Point& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

json polys_json(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json tensor_json(const TensorElement& t) { return polys_json(t); }

/// c_0 * name_0 + c_1 * name_1 + ..., with the basis name "1" printed as a
/// bare constant.
std::string element_string(const std::vector<std::string>& names, const AlgebraElement& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (freeop::is_zero(v[i])) continue;
    Rational c = v[i];
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      c = abs(c);
    } else if (c < 0 && names[i] != "1") {
      out += "-";
      c = abs(c);
    }
    if (names[i] == "1") {
      out += to_string(c);
    } else {
      out += (c == 1 ? "" : to_string(c) + "*") + names[i];
    }
  }
  return out.empty() ? "0" : out;
}

std::string extension_element_string(const ExtensionElement& e, const std::string& generator) {
  return UPoly(e).to_string(generator);
}

std::string residue_string(const LocalComponent& c) {
  return c.residue_dim == 1 ? "Q" : "Q[y]/(" + c.residue_poly.to_string("y") + ")";
}

// Building ----------------------------------------------------------------------

class Builder {
 public:
  Builder(const Document& doc, IdealOptions options) : doc_(doc), options_(std::move(options)) {}

  const IdealOptions& options() const { return options_; }

  FiniteDimAlgebra algebra(const AlgebraExpr& expr) {
    return std::visit(overloaded{
                          [&](const std::string& ref) -> FiniteDimAlgebra {
                            if (auto it = cache_.find(ref); it != cache_.end()) return it->second;
                            const Block* b = doc_.find(ref);
                            const auto* a = b ? std::get_if<AlgebraBlock>(b) : nullptr;
                            if (!a) throw InputError("unresolved algebra '" + ref + "'");
                            return cache_[ref] = algebra(a->algebra);
                          },
                          [&](const Presentation& p) { return from_presentation(p.generators, p.relations); },
                          [&](const SplitPower& s) { return split_algebra(s.n); },
                          [&](const Product& p) {
                            FiniteDimAlgebra acc = algebra(p.factors[0]);
                            for (std::size_t i = 1; i < p.factors.size(); ++i) {
                              acc = direct_product(acc, algebra(p.factors[i]));
                            }
                            return acc;
                          },
                          [&](const ExplicitAlgebra& e) { return explicit_algebra(e); },
                      },
                      expr.form);
  }

  Ideal ring(const RingExpr& r, const VariableList& extra = {}) const {
    const VariableList vars = union_variables(r.variables, extra);
    std::vector<Polynomial> gens;
    for (const auto& g : r.relations) gens.push_back(g.embed(vars));
    return Ideal(vars, gens, options_);
  }

  /// Images in the order of `vars`, each embedded over `target`.
  static std::vector<TensorElement> ordered_images(const VariableList& vars, const std::vector<ImageEntry>& entries,
                                                   const VariableList& target, const std::string& what) {
    std::vector<TensorElement> out;
    for (const auto& v : vars) {
      auto it = std::find_if(entries.begin(), entries.end(), [&](const ImageEntry& e) { return e.variable == v; });
      if (it == entries.end()) throw InputError("no " + what + " given for '" + v + "'");
      TensorElement t;
      for (const auto& c : it->components) t.push_back(c.embed(target));
      out.push_back(std::move(t));
    }
    return out;
  }

  BaseDStructure base(const FiniteDimAlgebra& D, const BaseSpec& spec) const {
    if (spec.parameters.empty()) return BaseDStructure::trivial(D);
    return BaseDStructure(D, spec.parameters, ordered_images(spec.parameters, spec.images, spec.parameters, "image"));
  }

 private:
  static FiniteDimAlgebra explicit_algebra(const ExplicitAlgebra& e) {
    const std::size_t n = e.basis.size();
    auto coordinates = [&](const Polynomial& p, const std::string& what) {
      AlgebraElement v(n);
      for (const auto& [exp, c] : p.terms()) {
        std::size_t degree = 0, at = 0;
        for (std::size_t i = 0; i < exp.size(); ++i) {
          degree += exp[i];
          if (exp[i]) at = i;
        }
        if (degree != 1) throw InputError(what + " must be a linear combination of basis elements");
        v[at] = c;
      }
      return v;
    };
    StructureConstants a(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    auto index = [&](const std::string& name) {
      return static_cast<std::size_t>(std::find(e.basis.begin(), e.basis.end(), name) - e.basis.begin());
    };
    for (const auto& m : e.products) {
      const std::size_t i = index(m.left), j = index(m.right);
      a[i][j] = coordinates(m.value.embed(e.basis), "mul " + m.left + "*" + m.right);
      given[i][j] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!given[i][j] && given[j][i]) a[i][j] = a[j][i];
      }
    }
    return FiniteDimAlgebra(e.basis, a, coordinates(e.unit.embed(e.basis), "unit"));
  }

  const Document& doc_;
  IdealOptions options_;
  std::map<std::string, FiniteDimAlgebra> cache_;
};

struct BlockResult {
  std::string name;
  int code = exit_ok;
  std::vector<std::string> lines;
  json data = json::object();
};

// Commands ------------------------------------------------------------------------

void algebra_check(Builder& b, const AlgebraBlock& block, BlockResult& out) {
  const FiniteDimAlgebra A = b.algebra(block.algebra);
  const AlgebraReport report = check_algebra(A);
  out.data["dim"] = A.dim();
  out.data["basis"] = A.basis_names();
  out.data["violations"] = json::array();
  for (const auto& v : report.violations) out.data["violations"].push_back(v.describe());
  out.data["valid"] = report.valid();
  if (report.valid()) {
    out.lines.push_back("algebra " + block.name + ": dim " + std::to_string(A.dim()) + ", basis [" +
                        join(A.basis_names()) + "]: commutative, associative, unital");
    return;
  }
  out.code = exit_refuted;
  out.lines.push_back("algebra " + block.name + ": " + std::to_string(report.violations.size()) + " violation(s)");
  for (const auto& v : report.violations) out.lines.push_back("  " + v.describe());
}

void algebra_decompose(Builder& b, const AlgebraBlock& block, BlockResult& out) {
  const FiniteDimAlgebra raw = b.algebra(block.algebra);
  if (!check_algebra(raw).valid()) {
    throw InputError("not a commutative associative algebra with unit; see 'algebra check'");
  }
  const FiniteDimAlgebra A = raw.with_decomposition();
  const ResidueFieldReport residue = check_assumption_res_field_k(A);
  const auto& names = A.basis_names();
  out.lines.push_back("algebra " + block.name + ": " + std::to_string(A.components().size()) +
                      " local component(s); every residue field is Q: " + (residue.holds ? "yes" : "no"));
  out.data["residue_fields_are_Q"] = residue.holds;
  out.data["local"] = residue.local;
  out.data["pi_index"] = A.pi_index() ? json(*A.pi_index()) : json(nullptr);
  out.data["components"] = json::array();
  for (std::size_t i = 0; i < A.components().size(); ++i) {
    const LocalComponent& c = A.components()[i];
    std::vector<std::string> max_ideal;
    for (const auto& v : c.max_ideal_basis) max_ideal.push_back(element_string(names, v));
    out.lines.push_back("  component " + std::to_string(i) + (A.pi_index() == i ? " (pi)" : "") +
                        ": idempotent " + element_string(names, c.idempotent) + ", dim " + std::to_string(c.dim) +
                        ", residue field " + residue_string(c) + ", maximal ideal [" + join(max_ideal) + "]");
    out.data["components"].push_back({{"idempotent", element_string(names, c.idempotent)},
                                      {"dim", c.dim},
                                      {"residue_poly", c.residue_poly.to_string("y")},
                                      {"residue_dim", c.residue_dim},
                                      {"max_ideal_basis", max_ideal}});
  }
}

void dring_verify(Builder& b, const DRingBlock& block, BlockResult& out) {
  const FiniteDimAlgebra D = b.algebra(block.algebra);
  const Ideal ring = b.ring(block.ring);
  const auto images = Builder::ordered_images(ring.variables(), block.images, ring.variables(), "image");
  DOperator d;
  try {
    d = make_doperator(D, ring, images);
  } catch (const VerificationError& e) {
    out.code = exit_refuted;
    out.lines.push_back("dring " + block.name + ": invalid: " + e.what());
    out.data["valid"] = false;
    out.data["reason"] = e.what();
    return;
  }
  out.lines.push_back("dring " + block.name + ": valid D-ring structure");
  out.data["valid"] = true;
  out.data["images"] = json::object();
  for (const auto& v : d.variables()) {
    out.lines.push_back("  d(" + v + ") = " + to_string(d.image(v)));
    out.data["images"][v] = tensor_json(d.image(v));
  }
  out.data["endomorphisms"] = json::array();
  for (std::size_t i = 0; i < D.components().size(); ++i) {
    if (D.pi_index() == i) continue;
    const AssociatedHom sigma = associated_hom(d, i);
    if (!sigma.is_endomorphism()) continue;
    std::vector<std::string> parts;
    json entry = json::object();
    for (const auto& [v, p] : sigma.as_substitution()) {
      parts.push_back(v + " -> " + p.to_string());
      entry[v] = p.to_string();
    }
    out.lines.push_back("  sigma_" + std::to_string(i) + ": " + join(parts));
    out.data["endomorphisms"].push_back({{"component", i}, {"map", entry}});
  }
  if (!block.dideal) return;
  const Ideal j(ring.variables(), *block.dideal, b.options());
  const DIdealReport r = is_d_ideal(d, j);
  out.data["dideal"] = {{"ideal", j.to_string()}, {"is_d_ideal", r.is_d_ideal}};
  if (!r.is_d_ideal) {
    out.code = exit_refuted;
    out.lines.push_back("  " + j.to_string() + " is not a D-ideal: d_" + std::to_string(r.witness->second) + "(" +
                        r.witness->first.to_string() + ") is not in it");
    return;
  }
  out.lines.push_back("  " + j.to_string() + " is a D-ideal");
  if (block.primes.empty()) return;
  std::vector<Ideal> primes;
  for (const auto& p : block.primes) primes.emplace_back(ring.variables(), p, b.options());
  const DIdealFixtureReport fr = dideal_fixture_check(d, j, primes);
  out.data["dideal"]["primes"] = json::array();
  for (const auto& pc : fr.primes) {
    out.lines.push_back("    prime " + pc.prime.to_string() + ": contains J " + (pc.contains_j ? "yes" : "no") +
                        ", D-ideal " + (pc.is_d_ideal ? "yes" : "no"));
    out.data["dideal"]["primes"].push_back(
        {{"prime", pc.prime.to_string()}, {"contains_j", pc.contains_j}, {"is_d_ideal", pc.is_d_ideal}});
  }
  out.lines.push_back(std::string("    supplied primes cover V(J): ") + (fr.covers ? "yes" : "no"));
  out.data["dideal"]["covers"] = fr.covers;
  if (!fr.passed()) out.code = exit_refuted;
}

void print_prolongation(const ProlongedVariety& tau, const std::string& label, BlockResult& out) {
  out.lines.push_back("prolong " + label + ": tau X in [" + join(tau.prolonged_variables()) + "]");
  out.data["variables"] = tau.prolonged_variables();
  out.data["generators"] = json::array();
  for (const auto& g : tau.generators()) {
    out.lines.push_back("  f = " + g.f.to_string());
    for (std::size_t j = 0; j < g.components.size(); ++j) {
      out.lines.push_back("    f^(" + std::to_string(j) + ") = " + g.components[j].to_string());
    }
    out.data["generators"].push_back({{"f", g.f.to_string()}, {"components", polys_json(g.components)}});
  }
}

DVariety build_dvariety(Builder& b, const DVarietyBlock& block) {
  const FiniteDimAlgebra D = b.algebra(block.algebra);
  const BaseDStructure base = b.base(D, block.base);
  const Ideal ideal = b.ring(block.variety, block.base.parameters);
  const auto section = Builder::ordered_images(block.variety.variables, block.section, ideal.variables(), "section");
  return make_dvariety(base, ideal, section);
}

WeilDescent build_descent(Builder& b, const DVarietyBlock& block) {
  const FiniteDimAlgebra D = b.algebra(block.algebra);
  if (!block.base.parameters.empty()) throw InputError("descent over a parametric base is not supported");
  const ExtensionSpec& ext = *block.extension;
  FieldExtension field;
  field.generator = ext.generator;
  field.modulus = UPoly::from_polynomial(ext.modulus, ext.generator);
  for (const auto& c : ext.image.components) field.d_generator.push_back(c.embed({ext.generator}));
  const Ideal ideal = b.ring(block.variety, {ext.generator});
  const auto section = Builder::ordered_images(block.variety.variables, block.section, ideal.variables(), "section");
  return weil_descent(D, field, ideal, section);
}

void report_sharp(const SharpPoints& sp, const VariableList& vars, BlockResult& out) {
  out.data["locus"] = sp.locus.to_string();
  out.data["locus_generators"] = polys_json(sp.locus.generators());
  out.data["dimension"] = sp.dimension;
  out.data["points"] = json::array();
  for (const auto& p : sp.points) out.data["points"].push_back(point_json(p));
  out.data["has_nonrational"] = sp.has_nonrational;
  std::string head = "  sharp locus " + sp.locus.to_string() + " in [" + join(vars) + "], ";
  if (sp.dimension < 0) {
    out.lines.push_back(head + "empty");
    return;
  }
  head += "dimension " + std::to_string(sp.dimension) + ", ";
  if (sp.dimension == 0) {
    head += std::to_string(sp.points.size()) + " rational point(s)";
    if (sp.has_nonrational) head += " plus points over proper extensions";
  } else {
    head += std::to_string(sp.points.size()) + " sample point(s)";
  }
  out.lines.push_back(head);
  for (const auto& p : sp.points) out.lines.push_back("    " + point_string(p));
}

void dvariety_check(Builder& b, const DVarietyBlock& block, BlockResult& out) {
  try {
    if (block.extension) {
      const WeilDescent w = build_descent(b, block);
      out.lines.push_back("dvariety " + block.name + ": valid D-variety over Q(" + block.extension->generator +
                          "), " + block.extension->modulus.to_string() + " = 0");
    } else {
      const DVariety dv = build_dvariety(b, block);
      out.lines.push_back("dvariety " + block.name + ": valid D-variety");
      for (std::size_t v = 0; v < dv.variables().size(); ++v) {
        out.lines.push_back("  s(" + dv.variables()[v] + ") = " + to_string(dv.section()[v]));
      }
    }
    out.data["valid"] = true;
  } catch (const VerificationError& e) {
    out.code = exit_refuted;
    out.lines.push_back("dvariety " + block.name + ": invalid: " + e.what());
    out.data["valid"] = false;
    out.data["reason"] = e.what();
  }
}

void dvariety_sharp(Builder& b, const DVarietyBlock& block, BlockResult& out) {
  if (block.extension) {
    const WeilDescent w = build_descent(b, block);
    const SharpPoints sp = rational_sharp_points(w.descended);
    out.lines.push_back("dvariety " + block.name + ": sharp points computed on the descent to Q");
    report_sharp(sp, w.descended.variables(), out);
    out.data["points_over_extension"] = json::array();
    for (const auto& p : sp.points) {
      std::vector<std::string> coords;
      for (const auto& e : w.ascend_point(p)) coords.push_back(extension_element_string(e, w.extension.generator));
      out.lines.push_back("    over Q(" + w.extension.generator + "): (" + join(coords) + ")");
      out.data["points_over_extension"].push_back(coords);
    }
    return;
  }
  const DVariety dv = build_dvariety(b, block);
  out.lines.push_back("dvariety " + block.name + ":");
  report_sharp(rational_sharp_points(dv), dv.variables(), out);
}

void dvariety_descend(Builder& b, const DVarietyBlock& block, BlockResult& out) {
  const WeilDescent w = build_descent(b, block);
  const DVariety& dw = w.descended;
  out.lines.push_back("dvariety " + block.name + ": descent along " + w.extension.modulus.to_string(w.extension.generator) +
                      " = 0");
  out.lines.push_back("  V^W = " + dw.ideal().to_string() + " in [" + join(dw.variables()) + "]");
  out.data["ideal"] = dw.ideal().to_string();
  out.data["variables"] = dw.variables();
  out.data["section"] = json::object();
  for (std::size_t v = 0; v < dw.variables().size(); ++v) {
    out.lines.push_back("  s^W(" + dw.variables()[v] + ") = " + to_string(dw.section()[v]));
    out.data["section"][dw.variables()[v]] = tensor_json(dw.section()[v]);
  }
  out.data["ascend"] = json::object();
  for (const auto& [x, p] : w.ascend_table) {
    out.lines.push_back("  " + x + " = " + p.to_string());
    out.data["ascend"][x] = p.to_string();
  }

  // Every descended sharp point must ascend to a sharp point over L and
  // descend back to itself.
  const SharpPoints sp = rational_sharp_points(dw);
  std::size_t agreed = 0;
  for (const auto& p : sp.points) {
    const ExtensionPoint up = w.ascend_point(p);
    if (w.is_sharp_over_extension(up) && w.descend_point(up) == p) ++agreed;
  }
  out.data["sharp_points"] = sp.points.size();
  out.data["sharp_points_matched"] = agreed;
  out.data["dimension"] = sp.dimension;
  out.lines.push_back("  sharp points over Q: " + std::to_string(sp.points.size()) + (sp.dimension > 0 ? " (samples)" : "") +
                      "; matched by sharp points over Q(" + w.extension.generator + "): " + std::to_string(agreed));
  if (agreed != sp.points.size()) out.code = exit_refuted;
}

UcdInstance build_instance(Builder& b, const UcdBlock& block) {
  const FiniteDimAlgebra D = b.algebra(block.algebra);
  UcdInstance inst{b.base(D, block.base), b.ring(block.x, block.base.parameters),
                   b.ring(block.y, block.base.parameters), std::nullopt, std::nullopt, block.assert_x_irreducible,
                   block.assert_y_irreducible};
  if (block.h) inst.h = block.h->embed(inst.y.variables());
  if (block.witness) inst.smooth_witness = *block.witness;
  return inst;
}

void prolong_block(Builder& b, const Block& block, BlockResult& out) {
  std::visit(overloaded{
                 [&](const DRingBlock& d) {
                   const FiniteDimAlgebra D = b.algebra(d.algebra);
                   print_prolongation(prolong(BaseDStructure::trivial(D), b.ring(d.ring)), d.name, out);
                 },
                 [&](const DVarietyBlock& d) {
                   const FiniteDimAlgebra D = b.algebra(d.algebra);
                   print_prolongation(prolong(b.base(D, d.base), b.ring(d.variety, d.base.parameters)), d.name, out);
                 },
                 [&](const UcdBlock& u) {
                   const FiniteDimAlgebra D = b.algebra(u.algebra);
                   print_prolongation(prolong(b.base(D, u.base), b.ring(u.x, u.base.parameters)), u.name, out);
                 },
                 [](const auto&) {},
             },
             block);
}

void ucd_check(Builder& b, const UcdBlock& block, BlockResult& out) {
  const HypothesisReport r = check_instance(build_instance(b, block));
  out.code = r.exit_code();
  out.lines.push_back("ucd " + block.name + ": " + to_string(r.overall()));
  out.data["verdict"] = to_string(r.overall());
  out.data["hypotheses"] = json::array();
  for (const auto& h : r.hypotheses) {
    out.lines.push_back("  " + h.name + ": " + to_string(h.status) + (h.detail.empty() ? "" : " (" + h.detail + ")"));
    json entry{{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}};
    if (h.witness) entry["witness"] = h.witness->to_string();
    out.data["hypotheses"].push_back(entry);
  }
}

void ucd_search(Builder& b, const UcdBlock& block, BlockResult& out) {
  const NablaSearch s = find_nabla_point(build_instance(b, block));
  out.data["status"] = to_string(s.status);
  out.data["locus"] = s.locus.to_string();
  out.data["dimension"] = s.dimension;
  out.data["points"] = json::array();
  for (const auto& p : s.points) out.data["points"].push_back(point_json(p));
  const std::string where = "locus " + s.locus.to_string() + ", dimension " + std::to_string(s.dimension);
  if (s.points.empty()) {
    out.code = exit_undetermined;
    out.lines.push_back("ucd " + block.name + ": no rational point in U found (" + where +
                        "); over Q this does not refute the axiom");
    return;
  }
  out.lines.push_back("ucd " + block.name + ": " + to_string(s.status) + ", " + std::to_string(s.points.size()) +
                      " point(s) a with nabla(a) in U (" + where + ")");
  for (const auto& p : s.points) out.lines.push_back("    " + point_string(p));
}

bool applies(Command c, const Block& block) {
  switch (c) {
    case Command::algebra_check:
    case Command::algebra_decompose:
      return std::holds_alternative<AlgebraBlock>(block);
    case Command::dring_verify:
      return std::holds_alternative<DRingBlock>(block);
    case Command::prolong:
      if (const auto* d = std::get_if<DVarietyBlock>(&block)) return !d->extension;
      return std::holds_alternative<DRingBlock>(block) || std::holds_alternative<UcdBlock>(block);
    case Command::dvariety_check:
    case Command::dvariety_sharp:
      return std::holds_alternative<DVarietyBlock>(block);
    case Command::dvariety_descend:
      if (const auto* d = std::get_if<DVarietyBlock>(&block)) return d->extension.has_value();
      return false;
    case Command::ucd_check:
    case Command::ucd_search:
      return std::holds_alternative<UcdBlock>(block);
  }
  return false;
}

void dispatch(Command c, Builder& b, const Block& block, BlockResult& out) {
  switch (c) {
    case Command::algebra_check:
      return algebra_check(b, std::get<AlgebraBlock>(block), out);
    case Command::algebra_decompose:
      return algebra_decompose(b, std::get<AlgebraBlock>(block), out);
    case Command::dring_verify:
      return dring_verify(b, std::get<DRingBlock>(block), out);
    case Command::prolong:
      return prolong_block(b, block, out);
    case Command::dvariety_check:
      return dvariety_check(b, std::get<DVarietyBlock>(block), out);
    case Command::dvariety_sharp:
      return dvariety_sharp(b, std::get<DVarietyBlock>(block), out);
    case Command::dvariety_descend:
      return dvariety_descend(b, std::get<DVarietyBlock>(block), out);
    case Command::ucd_check:
      return ucd_check(b, std::get<UcdBlock>(block), out);
    case Command::ucd_search:
      return ucd_search(b, std::get<UcdBlock>(block), out);
  }
}

std::string render_text(const std::vector<BlockResult>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    for (const auto& line : b.lines) out += line + "\n";
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RunResult error_result(Command command, const std::string& message) {
  RunResult r;
  r.exit_code = exit_input_error;
  r.text = "error: " + message + "\n";
  r.json = json{{"command", command_name(command)}, {"exit_code", exit_input_error}, {"error", message}}.dump(2) + "\n";
  return r;
}

}  // namespace

std::string command_name(Command c) {
  for (const auto& [cmd, name] : command_table()) {
    if (cmd == c) return name;
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& text) {
  for (const auto& [cmd, name] : command_table()) {
    if (name == text) return cmd;
  }
  return std::nullopt;
}

const std::vector<Command>& all_commands() {
  static const std::vector<Command> cmds = [] {
    std::vector<Command> out;
    for (const auto& entry : command_table()) out.push_back(entry.first);
    return out;
  }();
  return cmds;
}

IdealOptions RunOptions::ideal_options() const {
  IdealOptions out;
  out.order = MonomialOrder::from_name(order);
  if (budget) out.budget.max_basis_size = *budget;
  return out;
}

RunResult run(Command command, const Document& doc, const RunOptions& options) {
  if (options.block && !doc.find(*options.block)) {
    return error_result(command, "no block named '" + *options.block + "'");
  }
  IdealOptions ideal_options;
  try {
    ideal_options = options.ideal_options();
  } catch (const InputError& e) {
    return error_result(command, e.what());
  }
  Builder builder(doc, ideal_options);
  std::vector<BlockResult> results;
  RunResult run;
  for (const auto& block : doc.blocks) {
    if (options.block && block_name(block) != *options.block) continue;
    if (!applies(command, block)) continue;
    BlockResult r;
    r.name = block_name(block);
    try {
      dispatch(command, builder, block, r);
    } catch (const InputError& e) {
      r.code = exit_input_error;
      r.lines.push_back(block_keyword(block) + " " + r.name + ": error: " + e.what());
      r.data["error"] = e.what();
    } catch (const VerificationError& e) {
      r.code = exit_refuted;
      r.lines.push_back(block_keyword(block) + " " + r.name + ": verification failed: " + e.what());
      r.data["error"] = e.what();
    } catch (const BudgetExhausted& e) {
      r.code = exit_undetermined;
      r.lines.push_back(block_keyword(block) + " " + r.name + ": budget exhausted: " + e.what());
      r.data["error"] = e.what();
    }
    run.exit_code = worst(run.exit_code, r.code);
    results.push_back(std::move(r));
  }
  run.blocks_run = results.size();
  run.text = render_text(results);
  if (results.empty()) run.text = "no block applies to '" + command_name(command) + "'\n";
  json j{{"command", command_name(command)}, {"exit_code", run.exit_code}, {"blocks", json::array()}};
  for (const auto& r : results) {
    json entry = r.data;
    entry["name"] = r.name;
    entry["exit_code"] = r.code;
    j["blocks"].push_back(entry);
  }
  run.json = j.dump(2) + "\n";
  return run;
}

RunResult run_file(Command command, const std::filesystem::path& path, const RunOptions& options) {
  Document doc;
  try {
    doc = parse_document(read_file(path));
  } catch (const InputError& e) {
    return error_result(command, path.string() + ":" + e.what());
  }
  return run(command, doc, options);
}

std::vector<RunResult> run_batch(Command command, const std::vector<std::filesystem::path>& paths,
                                 const RunOptions& options) {
  std::vector<std::future<RunResult>> jobs;
  for (const auto& p : paths) {
    jobs.push_back(std::async(std::launch::async, [=] { return run_file(command, p, options); }));
  }
  std::vector<RunResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool FixtureReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const FixtureOutcome& o) { return o.passed(); });
}

std::string FixtureReport::text() const {
  std::ostringstream out;
  for (const auto& o : outcomes) {
    out << (o.passed() ? "ok   " : "FAIL ") << o.path.filename().string() << " " << o.command << ": exit " << o.actual;
    if (o.actual != o.expected) out << " (expected " << o.expected << ")";
    if (!o.round_trip) out << " (print/parse mismatch)";
    if (!o.passed() && !o.message.empty()) out << "\n     " << o.message;
    out << "\n";
  }
  out << outcomes.size() << " run(s), " << std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) {
    return !o.passed();
  }) << " failure(s), " << seconds << " s\n";
  return out.str();
}

std::string FixtureReport::json() const {
  nlohmann::json j{{"passed", passed()}, {"seconds", seconds}, {"runs", nlohmann::json::array()}};
  for (const auto& o : outcomes) {
    j["runs"].push_back({{"file", o.path.filename().string()},
                         {"command", o.command},
                         {"expected", o.expected},
                         {"actual", o.actual},
                         {"round_trip", o.round_trip},
                         {"seconds", o.seconds},
                         {"passed", o.passed()}});
  }
  return j.dump(2) + "\n";
}

FixtureReport run_fixtures(const std::filesystem::path& dir, const RunOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto started = clock::now();
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".dr") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  const std::regex expect_re(R"(^#\s*expect\s+([a-z ]+?)\s*:\s*(\d+)\s*$)");
  auto check_file = [&](const std::filesystem::path& path) {
    std::vector<FixtureOutcome> outcomes;
    FixtureOutcome parse_step{path, "parse", exit_ok, exit_ok, true, 0, ""};
    const auto t0 = clock::now();
    std::string text;
    Document doc;
    try {
      text = read_file(path);
      doc = parse_document(text);
      const std::string printed = print_document(doc);
      parse_step.round_trip = print_document(parse_document(printed)) == printed;
    } catch (const InputError& e) {
      parse_step.actual = exit_input_error;
      parse_step.message = e.what();
    }
    std::map<std::string, int> expected;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
      std::smatch m;
      if (std::regex_match(line, m, expect_re)) expected[m[1]] = std::stoi(m[2]);
    }
    if (expected.count("parse")) parse_step.expected = expected.at("parse");
    parse_step.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    outcomes.push_back(parse_step);
    if (parse_step.actual != exit_ok) return outcomes;

    for (Command c : all_commands()) {
      const auto t1 = clock::now();
      const RunResult r = run(c, doc, options);
      if (r.blocks_run == 0) continue;
      FixtureOutcome o{path, command_name(c), exit_ok, r.exit_code, true, 0, ""};
      if (auto it = expected.find(o.command); it != expected.end()) o.expected = it->second;
      o.seconds = std::chrono::duration<double>(clock::now() - t1).count();
      if (o.expected != o.actual) o.message = r.text;
      outcomes.push_back(std::move(o));
    }
    return outcomes;
  };

  std::vector<std::future<std::vector<FixtureOutcome>>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, check_file, f));
  FixtureReport report;
  for (auto& j : jobs) {
    auto part = j.get();
    report.outcomes.insert(report.outcomes.end(), part.begin(), part.end());
  }
  report.seconds = std::chrono::duration<double>(clock::now() - started).count();
  return report;
}

}  // namespace freeop::cli
