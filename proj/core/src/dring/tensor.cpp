#include "freeop/dring/tensor.hpp"

#include "freeop/errors.hpp"

#include <sstream>

namespace freeop {

TensorElement tensor_zero(const FiniteDimAlgebra& D, const VariableList& vars) {
  return TensorElement(D.dim(), Polynomial(vars));
}

TensorElement tensor_scalar(const FiniteDimAlgebra& D, const Polynomial& c) {
  TensorElement out;
  for (const auto& b : D.unit()) out.push_back(c * b);
  return out;
}

TensorElement tensor_add(const TensorElement& a, const TensorElement& b) {
  TensorElement out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.at(i);
  return out;
}

TensorElement tensor_sub(const TensorElement& a, const TensorElement& b) {
  TensorElement out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.at(i);
  return out;
}

TensorElement tensor_mul(const FiniteDimAlgebra& D, const TensorElement& a, const TensorElement& b,
                         const Reducer& reduce) {
  const std::size_t n = D.dim();
  if (a.size() != n || b.size() != n) throw InputError("tensor element length does not match the algebra");
  TensorElement out(n, Polynomial(union_variables(a.front().variables(), b.front().variables())));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Polynomial prod = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!freeop::is_zero(D.a(i, j, k))) out[k] += prod * D.a(i, j, k);
      }
    }
  }
  return reduce ? tensor_map(out, reduce) : out;
}

TensorElement tensor_map(const TensorElement& a, const Reducer& f) {
  TensorElement out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(f(c));
  return out;
}

TensorElement tensor_evaluate(const FiniteDimAlgebra& D, const Polynomial& f,
                              const std::map<std::string, TensorElement>& images, const VariableList& vars,
                              const Reducer& reduce) {
  const VariableList& fv = f.variables();
  std::vector<const TensorElement*> image_of(fv.size(), nullptr);
  for (const auto& v : f.support()) {
    auto it = images.find(v);
    if (it == images.end()) throw InputError("no image given for variable '" + v + "'");
    image_of[*f.index_of(v)] = &it->second;
  }
  // powers[i][k] = image(var i)^k, filled on demand.
  std::vector<std::vector<TensorElement>> powers(fv.size());
  const TensorElement one = tensor_scalar(D, Polynomial(vars, Rational(1)));
  auto power = [&](std::size_t i, std::uint32_t k) -> const TensorElement& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(one);
    while (cache.size() <= k) cache.push_back(tensor_mul(D, cache.back(), *image_of[i], reduce));
    return cache[k];
  };

  TensorElement out = tensor_zero(D, vars);
  for (const auto& [e, c] : f.terms()) {
    TensorElement term = tensor_scalar(D, Polynomial(vars, c));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term = tensor_mul(D, term, power(i, e[i]), reduce);
    }
    out = tensor_add(out, term);
  }
  for (auto& p : out) p = p.embed(vars);
  return reduce ? tensor_map(out, reduce) : out;
}

std::string to_string(const TensorElement& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ", ";
    os << t[i].to_string();
  }
  os << ")";
  return os.str();
}

}  // namespace freeop
