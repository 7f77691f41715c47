#include "symlen/polynomial.hpp"

#include <numeric>

#include "symlen/errors.hpp"

namespace symlen {

Polynomial::Polynomial(FieldPtr field, std::size_t num_vars) : field_(std::move(field)), num_vars_(num_vars) {}

Polynomial Polynomial::constant(const FieldElement& c, std::size_t num_vars) {
  Polynomial r(c.field(), num_vars);
  r.add_term(Exponents(num_vars, 0), c);
  return r;
}

Polynomial Polynomial::variable(FieldPtr field, std::size_t num_vars, std::size_t index) {
  Polynomial r(field, num_vars);
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  r.add_term(e, FieldElement::one(field));
  return r;
}

void Polynomial::add_term(const Exponents& exponents, const FieldElement& c) {
  if (exponents.size() != num_vars_) throw PreconditionError("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  if (b.num_vars_ != num_vars_) throw PreconditionError("polynomial variable count mismatch");
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  if (b.num_vars_ != num_vars_) throw PreconditionError("polynomial variable count mismatch");
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw PreconditionError("polynomial variable count mismatch");
  Polynomial r(a.field_, a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(a.num_vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const FieldElement& c, const Polynomial& a) {
  Polynomial r(a.field_, a.num_vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, ca] : a.terms_) r.add_term(e, c * ca);
  return r;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != num_vars_) throw PreconditionError("evaluation point has wrong length");
  FieldElement acc = FieldElement::zero(field_);
  for (const auto& [e, c] : terms_) {
    FieldElement term = c;
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] != 0) term *= point[i].pow(e[i]);
    }
    acc += term;
  }
  return acc;
}

int Polynomial::homogeneous_degree() const {
  int deg = -2;
  for (const auto& [e, c] : terms_) {
    const int d = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
    if (deg == -2) {
      deg = d;
    } else if (deg != d) {
      return -1;
    }
  }
  return deg == -2 ? 0 : deg;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending exponent order reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += (c.is_atomic() ? c.to_string() : "(" + c.to_string() + ")") + "*" + mono;
    }
  }
  return out;
}

HomogeneousForm::HomogeneousForm(Polynomial poly, unsigned degree) : poly_(std::move(poly)), degree_(degree) {
  const int d = poly_.homogeneous_degree();
  if (!poly_.is_zero() && d != static_cast<int>(degree_)) {
    throw PreconditionError("polynomial is not homogeneous of degree " + std::to_string(degree_));
  }
}

std::vector<std::vector<std::size_t>> HomogeneousForm::blocks() const {
  const std::size_t n = poly_.num_vars();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [e, c] : poly_.terms()) {
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (first == n) {
        first = i;
      } else {
        const std::size_t a = find(first);
        const std::size_t b = find(i);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (group_of[r] == n) {
      group_of[r] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(i);
  }
  return groups;
}

}  // namespace symlen
