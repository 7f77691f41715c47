#include "symlen/search.hpp"

#include <algorithm>
#include <cmath>

#include "symlen/errors.hpp"

namespace symlen {

namespace {

using poly::Poly;

struct Term {
  Poly coeff;
  std::vector<std::pair<std::size_t, unsigned>> powers;  // (variable, exponent)
};

// The form with denominators cleared, so every coefficient lies in F_q[t].
std::vector<Term> compile(const HomogeneousForm& form) {
  const GaloisField& f = form.field()->base();
  Poly lcm{1};
  for (const auto& [e, c] : form.polynomial().terms()) {
    const Poly d = c.denominator();
    lcm = poly::exact_div(f, poly::mul(f, lcm, d), poly::gcd(f, lcm, d));
  }
  std::vector<Term> terms;
  for (const auto& [e, c] : form.polynomial().terms()) {
    Term t;
    t.coeff = poly::mul(f, c.numerator(), poly::exact_div(f, lcm, c.denominator()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t.powers.emplace_back(i, e[i]);
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

Poly evaluate(const GaloisField& f, const std::vector<Term>& terms, const std::vector<Poly>& point) {
  Poly acc;
  for (const auto& t : terms) {
    Poly v = t.coeff;
    for (const auto& [var, e] : t.powers) {
      const Poly& x = point[var];
      if (x.empty()) {
        v.clear();
        break;
      }
      v = poly::mul(f, v, e == 1 ? x : poly::pow(f, x, e));
    }
    if (!v.empty()) acc = poly::add(f, acc, v);
  }
  return acc;
}

GaloisField::Elem evaluate_finite(const GaloisField& f, const std::vector<Term>& terms,
                                  const std::vector<GaloisField::Elem>& point) {
  GaloisField::Elem acc = 0;
  for (const auto& t : terms) {
    GaloisField::Elem v = t.coeff.empty() ? 0 : t.coeff[0];
    for (const auto& [var, e] : t.powers) {
      if (v == 0) break;
      v = f.mul(v, f.pow(point[var], e));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

std::optional<std::vector<FieldElement>> search_finite(const HomogeneousForm& form) {
  const FieldPtr& field = form.field();
  const GaloisField& f = field->base();
  const auto terms = compile(form);
  const std::size_t n = form.dimension();
  const std::uint32_t q = f.order();
  std::vector<GaloisField::Elem> point(n, 0);
  // Projective points in lexicographic order: the leading 1 moves left.
  for (std::size_t lead = n; lead-- > 0;) {
    std::fill(point.begin(), point.end(), 0);
    point[lead] = 1;
    for (;;) {
      if (evaluate_finite(f, terms, point) == 0) {
        std::vector<FieldElement> out;
        out.reserve(n);
        for (auto c : point) out.push_back(FieldElement::from_base(field, c));
        return out;
      }
      std::size_t i = n;
      while (i-- > lead + 1) {
        if (++point[i] < q) break;
        point[i] = 0;
      }
      if (i == lead) break;
    }
  }
  return std::nullopt;
}

std::size_t poly_hash(const Poly& a) {
  std::size_t h = 1469598103934665603ull;
  for (auto c : a) h = (h ^ c) * 1099511628211ull;
  return h;
}

// Decodes a mixed-radix vector code into polynomial coordinates: each
// coordinate takes `per` base-q digits, least significant coordinate last.
void decode(std::uint64_t code, std::uint32_t q, unsigned per, std::vector<Poly>& coords) {
  for (std::size_t i = coords.size(); i-- > 0;) {
    Poly& c = coords[i];
    c.assign(per, 0);
    for (unsigned d = 0; d < per; ++d) {
      c[d] = static_cast<GaloisField::Elem>(code % q);
      code /= q;
    }
    poly::normalize(c);
  }
}

double pow_count(double base, std::size_t e) { return std::pow(base, static_cast<double>(e)); }

// Splits variables along blocks into two halves of nearly equal size.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_halves(const HomogeneousForm& form) {
  auto blocks = form.blocks();
  std::stable_sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::size_t> left, right;
  for (const auto& b : blocks) {
    auto& dst = left.size() <= right.size() ? left : right;
    dst.insert(dst.end(), b.begin(), b.end());
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  // Tabulate the smaller half.
  if (left.size() > right.size()) std::swap(left, right);
  return {left, right};
}

std::vector<Term> restrict_terms(const std::vector<Term>& terms, const std::vector<std::size_t>& vars) {
  std::vector<std::size_t> local(vars.empty() ? 0 : *std::max_element(vars.begin(), vars.end()) + 1, SIZE_MAX);
  for (std::size_t i = 0; i < vars.size(); ++i) local[vars[i]] = i;
  std::vector<Term> out;
  for (const auto& t : terms) {
    const std::size_t v0 = t.powers.front().first;
    if (v0 >= local.size() || local[v0] == SIZE_MAX) continue;
    Term r;
    r.coeff = t.coeff;
    for (const auto& [v, e] : t.powers) r.powers.emplace_back(local[v], e);
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::vector<FieldElement>> search_meet_in_middle(const HomogeneousForm& form, const SearchBudget& budget) {
  const FieldPtr& field = form.field();
  const GaloisField& f = field->base();
  const std::uint32_t q = f.order();
  const auto terms = compile(form);
  const auto [table_vars, scan_vars] = split_halves(form);
  const auto table_terms = restrict_terms(terms, table_vars);
  const auto scan_terms = restrict_terms(terms, scan_vars);
  const std::size_t n = form.dimension();

  auto assemble = [&](const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<FieldElement> out(n, FieldElement::zero(field));
    for (std::size_t i = 0; i < table_vars.size(); ++i) out[table_vars[i]] = FieldElement::from_poly(field, a[i]);
    for (std::size_t i = 0; i < scan_vars.size(); ++i) out[scan_vars[i]] = FieldElement::from_poly(field, b[i]);
    return out;
  };

  const double scan_cap = static_cast<double>(budget.max_table) * 16.0;
  for (unsigned degree = 0; degree <= budget.max_degree; ++degree) {
    const unsigned per = degree + 1;
    const double table_count = pow_count(q, per * table_vars.size());
    const double scan_count = pow_count(q, per * scan_vars.size());
    if (table_count > static_cast<double>(budget.max_table) || scan_count > scan_cap) {
      throw BudgetExhausted("no isotropic vector with coordinates of degree < " + std::to_string(degree) +
                            " (search table limit " + std::to_string(budget.max_table) + ")");
    }
    std::vector<Poly> a(table_vars.size());
    std::vector<Poly> b(scan_vars.size());
    // Values of the tabulated half, skipping the zero vector.
    std::vector<std::pair<std::size_t, std::uint64_t>> table;
    const auto table_size = static_cast<std::uint64_t>(table_count);
    table.reserve(table_size);
    for (std::uint64_t code = 1; code < table_size; ++code) {
      decode(code, q, per, a);
      table.emplace_back(poly_hash(evaluate(f, table_terms, a)), code);
    }
    std::sort(table.begin(), table.end());
    const auto scan_size = static_cast<std::uint64_t>(scan_count);
    for (std::uint64_t code = 0; code < scan_size; ++code) {
      decode(code, q, per, b);
      const Poly value = evaluate(f, scan_terms, b);
      if (value.empty() && code != 0) {
        for (auto& c : a) c.clear();
        return assemble(a, b);
      }
      const Poly target = poly::neg(f, value);
      const std::size_t h = poly_hash(target);
      for (auto it = std::lower_bound(table.begin(), table.end(), std::make_pair(h, std::uint64_t{0}));
           it != table.end() && it->first == h; ++it) {
        decode(it->second, q, per, a);
        if (evaluate(f, table_terms, a) == target) return assemble(a, b);
      }
    }
  }
  throw BudgetExhausted("no isotropic vector with coordinates of degree <= " + std::to_string(budget.max_degree));
}

}  // namespace

std::optional<std::vector<FieldElement>> find_isotropic(const HomogeneousForm& form, const SearchBudget& budget) {
  if (form.dimension() == 0) return std::nullopt;
  if (form.field()->is_finite()) return search_finite(form);
  return search_meet_in_middle(form, budget);
}

double search_space_size(const HomogeneousForm& form, unsigned degree) {
  const double q = form.field()->base().order();
  if (form.field()->is_finite()) return pow_count(q, form.dimension());
  const auto [left, right] = split_halves(form);
  return pow_count(q, (degree + 1) * left.size()) + pow_count(q, (degree + 1) * right.size());
}

}  // namespace symlen
