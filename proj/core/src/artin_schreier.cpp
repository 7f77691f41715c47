#include "symlen/artin_schreier.hpp"

#include <algorithm>

#include "symlen/errors.hpp"

namespace symlen {

namespace {

using poly::Poly;

// Binomial coefficients mod p for 0 <= m <= j < p.
std::vector<std::vector<unsigned>> pascal(unsigned p) {
  std::vector<std::vector<unsigned>> c(p, std::vector<unsigned>(p, 0));
  for (unsigned j = 0; j < p; ++j) {
    c[j][0] = 1;
    for (unsigned m = 1; m <= j; ++m) c[j][m] = (c[j - 1][m - 1] + (m < j ? c[j - 1][m] : 0)) % p;
  }
  return c;
}

// Solves M c = rhs over F_p (M given column-wise). Returns one solution with
// free variables zero, or nullopt.
std::optional<std::vector<unsigned>> solve_mod_p(std::vector<std::vector<unsigned>> columns,
                                                 std::vector<unsigned> rhs, unsigned p) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = columns.size();
  // Row-major augmented matrix.
  std::vector<std::vector<unsigned>> a(rows, std::vector<unsigned>(cols + 1, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows && i < columns[j].size(); ++i) a[i][j] = columns[j][i] % p;
  }
  for (std::size_t i = 0; i < rows; ++i) a[i][cols] = rhs[i] % p;
  auto inv = [p](unsigned x) {
    unsigned r = 1;
    for (unsigned e = p - 2, b = x; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1u) r = r * b % p;
    }
    return r;
  };
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const unsigned s = inv(a[r][c]);
    for (auto& x : a[r]) x = x * s % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const unsigned f = a[i][c];
      for (std::size_t k = 0; k <= cols; ++k) a[i][k] = (a[i][k] + p * p - f * a[r][k] % p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][cols] != 0) return std::nullopt;
  }
  std::vector<unsigned> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols];
  return x;
}

// Canonical representative of c + wp(F_q) for c in F_q.
GaloisField::Elem finite_wp_canonical(const GaloisField& f, GaloisField::Elem c) {
  GaloisField::Elem best = c;
  for (GaloisField::Elem v = 0; v < f.order(); ++v) {
    const GaloisField::Elem cand = f.sub(c, f.sub(f.frobenius(v), v));
    best = std::min(best, cand);
  }
  return best;
}

// Exact rational preimage under wp over F_q(t).
std::optional<FieldElement> rational_wp_preimage(const FieldElement& c) {
  const FieldPtr& field = c.field();
  const GaloisField& f = field->base();
  const unsigned p = f.characteristic();
  const unsigned n = f.degree();
  if (c.is_zero()) return FieldElement::zero(field);
  // If v = A/B in lowest terms then wp(v) = (A^p - A B^(p-1)) / B^p, also in lowest terms.
  const auto b_opt = poly::pth_root(f, c.denominator());
  if (!b_opt) return std::nullopt;
  const Poly& b = *b_opt;
  const Poly& num = c.numerator();
  const std::size_t bound = std::max<std::size_t>(static_cast<std::size_t>(poly::degree(num)) / p,
                                                  static_cast<std::size_t>(poly::degree(b)));
  const Poly b_pow = poly::pow(f, b, p - 1);
  const std::size_t out_len = std::max(num.size(), std::max((bound + 1) * p, bound + 1 + b_pow.size())) + 1;
  auto flatten = [&](const Poly& q) {
    std::vector<unsigned> out(out_len * n, 0);
    for (std::size_t i = 0; i < q.size() && i < out_len; ++i) {
      const auto d = f.digits(q[i]);
      for (unsigned r = 0; r < n; ++r) out[i * n + r] = d[r];
    }
    return out;
  };
  std::vector<std::vector<unsigned>> columns;
  for (std::size_t j = 0; j <= bound; ++j) {
    for (unsigned r = 0; r < n; ++r) {
      std::vector<unsigned> digit(n, 0);
      digit[r] = 1;
      const Poly e = poly::shift(Poly{f.from_digits(digit)}, j);
      columns.push_back(flatten(poly::sub(f, poly::pow(f, e, p), poly::mul(f, e, b_pow))));
    }
  }
  const auto sol = solve_mod_p(std::move(columns), flatten(num), p);
  if (!sol) return std::nullopt;
  Poly a(bound + 1, 0);
  for (std::size_t j = 0; j <= bound; ++j) {
    std::vector<unsigned> digit(n, 0);
    for (unsigned r = 0; r < n; ++r) digit[r] = (*sol)[j * n + r];
    a[j] = f.from_digits(digit);
  }
  poly::normalize(a);
  FieldElement v = FieldElement::from_fraction(field, a, b);
  if (!(wp(v) == c)) return std::nullopt;
  return v;
}

// The reduced class of c in F_q((t)) / wp(F_q((t))).
FieldElement local_wp_canonical(const FieldElement& c) {
  const FieldPtr& field = c.field();
  const GaloisField& f = field->base();
  const unsigned p = f.characteristic();
  if (c.is_zero()) return c;
  const LaurentExpansion ex = laurent_expand(c, 0);
  if (ex.coeffs.empty()) return FieldElement::zero(field);
  // principal[k] = coefficient of t^(-k), k >= 0.
  const int top = std::max(0, -ex.valuation);
  std::vector<GaloisField::Elem> principal(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) principal[static_cast<std::size_t>(k)] = ex.coefficient(-k);
  // c t^(-pk) == c^(1/p) t^(-k) modulo wp(F): fold from the deepest pole up.
  for (int k = top; k >= 1; --k) {
    auto& ck = principal[static_cast<std::size_t>(k)];
    if (ck == 0 || k % static_cast<int>(p) != 0) continue;
    const auto target = static_cast<std::size_t>(k / static_cast<int>(p));
    principal[target] = f.add(principal[target], f.pth_root(ck));
    ck = 0;
  }
  principal[0] = finite_wp_canonical(f, principal[0]);
  // Assemble sum_k principal[k] t^(-k) = (sum_k principal[k] t^(top-k)) / t^top.
  Poly num(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) num[static_cast<std::size_t>(top - k)] = principal[static_cast<std::size_t>(k)];
  return FieldElement::from_fraction(field, num, poly::shift(Poly{1}, static_cast<std::size_t>(top)));
}

}  // namespace

FieldElement wp(const FieldElement& v) { return v.wp(); }

std::vector<FieldElement> wp_solve(const FieldElement& c) {
  const FieldPtr& field = c.field();
  if (!field->is_finite()) {
    throw UnsupportedFieldError("wp_solve is only available over finite fields, not " + field->descriptor());
  }
  const GaloisField& f = field->base();
  const GaloisField::Elem target = *c.as_constant();
  std::vector<FieldElement> out;
  for (GaloisField::Elem v = 0; v < f.order(); ++v) {
    if (f.sub(f.frobenius(v), v) == target) out.push_back(FieldElement::from_base(field, v));
  }
  return out;
}

std::optional<FieldElement> wp_preimage(const FieldElement& c) {
  if (c.field()->is_finite()) {
    auto sols = wp_solve(c);
    if (sols.empty()) return std::nullopt;
    return sols.front();
  }
  return rational_wp_preimage(c);
}

bool in_wp_image(const FieldElement& c) {
  switch (c.field()->kind()) {
    case FieldKind::kFinite:
      return !wp_solve(c).empty();
    case FieldKind::kLaurentLocal:
      return local_wp_canonical(c).is_zero();
    case FieldKind::kRationalFunctions:
      return rational_wp_preimage(c).has_value();
  }
  return false;
}

FieldElement wp_canonical(const FieldElement& c) {
  switch (c.field()->kind()) {
    case FieldKind::kFinite:
      return FieldElement::from_base(c.field(), finite_wp_canonical(c.field()->base(), *c.as_constant()));
    case FieldKind::kLaurentLocal:
      return local_wp_canonical(c);
    case FieldKind::kRationalFunctions:
      break;
  }
  throw UnsupportedFieldError("no canonical wp-coset representative over " + c.field()->descriptor());
}

bool wp_equivalent(const FieldElement& a, const FieldElement& b) { return in_wp_image(a - b); }

// ---------------------------------------------------------------------------

ArtinSchreierExtension::ArtinSchreierExtension(FieldElement alpha) : alpha_(std::move(alpha)) {
  if (!alpha_.valid()) throw PreconditionError("Artin-Schreier extension needs a field element");
}

bool ArtinSchreierExtension::is_field() const { return !in_wp_image(alpha_); }

ExtElement ArtinSchreierExtension::element(std::vector<FieldElement> coeffs) const {
  return ExtElement(*this, std::move(coeffs));
}

ExtElement ArtinSchreierExtension::scalar(const FieldElement& c) const { return ExtElement(*this, {c}); }

ExtElement ArtinSchreierExtension::x() const {
  return ExtElement(*this, {FieldElement::zero(field()), FieldElement::one(field())});
}

ExtElement::ExtElement(ArtinSchreierExtension ext, std::vector<FieldElement> coeffs)
    : ext_(std::move(ext)), coeffs_(std::move(coeffs)) {
  const unsigned p = ext_.degree();
  if (coeffs_.size() > p) throw PreconditionError("extension element has degree >= p");
  coeffs_.resize(p, FieldElement::zero(ext_.field()));
  for (auto& c : coeffs_) {
    if (!c.valid()) c = FieldElement::zero(ext_.field());
  }
}

bool ExtElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

std::optional<FieldElement> ExtElement::as_scalar() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return std::nullopt;
  }
  return coeffs_[0];
}

ExtElement& ExtElement::operator+=(const ExtElement& b) {
  if (!(ext_ == b.ext_)) throw PreconditionError("extension mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& b) {
  if (!(ext_ == b.ext_)) throw PreconditionError("extension mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  if (!(a.ext_ == b.ext_)) throw PreconditionError("extension mismatch");
  const unsigned p = a.ext_.degree();
  const FieldPtr& field = a.ext_.field();
  std::vector<FieldElement> prod(2 * p - 1, FieldElement::zero(field));
  for (unsigned i = 0; i < p; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j < p; ++j) {
      if (!b.coeffs_[j].is_zero()) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  // x^(p+r) = x^(r+1) + alpha x^r.
  for (unsigned m = 2 * p - 2; m >= p; --m) {
    if (prod[m].is_zero()) continue;
    const unsigned r = m - p;
    prod[r + 1] += prod[m];
    prod[r] += a.ext_.alpha() * prod[m];
    prod[m] = FieldElement::zero(field);
  }
  prod.resize(p);
  return ExtElement(a.ext_, std::move(prod));
}

ExtElement operator*(const FieldElement& c, const ExtElement& a) {
  ExtElement r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

ExtElement ExtElement::conjugate(unsigned i) const {
  const unsigned p = ext_.degree();
  const FieldPtr& field = ext_.field();
  static thread_local unsigned cached_p = 0;
  static thread_local std::vector<std::vector<unsigned>> binom;
  if (cached_p != p) {
    binom = pascal(p);
    cached_p = p;
  }
  std::vector<FieldElement> out(p, FieldElement::zero(field));
  const FieldElement shift = FieldElement::from_int(field, i);
  for (unsigned j = 0; j < p; ++j) {
    if (coeffs_[j].is_zero()) continue;
    // (x+i)^j = sum_m C(j,m) i^(j-m) x^m
    for (unsigned m = 0; m <= j; ++m) {
      const FieldElement c = FieldElement::from_int(field, binom[j][m]) * shift.pow(j - m);
      if (!c.is_zero()) out[m] += c * coeffs_[j];
    }
  }
  return ExtElement(ext_, std::move(out));
}

std::string ExtElement::to_string() const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElement& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += c.is_atomic() ? c.to_string() : "(" + c.to_string() + ")";
      continue;
    }
    if (!c.is_one()) out += (c.is_atomic() ? c.to_string() : "(" + c.to_string() + ")") + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FieldElement as_norm(const ExtElement& f) {
  const unsigned p = f.extension().degree();
  ExtElement prod = f;
  for (unsigned i = 1; i < p; ++i) prod = prod * f.conjugate(i);
  auto s = prod.as_scalar();
  if (!s) throw Error("conjugate product left the base field");  // unreachable for a Galois product
  return *s;
}

HomogeneousForm norm_form(const ArtinSchreierExtension& ext) {
  const unsigned p = ext.degree();
  const FieldPtr& field = ext.field();
  const auto binom = pascal(p);
  using Coeffs = std::vector<Polynomial>;
  // Symbolic f(x + i) with coefficient of x^j equal to variable (p-1-j).
  auto conj = [&](unsigned i) {
    Coeffs out(p, Polynomial(field, p));
    const FieldElement shift = FieldElement::from_int(field, i);
    for (unsigned j = 0; j < p; ++j) {
      const Polynomial var = Polynomial::variable(field, p, p - 1 - j);
      for (unsigned m = 0; m <= j; ++m) {
        const FieldElement c = FieldElement::from_int(field, binom[j][m]) * shift.pow(j - m);
        if (!c.is_zero()) out[m] += c * var;
      }
    }
    return out;
  };
  auto multiply = [&](const Coeffs& a, const Coeffs& b) {
    Coeffs prod(2 * p - 1, Polynomial(field, p));
    for (unsigned i = 0; i < p; ++i) {
      for (unsigned j = 0; j < p; ++j) prod[i + j] += a[i] * b[j];
    }
    for (unsigned m = 2 * p - 2; m >= p; --m) {
      if (prod[m].is_zero()) continue;
      const unsigned r = m - p;
      prod[r + 1] += prod[m];
      prod[r] += ext.alpha() * prod[m];
      prod[m] = Polynomial(field, p);
    }
    prod.resize(p, Polynomial(field, p));
    return prod;
  };
  Coeffs acc = conj(0);
  for (unsigned i = 1; i < p; ++i) acc = multiply(acc, conj(i));
  for (unsigned j = 1; j < p; ++j) {
    if (!acc[j].is_zero()) throw Error("symbolic norm has a non-scalar part");  // unreachable
  }
  return HomogeneousForm(acc[0], p);
}

std::vector<FieldElement> norm_coordinates(const ExtElement& f) {
  const auto& c = f.coeffs();
  return std::vector<FieldElement>(c.rbegin(), c.rend());
}

ExtElement from_norm_coordinates(const ArtinSchreierExtension& ext, std::span<const FieldElement> coords) {
  if (coords.size() != ext.degree()) throw PreconditionError("wrong number of norm-form coordinates");
  return ext.element(std::vector<FieldElement>(coords.rbegin(), coords.rend()));
}

}  // namespace symlen
