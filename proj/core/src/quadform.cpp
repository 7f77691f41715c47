#include "symlen/quadform.hpp"

#include <algorithm>

#include "symlen/artin_schreier.hpp"
#include "symlen/errors.hpp"
#include "symlen/linalg.hpp"

namespace symlen {

namespace {

Vector unit(const FieldPtr& f, std::size_t n, std::size_t i) {
  Vector e(n, FieldElement::zero(f));
  e[i] = FieldElement::one(f);
  return e;
}

bool is_zero_vector(const Vector& x) {
  return std::all_of(x.begin(), x.end(), [](const FieldElement& c) { return c.is_zero(); });
}

// x + c y
Vector axpy(Vector x, const FieldElement& c, const Vector& y) {
  if (c.is_zero()) return x;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * y[i];
  return x;
}

Vector scaled_vector(Vector x, const FieldElement& c) {
  for (auto& e : x) e *= c;
  return x;
}

void require_nonsingular(const QuadraticForm& q, const char* what) {
  if (!q.nonsingular()) throw PreconditionError(std::string(what) + " needs a nonsingular form, got " + q.to_string());
}

bool block_isotropic(const QuadraticForm::Pair& ab) {
  return ab.first.is_zero() || ab.second.is_zero() || in_wp_image(ab.first * ab.second);
}

// Zeros readable off a single block.
std::optional<Vector> block_witness(const QuadraticForm& q) {
  const FieldPtr& f = q.field();
  const std::size_t n = q.dimension();
  for (std::size_t i = 0; i < q.pairs().size(); ++i) {
    const auto& [a, b] = q.pairs()[i];
    if (a.is_zero()) return unit(f, n, 2 * i);
    if (b.is_zero()) return unit(f, n, 2 * i + 1);
    if (const auto lambda = wp_preimage(a * b)) {
      Vector x(n, FieldElement::zero(f));
      x[2 * i] = b;
      x[2 * i + 1] = *lambda;
      return x;
    }
  }
  for (std::size_t j = 0; j < q.diagonal().size(); ++j) {
    if (q.diagonal()[j].is_zero()) return unit(f, n, 2 * q.pairs().size() + j);
  }
  return std::nullopt;
}

}  // namespace

QuadraticForm::QuadraticForm(FieldPtr field, std::vector<Pair> pairs, std::vector<FieldElement> diagonal)
    : field_(std::move(field)), pairs_(std::move(pairs)), diagonal_(std::move(diagonal)) {
  if (field_->characteristic() != 2) {
    throw UnsupportedFieldError("quadratic forms need characteristic 2, got " + field_->descriptor());
  }
}

QuadraticForm QuadraticForm::hyperbolic(FieldPtr field) {
  const FieldPtr f = field;
  return QuadraticForm(std::move(field), {{FieldElement::zero(f), FieldElement::one(f)}});
}

FieldElement QuadraticForm::evaluate(std::span<const FieldElement> x) const {
  if (x.size() != dimension()) {
    throw PreconditionError("vector of length " + std::to_string(x.size()) + " for a form of dimension " +
                            std::to_string(dimension()));
  }
  FieldElement out = FieldElement::zero(field_);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& u = x[2 * i];
    const auto& v = x[2 * i + 1];
    out += pairs_[i].first * u * u + u * v + pairs_[i].second * v * v;
  }
  const std::size_t off = 2 * pairs_.size();
  for (std::size_t j = 0; j < diagonal_.size(); ++j) out += diagonal_[j] * x[off + j] * x[off + j];
  return out;
}

FieldElement QuadraticForm::polar(std::span<const FieldElement> x, std::span<const FieldElement> y) const {
  if (x.size() != dimension() || y.size() != dimension()) throw PreconditionError("polar form: length mismatch");
  // Only the cross terms u_i v_i contribute.
  FieldElement out = FieldElement::zero(field_);
  for (std::size_t i = 0; i < pairs_.size(); ++i) out += x[2 * i] * y[2 * i + 1] + x[2 * i + 1] * y[2 * i];
  return out;
}

HomogeneousForm QuadraticForm::as_homogeneous() const {
  const std::size_t n = dimension();
  Polynomial p(field_, n);
  auto term = [&](std::size_t i, std::size_t j, const FieldElement& c) {
    Polynomial::Exponents e(n, 0);
    ++e[i];
    ++e[j];
    p.add_term(e, c);
  };
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    term(2 * i, 2 * i, pairs_[i].first);
    term(2 * i, 2 * i + 1, FieldElement::one(field_));
    term(2 * i + 1, 2 * i + 1, pairs_[i].second);
  }
  for (std::size_t j = 0; j < diagonal_.size(); ++j) {
    term(2 * pairs_.size() + j, 2 * pairs_.size() + j, diagonal_[j]);
  }
  return HomogeneousForm(std::move(p), 2);
}

QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
  if (!(*a.field() == *b.field())) throw PreconditionError("orthogonal sum over different fields");
  auto pairs = a.pairs();
  pairs.insert(pairs.end(), b.pairs().begin(), b.pairs().end());
  auto diagonal = a.diagonal();
  diagonal.insert(diagonal.end(), b.diagonal().begin(), b.diagonal().end());
  return QuadraticForm(a.field(), std::move(pairs), std::move(diagonal));
}

QuadraticForm QuadraticForm::scaled(const FieldElement& c) const {
  std::vector<Pair> pairs;
  for (const auto& ab : pairs_) pairs.push_back(scale_pair(c, ab));
  std::vector<FieldElement> diagonal;
  for (const auto& d : diagonal_) diagonal.push_back(c * d);
  return QuadraticForm(field_, std::move(pairs), std::move(diagonal));
}

std::string QuadraticForm::to_string() const {
  std::string out;
  for (const auto& [a, b] : pairs_) {
    if (!out.empty()) out += "+";
    out += "[" + a.to_string() + "," + b.to_string() + "]";
  }
  if (!diagonal_.empty()) {
    if (!out.empty()) out += "+";
    out += "<";
    for (std::size_t j = 0; j < diagonal_.size(); ++j) out += (j ? "," : "") + diagonal_[j].to_string();
    out += ">";
  }
  return out.empty() ? "0" : out;
}

QuadraticForm::Pair scale_pair(const FieldElement& c, const QuadraticForm::Pair& ab) {
  if (c.is_zero()) throw PreconditionError("scale_pair needs a nonzero scalar");
  return {ab.first / c, ab.second * c};
}

QuadraticForm restrict_to_span(const QuadraticForm& q, std::vector<Vector> work, std::vector<Vector>* basis) {
  std::vector<QuadraticForm::Pair> pairs;
  std::vector<Vector> rows;
  std::erase_if(work, is_zero_vector);
  while (!work.empty()) {
    Vector e = std::move(work.front());
    work.erase(work.begin());
    std::size_t j = 0;
    FieldElement b = FieldElement::zero(q.field());
    for (; j < work.size(); ++j) {
      b = q.polar(e, work[j]);
      if (!b.is_zero()) break;
    }
    if (j == work.size()) throw PreconditionError("the span is singular for the polar form");
    Vector f = scaled_vector(std::move(work[j]), b.inverse());
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
    for (auto& r : work) {
      const FieldElement rf = q.polar(r, f);
      const FieldElement re = q.polar(r, e);
      r = axpy(axpy(std::move(r), -rf, e), -re, f);
    }
    std::erase_if(work, is_zero_vector);
    pairs.emplace_back(q.evaluate(e), q.evaluate(f));
    rows.push_back(std::move(e));
    rows.push_back(std::move(f));
  }
  if (basis) *basis = std::move(rows);
  return QuadraticForm(q.field(), std::move(pairs));
}

std::optional<bool> decide_isotropy(const QuadraticForm& q) {
  if (!q.field()->is_local() || !q.nonsingular()) return std::nullopt;
  const std::size_t n = q.dimension();
  if (n == 0) return false;
  if (const auto u = q.field()->u_invariant(); u && n > *u) return true;
  for (const auto& ab : q.pairs()) {
    if (block_isotropic(ab)) return true;
  }
  if (n == 2) return false;
  if (n != 4) return std::nullopt;
  // b_1[a_1,1] + b_2[a_2,1] with both a_i outside wp(F). Distinct quadratic
  // extensions have distinct norm groups, whose product is all of F^x.
  const auto& [a1, b1] = q.pairs()[0];
  const auto& [a2, b2] = q.pairs()[1];
  const FieldElement alpha1 = a1 * b1;
  if (!in_wp_image(alpha1 + a2 * b2)) return true;
  // Equal extensions: q is b_1 times the norm form of [alpha_1, b_1 b_2).
  return invariant(SymbolAlgebra(alpha1, b1 * b2)).is_zero();
}

std::optional<Vector> is_isotropic(const QuadraticForm& q, const SearchBudget& budget) {
  if (q.dimension() == 0) return std::nullopt;
  const auto form = q.as_homogeneous();
  if (q.field()->is_finite()) return find_isotropic(form, budget);
  if (auto w = block_witness(q)) return w;
  const auto verdict = decide_isotropy(q);
  if (verdict && !*verdict) return std::nullopt;
  auto w = find_isotropic(form, budget);
  if (!w) throw BudgetExhausted("no isotropic vector found for " + q.to_string());
  return w;
}

WittDecomposition witt_decompose(const QuadraticForm& q, const SearchBudget& budget) {
  require_nonsingular(q, "witt_decompose");
  const FieldPtr& field = q.field();
  const std::size_t n = q.dimension();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit(field, n, i));
  QuadraticForm cur = q;
  std::vector<Vector> hyperbolic;
  bool complete = true;
  while (cur.dimension() > 0) {
    std::optional<Vector> z;
    try {
      z = is_isotropic(cur, budget);
    } catch (const BudgetExhausted&) {
      complete = false;
      break;
    }
    if (!z) break;
    Vector x(n, FieldElement::zero(field));
    for (std::size_t i = 0; i < z->size(); ++i) x = axpy(std::move(x), (*z)[i], basis[i]);
    Vector y;
    for (const auto& r : basis) {
      const FieldElement b = q.polar(x, r);
      if (!b.is_zero()) {
        y = scaled_vector(r, b.inverse());
        break;
      }
    }
    if (y.empty()) throw Error("internal: isotropic vector in the radical of a nonsingular form");
    y = axpy(std::move(y), -q.evaluate(y), x);
    std::vector<Vector> complement;
    for (const auto& r : basis) complement.push_back(axpy(axpy(r, -q.polar(r, y), x), -q.polar(r, x), y));
    hyperbolic.push_back(std::move(x));
    hyperbolic.push_back(std::move(y));
    cur = restrict_to_span(q, std::move(complement), &basis);
  }
  WittDecomposition out{cur, hyperbolic.size() / 2, std::move(basis), complete};
  out.change_of_basis.insert(out.change_of_basis.end(), hyperbolic.begin(), hyperbolic.end());
  return out;
}

bool verify_witt(const QuadraticForm& q, const WittDecomposition& w) {
  const std::size_t n = q.dimension();
  if (w.change_of_basis.size() != n || w.kernel.dimension() + 2 * w.witt_index != n) return false;
  EchelonSpace span;
  for (const auto& row : w.change_of_basis) {
    SparseVector s;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_zero()) s.emplace(static_cast<std::uint32_t>(i), row[i]);
    }
    if (!span.insert(std::move(s))) return false;
  }
  const FieldElement zero = FieldElement::zero(q.field());
  auto target = w.kernel;
  for (std::size_t i = 0; i < w.witt_index; ++i) target = target + QuadraticForm(q.field(), {{zero, zero}});
  const auto& rows = w.change_of_basis;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ab = target.pairs()[i / 2];
    if (!(q.evaluate(rows[i]) == (i % 2 == 0 ? ab.first : ab.second))) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool partner = i % 2 == 0 && j == i + 1;
      if (!(q.polar(rows[i], rows[j]) == (partner ? FieldElement::one(q.field()) : zero))) {
        return false;
      }
    }
  }
  return true;
}

ArfClass::ArfClass(FieldElement representative) : rep_(std::move(representative)) {
  if (!rep_.field()->has_variable() || rep_.field()->is_local()) rep_ = wp_canonical(rep_);
}

bool ArfClass::is_trivial() const { return in_wp_image(rep_); }

ArfClass operator+(const ArfClass& a, const ArfClass& b) { return ArfClass(a.rep_ + b.rep_); }

bool operator==(const ArfClass& a, const ArfClass& b) { return wp_equivalent(a.rep_, b.rep_); }

ArfClass arf(const QuadraticForm& q) {
  require_nonsingular(q, "arf");
  FieldElement sum = FieldElement::zero(q.field());
  for (const auto& [a, b] : q.pairs()) sum += a * b;
  return ArfClass(sum);
}

QuadraticForm normalize_blocks(const QuadraticForm& q) {
  std::vector<QuadraticForm::Pair> pairs;
  for (const auto& [a, b] : q.pairs()) {
    if (!b.is_zero()) {
      pairs.emplace_back(a, b);
    } else if (!a.is_zero()) {
      pairs.emplace_back(b, a);
    } else {
      pairs.emplace_back(a, FieldElement::one(q.field()));
    }
  }
  return QuadraticForm(q.field(), std::move(pairs), q.diagonal());
}

TensorProduct clifford(const QuadraticForm& q) {
  require_nonsingular(q, "clifford");
  if (q.dimension() < 4) throw PreconditionError("clifford needs dimension at least 4");
  if (!arf(q).is_trivial()) throw PreconditionError("clifford needs a trivial Arf invariant, got " + arf(q).to_string());
  const auto n = normalize_blocks(q);
  const auto& pairs = n.pairs();
  const FieldElement& br = pairs.back().second;
  std::vector<SymbolAlgebra> factors;
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    factors.emplace_back(pairs[i].first * pairs[i].second, br * pairs[i].second);
  }
  return TensorProduct(q.field(), std::move(factors));
}

QuadraticForm trivialize_arf(const QuadraticForm& q, const SearchBudget& budget) {
  const Field& f = *q.field();
  const auto u = f.u_invariant();
  if (!u || *u < 4 || !f.declares_iq3_zero()) {
    throw HypothesisError("trivialize_arf needs declared u >= 4 and I_q^3 = 0; " + f.descriptor() + " declares " +
                          (u ? "u = " + std::to_string(*u) : std::string("no u")));
  }
  require_nonsingular(q, "trivialize_arf");
  if (q.dimension() != *u) {
    throw PreconditionError("trivialize_arf needs dimension u = " + std::to_string(*u) + ", got " +
                            std::to_string(q.dimension()));
  }
  if (is_isotropic(q, budget)) throw PreconditionError("trivialize_arf needs an anisotropic form");
  const ArfClass delta = arf(q);
  if (delta.is_trivial()) return q;
  const FieldElement one = FieldElement::one(q.field());
  const auto psi = q + QuadraticForm(q.field(), {{delta.representative(), one}});
  const auto w = witt_decompose(psi, budget);
  if (!w.complete) throw BudgetExhausted("Witt decomposition of " + psi.to_string() + " ran out of budget");
  if (w.witt_index != 1) {
    throw HypothesisError("q + [delta,1] has Witt index " + std::to_string(w.witt_index) +
                          ", contradicting the declared u and I_q^3 = 0");
  }
  return w.kernel;
}

QuadraticForm char2_linkage_form(const TensorProduct& a, const TensorProduct& b) {
  if (a.p() != 2 || b.p() != 2) throw PreconditionError("char2_linkage_form needs quaternion algebras");
  const FieldPtr& f = a.field();
  const FieldElement one = FieldElement::one(f);
  FieldElement sum = FieldElement::zero(f);
  for (const auto& x : a.factors()) sum += x.alpha();
  for (const auto& x : b.factors()) sum += x.alpha();
  std::vector<QuadraticForm::Pair> pairs{{sum, one}};
  for (const auto* t : {&a, &b}) {
    for (const auto& x : t->factors()) pairs.push_back(scale_pair(x.beta(), {x.alpha(), one}));
  }
  return QuadraticForm(f, std::move(pairs));
}

CommonSlot char2_common_slot(const TensorProduct& a, const TensorProduct& b, const SearchBudget& budget) {
  if (auto shortcut = common_slot_shortcut(a, b)) return std::move(*shortcut);
  const auto q = char2_linkage_form(a, b);
  auto z = is_isotropic(q, budget);
  if (!z) throw HypothesisError("the linkage form " + q.to_string() + " is anisotropic");
  // Block i of the scaled form reads (b u, v) where difference_form reads (u, v).
  std::size_t block = 1;
  for (const auto* t : {&a, &b}) {
    for (const auto& x : t->factors()) {
      (*z)[2 * block] /= x.beta();
      ++block;
    }
  }
  return common_slot_at(a, b, *z);
}

SharpnessWitness sharpness_witness(const FieldPtr& field, unsigned n, const SearchBudget& budget) {
  if (n < 2) throw PreconditionError("sharpness_witness needs n >= 2");
  if (!field->declares_iq3_zero() || !field->u_invariant()) {
    throw HypothesisError(field->descriptor() + " does not declare u and I_q^3 = 0");
  }
  if (*field->u_invariant() != 2 * n || !field->is_local()) {
    throw UnsupportedFieldError("no anisotropic form of dimension " + std::to_string(2 * n) + " over " +
                                field->descriptor() + " (declared u = " + std::to_string(*field->u_invariant()) + ")");
  }
  // [c,1] + s[c,1] for the first constant c and slot s that are anisotropic.
  const FieldElement one = FieldElement::one(field);
  const FieldElement t = FieldElement::variable(field);
  std::optional<QuadraticForm> base;
  for (GaloisField::Elem code = 1; code < field->base().order() && !base; ++code) {
    const FieldElement c = FieldElement::from_base(field, code);
    for (const FieldElement& s : {t, t + one}) {
      QuadraticForm candidate(field, {{c, one}, scale_pair(s, {c, one})});
      if (decide_isotropy(candidate) == false) {
        base = std::move(candidate);
        break;
      }
    }
  }
  if (!base) throw BudgetExhausted("no anisotropic form of dimension 4 among the candidates");
  QuadraticForm phi = trivialize_arf(*base, budget);
  TensorProduct e = clifford(phi);
  const LocalInvariant inv = total_invariant(e);
  if (inv.is_zero()) throw Error("internal: E of an anisotropic trivial-Arf form is split");
  return {std::move(phi), std::move(e), inv};
}

FormCensus exhaustive_u_invariants(const FieldPtr& field, unsigned max_dim) {
  if (!field->is_finite()) throw UnsupportedFieldError("exhaustive census needs a finite field");
  const std::uint32_t q = field->base().order();
  FormCensus out;
  for (unsigned n = 1; n <= max_dim; ++n) {
    for (unsigned r = 0; 2 * r <= n; ++r) {
      const unsigned t = n - 2 * r;
      std::vector<std::uint32_t> digits(n, 0);
      for (;;) {
        std::vector<QuadraticForm::Pair> pairs;
        for (unsigned i = 0; i < r; ++i) {
          pairs.emplace_back(FieldElement::from_base(field, digits[2 * i]), FieldElement::from_base(field, digits[2 * i + 1]));
        }
        std::vector<FieldElement> diagonal;
        for (unsigned j = 0; j < t; ++j) diagonal.push_back(FieldElement::from_base(field, digits[2 * r + j]));
        const QuadraticForm form(field, std::move(pairs), std::move(diagonal));
        ++out.forms_checked;
        if (!find_isotropic(form.as_homogeneous())) {
          out.u_hat = std::max(out.u_hat, n);
          if (t == 0) out.u = std::max(out.u, n);
        }
        std::size_t i = 0;
        while (i < n && ++digits[i] == q) digits[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return out;
}

}  // namespace symlen
