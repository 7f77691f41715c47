#include "symlen/field.hpp"

#include <ostream>

#include "symlen/errors.hpp"

namespace symlen {

// ---------------------------------------------------------------------------
// Field

Field::Field(FieldKind kind, GaloisField base, std::string generator_name, std::string variable_name)
    : kind_(kind),
      base_(std::move(base)),
      generator_name_(std::move(generator_name)),
      variable_name_(std::move(variable_name)) {}

FieldPtr Field::finite(GaloisField base, std::string generator_name) {
  return FieldPtr(new Field(FieldKind::kFinite, std::move(base), std::move(generator_name), ""));
}

FieldPtr Field::rational_functions(GaloisField base, std::string variable_name, std::string generator_name) {
  return FieldPtr(new Field(FieldKind::kRationalFunctions, std::move(base), std::move(generator_name),
                            std::move(variable_name)));
}

FieldPtr Field::laurent_local(GaloisField base, std::string variable_name, std::string generator_name) {
  return FieldPtr(
      new Field(FieldKind::kLaurentLocal, std::move(base), std::move(generator_name), std::move(variable_name)));
}

std::string Field::descriptor() const {
  std::string gf;
  if (base_.is_prime_field()) {
    gf = "GF(" + std::to_string(base_.characteristic()) + ")";
  } else {
    poly::Poly m;
    for (unsigned c : base_.modulus()) m.push_back(c);
    // The modulus has F_p coefficients, so printing through the prime field is exact.
    const GaloisField fp = GaloisField::prime(base_.characteristic());
    gf = "GF(" + std::to_string(base_.characteristic()) + "^" + std::to_string(base_.degree()) + "; " +
         poly::to_string(fp, m, generator_name_, generator_name_) + ")";
  }
  switch (kind_) {
    case FieldKind::kFinite:
      return gf;
    case FieldKind::kRationalFunctions:
      return gf + "(" + variable_name_ + ")";
    case FieldKind::kLaurentLocal:
      return gf + "((" + variable_name_ + "))";
  }
  return gf;
}

std::optional<unsigned> Field::degree_bound() const {
  const unsigned p = characteristic();
  switch (kind_) {
    case FieldKind::kFinite:
      return p;
    case FieldKind::kLaurentLocal:
      return p * p;
    case FieldKind::kRationalFunctions:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<unsigned> Field::u_invariant() const {
  if (characteristic() != 2) return std::nullopt;
  switch (kind_) {
    case FieldKind::kFinite:
      return 2;
    case FieldKind::kLaurentLocal:
      return 4;
    case FieldKind::kRationalFunctions:
      return std::nullopt;
  }
  return std::nullopt;
}

bool Field::declares_iq3_zero() const { return characteristic() == 2 && kind_ != FieldKind::kRationalFunctions; }

bool Field::operator==(const Field& other) const {
  return kind_ == other.kind_ && base_ == other.base_ && generator_name_ == other.generator_name_ &&
         variable_name_ == other.variable_name_;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, poly::Poly num, poly::Poly den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {}

FieldElement FieldElement::zero(FieldPtr field) { return FieldElement(std::move(field), {}, {}); }

FieldElement FieldElement::one(FieldPtr field) { return FieldElement(std::move(field), {1}, {}); }

FieldElement FieldElement::from_int(FieldPtr field, long long value) {
  const Elem c = field->base().from_int(value);
  return FieldElement(std::move(field), poly::constant(c), {});
}

FieldElement FieldElement::from_base(FieldPtr field, Elem value) {
  if (value >= field->base().order()) throw PreconditionError("F_q element code out of range");
  return FieldElement(std::move(field), poly::constant(value), {});
}

FieldElement FieldElement::from_poly(FieldPtr field, poly::Poly numerator) {
  poly::normalize(numerator);
  if (field->is_finite() && numerator.size() > 1) {
    throw UnsupportedFieldError("polynomial in t over a finite field");
  }
  return FieldElement(std::move(field), std::move(numerator), {});
}

FieldElement FieldElement::from_fraction(FieldPtr field, poly::Poly numerator, poly::Poly denominator) {
  poly::normalize(numerator);
  poly::normalize(denominator);
  if (denominator.empty()) throw PreconditionError("zero denominator");
  if (field->is_finite() && (numerator.size() > 1 || denominator.size() > 1)) {
    throw UnsupportedFieldError("rational function over a finite field");
  }
  FieldElement r(std::move(field), std::move(numerator), std::move(denominator));
  r.reduce();
  return r;
}

FieldElement FieldElement::variable(FieldPtr field) {
  if (!field->has_variable()) throw UnsupportedFieldError("field " + field->descriptor() + " has no variable");
  return FieldElement(std::move(field), {0, 1}, {});
}

FieldElement FieldElement::generator(FieldPtr field) {
  const Elem z = field->base().generator();
  return FieldElement(std::move(field), poly::constant(z), {});
}

std::optional<FieldElement::Elem> FieldElement::as_constant() const {
  if (!den_.empty() || num_.size() > 1) return std::nullopt;
  return num_.empty() ? Elem{0} : num_[0];
}

void FieldElement::check_same_field(const FieldElement& b) const {
  if (field_ == b.field_) return;
  if (!field_ || !b.field_ || !(*field_ == *b.field_)) {
    throw PreconditionError("field elements belong to different fields");
  }
}

void FieldElement::reduce() {
  poly::normalize(num_);
  poly::normalize(den_);
  if (num_.empty()) {
    den_.clear();
    return;
  }
  if (den_.empty()) return;
  const GaloisField& f = gf();
  if (den_.size() > 1) {
    const poly::Poly g = poly::gcd(f, num_, den_);
    if (!poly::is_one(g)) {
      num_ = poly::exact_div(f, num_, g);
      den_ = poly::exact_div(f, den_, g);
    }
  }
  const Elem lead = den_.back();
  if (lead != 1) {
    const Elem inv = f.inv(lead);
    num_ = poly::scale(f, num_, inv);
    den_ = poly::scale(f, den_, inv);
  }
  if (poly::is_one(den_)) den_.clear();
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.num_ = poly::neg(gf(), num_);
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  check_same_field(b);
  const GaloisField& f = gf();
  if (den_.empty() && b.den_.empty()) {
    num_ = poly::add(f, num_, b.num_);
    return *this;
  }
  if (b.num_.empty()) return *this;
  if (num_.empty()) return *this = b;
  if (den_ == b.den_) {
    num_ = poly::add(f, num_, b.num_);
    reduce();
    return *this;
  }
  const poly::Poly da = denominator();
  const poly::Poly db = b.denominator();
  const poly::Poly g = poly::gcd(f, da, db);
  const poly::Poly da_g = poly::exact_div(f, da, g);
  const poly::Poly db_g = poly::exact_div(f, db, g);
  num_ = poly::add(f, poly::mul(f, num_, db_g), poly::mul(f, b.num_, da_g));
  den_ = poly::mul(f, da, db_g);
  reduce();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) { return *this += -b; }

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  check_same_field(b);
  const GaloisField& f = gf();
  if (num_.empty() || b.num_.empty()) {
    num_.clear();
    den_.clear();
    return *this;
  }
  if (den_.empty() && b.den_.empty()) {
    num_ = poly::mul(f, num_, b.num_);
    return *this;
  }
  poly::Poly na = num_;
  poly::Poly nb = b.num_;
  poly::Poly da = denominator();
  poly::Poly db = b.denominator();
  const poly::Poly g1 = poly::gcd(f, na, db);
  const poly::Poly g2 = poly::gcd(f, nb, da);
  if (!poly::is_one(g1)) {
    na = poly::exact_div(f, na, g1);
    db = poly::exact_div(f, db, g1);
  }
  if (!poly::is_one(g2)) {
    nb = poly::exact_div(f, nb, g2);
    da = poly::exact_div(f, da, g2);
  }
  num_ = poly::mul(f, na, nb);
  den_ = poly::mul(f, da, db);
  const Elem lead = den_.back();
  if (lead != 1) {
    const Elem inv = f.inv(lead);
    num_ = poly::scale(f, num_, inv);
    den_ = poly::scale(f, den_, inv);
  }
  if (poly::is_one(den_)) den_.clear();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) { return *this *= b.inverse(); }

FieldElement FieldElement::inverse() const {
  if (num_.empty()) throw PreconditionError("inverse of zero");
  FieldElement r(field_, denominator(), num_);
  const GaloisField& f = gf();
  const Elem lead = r.den_.back();
  if (lead != 1) {
    const Elem inv = f.inv(lead);
    r.num_ = poly::scale(f, r.num_, inv);
    r.den_ = poly::scale(f, r.den_, inv);
  }
  if (poly::is_one(r.den_)) r.den_.clear();
  return r;
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::frobenius() const {
  // (sum c_i t^i)^p = sum c_i^p t^(ip) in characteristic p.
  const GaloisField& f = gf();
  const unsigned p = f.characteristic();
  auto frob = [&](const poly::Poly& a) {
    if (a.empty()) return poly::Poly{};
    poly::Poly r((a.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i * p] = f.frobenius(a[i]);
    return r;
  };
  return FieldElement(field_, frob(num_), frob(den_));
}

FieldElement FieldElement::wp() const { return frobenius() - *this; }

std::optional<FieldElement> FieldElement::pth_root() const {
  const GaloisField& f = gf();
  auto n = poly::pth_root(f, num_);
  if (!n) return std::nullopt;
  auto d = poly::pth_root(f, den_);
  if (!d) return std::nullopt;
  if (poly::is_one(*d)) d->clear();
  return FieldElement(field_, std::move(*n), std::move(*d));
}

FieldElement FieldElement::derivative() const {
  if (field_->is_finite()) return zero(field_);
  const GaloisField& f = gf();
  const poly::Poly d = denominator();
  poly::Poly n = poly::sub(f, poly::mul(f, poly::derivative(f, num_), d), poly::mul(f, num_, poly::derivative(f, d)));
  return from_fraction(field_, std::move(n), poly::mul(f, d, d));
}

int FieldElement::valuation() const {
  if (num_.empty()) throw PreconditionError("valuation of zero");
  return static_cast<int>(poly::valuation(num_)) - static_cast<int>(poly::valuation(denominator()));
}

std::string FieldElement::to_string() const {
  if (!field_) return "<null>";
  const GaloisField& f = gf();
  const std::string& g = field_->generator_name();
  const std::string& v = field_->variable_name();
  std::string n = poly::to_string(f, num_, g, v);
  if (den_.empty()) return n;
  if (!poly::is_atomic(f, num_)) n = "(" + n + ")";
  std::string d = poly::to_string(f, den_, g, v);
  if (!poly::is_atomic(f, den_)) d = "(" + d + ")";
  return n + "/" + d;
}

bool FieldElement::is_atomic() const { return den_.empty() && poly::is_atomic(gf(), num_); }

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (const int c = poly::compare(a.den_, b.den_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int c = poly::compare(a.num_, b.num_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t FieldElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (auto c : num_) mix(c);
  mix(0xfeed);
  for (auto c : den_) mix(c);
  return h;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// Laurent expansion

GaloisField::Elem LaurentExpansion::coefficient(int exponent) const {
  const long long i = static_cast<long long>(exponent) - valuation;
  if (i < 0 || i >= static_cast<long long>(coeffs.size())) return 0;
  return coeffs[static_cast<std::size_t>(i)];
}

LaurentExpansion laurent_expand(const FieldElement& a, int max_exponent) {
  LaurentExpansion out;
  if (a.is_zero()) return out;
  const GaloisField& f = a.field()->base();
  const poly::Poly num = a.numerator();
  const poly::Poly den = a.denominator();
  const std::size_t vn = poly::valuation(num);
  const std::size_t vd = poly::valuation(den);
  out.valuation = static_cast<int>(vn) - static_cast<int>(vd);
  if (max_exponent < out.valuation) return out;
  const std::size_t terms = static_cast<std::size_t>(max_exponent - out.valuation) + 1;
  const poly::Poly n0 = poly::unshift(num, vn);
  const poly::Poly d0 = poly::unshift(den, vd);
  poly::Poly series = poly::truncate(poly::mul(f, n0, poly::series_inverse(f, d0, terms)), terms);
  series.resize(terms, 0);
  out.coeffs = std::move(series);
  return out;
}

}  // namespace symlen
