#include "symlen/galois_field.hpp"

#include <algorithm>

#include "symlen/errors.hpp"

namespace symlen {

namespace {

using Digits = std::vector<unsigned>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m, all over F_p.
Digits poly_mod(Digits a, const Digits& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p) {
  Digits f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      Digits g(d + 1, 0);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

GaloisField::GaloisField(unsigned p, std::vector<unsigned> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw PreconditionError("characteristic " + std::to_string(p_) + " is not prime");
  for (auto& c : modulus_) c %= p_;
  trim(modulus_);
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw PreconditionError("field modulus must be monic of degree >= 1");
  }
  n_ = static_cast<unsigned>(modulus_.size() - 1);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n_; ++i) {
    pow_p_.push_back(static_cast<std::uint32_t>(q));
    q *= p_;
    if (q > kMaxOrder) throw PreconditionError("field order exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (n_ > 1 && !is_irreducible_mod_p(modulus_, p_)) {
    throw PreconditionError("field modulus is reducible over F_" + std::to_string(p_));
  }

  neg_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Digits d = digits(a);
    for (auto& c : d) c = (p_ - c) % p_;
    neg_table_[a] = from_digits(d);
  }
  if (p_ != 2 && q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_slow(a, b);
    }
  }

  // Primitive element search; the first element of order q-1 in encoding order.
  exp_.assign(2 * static_cast<std::size_t>(q_), 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    primitive_ = 1;
  } else {
    for (Elem g = 2; g < q_; ++g) {
      Elem acc = 1;
      std::uint32_t k = 0;
      do {
        acc = mul_slow(acc, g);
        ++k;
      } while (acc != 1 && k < q_);
      if (acc == 1 && k == q_ - 1) {
        primitive_ = g;
        break;
      }
    }
  }
  Elem acc = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = acc;
    exp_[i + q_ - 1] = acc;
    log_[acc] = i;
    acc = mul_slow(acc, primitive_);
  }
}

GaloisField GaloisField::prime(unsigned p) { return GaloisField(p, {0, 1}); }

GaloisField GaloisField::with_default_modulus(unsigned p, unsigned n) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw PreconditionError("extension degree must be positive");
  if (n == 1) return prime(p);
  std::size_t count = 1;
  for (unsigned i = 0; i < n; ++i) {
    count *= p;
    if (count > kMaxOrder) throw PreconditionError("field order exceeds 2^16");
  }
  // Lexicographic on (c_{n-1}, ..., c_0), i.e. numeric order of the code.
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<unsigned> m(n + 1, 0);
    std::size_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      m[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    m[n] = 1;
    if (m[0] != 0 && is_irreducible_mod_p(m, p)) return GaloisField(p, m);
  }
  throw PreconditionError("no irreducible polynomial found");
}

GaloisField::Elem GaloisField::from_int(long long value) const {
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

GaloisField::Elem GaloisField::generator() const {
  if (n_ == 1) return from_int(-static_cast<long long>(modulus_[0]));
  return p_;  // digit pattern (0, 1, 0, ...)
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw PreconditionError("division by zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, long long e) const {
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw PreconditionError("division by zero in F_q");
    return 0;
  }
  const long long m = q_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (e % m)) % m;
  if (k < 0) k += m;
  return exp_[k];
}

GaloisField::Elem GaloisField::pth_root(Elem a) const {
  // a^(q/p) is the inverse of Frobenius.
  return pow(a, q_ / p_);
}

unsigned GaloisField::trace(Elem a) const {
  Elem acc = 0;
  Elem c = a;
  for (unsigned i = 0; i < n_; ++i) {
    acc = add(acc, c);
    c = frobenius(c);
  }
  return acc % p_;
}

std::vector<unsigned> GaloisField::digits(Elem a) const {
  std::vector<unsigned> d(n_);
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

GaloisField::Elem GaloisField::from_digits(const std::vector<unsigned>& digits) const {
  Elem a = 0;
  for (std::size_t i = std::min<std::size_t>(digits.size(), n_); i-- > 0;) a = a * p_ + digits[i] % p_;
  return a;
}

GaloisField::Elem GaloisField::add_slow(Elem a, Elem b) const {
  Elem r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
  const Digits da = digits(a);
  const Digits db = digits(b);
  Digits prod(2 * n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  return from_digits(poly_mod(prod, modulus_, p_));
}

std::string GaloisField::to_string(Elem a, const std::string& generator_name) const {
  if (n_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const Digits d = digits(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += generator_name;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool GaloisField::is_atomic(Elem a) const {
  if (n_ == 1) return true;
  const Digits d = digits(a);
  int terms = 0;
  bool plain = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    ++terms;
    if (i > 0 && d[i] != 1) plain = false;
  }
  return terms <= 1 && plain;
}

}  // namespace symlen
