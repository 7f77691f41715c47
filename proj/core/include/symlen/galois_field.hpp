#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symlen {

/// The finite field F_q = F_p[z]/(m(z)), q = p^n.
///
/// Elements are encoded as integers in [0, q): the base-p digits of the
/// encoding are the coefficients of the residue polynomial in z, least
/// significant first. Multiplication goes through log/antilog tables built
/// from a primitive element found at construction, so q is limited to 2^16.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// `modulus` holds the coefficients of a monic polynomial, lowest degree
  /// first. Throws PreconditionError if p is not prime, the modulus is not
  /// monic, or it is reducible over F_p.
  GaloisField(unsigned p, std::vector<unsigned> modulus);

  static GaloisField prime(unsigned p);

  /// F_{p^n} with the lexicographically first irreducible monic modulus.
  static GaloisField with_default_modulus(unsigned p, unsigned n);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint32_t order() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }
  bool is_prime_field() const { return n_ == 1; }

  Elem from_int(long long value) const;
  /// The class of z. Only meaningful when degree() > 1.
  Elem generator() const;
  Elem primitive_element() const { return primitive_; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    return add_table_.empty() ? add_slow(a, b) : add_table_[a * q_ + b];
  }
  Elem neg(Elem a) const { return neg_table_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_table_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws PreconditionError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;
  /// a^p.
  Elem frobenius(Elem a) const { return pow(a, p_); }
  /// The unique b with b^p = a.
  Elem pth_root(Elem a) const;
  /// Tr_{F_q/F_p}(a), returned as an integer in [0, p).
  unsigned trace(Elem a) const;

  /// Coefficients of the residue polynomial, lowest degree first, length n.
  std::vector<unsigned> digits(Elem a) const;
  Elem from_digits(const std::vector<unsigned>& digits) const;

  /// "0", "2", "z^2+z+1", ... `generator_name` names z.
  std::string to_string(Elem a, const std::string& generator_name = "z") const;
  /// True when to_string(a) is a single token (needs no parentheses as a factor).
  bool is_atomic(Elem a) const;

  bool operator==(const GaloisField& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;

  unsigned p_;
  unsigned n_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i
  Elem primitive_ = 1;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(unsigned n);

/// True iff the monic polynomial (lowest degree first) is irreducible over F_p.
bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p);

}  // namespace symlen
