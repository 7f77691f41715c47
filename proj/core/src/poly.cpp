#include "symlen/poly.hpp"

#include <algorithm>

#include "symlen/errors.hpp"

namespace symlen::poly {

std::size_t valuation(const Poly& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) return i;
  }
  return 0;
}

Poly add(const GaloisField& f, const Poly& a, const Poly& b) {
  const Poly& longer = a.size() >= b.size() ? a : b;
  const Poly& shorter = a.size() >= b.size() ? b : a;
  Poly r = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) r[i] = f.add(r[i], shorter[i]);
  normalize(r);
  return r;
}

Poly sub(const GaloisField& f, const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.size() < b.size()) r.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  normalize(r);
  return r;
}

Poly neg(const GaloisField& f, const Poly& a) {
  Poly r = a;
  for (auto& c : r) c = f.neg(c);
  return r;
}

Poly mul(const GaloisField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  normalize(r);
  return r;
}

Poly scale(const GaloisField& f, const Poly& a, Elem c) {
  if (c == 0) return {};
  Poly r = a;
  for (auto& x : r) x = f.mul(x, c);
  return r;
}

Poly pow(const GaloisField& f, const Poly& a, unsigned e) {
  Poly result{1};
  Poly base = a;
  while (e > 0) {
    if (e & 1u) result = mul(f, result, base);
    e >>= 1u;
    if (e > 0) base = mul(f, base, base);
  }
  return result;
}

Poly shift(const Poly& a, std::size_t k) {
  if (a.empty() || k == 0) return a;
  Poly r(k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Poly unshift(const Poly& a, std::size_t k) {
  if (k >= a.size()) return {};
  return Poly(a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
}

Poly truncate(Poly a, std::size_t n) {
  if (a.size() > n) a.resize(n);
  normalize(a);
  return a;
}

std::pair<Poly, Poly> divmod(const GaloisField& f, const Poly& a, const Poly& b) {
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly rem = a;
  Poly quot(a.size() - b.size() + 1, 0);
  const Elem inv_lead = f.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const Elem c = f.mul(rem[i], inv_lead);
    if (c != 0) {
      const std::size_t shift_by = i + 1 - b.size();
      quot[shift_by] = c;
      for (std::size_t j = 0; j < b.size(); ++j) {
        rem[shift_by + j] = f.sub(rem[shift_by + j], f.mul(c, b[j]));
      }
    }
    if (i == 0) break;
  }
  normalize(quot);
  normalize(rem);
  return {quot, rem};
}

Poly exact_div(const GaloisField& f, const Poly& a, const Poly& b) { return divmod(f, a, b).first; }

Poly monic(const GaloisField& f, const Poly& a) {
  if (a.empty() || a.back() == 1) return a;
  return scale(f, a, f.inv(a.back()));
}

Poly gcd(const GaloisField& f, const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.empty()) {
    Poly r = divmod(f, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(f, x);
}

Poly derivative(const GaloisField& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(a[i], f.from_int(static_cast<long long>(i)));
  normalize(r);
  return r;
}

Elem evaluate(const GaloisField& f, const Poly& a, Elem x) {
  Elem acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

Poly series_inverse(const GaloisField& f, const Poly& a, std::size_t n) {
  if (a.empty() || a[0] == 0) throw PreconditionError("series inverse needs a unit constant term");
  Poly r(n, 0);
  if (n == 0) return {};
  const Elem inv0 = f.inv(a[0]);
  r[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Elem s = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s = f.add(s, f.mul(a[j], r[k - j]));
    r[k] = f.neg(f.mul(s, inv0));
  }
  normalize(r);
  return r;
}

std::optional<Poly> pth_root(const GaloisField& f, const Poly& a) {
  const unsigned p = f.characteristic();
  if (a.empty()) return Poly{};
  Poly r((a.size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (i % p != 0) return std::nullopt;
    r[i / p] = f.pth_root(a[i]);
  }
  normalize(r);
  return r;
}

int compare(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::string to_string(const GaloisField& f, const Poly& a, const std::string& generator_name,
                      const std::string& variable_name) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string coeff = f.to_string(a[i], generator_name);
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (a[i] != 1) {
      out += f.is_atomic(a[i]) ? coeff : "(" + coeff + ")";
      out += "*";
    }
    out += variable_name;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

bool is_atomic(const GaloisField& f, const Poly& a) {
  int terms = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    ++terms;
    if (i == 0 && !f.is_atomic(a[i])) return false;
    if (i > 0 && a[i] != 1) return false;
  }
  return terms <= 1;
}

}  // namespace symlen::poly
