#include "symlen/symbol.hpp"

#include <functional>

#include "symlen/errors.hpp"

namespace symlen {

// ---------------------------------------------------------------------------
// Presentations

SymbolAlgebra::SymbolAlgebra(FieldElement alpha, FieldElement beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (!alpha_.valid() || !beta_.valid()) throw PreconditionError("symbol slots must be field elements");
  if (beta_.is_zero()) throw PreconditionError("second slot of a symbol algebra must be nonzero");
  if (!(*alpha_.field() == *beta_.field())) throw PreconditionError("symbol slots belong to different fields");
}

std::string SymbolAlgebra::to_string() const { return "[" + alpha_.to_string() + "," + beta_.to_string() + ")"; }

TensorProduct::TensorProduct(FieldPtr field, std::vector<SymbolAlgebra> factors)
    : field_(std::move(field)), factors_(std::move(factors)) {
  for (const auto& a : factors_) {
    if (!(*a.field() == *field_)) throw PreconditionError("tensor factors belong to different fields");
  }
}

namespace {

FieldPtr field_of(const std::vector<SymbolAlgebra>& factors) {
  if (factors.empty()) throw PreconditionError("tensor product needs a factor to fix its field");
  return factors.front().field();
}

}  // namespace

TensorProduct::TensorProduct(std::vector<SymbolAlgebra> factors) : field_(field_of(factors)), factors_(std::move(factors)) {
  for (const auto& a : factors_) {
    if (!(*a.field() == *field_)) throw PreconditionError("tensor factors belong to different fields");
  }
}

TensorProduct TensorProduct::select(std::span<const std::size_t> positions) const {
  std::vector<SymbolAlgebra> out;
  out.reserve(positions.size());
  for (std::size_t i : positions) out.push_back(factors_.at(i));
  return TensorProduct(field_, std::move(out));
}

std::string TensorProduct::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& a : factors_) {
    if (!out.empty()) out += "*";
    out += a.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Host

namespace {

unsigned binomial_mod(unsigned n, unsigned k, unsigned p) {
  // n < p, so the plain value reduced mod p is exact.
  unsigned long long r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<unsigned>(r % p);
}

}  // namespace

AlgebraHost::AlgebraHost(TensorProduct algebra) : algebra_(std::move(algebra)), p_(algebra_.p()) {
  if (algebra_.empty()) throw PreconditionError("algebra host needs at least one factor");
  std::uint64_t dim = 1;
  for (std::size_t i = 0; i < algebra_.size(); ++i) {
    dim *= std::uint64_t{p_} * p_;
    if (dim > kMaxDimension) {
      throw PreconditionError("host dimension exceeds " + std::to_string(kMaxDimension));
    }
  }
  dim_ = static_cast<std::uint32_t>(dim);

  const FieldPtr& field = algebra_.field();
  const unsigned p = p_;
  tables_.resize(algebra_.size());
  for (std::size_t k = 0; k < algebra_.size(); ++k) {
    const FieldElement& alpha = algebra_[k].alpha();
    const FieldElement& beta = algebra_[k].beta();
    auto& table = tables_[k];
    table.resize(static_cast<std::size_t>(p) * p * p * p);
    for (unsigned e1 = 0; e1 < p; ++e1) {
      for (unsigned f1 = 0; f1 < p; ++f1) {
        for (unsigned e2 = 0; e2 < p; ++e2) {
          for (unsigned f2 = 0; f2 < p; ++f2) {
            // x^{e1} (x + f1)^{e2}, then x^{p+r} = x^{r+1} + alpha x^r.
            std::vector<FieldElement> c(2 * p, FieldElement::zero(field));
            for (unsigned m = 0; m <= e2; ++m) {
              long long coeff = binomial_mod(e2, m, p);
              for (unsigned s = 0; s < e2 - m; ++s) coeff = coeff * f1 % p;
              if (coeff != 0) c[e1 + m] += FieldElement::from_int(field, coeff);
            }
            for (unsigned m = 2 * p - 1; m >= p; --m) {
              if (c[m].is_zero()) continue;
              c[m - p + 1] += c[m];
              c[m - p] += alpha * c[m];
              c[m] = FieldElement::zero(field);
            }
            const bool wrap = f1 + f2 >= p;
            LocalProduct lp;
            lp.f = (f1 + f2) % p;
            for (unsigned m = 0; m < p; ++m) {
              if (c[m].is_zero()) continue;
              lp.x_terms.emplace_back(m, wrap ? c[m] * beta : c[m]);
            }
            table[((e1 * p + f1) * p + e2) * p + f2] = std::move(lp);
          }
        }
      }
    }
  }
}

HostPtr AlgebraHost::create(TensorProduct algebra) {
  return HostPtr(new AlgebraHost(std::move(algebra)));
}

std::uint32_t AlgebraHost::index(std::span<const unsigned> exponents) const {
  if (exponents.size() != 2 * num_factors()) throw PreconditionError("wrong number of monomial exponents");
  std::uint32_t idx = 0;
  for (unsigned e : exponents) {
    if (e >= p_) throw PreconditionError("monomial exponent out of range");
    idx = idx * p_ + e;
  }
  return idx;
}

std::vector<unsigned> AlgebraHost::exponents(std::uint32_t index) const {
  std::vector<unsigned> out(2 * num_factors());
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = index % p_;
    index /= p_;
  }
  return out;
}

AlgebraElement AlgebraHost::zero() const { return AlgebraElement(shared_from_this(), {}); }

AlgebraElement AlgebraHost::one() const { return scalar(FieldElement::one(field())); }

AlgebraElement AlgebraHost::scalar(const FieldElement& c) const { return monomial(0, c); }

AlgebraElement AlgebraHost::monomial(std::uint32_t index, const FieldElement& c) const {
  if (index >= dim_) throw PreconditionError("monomial index out of range");
  SparseVector v;
  if (!c.is_zero()) v.emplace(index, c);
  return AlgebraElement(shared_from_this(), std::move(v));
}

AlgebraElement AlgebraHost::x(std::size_t factor) const {
  std::vector<unsigned> e(2 * num_factors(), 0);
  e.at(2 * factor) = 1;
  return monomial(index(e), FieldElement::one(field()));
}

AlgebraElement AlgebraHost::y(std::size_t factor) const {
  std::vector<unsigned> e(2 * num_factors(), 0);
  e.at(2 * factor + 1) = 1;
  return monomial(index(e), FieldElement::one(field()));
}

AlgebraElement AlgebraHost::from_ext(std::size_t factor, const ExtElement& f) const {
  if (!(f.extension().alpha() == algebra_[factor].alpha())) {
    throw PreconditionError("extension element does not belong to this factor");
  }
  SparseVector v;
  std::vector<unsigned> e(2 * num_factors(), 0);
  for (unsigned i = 0; i < p_; ++i) {
    if (f.coefficient(i).is_zero()) continue;
    e[2 * factor] = i;
    v.emplace(index(e), f.coefficient(i));
  }
  return AlgebraElement(shared_from_this(), std::move(v));
}

void AlgebraHost::multiply_monomials(std::uint32_t a, std::uint32_t b, const FieldElement& c, SparseVector& out) const {
  const std::size_t k = num_factors();
  const std::uint32_t block = p_ * p_;
  // Per-factor local products, most significant factor first.
  std::vector<const LocalProduct*> locals(k);
  for (std::size_t i = k; i-- > 0;) {
    const std::uint32_t da = a % block;
    const std::uint32_t db = b % block;
    a /= block;
    b /= block;
    locals[i] = &tables_[i][da * block + db];
    if (locals[i]->x_terms.empty()) return;
  }
  // Odometer over the x-term choices of each factor.
  std::vector<std::size_t> choice(k, 0);
  for (;;) {
    FieldElement coeff = c;
    std::uint32_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& [xe, xc] = locals[i]->x_terms[choice[i]];
      if (!xc.is_one()) coeff *= xc;
      idx = idx * block + xe * p_ + locals[i]->f;
    }
    auto it = out.find(idx);
    if (it == out.end()) {
      out.emplace(idx, std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
    std::size_t i = k;
    while (i-- > 0) {
      if (++choice[i] < locals[i]->x_terms.size()) break;
      choice[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

// ---------------------------------------------------------------------------
// Elements

AlgebraElement::AlgebraElement(HostPtr host, SparseVector coeffs) : host_(std::move(host)), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->first >= host_->dimension()) throw PreconditionError("coefficient index out of range");
    it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
  }
}

FieldElement AlgebraElement::coefficient(std::uint32_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? FieldElement::zero(host_->field()) : it->second;
}

std::optional<FieldElement> AlgebraElement::as_scalar() const {
  if (coeffs_.empty()) return FieldElement::zero(host_->field());
  if (coeffs_.size() == 1 && coeffs_.begin()->first == 0) return coeffs_.begin()->second;
  return std::nullopt;
}

namespace {

void check_same_host(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.host() == b.host()) return;
  if (!(a.host()->algebra() == b.host()->algebra())) throw PreconditionError("algebra elements live in different hosts");
}

}  // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& b) {
  check_same_host(*this, b);
  axpy(coeffs_, FieldElement::one(host_->field()), b.coeffs_);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& b) {
  check_same_host(*this, b);
  axpy(coeffs_, -FieldElement::one(host_->field()), b.coeffs_);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  SparseVector v = coeffs_;
  for (auto& [i, c] : v) c = -c;
  return AlgebraElement(host_, std::move(v));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_host(a, b);
  SparseVector out;
  for (const auto& [i, ci] : a.coeffs_) {
    for (const auto& [j, cj] : b.coeffs_) a.host_->multiply_monomials(i, j, ci * cj, out);
  }
  return AlgebraElement(a.host_, std::move(out));
}

AlgebraElement operator*(const FieldElement& c, const AlgebraElement& a) {
  SparseVector v;
  if (!c.is_zero()) {
    for (const auto& [i, ci] : a.coeffs_) v.emplace(i, c * ci);
  }
  return AlgebraElement(a.host_, std::move(v));
}

AlgebraElement AlgebraElement::pow(unsigned e) const {
  AlgebraElement result = host_->one();
  AlgebraElement base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.host_->algebra() == b.host_->algebra() && a.coeffs_ == b.coeffs_;
}

std::string AlgebraElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : coeffs_) {
    const auto e = host_->exponents(idx);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (i % 2 == 0 ? "x" : "y") + std::to_string(i / 2 + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (!out.empty()) out += " + ";
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

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) { return a * b - b * a; }

bool commute(const AlgebraElement& a, const AlgebraElement& b) { return commutator(a, b).is_zero(); }

AlgebraElement embed(const AlgebraElement& a, const HostPtr& target, std::span<const std::size_t> factor_map) {
  const HostPtr& source = a.host();
  if (factor_map.size() != source->num_factors()) throw PreconditionError("factor map has the wrong length");
  for (std::size_t i = 0; i < factor_map.size(); ++i) {
    if (!(source->algebra()[i] == target->algebra()[factor_map[i]])) {
      throw PreconditionError("embedding maps a factor onto a different presentation");
    }
  }
  SparseVector out;
  std::vector<unsigned> big(2 * target->num_factors(), 0);
  for (const auto& [idx, c] : a.coeffs()) {
    const auto small = source->exponents(idx);
    std::fill(big.begin(), big.end(), 0u);
    for (std::size_t i = 0; i < factor_map.size(); ++i) {
      big[2 * factor_map[i]] = small[2 * i];
      big[2 * factor_map[i] + 1] = small[2 * i + 1];
    }
    out.emplace(target->index(big), c);
  }
  return AlgebraElement(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Certificates and linear algebra

PairCheck verify_symbol_pair(const SymbolCertificate& cert) {
  PairCheck r;
  if (cert.claimed_beta.is_zero()) {
    r.diagnostic = "claimed second slot is zero";
    return r;
  }
  const HostPtr& host = cert.X.host();
  if (!(host->algebra() == cert.Y.host()->algebra())) {
    r.diagnostic = "X and Y live in different hosts";
    return r;
  }
  const unsigned p = host->p();
  const AlgebraElement xp = cert.X.pow(p);
  if (!(xp - cert.X == host->scalar(cert.claimed_alpha))) {
    r.diagnostic = "X^p - X != " + cert.claimed_alpha.to_string();
    return r;
  }
  if (!(cert.Y.pow(p) == host->scalar(cert.claimed_beta))) {
    r.diagnostic = "Y^p != " + cert.claimed_beta.to_string();
    return r;
  }
  if (!(cert.Y * cert.X - cert.X * cert.Y == cert.Y)) {
    r.diagnostic = "YX - XY != Y";
    return r;
  }
  // Under the relations the span of X^i Y^j (i, j < p) is the generated
  // subalgebra, so its dimension is the number of independent monomials.
  EchelonSpace span;
  AlgebraElement xi = host->one();
  for (unsigned i = 0; i < p; ++i) {
    AlgebraElement m = xi;
    for (unsigned j = 0; j < p; ++j) {
      span.insert(m.coeffs());
      m = m * cert.Y;
    }
    xi = xi * cert.X;
  }
  if (span.dimension() != std::size_t{p} * p) {
    r.diagnostic = "generated subalgebra has dimension " + std::to_string(span.dimension());
    return r;
  }
  r.ok = true;
  return r;
}

std::size_t subalgebra_dimension(const HostPtr& host, std::span<const AlgebraElement> gens) {
  EchelonSpace span;
  std::vector<AlgebraElement> frontier{host->one()};
  span.insert(host->one().coeffs());
  while (!frontier.empty()) {
    std::vector<AlgebraElement> next;
    for (const auto& b : frontier) {
      for (const auto& g : gens) {
        AlgebraElement prod = b * g;
        if (span.insert(prod.coeffs())) next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  return span.dimension();
}

std::size_t subalgebra_dimension(std::span<const AlgebraElement> gens) {
  if (gens.empty()) throw PreconditionError("subalgebra_dimension needs a host; pass it explicitly");
  return subalgebra_dimension(gens.front().host(), gens);
}

std::optional<LinearSolution> solve_linear_conditions(const HostPtr& host, std::span<const LinearCondition> conditions) {
  const std::uint32_t n = host->dimension();
  std::map<std::uint64_t, SparseVector> rows;
  const FieldElement one = FieldElement::one(host->field());
  for (std::uint32_t j = 0; j < n; ++j) {
    const AlgebraElement basis = host->monomial(j, one);
    for (std::size_t k = 0; k < conditions.size(); ++k) {
      const AlgebraElement image = conditions[k].map(basis);
      for (const auto& [r, c] : image.coeffs()) rows[std::uint64_t{k} * n + r].emplace(j, c);
    }
  }
  for (std::size_t k = 0; k < conditions.size(); ++k) {
    for (const auto& [r, c] : conditions[k].rhs.coeffs()) rows.try_emplace(std::uint64_t{k} * n + r);
  }
  LinearSystem system(host->field(), n);
  for (auto& [id, row] : rows) {
    const std::size_t k = id / n;
    const auto r = static_cast<std::uint32_t>(id % n);
    system.add_equation(std::move(row), conditions[k].rhs.coefficient(r));
  }
  return system.solve();
}

std::vector<AlgebraElement> centralizer(const HostPtr& host, std::span<const AlgebraElement> gens) {
  std::vector<LinearCondition> conditions;
  for (const auto& g : gens) conditions.push_back({[g](const AlgebraElement& a) { return commutator(a, g); }, host->zero()});
  const auto sol = solve_linear_conditions(host, conditions);
  std::vector<AlgebraElement> out;
  for (const auto& v : sol->nullspace) out.emplace_back(host, v);
  return out;
}

std::vector<AlgebraElement> center(const HostPtr& host) {
  std::vector<AlgebraElement> gens;
  for (std::size_t i = 0; i < host->num_factors(); ++i) {
    gens.push_back(host->x(i));
    gens.push_back(host->y(i));
  }
  return centralizer(host, gens);
}

std::optional<AlgebraElement> inverse(const AlgebraElement& a) {
  const HostPtr& host = a.host();
  const LinearCondition condition{[&a](const AlgebraElement& b) { return a * b; }, host->one()};
  const auto sol = solve_linear_conditions(host, std::span(&condition, 1));
  if (!sol) return std::nullopt;
  return AlgebraElement(host, sol->particular);
}

bool is_zero_divisor(const AlgebraElement& a) {
  const HostPtr& host = a.host();
  if (a.is_zero()) return false;
  EchelonSpace image;
  const FieldElement one = FieldElement::one(host->field());
  for (std::uint32_t j = 0; j < host->dimension(); ++j) {
    if (!image.insert((a * host->monomial(j, one)).coeffs())) return true;
  }
  return false;
}

namespace {

// Calls visit on every nonzero coefficient vector of length p whose entries
// are polynomials in t of degree <= d (constants over F_q), in rank order.
// Stops early when visit returns true.
bool enumerate_ext(const FieldPtr& field, unsigned p, unsigned d, const std::function<bool(std::vector<FieldElement>&)>& visit) {
  const std::uint32_t q = field->base().order();
  const unsigned per = field->has_variable() ? d + 1 : 1;
  const std::size_t digits = std::size_t{p} * per;
  std::vector<std::uint32_t> code(digits, 0);
  std::vector<FieldElement> coeffs(p);
  for (;;) {
    std::size_t i = 0;
    while (i < digits && ++code[i] == q) code[i++] = 0;
    if (i == digits) return false;
    for (unsigned c = 0; c < p; ++c) {
      poly::Poly num(code.begin() + c * per, code.begin() + (c + 1) * per);
      poly::normalize(num);
      coeffs[c] = FieldElement::from_poly(field, std::move(num));
    }
    if (visit(coeffs)) return true;
  }
}

}  // namespace

std::optional<AlgebraElement> find_zero_divisor(const SymbolAlgebra& a, unsigned max_degree) {
  const HostPtr host = AlgebraHost::create(TensorProduct(a.field(), {a}));
  const FieldPtr& field = a.field();
  auto accept = [](const AlgebraElement& w) -> std::optional<AlgebraElement> {
    if (is_zero_divisor(w)) return w;
    return std::nullopt;
  };
  if (a.alpha().is_zero()) {
    if (auto w = accept(host->x(0))) return w;
  }
  if (auto c = a.beta().pth_root()) {
    if (auto w = accept(host->y(0) - host->scalar(*c))) return w;
  }
  if (auto v = wp_preimage(a.alpha())) {
    if (auto w = accept(host->x(0) - host->scalar(*v))) return w;
  }
  if (field->is_finite()) return std::nullopt;  // unreachable: every element of F_q is a p-th power
  const ArtinSchreierExtension ext = a.first_slot_extension();
  std::optional<AlgebraElement> found;
  enumerate_ext(field, a.p(), max_degree, [&](std::vector<FieldElement>& coeffs) {
    const ExtElement f = ext.element(coeffs);
    const FieldElement n = as_norm(f);
    const AlgebraElement fx = host->from_ext(0, f);
    if (n.is_zero()) {
      found = accept(fx);
      return found.has_value();
    }
    if (auto c = (n * a.beta()).pth_root()) {
      found = accept(fx * host->y(0) - host->scalar(*c));
      return found.has_value();
    }
    return false;
  });
  return found;
}

}  // namespace symlen
