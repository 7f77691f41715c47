#include "symlen/parse.hpp"

#include <cctype>
#include <charconv>
#include <tuple>

#include "symlen/errors.hpp"

namespace symlen {

namespace {

constexpr long long kMaxExponent = 4096;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool at_end() { return peek() == '\0'; }
  /// Position of the next token.
  std::size_t pos() {
    skip_space();
    return pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'" + found());
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input" + found());
  }

  std::string found() {
    if (at_end()) return " at end of input";
    return ", found '" + std::string(1, text_[pos_]) + "'";
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail("expected a name" + found());
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range", start);
    if (ec != std::errc()) fail("expected an integer" + found());
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class ElementParser {
 public:
  ElementParser(FieldPtr field, Cursor& cur) : field_(std::move(field)), cur_(cur) {}

  FieldElement expression() {
    FieldElement acc = FieldElement::zero(field_);
    bool negate = false;
    if (cur_.accept("-")) {
      negate = true;
    } else {
      cur_.accept("+");
    }
    FieldElement first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (cur_.accept("+")) {
        acc += term();
      } else if (cur_.accept("-")) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

 private:
  bool starts_primary() {
    const char c = cur_.peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  FieldElement term() {
    FieldElement acc = power();
    for (;;) {
      const std::size_t at = cur_.pos();
      if (cur_.accept("*")) {
        acc *= power();
      } else if (cur_.accept("/")) {
        const FieldElement d = power();
        if (d.is_zero()) cur_.fail("division by zero", at);
        acc /= d;
      } else if (starts_primary()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  FieldElement power() {
    FieldElement base = primary();
    const std::size_t at = cur_.pos();
    if (!cur_.accept("^")) return base;
    const bool negative = cur_.accept("-");
    const long long e = cur_.integer();
    if (e > kMaxExponent) cur_.fail("exponent larger than " + std::to_string(kMaxExponent), at);
    if (negative && base.is_zero()) cur_.fail("negative power of zero", at);
    return base.pow(negative ? -e : e);
  }

  FieldElement primary() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.accept("(");
      FieldElement inner = expression();
      cur_.expect(")");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return FieldElement::from_int(field_, cur_.integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = cur_.pos();
      const std::string name = cur_.identifier();
      if (field_->has_variable() && name == field_->variable_name()) return FieldElement::variable(field_);
      if (name == field_->generator_name()) {
        if (field_->base().is_prime_field()) cur_.fail("'" + name + "' is not defined over a prime field", at);
        return FieldElement::generator(field_);
      }
      cur_.fail("unknown name '" + name + "' for " + field_->descriptor(), at);
    }
    cur_.fail("expected an element" + cur_.found());
  }

  FieldPtr field_;
  Cursor& cur_;
};

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// n = p^k with p prime, else nullopt.
std::optional<std::pair<unsigned, unsigned>> prime_power(long long n) {
  if (n < 2 || n > GaloisField::kMaxOrder) return std::nullopt;
  long long p = 2;
  while (n % p != 0) ++p;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::pair{static_cast<unsigned>(p), k};
}

GaloisField parse_base(Cursor& cur) {
  cur.expect("GF");
  cur.expect("(");
  const std::size_t q_at = cur.pos();
  const long long q = cur.integer();
  unsigned p = 0;
  unsigned n = 1;
  if (cur.accept("^")) {
    if (!is_prime(q) || q > GaloisField::kMaxOrder) cur.fail(std::to_string(q) + " is not a supported prime", q_at);
    p = static_cast<unsigned>(q);
    const std::size_t n_at = cur.pos();
    const long long e = cur.integer();
    long long order = 1;
    for (long long i = 0; i < e && order <= GaloisField::kMaxOrder; ++i) order *= p;
    if (e < 1 || order > GaloisField::kMaxOrder) {
      cur.fail("field order " + std::to_string(p) + "^" + std::to_string(e) + " is out of range", n_at);
    }
    n = static_cast<unsigned>(e);
  } else {
    const auto pk = prime_power(q);
    if (!pk) cur.fail(std::to_string(q) + " is not a supported prime power", q_at);
    std::tie(p, n) = *pk;
  }
  if (!cur.accept(";")) {
    cur.expect(")");
    return n == 1 ? GaloisField::prime(p) : GaloisField::with_default_modulus(p, n);
  }
  const std::size_t m_at = cur.pos();
  // The modulus is a polynomial over F_p in z, read as an element of F_p(z).
  const auto fp_z = Field::rational_functions(GaloisField::prime(p), "z", "z");
  const FieldElement m = ElementParser(fp_z, cur).expression();
  cur.expect(")");
  if (!m.is_polynomial()) cur.fail("the modulus must be a polynomial", m_at);
  std::vector<unsigned> coeffs(m.numerator().begin(), m.numerator().end());
  if (coeffs.size() != n + 1) {
    cur.fail("modulus of degree " + std::to_string(coeffs.empty() ? 0 : coeffs.size() - 1) + " for GF(" +
                 std::to_string(p) + "^" + std::to_string(n) + ")",
             m_at);
  }
  try {
    return GaloisField(p, std::move(coeffs));
  } catch (const PreconditionError& e) {
    cur.fail(e.what(), m_at);
  }
}

FieldElement slot(const FieldPtr& field, Cursor& cur) { return ElementParser(field, cur).expression(); }

}  // namespace

FieldPtr parse_field(std::string_view text) {
  Cursor cur(text);
  GaloisField base = parse_base(cur);
  FieldPtr out;
  if (cur.accept("((")) {
    const std::size_t at = cur.pos();
    const std::string v = cur.identifier();
    if (v == "z") cur.fail("the variable cannot be named after the generator z", at);
    cur.expect("))");
    out = Field::laurent_local(std::move(base), v);
  } else if (cur.accept("(")) {
    const std::size_t at = cur.pos();
    const std::string v = cur.identifier();
    if (v == "z") cur.fail("the variable cannot be named after the generator z", at);
    cur.expect(")");
    out = Field::rational_functions(std::move(base), v);
  } else {
    out = Field::finite(std::move(base));
  }
  cur.expect_end();
  return out;
}

FieldElement parse_element(const FieldPtr& field, std::string_view text) {
  Cursor cur(text);
  FieldElement out = slot(field, cur);
  cur.expect_end();
  return out;
}

TensorProduct parse_product(const FieldPtr& field, std::string_view text) {
  Cursor cur(text);
  if (cur.peek() == '1') {
    cur.accept("1");
    cur.expect_end();
    return TensorProduct(field);
  }
  std::vector<SymbolAlgebra> factors;
  do {
    cur.expect("[");
    FieldElement alpha = slot(field, cur);
    cur.expect(",");
    const std::size_t beta_at = cur.pos();
    FieldElement beta = slot(field, cur);
    cur.expect(")");
    if (beta.is_zero()) cur.fail("the second slot of a symbol must be nonzero", beta_at);
    factors.emplace_back(std::move(alpha), std::move(beta));
  } while (cur.accept("*"));
  cur.expect_end();
  return TensorProduct(field, std::move(factors));
}

QuadraticForm parse_form(const FieldPtr& field, std::string_view text) {
  Cursor cur(text);
  if (field->characteristic() != 2) cur.fail("quadratic forms need characteristic 2, got " + field->descriptor(), 0);
  if (cur.peek() == '0') {
    cur.accept("0");
    cur.expect_end();
    return QuadraticForm(field);
  }
  std::vector<QuadraticForm::Pair> pairs;
  std::vector<FieldElement> diagonal;
  do {
    if (cur.accept("[")) {
      FieldElement a = slot(field, cur);
      cur.expect(",");
      FieldElement b = slot(field, cur);
      cur.expect("]");
      pairs.emplace_back(std::move(a), std::move(b));
    } else if (cur.accept("<")) {
      do {
        diagonal.push_back(slot(field, cur));
      } while (cur.accept(","));
      cur.expect(">");
    } else {
      cur.fail("expected '[' or '<'" + cur.found());
    }
  } while (cur.accept("+"));
  cur.expect_end();
  return QuadraticForm(field, std::move(pairs), std::move(diagonal));
}

}  // namespace symlen
