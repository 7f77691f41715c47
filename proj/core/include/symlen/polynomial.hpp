#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symlen/field.hpp"

namespace symlen {

/// Sparse multivariate polynomial over a Field, terms keyed by exponent vector.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  Polynomial(FieldPtr field, std::size_t num_vars);

  static Polynomial constant(const FieldElement& c, std::size_t num_vars);
  static Polynomial variable(FieldPtr field, std::size_t num_vars, std::size_t index);

  const FieldPtr& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponents, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^exponents, dropping the term if the sum cancels.
  void add_term(const Exponents& exponents, const FieldElement& c);

  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& a);

  FieldElement evaluate(std::span<const FieldElement> point) const;
  /// Degree of every term, or -1 when terms have mixed degree (0 for zero).
  int homogeneous_degree() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  FieldPtr field_;
  std::size_t num_vars_;
  std::map<Exponents, FieldElement> terms_;
};

/// A homogeneous polynomial form of fixed degree.
class HomogeneousForm {
 public:
  /// Throws PreconditionError when `poly` is not homogeneous of `degree`.
  HomogeneousForm(Polynomial poly, unsigned degree);

  const Polynomial& polynomial() const { return poly_; }
  unsigned degree() const { return degree_; }
  std::size_t dimension() const { return poly_.num_vars(); }
  const FieldPtr& field() const { return poly_.field(); }

  FieldElement evaluate(std::span<const FieldElement> point) const { return poly_.evaluate(point); }

  /// Partition of the variables into the connected components of the
  /// "appear in a common monomial" relation, each sorted, ordered by smallest
  /// member. The form is the sum of its restrictions to these blocks.
  std::vector<std::vector<std::size_t>> blocks() const;

  std::string to_string(const std::vector<std::string>& names = {}) const { return poly_.to_string(names); }

 private:
  Polynomial poly_;
  unsigned degree_;
};

}  // namespace symlen
