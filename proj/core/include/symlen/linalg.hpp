#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "symlen/field.hpp"

namespace symlen {

/// Sparse vector over a Field, keyed by coordinate index; zero entries are
/// never stored.
using SparseVector = std::map<std::uint32_t, FieldElement>;

void axpy(SparseVector& y, const FieldElement& a, const SparseVector& x);

/// Incrementally built row echelon basis. Every stored row has a leading
/// coefficient 1 at its smallest index, and no two rows share a lead.
class EchelonSpace {
 public:
  /// Adds v to the span. Returns false when v already lies in it.
  bool insert(SparseVector v);
  bool contains(SparseVector v) const;
  std::size_t dimension() const { return rows_.size(); }

 private:
  /// Reduces v against the stored rows; returns the leftover.
  void reduce(SparseVector& v) const;

  std::map<std::uint32_t, SparseVector> rows_;
};

/// Solution set of A x = b: particular + span(nullspace). The particular
/// solution sets every free variable to zero; nullspace vectors are ordered by
/// their free variable.
struct LinearSolution {
  SparseVector particular;
  std::vector<SparseVector> nullspace;
};

/// Sparse linear system with `num_unknowns` unknowns, assembled row by row.
class LinearSystem {
 public:
  LinearSystem(FieldPtr field, std::uint32_t num_unknowns) : field_(std::move(field)), n_(num_unknowns) {}

  void add_equation(SparseVector row, const FieldElement& rhs);
  std::uint32_t num_unknowns() const { return n_; }

  /// nullopt when inconsistent.
  std::optional<LinearSolution> solve() const;
  std::size_t rank() const;

 private:
  FieldPtr field_;
  std::uint32_t n_;
  std::vector<std::pair<SparseVector, FieldElement>> equations_;
};

}  // namespace symlen
