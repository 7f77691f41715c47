#include "symlen/linalg.hpp"

#include "symlen/errors.hpp"

namespace symlen {

void axpy(SparseVector& y, const FieldElement& a, const SparseVector& x) {
  if (a.is_zero()) return;
  for (const auto& [i, xi] : x) {
    auto it = y.find(i);
    if (it == y.end()) {
      y.emplace(i, a * xi);
      continue;
    }
    it->second += a * xi;
    if (it->second.is_zero()) y.erase(it);
  }
}

namespace {

void scale_to_monic(SparseVector& v) {
  const FieldElement inv = v.begin()->second.inverse();
  for (auto& [i, c] : v) c *= inv;
}

}  // namespace

void EchelonSpace::reduce(SparseVector& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const std::uint32_t lead = it->first;
    axpy(v, -it->second, row->second);
    it = v.upper_bound(lead);
  }
}

bool EchelonSpace::insert(SparseVector v) {
  reduce(v);
  if (v.empty()) return false;
  scale_to_monic(v);
  const std::uint32_t lead = v.begin()->first;
  rows_.emplace(lead, std::move(v));
  return true;
}

bool EchelonSpace::contains(SparseVector v) const {
  reduce(v);
  return v.empty();
}

void LinearSystem::add_equation(SparseVector row, const FieldElement& rhs) {
  if (!row.empty() && row.rbegin()->first >= n_) throw PreconditionError("equation refers to an unknown out of range");
  equations_.emplace_back(std::move(row), rhs);
}

namespace {

// Rows keyed by pivot column; the right-hand side rides along at index n.
using Pivots = std::map<std::uint32_t, SparseVector>;

// Forward elimination. Returns false on an inconsistent equation.
bool eliminate(const std::vector<std::pair<SparseVector, FieldElement>>& equations, std::uint32_t n, Pivots& pivots) {
  for (const auto& [row, rhs] : equations) {
    SparseVector r = row;
    if (!rhs.is_zero()) r.emplace(n, rhs);
    auto it = r.begin();
    while (it != r.end() && it->first < n) {
      auto piv = pivots.find(it->first);
      if (piv == pivots.end()) break;
      axpy(r, -it->second, piv->second);
      it = r.begin();
    }
    if (r.empty()) continue;
    if (r.begin()->first == n) return false;
    scale_to_monic(r);
    // Keep the row reduced against existing pivots beyond its lead.
    for (auto jt = std::next(r.begin()); jt != r.end() && jt->first < n;) {
      auto piv = pivots.find(jt->first);
      if (piv == pivots.end()) {
        ++jt;
        continue;
      }
      const std::uint32_t col = jt->first;
      axpy(r, -jt->second, piv->second);
      jt = r.upper_bound(col);
    }
    pivots.emplace(r.begin()->first, std::move(r));
  }
  return true;
}

// Back substitution to reduced row echelon form.
void back_substitute(Pivots& pivots, std::uint32_t n) {
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    SparseVector& row = it->second;
    const std::uint32_t lead = it->first;
    for (auto jt = row.upper_bound(lead); jt != row.end() && jt->first < n;) {
      auto piv = pivots.find(jt->first);
      if (piv == pivots.end()) {
        ++jt;
        continue;
      }
      const std::uint32_t col = jt->first;
      axpy(row, -jt->second, piv->second);
      jt = row.upper_bound(col);
    }
  }
}

}  // namespace

std::optional<LinearSolution> LinearSystem::solve() const {
  Pivots pivots;
  if (!eliminate(equations_, n_, pivots)) return std::nullopt;
  back_substitute(pivots, n_);
  LinearSolution sol;
  for (const auto& [lead, row] : pivots) {
    auto it = row.find(n_);
    if (it != row.end()) sol.particular.emplace(lead, it->second);
  }
  // Free column j contributes e_j - sum over pivot rows of row[j] e_lead.
  std::map<std::uint32_t, SparseVector> free_vectors;
  for (std::uint32_t j = 0; j < n_; ++j) {
    if (!pivots.contains(j)) free_vectors[j].emplace(j, FieldElement::one(field_));
  }
  for (const auto& [lead, row] : pivots) {
    for (const auto& [j, c] : row) {
      if (j == lead || j >= n_) continue;
      free_vectors[j].emplace(lead, -c);
    }
  }
  for (auto& [j, v] : free_vectors) sol.nullspace.push_back(std::move(v));
  return sol;
}

std::size_t LinearSystem::rank() const {
  EchelonSpace space;
  for (const auto& [row, rhs] : equations_) space.insert(row);
  return space.dimension();
}

}  // namespace symlen
