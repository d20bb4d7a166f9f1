#include "joinalg/sparse.hpp"

#include <algorithm>

namespace joinalg {

SparseVector to_sparse(const std::vector<Scalar>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!is_zero(dense[i])) out.emplace_back(i, dense[i]);
  }
  return out;
}

std::vector<Scalar> to_dense(const SparseVector& sparse, std::size_t size) {
  std::vector<Scalar> out(size);
  for (const auto& [i, v] : sparse) out.at(i) = v;
  return out;
}

void add_scaled(SparseVector& target, const Scalar& factor, const SparseVector& source) {
  if (is_zero(factor) || source.empty()) return;
  SparseVector merged;
  merged.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == target.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Scalar sum = a->second + factor * b->second;
      if (!is_zero(sum)) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  target = std::move(merged);
}

EchelonForm reduced_echelon(std::vector<SparseVector> rows, std::size_t columns) {
  // Forward pass: rows wait in the bucket of their leading column.
  std::vector<std::vector<std::size_t>> bucket(columns);
  for (std::size_t id = 0; id < rows.size(); ++id) {
    if (rows[id].empty()) continue;
    if (rows[id].front().first >= columns) {
      throw std::out_of_range("reduced_echelon: column index out of range");
    }
    bucket[rows[id].front().first].push_back(id);
  }

  EchelonForm form;
  for (std::size_t col = 0; col < columns; ++col) {
    std::vector<std::size_t> candidates;
    candidates.swap(bucket[col]);
    if (candidates.empty()) continue;

    std::size_t pivot = candidates.front();
    for (std::size_t id : candidates) {
      if (rows[id].size() < rows[pivot].size() ||
          (rows[id].size() == rows[pivot].size() && id < pivot)) {
        pivot = id;
      }
    }
    SparseVector& prow = rows[pivot];
    const Scalar inv = 1 / prow.front().second;
    for (auto& entry : prow) entry.second *= inv;

    for (std::size_t id : candidates) {
      if (id == pivot) continue;
      Scalar factor = -rows[id].front().second;
      add_scaled(rows[id], factor, prow);
      if (!rows[id].empty()) bucket[rows[id].front().first].push_back(id);
    }
    form.pivots.push_back(col);
    form.origins.push_back(pivot);
    form.rows.push_back(std::move(prow));
    prow.clear();
  }

  // Backward pass: clear every pivot column above its pivot.
  std::vector<std::ptrdiff_t> row_of_column(columns, -1);
  for (std::size_t i = 0; i < form.pivots.size(); ++i) {
    row_of_column[form.pivots[i]] = static_cast<std::ptrdiff_t>(i);
  }
  std::vector<Scalar> scratch(columns);
  for (std::size_t i = form.rows.size(); i-- > 0;) {
    SparseVector& row = form.rows[i];
    bool needs_reduction = false;
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (row_of_column[row[k].first] >= 0) {
        needs_reduction = true;
        break;
      }
    }
    if (!needs_reduction) continue;

    std::size_t lo = row.front().first;
    std::size_t hi = row.back().first;
    for (auto& [c, v] : row) scratch[c] = v;
    for (std::size_t c = lo + 1; c < columns; ++c) {
      if (row_of_column[c] < 0 || is_zero(scratch[c])) continue;
      const Scalar factor = scratch[c];
      for (const auto& [k, v] : form.rows[row_of_column[c]]) {
        scratch[k] -= factor * v;
        hi = std::max(hi, k);
      }
    }
    row.clear();
    for (std::size_t c = lo; c <= hi; ++c) {
      if (!is_zero(scratch[c])) row.emplace_back(c, scratch[c]);
      scratch[c] = 0;
    }
  }
  return form;
}

void LinearSystem::add_equation(SparseVector coefficients, Scalar rhs) {
  std::sort(coefficients.begin(), coefficients.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector merged;
  for (auto& entry : coefficients) {
    if (entry.first >= unknowns_) {
      throw std::out_of_range("LinearSystem: unknown index out of range");
    }
    if (!merged.empty() && merged.back().first == entry.first) {
      merged.back().second += entry.second;
      if (is_zero(merged.back().second)) merged.pop_back();
    } else if (!is_zero(entry.second)) {
      merged.push_back(std::move(entry));
    }
  }
  rows_.push_back(std::move(merged));
  rhs_.push_back(std::move(rhs));
}

std::vector<Scalar> LinearSystem::residual(const std::vector<Scalar>& x) const {
  std::vector<Scalar> r(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar acc = -rhs_[i];
    for (const auto& [j, v] : rows_[i]) acc += v * x.at(j);
    r[i] = acc;
  }
  return r;
}

bool LinearSystem::satisfied_by(const std::vector<Scalar>& x) const {
  if (x.size() != unknowns_) return false;
  for (const auto& r : residual(x)) {
    if (!is_zero(r)) return false;
  }
  return true;
}

SystemSolution solve_system(const LinearSystem& system) {
  const std::size_t n = system.unknowns();
  std::vector<SparseVector> augmented;
  augmented.reserve(system.equations());
  for (std::size_t i = 0; i < system.equations(); ++i) {
    SparseVector row = system.coefficients(i);
    if (!is_zero(system.rhs(i))) row.emplace_back(n, system.rhs(i));
    augmented.push_back(std::move(row));
  }
  EchelonForm form = reduced_echelon(std::move(augmented), n + 1);

  SystemSolution out;
  if (!form.pivots.empty() && form.pivots.back() == n) {
    out.feasible = false;
    out.inconsistent_equation = form.origins.back();
    out.rank = form.rank() - 1;
    out.pivots.assign(form.pivots.begin(), form.pivots.end() - 1);
    return out;
  }
  out.feasible = true;
  out.rank = form.rank();
  out.pivots = form.pivots;
  out.solution.assign(n, Scalar(0));
  for (std::size_t i = 0; i < form.rows.size(); ++i) {
    const SparseVector& row = form.rows[i];
    if (!row.empty() && row.back().first == n) out.solution[form.pivots[i]] = row.back().second;
  }
  return out;
}

std::optional<std::vector<Scalar>> infeasibility_multipliers(const LinearSystem& system) {
  const std::size_t m = system.equations();
  std::vector<SparseVector> columns(system.unknowns());
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [j, v] : system.coefficients(i)) columns[j].emplace_back(i, v);
  }
  LinearSystem dual(m);
  for (auto& column : columns) {
    if (!column.empty()) dual.add_equation(std::move(column), Scalar(0));
  }
  SparseVector rhs_row;
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_zero(system.rhs(i))) rhs_row.emplace_back(i, system.rhs(i));
  }
  dual.add_equation(std::move(rhs_row), Scalar(1));
  SystemSolution solved = solve_system(dual);
  if (!solved.feasible) return std::nullopt;
  return solved.solution;
}

bool certifies_infeasibility(const LinearSystem& system, const std::vector<Scalar>& multipliers) {
  if (multipliers.size() != system.equations()) return false;
  std::vector<Scalar> combined(system.unknowns());
  Scalar rhs = 0;
  for (std::size_t i = 0; i < system.equations(); ++i) {
    if (is_zero(multipliers[i])) continue;
    for (const auto& [j, v] : system.coefficients(i)) combined[j] += multipliers[i] * v;
    rhs += multipliers[i] * system.rhs(i);
  }
  for (const auto& c : combined) {
    if (!is_zero(c)) return false;
  }
  return !is_zero(rhs);
}

}  // namespace joinalg
