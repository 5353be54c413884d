#include "curalg/linalg.hpp"

#include <algorithm>

namespace curalg {

Vec Vec::unit(std::size_t i, const Scalar& c) {
  Vec v;
  v.add(i, c);
  return v;
}

Scalar Vec::get(std::size_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Scalar(0) : it->second;
}

void Vec::add(std::size_t i, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = entries_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) entries_.erase(it);
  }
}

void Vec::set(std::size_t i, const Scalar& c) {
  if (is_zero(c))
    entries_.erase(i);
  else
    entries_[i] = c;
}

void Vec::axpy(const Scalar& c, const Vec& other) {
  if (is_zero(c)) return;
  for (const auto& [i, x] : other.entries_) add(i, c * x);
}

Vec Vec::scaled(const Scalar& c) const {
  Vec r;
  if (is_zero(c)) return r;
  for (const auto& [i, x] : entries_) r.entries_.emplace_hint(r.entries_.end(), i, c * x);
  return r;
}

Vec Echelon::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows.size() && !v.empty(); ++r) {
    Scalar c = v.get(pivots[r]);
    if (!is_zero(c)) v.axpy(-c, rows[r]);
  }
  return v;
}

std::optional<Vec> Echelon::coordinates(const Vec& v) const {
  Vec coords;
  for (std::size_t r = 0; r < rows.size(); ++r) coords.add(r, v.get(pivots[r]));
  Vec rebuilt;
  for (const auto& [r, c] : coords) rebuilt.axpy(c, rows[r]);
  if (!(rebuilt == v)) return std::nullopt;
  return coords;
}

bool Echelon::insert(Vec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  std::size_t p = v.leading();
  Scalar inv = 1 / v.get(p);
  v = v.scaled(inv);
  for (auto& row : rows) {
    Scalar c = row.get(p);
    if (!is_zero(c)) row.axpy(-c, v);
  }
  auto pos = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
  pivots.insert(pivots.begin() + pos, p);
  rows.insert(rows.begin() + pos, std::move(v));
  return true;
}

Echelon rref(const std::vector<Vec>& rows) {
  Echelon e;
  for (const auto& r : rows) e.insert(r);
  return e;
}

std::vector<Vec> to_sparse_rows(const DenseMatrix& m) {
  std::vector<Vec> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Vec v;
    for (std::size_t j = 0; j < row.size(); ++j) v.add(j, row[j]);
    out.push_back(std::move(v));
  }
  return out;
}

DenseMatrix to_dense(const std::vector<Vec>& rows, std::size_t ncols) {
  DenseMatrix m(rows.size(), std::vector<Scalar>(ncols, Scalar(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, c] : rows[i]) m[i][j] = c;
  return m;
}

Echelon null_space(const std::vector<Vec>& rows, std::size_t ncols) {
  Echelon e = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = Vec::unit(f);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v.add(e.pivots[r], -e.rows[r].get(f));
    basis.push_back(std::move(v));
  }
  return rref(basis);
}

}  // namespace curalg
