#pragma once

#include "curalg/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace curalg {

/// Sparse vector over Scalar, keyed by basis position. Zero coefficients are
/// never stored, so two vectors are equal iff their entry maps are equal.
class Vec {
 public:
  using Map = std::map<std::size_t, Scalar>;

  Vec() = default;
  static Vec unit(std::size_t i, const Scalar& c = 1);

  Scalar get(std::size_t i) const;
  void add(std::size_t i, const Scalar& c);
  void set(std::size_t i, const Scalar& c);
  /// this += c * other
  void axpy(const Scalar& c, const Vec& other);
  Vec scaled(const Scalar& c) const;

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  /// Smallest stored index; the vector must be nonzero.
  std::size_t leading() const { return entries_.begin()->first; }

  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  friend bool operator==(const Vec& a, const Vec& b) { return a.entries_ == b.entries_; }
  friend Vec operator+(Vec a, const Vec& b) { a.axpy(1, b); return a; }
  friend Vec operator-(Vec a, const Vec& b) { a.axpy(-1, b); return a; }
  Vec& operator+=(const Vec& b) { axpy(1, b); return *this; }
  Vec& operator-=(const Vec& b) { axpy(-1, b); return *this; }

 private:
  Map entries_;
};

/// Reduced row echelon form. Rows are sorted by pivot, each pivot entry is 1
/// and every other row vanishes in that column.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  /// Eliminates every pivot column from v; the result is a canonical
  /// representative of v modulo the row span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return reduce(v).empty(); }
  /// Coefficients expressing v in terms of the rows, or nullopt when v is
  /// outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Adds v to the span, keeping the form reduced. Returns false when v was
  /// already in the span.
  bool insert(Vec v);
};

/// RREF with the deterministic rule "pivot = first nonzero column", which
/// coincides with ascending (degree, label) basis order.
Echelon rref(const std::vector<Vec>& rows);

/// Dense row-major view used by tests and small dense callers.
using DenseMatrix = std::vector<std::vector<Scalar>>;
std::vector<Vec> to_sparse_rows(const DenseMatrix& m);
DenseMatrix to_dense(const std::vector<Vec>& rows, std::size_t ncols);

/// Basis of the null space {x : rows * x = 0} in an ncols-dimensional space,
/// returned as an RREF basis.
Echelon null_space(const std::vector<Vec>& rows, std::size_t ncols);

}  // namespace curalg
