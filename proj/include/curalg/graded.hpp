#pragma once

#include "curalg/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace curalg {

struct BasisElement {
  std::string label;
  int degree = 0;
};

/// Finite-dimensional Z-graded vector space with a named basis, ordered by
/// ascending (degree, label).
class GradedSpace {
 public:
  GradedSpace() = default;
  /// Sorts the basis; throws std::invalid_argument on duplicate labels.
  explicit GradedSpace(std::vector<BasisElement> basis);

  std::size_t dim() const { return basis_.size(); }
  const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(std::size_t i) const { return basis_[i].label; }
  int degree(std::size_t i) const { return basis_[i].degree; }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws std::out_of_range naming the label.
  std::size_t index(const std::string& label) const;

  /// Positions of the basis elements in degree d, ascending.
  const std::vector<std::size_t>& in_degree(int d) const;
  std::vector<int> degrees() const;
  std::size_t dim_in_degree(int d) const { return in_degree(d).size(); }

  /// Degree of a nonzero homogeneous vector; nullopt when empty or mixed.
  std::optional<int> degree_of(const Vec& v) const;

  std::string describe(const Vec& v) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b);

 private:
  std::vector<BasisElement> basis_;
  std::unordered_map<std::string, std::size_t> index_;
  std::map<int, std::vector<std::size_t>> degree_index_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

inline SpacePtr make_space(std::vector<BasisElement> basis) {
  return std::make_shared<const GradedSpace>(std::move(basis));
}

/// Degree-homogeneous linear map stored by columns: column j is the image of
/// source basis vector j in target coordinates.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(SpacePtr source, SpacePtr target, int degree);

  static GradedMap zero(SpacePtr source, SpacePtr target, int degree);
  static GradedMap identity(SpacePtr space);

  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  int degree() const { return degree_; }

  void add(std::size_t target_index, std::size_t source_index, const Scalar& c);
  void add(const std::string& target_label, const std::string& source_label, const Scalar& c);
  void set_column(std::size_t j, Vec v) { columns_.at(j) = std::move(v); }
  const Vec& column(std::size_t j) const { return columns_[j]; }
  Scalar entry(std::size_t i, std::size_t j) const { return columns_[j].get(i); }

  Vec apply(const Vec& v) const;
  /// (*this) ∘ other
  GradedMap compose(const GradedMap& other) const;
  GradedMap operator+(const GradedMap& other) const;
  GradedMap scaled(const Scalar& c) const;
  bool is_zero() const;

  /// Entries with degree(target) != degree(source) + degree.
  std::vector<std::pair<std::size_t, std::size_t>> degree_violations() const;

  /// Matrix rows (target index -> row) restricted to the given source columns;
  /// row entries are indexed by position in `cols`.
  std::vector<Vec> rows_for(const std::vector<std::size_t>& cols) const;
  std::vector<Vec> rows() const;

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.degree_ == b.degree_ && a.columns_ == b.columns_;
  }

 private:
  SpacePtr source_, target_;
  int degree_ = 0;
  std::vector<Vec> columns_;
};

std::size_t rank(const GradedMap& m);

/// A subquotient Z/B of an ambient graded space, with deterministic echelon
/// representatives. For a subspace B is zero; for a quotient Z is everything.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(SpacePtr ambient, std::optional<Echelon> numerator, Echelon denominator);

  const SpacePtr& ambient() const { return ambient_; }
  /// Induced graded space; basis labels are the ambient labels of the
  /// representatives' pivots.
  const SpacePtr& space() const { return space_; }
  std::size_t dim() const { return reps_.size(); }
  const std::vector<Vec>& representatives() const { return reps_; }
  const Vec& representative(std::size_t i) const { return reps_[i]; }
  const Echelon& denominator() const { return denominator_; }
  bool whole_numerator() const { return !numerator_.has_value(); }

  /// Canonical form of v modulo the denominator.
  Vec normal_form(const Vec& v) const { return denominator_.reduce(v); }
  bool in_numerator(const Vec& v) const;
  /// Coordinates of the class of v; throws std::domain_error when v is not in
  /// the numerator.
  Vec coords(const Vec& v) const;
  /// Σ c_i rep_i
  Vec lift(const Vec& coords) const;

  GradedMap projection() const;  // ambient -> space (defined on the numerator)
  GradedMap section() const;     // space -> ambient

 private:
  SpacePtr ambient_;
  std::optional<Echelon> numerator_;
  Echelon denominator_;
  std::vector<Vec> reps_;
  std::vector<std::size_t> rep_pivots_;
  SpacePtr space_;
};

Subquotient kernel(const GradedMap& m);
Subquotient image(const GradedMap& m);
/// Subspace spanned by vectors of an ambient space.
Subquotient span(SpacePtr ambient, const std::vector<Vec>& vectors);
/// ambient / sub. Representatives are the non-pivot basis directions of sub.
Subquotient quotient(SpacePtr ambient, const Subquotient& sub);
Subquotient quotient(SpacePtr ambient, const std::vector<Vec>& sub);

/// Tensor product with index bookkeeping; labels are "a*b".
struct TensorSpace {
  SpacePtr left, right, space;
  std::vector<std::size_t> index;                            // i * dim(right) + j -> position
  std::vector<std::pair<std::size_t, std::size_t>> factors;  // position -> (i, j)

  std::size_t at(std::size_t i, std::size_t j) const { return index[i * right->dim() + j]; }
};

TensorSpace tensor(SpacePtr a, SpacePtr b);

/// (V[k])^n = V^{n+k}: every element moves down by k. Labels are unchanged.
SpacePtr shift(const GradedSpace& v, int k);

}  // namespace curalg
