#include "curalg/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace curalg {

GradedSpace::GradedSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
  std::stable_sort(basis_.begin(), basis_.end(), [](const BasisElement& a, const BasisElement& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.label < b.label;
  });
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!index_.emplace(basis_[i].label, i).second)
      throw std::invalid_argument("duplicate basis label '" + basis_[i].label + "'");
    degree_index_[basis_[i].degree].push_back(i);
  }
}

std::optional<std::size_t> GradedSpace::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedSpace::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::out_of_range("unknown basis label '" + label + "'");
  return it->second;
}

const std::vector<std::size_t>& GradedSpace::in_degree(int d) const {
  static const std::vector<std::size_t> empty;
  auto it = degree_index_.find(d);
  return it == degree_index_.end() ? empty : it->second;
}

std::vector<int> GradedSpace::degrees() const {
  std::vector<int> out;
  for (const auto& [d, _] : degree_index_) out.push_back(d);
  return out;
}

std::optional<int> GradedSpace::degree_of(const Vec& v) const {
  if (v.empty()) return std::nullopt;
  int d = degree(v.leading());
  for (const auto& [i, _] : v)
    if (degree(i) != d) return std::nullopt;
  return d;
}

std::string GradedSpace::describe(const Vec& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << "(" << to_string(c) << ")";
    os << basis_[i].label;
  }
  return os.str();
}

bool operator==(const GradedSpace& a, const GradedSpace& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i].label != b[i].label || a[i].degree != b[i].degree) return false;
  return true;
}

GradedMap::GradedMap(SpacePtr source, SpacePtr target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), columns_(source_->dim()) {}

GradedMap GradedMap::zero(SpacePtr source, SpacePtr target, int degree) {
  return GradedMap(std::move(source), std::move(target), degree);
}

GradedMap GradedMap::identity(SpacePtr space) {
  GradedMap m(space, space, 0);
  for (std::size_t i = 0; i < space->dim(); ++i) m.add(i, i, 1);
  return m;
}

void GradedMap::add(std::size_t target_index, std::size_t source_index, const Scalar& c) {
  columns_.at(source_index).add(target_index, c);
}

void GradedMap::add(const std::string& target_label, const std::string& source_label, const Scalar& c) {
  add(target_->index(target_label), source_->index(source_label), c);
}

Vec GradedMap::apply(const Vec& v) const {
  Vec out;
  for (const auto& [j, c] : v) out.axpy(c, columns_[j]);
  return out;
}

GradedMap GradedMap::compose(const GradedMap& other) const {
  GradedMap out(other.source_, target_, degree_ + other.degree_);
  for (std::size_t j = 0; j < other.columns_.size(); ++j) out.columns_[j] = apply(other.columns_[j]);
  return out;
}

GradedMap GradedMap::operator+(const GradedMap& other) const {
  GradedMap out = *this;
  for (std::size_t j = 0; j < columns_.size(); ++j) out.columns_[j] += other.columns_[j];
  return out;
}

GradedMap GradedMap::scaled(const Scalar& c) const {
  GradedMap out = *this;
  for (auto& col : out.columns_) col = col.scaled(c);
  return out;
}

bool GradedMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Vec& v) { return v.empty(); });
}

std::vector<std::pair<std::size_t, std::size_t>> GradedMap::degree_violations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, _] : columns_[j])
      if (target_->degree(i) != source_->degree(j) + degree_) out.emplace_back(i, j);
  return out;
}

std::vector<Vec> GradedMap::rows_for(const std::vector<std::size_t>& cols) const {
  std::map<std::size_t, Vec> rows;
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (const auto& [i, c] : columns_[cols[k]]) rows[i].add(k, c);
  std::vector<Vec> out;
  for (auto& [_, r] : rows) out.push_back(std::move(r));
  return out;
}

std::vector<Vec> GradedMap::rows() const {
  std::vector<std::size_t> all(columns_.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return rows_for(all);
}

std::size_t rank(const GradedMap& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.source()->dim(); ++j) cols.push_back(m.column(j));
  return rref(cols).rank();
}

Subquotient::Subquotient(SpacePtr ambient, std::optional<Echelon> numerator, Echelon denominator)
    : ambient_(std::move(ambient)), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (!numerator_) {
    std::vector<bool> killed(ambient_->dim(), false);
    for (auto p : denominator_.pivots) killed[p] = true;
    for (std::size_t j = 0; j < ambient_->dim(); ++j)
      if (!killed[j]) reps_.push_back(Vec::unit(j));
  } else {
    for (const auto& row : denominator_.rows)
      if (!numerator_->contains(row))
        throw std::logic_error("subquotient denominator is not contained in the numerator");
    std::vector<Vec> reduced;
    for (const auto& z : numerator_->rows) reduced.push_back(denominator_.reduce(z));
    reps_ = rref(reduced).rows;
  }
  std::vector<BasisElement> basis;
  for (const auto& r : reps_) {
    rep_pivots_.push_back(r.leading());
    basis.push_back((*ambient_)[r.leading()]);
  }
  space_ = make_space(std::move(basis));
  // the induced basis is sorted by (degree, label); keep reps in that order
  std::vector<Vec> sorted(reps_.size());
  std::vector<std::size_t> pivots(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    std::size_t pos = space_->index(ambient_->label(rep_pivots_[i]));
    sorted[pos] = reps_[i];
    pivots[pos] = rep_pivots_[i];
  }
  reps_ = std::move(sorted);
  rep_pivots_ = std::move(pivots);
}

bool Subquotient::in_numerator(const Vec& v) const { return !numerator_ || numerator_->contains(v); }

Vec Subquotient::coords(const Vec& v) const {
  Vec nf = normal_form(v);
  Vec c;
  for (std::size_t i = 0; i < reps_.size(); ++i) c.add(i, nf.get(rep_pivots_[i]));
  if (!(lift(c) == nf)) throw std::domain_error("vector " + ambient_->describe(v) + " is outside the subquotient");
  return c;
}

Vec Subquotient::lift(const Vec& coords) const {
  Vec out;
  for (const auto& [i, c] : coords) out.axpy(c, reps_[i]);
  return out;
}

GradedMap Subquotient::projection() const {
  GradedMap m(ambient_, space_, 0);
  for (std::size_t j = 0; j < ambient_->dim(); ++j) {
    Vec nf = normal_form(Vec::unit(j));
    for (std::size_t i = 0; i < reps_.size(); ++i) m.add(i, j, nf.get(rep_pivots_[i]));
  }
  return m;
}

GradedMap Subquotient::section() const {
  GradedMap m(space_, ambient_, 0);
  for (std::size_t i = 0; i < reps_.size(); ++i) m.set_column(i, reps_[i]);
  return m;
}

Subquotient kernel(const GradedMap& m) {
  return Subquotient(m.source(), null_space(m.rows(), m.source()->dim()), Echelon{});
}

Subquotient image(const GradedMap& m) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < m.source()->dim(); ++j) cols.push_back(m.column(j));
  return Subquotient(m.target(), rref(cols), Echelon{});
}

Subquotient span(SpacePtr ambient, const std::vector<Vec>& vectors) {
  return Subquotient(std::move(ambient), rref(vectors), Echelon{});
}

Subquotient quotient(SpacePtr ambient, const Subquotient& sub) {
  std::vector<Vec> vs;
  for (const auto& r : sub.representatives()) vs.push_back(r);
  return quotient(std::move(ambient), vs);
}

Subquotient quotient(SpacePtr ambient, const std::vector<Vec>& sub) {
  return Subquotient(std::move(ambient), std::nullopt, rref(sub));
}

TensorSpace tensor(SpacePtr a, SpacePtr b) {
  TensorSpace t;
  t.left = a;
  t.right = b;
  std::vector<BasisElement> basis;
  basis.reserve(a->dim() * b->dim());
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < b->dim(); ++j)
      basis.push_back({a->label(i) + "*" + b->label(j), a->degree(i) + b->degree(j)});
  t.space = make_space(basis);
  t.index.resize(a->dim() * b->dim());
  t.factors.resize(a->dim() * b->dim());
  for (std::size_t i = 0; i < a->dim(); ++i)
    for (std::size_t j = 0; j < b->dim(); ++j) {
      std::size_t pos = t.space->index(a->label(i) + "*" + b->label(j));
      t.index[i * b->dim() + j] = pos;
      t.factors[pos] = {i, j};
    }
  return t;
}

SpacePtr shift(const GradedSpace& v, int k) {
  std::vector<BasisElement> basis = v.basis();
  for (auto& e : basis) e.degree -= k;
  return make_space(std::move(basis));
}

}  // namespace curalg
