#pragma once

#include "curalg/certificate.hpp"
#include "curalg/graded.hpp"

#include <memory>
#include <string>
#include <vector>

namespace curalg {

/// Dense table of sparse structure constants: entry (i, j) is the product
/// (or bracket) of basis vectors i and j.
class BilinearTable {
 public:
  BilinearTable() = default;
  explicit BilinearTable(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t dim() const { return n_; }
  const Vec& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Vec& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  Vec apply(const Vec& a, const Vec& b) const;
  std::size_t nonzero_pairs() const;

  friend bool operator==(const BilinearTable& a, const BilinearTable& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Vec> entries_;
};

/// Differential graded Lie algebra: degree-0 bracket, degree +1 differential.
struct Dgla {
  std::string name;
  SpacePtr space;
  BilinearTable bracket;
  GradedMap d;

  Dgla() = default;
  Dgla(std::string name, SpacePtr space);

  std::size_t dim() const { return space->dim(); }
  int degree(std::size_t i) const { return space->degree(i); }
  std::size_t index(const std::string& label) const { return space->index(label); }

  Vec br(const Vec& a, const Vec& b) const { return bracket.apply(a, b); }
  Vec br(std::size_t i, std::size_t j) const { return bracket.at(i, j); }
  Vec diff(const Vec& v) const { return d.apply(v); }

  /// Sets [a,b] = v and [b,a] = -(-1)^{|a||b|} v.
  void set_bracket(std::size_t a, std::size_t b, const Vec& v);
  void add_bracket(std::size_t a, std::size_t b, const Vec& v);
};

/// Graded-commutative unital algebra with a Leibniz differential: a finite
/// model of differential forms.
struct Cdga {
  std::string name;
  SpacePtr space;
  BilinearTable product;
  std::size_t unit = 0;
  GradedMap d;

  Cdga() = default;
  Cdga(std::string name, SpacePtr space, const std::string& unit_label);

  std::size_t dim() const { return space->dim(); }
  int degree(std::size_t i) const { return space->degree(i); }
  std::size_t index(const std::string& label) const { return space->index(label); }
  Vec mul(const Vec& a, const Vec& b) const { return product.apply(a, b); }
  Vec diff(const Vec& v) const { return d.apply(v); }

  /// Sets ab = v and ba = (-1)^{|a||b|} v.
  void set_product(std::size_t a, std::size_t b, const Vec& v);
  /// Fills 1·x = x·1 = x.
  void set_unit_products();
};

/// Ordinary Lie algebra, stored in degree 0.
struct LieAlgebra {
  std::string name;
  SpacePtr space;
  BilinearTable bracket;

  LieAlgebra() = default;
  LieAlgebra(std::string name, const std::vector<std::string>& labels);

  std::size_t dim() const { return space->dim(); }
  std::size_t index(const std::string& label) const { return space->index(label); }
  const std::string& label(std::size_t i) const { return space->label(i); }
  Vec br(const Vec& a, const Vec& b) const { return bracket.apply(a, b); }
  Vec br(std::size_t i, std::size_t j) const { return bracket.at(i, j); }
  /// [a,b] = v, [b,a] = -v.
  void set_bracket(const std::string& a, const std::string& b, const Vec& v);
  void set_bracket(std::size_t a, std::size_t b, const Vec& v);

  Dgla as_dgla() const;
  /// ad_x as a matrix on g.
  GradedMap ad(std::size_t x) const;
};

/// Graded complex with Cartan operators L(x) (degree 0) and I(x) (degree -1)
/// for every basis element x of g.
struct GDiffSpace {
  std::string name;
  LieAlgebra g;
  SpacePtr space;
  GradedMap d;
  std::vector<GradedMap> L, I;

  GDiffSpace() = default;
  GDiffSpace(std::string name, LieAlgebra g, SpacePtr space);

  std::size_t dim() const { return space->dim(); }
  /// Operators for an arbitrary element x = Σ x_a e_a.
  GradedMap L_of(const Vec& x) const;
  GradedMap I_of(const Vec& x) const;
};

/// [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - (-1)^{|i||j|}[e_j,[e_i,e_k]]
Vec jacobiator(const Dgla& a, std::size_t i, std::size_t j, std::size_t k);
/// d[e_i,e_j] - [de_i,e_j] - (-1)^{|i|}[e_i,de_j]
Vec leibniz_defect(const Dgla& a, std::size_t i, std::size_t j);

Certificate validate_dgla(const Dgla& a);
Certificate validate_cdga(const Cdga& c);
Certificate validate_lie(const LieAlgebra& g);
Certificate validate_gdiff(const GDiffSpace& v);

/// S1 ⊗ S2 with Koszul product sign (a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'.
Cdga tensor_cdga(const Cdga& a, const Cdga& b, std::string name = {});

/// Ω(S) ⊗ A with the factor layout kept for the current-algebra functors.
struct TensorDgla {
  Cdga model;
  Dgla factor;
  TensorSpace layout;
  Dgla dgla;

  std::size_t at(std::size_t form, std::size_t elem) const { return layout.at(form, elem); }
  /// Σ c φ⊗a for a form vector and a dgla vector.
  Vec pure(const Vec& form, const Vec& elem) const;
  /// Keeps only the terms whose dgla factor satisfies `keep`.
  template <class Pred>
  Vec filter_factor(const Vec& v, Pred keep) const {
    Vec out;
    for (const auto& [i, c] : v)
      if (keep(layout.factors[i].second)) out.add(i, c);
    return out;
  }
};

/// Bracket [φ⊗a, ψ⊗b] = (-1)^{|a||ψ|} φψ ⊗ [a,b];
/// differential d(φ⊗a) = dφ⊗a + (-1)^{|φ|} φ⊗da.
TensorDgla tensor_dgla(const Cdga& s, const Dgla& a);

/// V[k] for a g-differential space: degrees move down by k, operators keep
/// their matrices.
GDiffSpace shift(const GDiffSpace& v, int k);

struct CohomologyReport {
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<Vec> representatives;
  std::vector<std::string> labels;
  Subquotient classes;
};

/// H^n of (space, d). Throws std::domain_error if d∘d != 0.
CohomologyReport cohomology(const GradedMap& d, int degree);
/// True when H^n = 0 in every degree; otherwise the first degree with
/// nonzero cohomology goes to *witness_degree.
bool is_acyclic(const GradedMap& d, int* witness_degree = nullptr);

}  // namespace curalg
