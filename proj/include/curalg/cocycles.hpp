#pragma once

#include "curalg/constructions.hpp"
#include "curalg/functors.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace curalg {

/// Finite-dimensional g-module in degree 0; action[x] is the operator of the
/// basis element x.
struct LieModule {
  SpacePtr space;
  std::vector<GradedMap> action;

  std::size_t dim() const { return space->dim(); }
  Vec act(std::size_t x, const Vec& m) const { return action[x].apply(m); }
};

LieModule trivial_module(const LieAlgebra& g, SpacePtr space);
LieModule adjoint_module(const LieAlgebra& g);
/// Labels "x*", with (x·ξ)(y) = -ξ([x,y]).
LieModule coadjoint_module(const LieAlgebra& g);
/// "module morphism": ρ([x,y]) = ρ(x)ρ(y) - ρ(y)ρ(x) on every basis pair.
Certificate validate_module(const LieAlgebra& g, const LieModule& m);

/// Cochains Λⁿg*⊗M for n ≤ max_degree in one graded space, basis labels
/// "x^y|m" (just "|m" in degree 0), with
/// (dc)(x_0..x_n) = Σ (-1)^i x_i·c(..x̂_i..) + Σ_{i<j} (-1)^{i+j} c([x_i,x_j],..x̂_i..x̂_j..).
/// The top degree maps to zero.
struct CeComplex {
  LieAlgebra g;
  LieModule module;
  int max_degree = 0;
  SpacePtr space;
  GradedMap d;

  /// Index of the cochain ξ_S⊗m for a strictly increasing index list S.
  std::size_t index(const std::vector<std::size_t>& subset, std::size_t m) const;
};

CeComplex ce_complex(const LieAlgebra& g, const LieModule& m, int max_degree = 4);
/// Hⁿ(g, M) for 0 ≤ n ≤ 3.
CohomologyReport ce_cohomology(const LieAlgebra& g, const LieModule& m, int n);

/// Deterministic bases of the invariant symmetric forms (S²g*)^g and (S³g*)^g.
std::vector<Form2> invariant_forms2(const LieAlgebra& g);
std::vector<Form3> invariant_forms3(const LieAlgebra& g);

/// Module-valued 2-cochain on a Lie algebra, dense over basis pairs.
struct Cocycle2 {
  std::string name;
  LieAlgebra base;
  LieModule module;
  std::vector<Vec> values;

  Cocycle2() = default;
  Cocycle2(std::string name, LieAlgebra base, LieModule module);

  std::size_t dim() const { return base.dim(); }
  const Vec& at(std::size_t i, std::size_t j) const { return values[i * dim() + j]; }
  Vec& at(std::size_t i, std::size_t j) { return values[i * dim() + j]; }
  Vec operator()(const Vec& u, const Vec& v) const;
  std::size_t nonzero_pairs() const;
};

/// Checks "antisymmetry" and "cocycle identity"
/// u·σ(v,w) - v·σ(u,w) + w·σ(u,v) - σ([u,v],w) + σ([u,w],v) - σ([v,w],u) = 0,
/// exhaustively over basis triples.
Certificate validate_cocycle(const Cocycle2& s);

/// σ as a degree-2 vector of ce_complex(σ.base, σ.module).
Vec as_cochain(const Cocycle2& s, const CeComplex& c);

/// Coordinates with respect to a (possibly dependent) list of vectors.
class SpanSolver {
 public:
  SpanSolver() = default;
  SpanSolver(const std::vector<Vec>& vectors, std::size_t ambient_dim);
  /// c with Σ c_i v_i = w, or nullopt when w is outside the span.
  std::optional<Vec> solve(const Vec& w) const;
  std::size_t rank() const { return rank_; }

 private:
  Echelon tagged_;
  std::size_t n_ = 0, rank_ = 0;
};

/// A section/fiber split of an extension 0 → F → E → E/F → 0 with the
/// resulting cocycle σ(u,v) = F-part of [s(u),s(v)] - s([u,v]).
struct Extraction {
  Cocycle2 cocycle;
  std::vector<Vec> section, fiber;  // total-algebra coordinates
  Certificate cert;
  SpanSolver solver;

  /// (base, fiber) coordinates of a vector in the total algebra.
  std::pair<Vec, Vec> split(const Vec& total) const;
};

/// Rejections: "direct-sum section" when section ∪ fiber is not a basis,
/// "fiber ideal" and "fiber abelian" with the offending bracket as witness.
Extraction extract_cocycle(const LieAlgebra& total, const std::vector<Vec>& section, const std::vector<Vec>& fiber,
                           const std::vector<std::string>& base_labels, const std::vector<std::string>& fiber_labels,
                           const std::string& name = {});

/// Extraction on a current algebra CA(S,E) or SA(S,E). The fiber consists of
/// the classes supported on the factor labels in `fiber_factor`.
struct CurrentExtraction {
  CurrentAlgebra total;
  std::vector<std::string> fiber_factor;
  /// (form index, g index) of base element i when the section is the
  /// current-algebra one; empty otherwise.
  std::vector<std::pair<std::size_t, std::size_t>> base_pairs;
  Extraction ext;

  const Cocycle2& cocycle() const { return ext.cocycle; }
  /// Fiber coordinates of a tensor element that lies in the fiber; throws
  /// std::domain_error otherwise.
  Vec fiber_coords(const Vec& t) const;
  /// Base coordinates of a tensor element of the total numerator.
  Vec base_coords(const Vec& t) const;
  /// Representative in Ω(S)⊗E of a fiber vector.
  Vec fiber_tensor(const Vec& fiber_coords) const;
  /// Cocycle on the same base and module whose value on base pair (i, j)
  /// is the fiber class of the tensor element value(i, j).
  Cocycle2 from_tensor(const std::string& name, const std::function<Vec(std::size_t, std::size_t)>& value) const;
};

/// Section u = φ⊗x ↦ φ⊗I(x) for CA and ↦ d̃(φ⊗I(x)) for SA; the fiber is
/// spanned by the factor labels that are not cone generators of g. Base
/// labels "φ*x".
CurrentExtraction extract_current(const CurrentAlgebra& total, const LieAlgebra& g, const std::string& name = {});
/// Fiber spanned by the given factor labels; the base is the complement
/// spanned by total basis vectors off the fiber pivots.
CurrentExtraction extract_quotient(const CurrentAlgebra& total, const std::vector<std::string>& fiber_factor,
                                   const std::string& name = {});

/// Closed-form evaluators on u = φ⊗x, v = ψ⊗y. The central generator is
/// looked up by label in the factor dgla.
Cocycle2 sigma_gamma(const CurrentExtraction& e, const Form2& gamma, const std::string& c1 = "c1");
/// p(x,y) φdψ⊗c₂, as a class modulo exact elements.
Cocycle2 sigma_p(const CurrentExtraction& e, const Form2& p, const std::string& c2 = "c2");
/// p(x,y)(φdψ - dφψ) + ω(x,y)d(φψ) in A¹, as tensor elements ⊗ c₁.
Vec sigma_N_tensor(const CurrentExtraction& e, const Form2& p, const Form2& omega, std::size_t i, std::size_t j,
                   const std::string& c1 = "c1");
/// 2p(x,y) dφ dψ ⊗ c₂.
Vec neeb_c2_tensor(const CurrentExtraction& e, const Form2& p, std::size_t i, std::size_t j,
                   const std::string& c2 = "c2");

/// ½(I(u)·δI(v) - I(v)·δI(u) + ω(I(du),I(v)) - ω(I(dv),I(u)) + ω(I(u),L(v)) - ω(I(v),L(u)))
/// with the form parts multiplied in front. V labels are looked up in E.
Cocycle2 sigma_omega_delta(const CurrentExtraction& e, const LieAlgebra& g, const GDiffSpace& v,
                           const ExtensionDatum& ext);
/// -φψ⊗I(x)I(y)e on CA; the SA version applies the tensor differential.
Cocycle2 sigma_e(const CurrentExtraction& e, const GDiffSpace& v, const Vec& vec_e);
Cocycle2 sigma_e_sa(const CurrentExtraction& e, const GDiffSpace& v, const Vec& vec_e);
/// φψ⊗ι_y ι_x H.
Cocycle2 sigma_H(const CurrentExtraction& e, const GDiffSpace& v, const Vec& h);

/// Pushes a CA-valued cocycle through the tensor differential into the SA
/// fiber of `target`. Requires matching base labels.
Cocycle2 differential(const CurrentExtraction& source, const Cocycle2& sigma, const CurrentExtraction& target);

struct CocycleComparison {
  bool equal = false;
  std::string witness;         // first differing pair (exact) or reason
  std::optional<std::vector<Vec>> tau;  // cobounding 1-cochain: τ(e_i) in module coordinates
};

enum class CompareMode { exact, cohomologous };

/// Exact: coefficient equality. Cohomologous: solves a - b = d_CE τ.
CocycleComparison compare_cocycles(const Cocycle2& a, const Cocycle2& b, CompareMode mode);

/// d_CE τ for a 1-cochain τ(e_i) ∈ M.
Cocycle2 coboundary(const LieAlgebra& g, const LieModule& m, const std::vector<Vec>& tau, const std::string& name = {});

/// The bracket table of CA(S, sigma dgla): for V = Ω(M)[k+1] and H,
///  [φ⊗I(x), ψ⊗I(y)] = φψ⊗I[x,y] + φψ⊗ι_y ι_x H,
///  [φ⊗I(x), η⊗α] = φη⊗L(x)α + (-1)^{|η|} dφ η⊗I(x)α,
///  [η⊗α, η'⊗α'] = 0,
/// and d(η⊗β) = 0 in the quotient, all as classes. Also records the
/// cocycle comparison with σ_H.
Certificate verify_prin_brackets(const Cdga& s, const GDiffSpace& action, const Vec& h, int k);

}  // namespace curalg
