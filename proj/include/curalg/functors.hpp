#pragma once

#include "curalg/algebra.hpp"
#include "curalg/certificate.hpp"

#include <memory>
#include <string>

namespace curalg {

enum class Functor { CA, SA };

/// CA(S,A) = (Ω⊗A)^{-1} / exact with the derived bracket, or
/// SA(S,A) = closed elements of (Ω⊗A)^0 with the plain bracket.
/// Basis i of `lie` is the class of representative i of `sub`.
struct CurrentAlgebra {
  Functor kind = Functor::CA;
  std::shared_ptr<const TensorDgla> tensor;
  Subquotient sub;
  LieAlgebra lie;
  Certificate cert;

  std::size_t dim() const { return sub.dim(); }
  const Vec& rep(std::size_t i) const { return sub.representative(i); }
  /// Class coordinates of a tensor element; throws std::domain_error when it
  /// is not in the numerator.
  Vec coords(const Vec& t) const { return sub.coords(t); }
  /// Derived bracket for CA, plain bracket for SA, on tensor elements.
  Vec bracket(const Vec& x, const Vec& y) const;
  const Dgla& dgla() const { return tensor->dgla; }
};

/// [x, dy] in Ω(S)⊗A.
Vec derived_bracket(const TensorDgla& t, const Vec& x, const Vec& y);

/// Certificate checks: "derived bracket well-defined" (CA only),
/// "bracket closure" (SA only), "antisymmetry", "jacobi".
CurrentAlgebra ca(const Cdga& s, const Dgla& a);
CurrentAlgebra sa(const Cdga& s, const Dgla& a);
CurrentAlgebra ca(std::shared_ptr<const TensorDgla> t);
CurrentAlgebra sa(std::shared_ptr<const TensorDgla> t);

/// 0 → H^{-1} → CA → SA → H^0 → 0 with the maps materialized.
struct ExactnessCertificate {
  std::size_t dim_h_minus1 = 0, dim_ca = 0, dim_sa = 0, dim_h0 = 0;
  std::size_t rank_inclusion = 0, rank_d = 0, rank_projection = 0;
  GradedMap inclusion;   // H^{-1} → CA
  GradedMap d;           // CA → SA
  GradedMap projection;  // SA → H^0
  Certificate cert;

  bool passed() const { return cert.passed(); }
};

ExactnessCertificate four_term_sequence(const CurrentAlgebra& ca_alg, const CurrentAlgebra& sa_alg);
ExactnessCertificate four_term_sequence(const Cdga& s, const Dgla& a);

/// Degree-0 map of CDGAs or dglas given by its matrix.
struct CdgaMorphism {
  Cdga source, target;
  GradedMap map;
};
struct DglaMorphism {
  Dgla source, target;
  GradedMap map;
};

Certificate validate_morphism(const CdgaMorphism& f);
Certificate validate_morphism(const DglaMorphism& f);
DglaMorphism identity_morphism(const Dgla& a);
CdgaMorphism identity_morphism(const Cdga& c);
DglaMorphism compose(const DglaMorphism& g, const DglaMorphism& f);
CdgaMorphism compose(const CdgaMorphism& g, const CdgaMorphism& f);

/// Induced Lie algebra map together with its checks.
struct LieMorphism {
  GradedMap map;
  Certificate cert;
};

/// Map X → Y induced by f_S ⊗ f_A, where X and Y are both CA or both SA over
/// the sources and targets of the morphisms. Throws Rejected when either
/// morphism fails validation.
LieMorphism current_map(const CurrentAlgebra& x, const CurrentAlgebra& y, const CdgaMorphism& fs,
                        const DglaMorphism& fa);

/// CA and SA images of a short exact sequence A → B → C of dglas.
struct SesImage {
  Certificate input;  // degreewise exactness of the given sequence
  Certificate ca, sa;
  bool passed() const { return input.passed() && ca.passed() && sa.passed(); }
};

/// Throws Rejected("C acyclic", "H^n != 0 at n=<deg>") when C has cohomology.
SesImage ses_image(const DglaMorphism& i, const DglaMorphism& p, const Cdga& s);

/// A⁰(S)⊗g with the pointwise bracket [φ⊗x, ψ⊗y] = φψ⊗[x,y]; labels "φ*x".
LieAlgebra pointwise_current(const Cdga& s, const LieAlgebra& g);

struct CurrentIso {
  LieAlgebra pointwise;
  CurrentAlgebra ca_alg, sa_alg;
  GradedMap to_ca, to_sa;  // φ⊗x ↦ [φ⊗I(x)], φ⊗x ↦ φ⊗L(x) + dφ⊗I(x)
  Certificate cert;
};

/// Compares CA(S, C g) and SA(S, C g) with the pointwise current algebra.
CurrentIso current_iso(const Cdga& s, const LieAlgebra& g);

}  // namespace curalg
