#pragma once

#include "curalg/algebra.hpp"
#include "curalg/forms.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace curalg {

/// Thrown by constructors whose input fails a precondition. `check` names the
/// violated condition, `witness` the first offending basis tuple.
class Rejected : public std::runtime_error {
 public:
  Rejected(std::string check, std::string witness);
  const std::string& check() const { return check_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string check_, witness_;
};

/// Cone labels: "L(x)" in degree 0 and "I(x)" in degree -1.
std::string cone_L(const std::string& x);
std::string cone_I(const std::string& x);

/// C g with [L,L]=L[,], [L,I]=I[,], [I,I]=0 and dI(x)=L(x).
Dgla cone(const LieAlgebra& g);

/// Dual-cone module: ℓ(ξ) = "l(x*)" in degree 0 and ι(ξ) = "i(x*)" in degree
/// -1, with L(x)ℓ(ξ) = ℓ(ad*_x ξ), L(x)ι(ξ) = ι(ad*_x ξ), I(x)ℓ(ξ) = ι(ad*_x ξ),
/// I(x)ι(ξ) = 0 and dι(ξ) = ℓ(ξ).
GDiffSpace dual_cone_module(const LieAlgebra& g);
std::string dual_l(const std::string& x);
std::string dual_i(const std::string& x);

/// One-dimensional central extension data for C g. For rho and p the form is
/// a bilinear form on g; for lambda, form.at(x, y) = λ(x)y.
struct CocycleSpec {
  enum class Kind { rho, lambda, p };
  Kind kind = Kind::p;
  Form2 form;

  int k() const { return kind == Kind::rho ? 0 : kind == Kind::lambda ? 1 : 2; }
};

/// C g ⊕ ℝ[k] with central generator "c<k>" in degree -k.
/// k=0 adds ρ(x,x') to [L(x),L(x')], k=1 adds λ(x)y' to [L(x),I(y')],
/// k=2 adds p(y,y') to [I(y),I(y')].
Dgla central_extension_cone(const LieAlgebra& g, const CocycleSpec& spec);

/// α: g → g* split as p + ω, with the cocycle status of α.
struct AlphaDatum {
  Form2 alpha, p, omega;
  Form3 d_alpha;  // (d_g α)(x,y)z
  bool closed = false;
  bool p_invariant = false;
};

/// Also confirms (d_g α)(x,y)z = p(x,[y,z]) + (d_g ω)(x,y,z) and that
/// d_g α = 0 forces p invariant; throws std::logic_error otherwise.
AlphaDatum decompose_alpha(const LieAlgebra& g, const Form2& alpha);

/// C g ⊕ ℝc₁ ⊕ ℝc₂ (degrees -1, -2), dc₂ = c₁, with
/// [L(x),I(y')] += α(x)y' c₁ and [I(y),I(y')] += (α(y)y' + α(y')y) c₂.
Dgla cone_alpha_extension(const LieAlgebra& g, const AlphaDatum& a);

/// (ω, δ) for a semidirect product C g ⋉ V. omega.at(a, b) is ω(a,b) in V
/// (a, b cone indices); delta maps C g → V with degree +1.
struct ExtensionDatum {
  BilinearTable omega;
  GradedMap delta;

  static ExtensionDatum zero(const Dgla& cone, const GDiffSpace& v);
};

/// (C g ⋉_ω V)_(δ): [(a,v),(b,w)] = ([a,b], a·w - (-1)^{|b||v|} b·v + ω(a,b)),
/// d̃a = da + δa. V labels must be disjoint from the cone labels.
/// Rejections name one of "d_Cg omega = 0", "d_Cg delta + dbar omega = 0",
/// "dbar delta = 0".
Dgla semidirect(const LieAlgebra& g, const GDiffSpace& v, const ExtensionDatum& ext, const std::string& name = {});

/// C_e g: δ(I(x)) = -I(x)e, δ(L(x)) = L(x)e for e ∈ V¹. Requires de basic.
Dgla deform_by_e(const LieAlgebra& g, const GDiffSpace& v, const Vec& e, const std::string& name = {});

struct FmsTower {
  GDiffSpace dual;  // C g*[2]
  ExtensionDatum omega;
  Dgla b;           // C g ⋉_ω C g*[2]
  Dgla b_fms;       // central extension of b by ℝ[4]
};

/// ω(I(x),I(y)) = ℓ(p3(x,y,·)); B_FMS adds ξ(x) c4 to [I(x), ι(ξ)].
FmsTower fms_tower(const LieAlgebra& g, const Form3& p3);

/// (C g ⋉ Ω[k+1])_(H): deform_by_e on the shifted action with e = H.
/// Requires dH = 0 and H of form degree k+2.
Dgla sigma_dgla(const GDiffSpace& action, const Vec& h, int k);

}  // namespace curalg
