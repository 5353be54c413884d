#pragma once

#include "curalg/algebra.hpp"
#include "curalg/forms.hpp"

#include <string>
#include <vector>

namespace curalg::fixtures {

/// A Lie algebra realized by matrices; structure constants come from matrix
/// commutators expressed in the given basis.
struct MatrixLie {
  LieAlgebra g;
  std::vector<DenseMatrix> mats;
};

/// Throws std::invalid_argument if the span is not closed under commutators.
MatrixLie matrix_lie(const std::string& name, const std::vector<std::string>& labels,
                     const std::vector<DenseMatrix>& mats);

/// tr(xy) in the matrix representation.
Form2 trace_form(const MatrixLie& m);
/// (x,y,z) ↦ ½(tr(xyz) + tr(xzy)).
Form3 symmetrized_trace3(const MatrixLie& m);

LieAlgebra abelian(const std::string& name, const std::vector<std::string>& labels);
LieAlgebra ab1();
LieAlgebra ab2();
/// ℝ³ with basis e1, e2, e3.
LieAlgebra ab3();
/// [x,y] = z.
LieAlgebra heis3();
MatrixLie sl2();
MatrixLie gl2();
MatrixLie sl3();

/// Exterior algebra on degree-1 generators with zero differential.
/// Basis labels are ordered generator concatenations, "1" for the unit.
Cdga exterior(const std::string& name, const std::vector<std::string>& generators);
Cdga pt();
Cdga circ();
/// {1, eps, eta} with d eps = eta, eps² = eps·eta = 0.
Cdga intv();
Cdga t2();
Cdga t3();
Cdga circ_intv();
Cdga fms_s();
/// Ω(ℚ[x,y]/(x²,y²)): a contractible model with A¹/dA⁰ one-dimensional.
Cdga nil2();

/// Abelian dgla on the given labels, all in one degree, zero differential.
Dgla abelian_dgla(const std::string& name, const std::vector<std::string>& labels, int degree);

/// Contraction action of an abelian g on an exterior algebra with one
/// generator per basis element of g: I(e_i) = ι_i, L = 0, d = 0.
GDiffSpace contraction_module(const Cdga& exterior_algebra, const LieAlgebra& g);

std::vector<std::string> lie_names();
std::vector<std::string> cdga_names();
/// Throws std::out_of_range for unknown names.
LieAlgebra lie(const std::string& name);
Cdga cdga(const std::string& name);

}  // namespace curalg::fixtures
