#include "curalg/constructions.hpp"

#include <map>

namespace curalg {

Rejected::Rejected(std::string check, std::string witness)
    : std::runtime_error(check + (witness.empty() ? "" : " fails at " + witness)),
      check_(std::move(check)),
      witness_(std::move(witness)) {}

std::string cone_L(const std::string& x) { return "L(" + x + ")"; }
std::string cone_I(const std::string& x) { return "I(" + x + ")"; }
std::string dual_l(const std::string& x) { return "l(" + x + "*)"; }
std::string dual_i(const std::string& x) { return "i(" + x + "*)"; }

namespace {

std::string pair_label(const LieAlgebra& g, std::size_t x, std::size_t y) {
  return "(" + g.label(x) + "," + g.label(y) + ")";
}

std::string triple_label(const LieAlgebra& g, std::size_t x, std::size_t y, std::size_t z) {
  return "(" + g.label(x) + "," + g.label(y) + "," + g.label(z) + ")";
}

std::string first_nonzero(const LieAlgebra& g, const Form3& f) {
  const std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!is_zero(f.at(x, y, z))) return triple_label(g, x, y, z);
  return {};
}

std::string first_nonzero(const LieAlgebra& g, const Form2& f) {
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t y = 0; y < g.dim(); ++y)
      if (!is_zero(f.at(x, y))) return pair_label(g, x, y);
  return {};
}

void require_lie(const LieAlgebra& g) {
  Certificate c = validate_lie(g);
  if (!c.passed()) {
    const Check* f = c.first_failure();
    throw Rejected("lie algebra: " + f->name, f->witness);
  }
}

std::vector<BasisElement> cone_basis(const LieAlgebra& g) {
  std::vector<BasisElement> b;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    b.push_back({cone_L(g.label(i)), 0});
    b.push_back({cone_I(g.label(i)), -1});
  }
  return b;
}

// Cone brackets and differential on a dgla whose space contains the cone basis.
void fill_cone(Dgla& a, const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::size_t> L(n), I(n);
  for (std::size_t i = 0; i < n; ++i) {
    L[i] = a.index(cone_L(g.label(i)));
    I[i] = a.index(cone_I(g.label(i)));
    a.d.add(L[i], I[i], 1);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Vec& xy = g.br(x, y);
      if (xy.empty()) continue;
      Vec lv, iv;
      for (const auto& [k, c] : xy) {
        lv.add(L[k], c);
        iv.add(I[k], c);
      }
      a.bracket.at(L[x], L[y]) = lv;
      a.set_bracket(L[x], I[y], iv);
    }
}

}  // namespace

Dgla cone(const LieAlgebra& g) {
  require_lie(g);
  Dgla a("C(" + g.name + ")", make_space(cone_basis(g)));
  fill_cone(a, g);
  return a;
}

GDiffSpace dual_cone_module(const LieAlgebra& g) {
  require_lie(g);
  const std::size_t n = g.dim();
  std::vector<BasisElement> b;
  for (std::size_t i = 0; i < n; ++i) {
    b.push_back({dual_l(g.label(i)), 0});
    b.push_back({dual_i(g.label(i)), -1});
  }
  GDiffSpace v("C(" + g.name + "*)", g, make_space(b));
  std::vector<std::size_t> l(n), io(n);
  for (std::size_t i = 0; i < n; ++i) {
    l[i] = v.space->index(dual_l(g.label(i)));
    io[i] = v.space->index(dual_i(g.label(i)));
    v.d.add(l[i], io[i], 1);
  }
  // ad*_x ξ_k = -ξ_k ∘ ad_x = -Σ_j c_{xj}^k ξ_j
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : g.br(x, j)) {
        v.L[x].add(l[j], l[k], -c);
        v.L[x].add(io[j], io[k], -c);
        v.I[x].add(io[j], l[k], -c);
      }
  return v;
}

Dgla central_extension_cone(const LieAlgebra& g, const CocycleSpec& spec) {
  require_lie(g);
  const std::size_t n = g.dim();
  if (spec.form.dim() != n) throw Rejected("cocycle dimension", std::to_string(spec.form.dim()));
  const Form2& f = spec.form;
  switch (spec.kind) {
    case CocycleSpec::Kind::rho:
      if (!f.is_skew()) throw Rejected("rho skew-symmetry", first_nonzero(g, f.symmetric_part()));
      if (auto w = first_nonzero(g, ce_differential(g, f)); !w.empty()) throw Rejected("rho cocycle", w);
      // [I(x),L(y)] = I[x,y] is forced, so d[I(x),L(y)] = L[x,y] cannot pick up ρ(x,y)c0
      if (auto w = first_nonzero(g, f); !w.empty()) throw Rejected("rho compatible with d", w);
      break;
    case CocycleSpec::Kind::lambda:
      if (!f.is_skew()) throw Rejected("lambda skew-symmetry", first_nonzero(g, f.symmetric_part()));
      if (auto w = first_nonzero(g, ce_differential_coadjoint(g, f)); !w.empty())
        throw Rejected("lambda ad*-cocycle", w);
      break;
    case CocycleSpec::Kind::p:
      if (!f.is_symmetric()) throw Rejected("p symmetry", first_nonzero(g, f.skew_part()));
      if (auto w = invariance_violation(g, f); !w.empty()) throw Rejected("p invariance", w);
      break;
  }
  const int k = spec.k();
  const std::string c = "c" + std::to_string(k);
  auto basis = cone_basis(g);
  basis.push_back({c, -k});
  Dgla a("C_" + std::string(k == 0 ? "rho" : k == 1 ? "gamma" : "p") + "(" + g.name + ")", make_space(basis));
  fill_cone(a, g);
  const std::size_t ci = a.index(c);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Scalar& v = f.at(x, y);
      if (is_zero(v)) continue;
      const std::size_t Lx = a.index(cone_L(g.label(x))), Ix = a.index(cone_I(g.label(x)));
      const std::size_t Ly = a.index(cone_L(g.label(y))), Iy = a.index(cone_I(g.label(y)));
      if (k == 1) {
        a.bracket.at(Lx, Iy).add(ci, v);
        a.bracket.at(Iy, Lx).add(ci, -v);
      } else if (k == 2) {
        a.bracket.at(Ix, Iy).add(ci, v);
      } else {
        a.bracket.at(Lx, Ly).add(ci, v);
      }
    }
  return a;
}

AlphaDatum decompose_alpha(const LieAlgebra& g, const Form2& alpha) {
  AlphaDatum out;
  out.alpha = alpha;
  out.p = alpha.symmetric_part();
  out.omega = alpha.skew_part();
  out.d_alpha = ce_differential_coadjoint(g, alpha);
  out.closed = out.d_alpha.is_zero();
  out.p_invariant = invariance_violation(g, out.p).empty();

  // (d_g α)(x,y)z = p(x,[y,z]) + (d_g ω)(x,y,z) - (p([x,y],z) + p(y,[x,z]));
  // the last bracket is the invariance defect of p.
  const std::size_t n = g.dim();
  Form3 domega = ce_differential(g, out.omega);
  auto pv = [&](std::size_t x, const Vec& v) {
    Scalar s = 0;
    for (const auto& [k, c] : v) s += c * out.p.at(x, k);
    return s;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar defect = pv(z, g.br(x, y)) + pv(y, g.br(x, z));
        Scalar rhs = pv(x, g.br(y, z)) + domega.at(x, y, z) - defect;
        if (rhs != out.d_alpha.at(x, y, z))
          throw std::logic_error("decompose_alpha: identity fails at " + triple_label(g, x, y, z));
      }
  if (out.closed && !out.p_invariant) throw std::logic_error("decompose_alpha: closed alpha with non-invariant p");
  return out;
}

Dgla cone_alpha_extension(const LieAlgebra& g, const AlphaDatum& ad) {
  require_lie(g);
  const std::size_t n = g.dim();
  if (ad.alpha.dim() != n) throw Rejected("alpha dimension", std::to_string(ad.alpha.dim()));
  if (auto w = first_nonzero(g, ce_differential_coadjoint(g, ad.alpha)); !w.empty())
    throw Rejected("alpha ad*-cocycle", w);
  auto basis = cone_basis(g);
  basis.push_back({"c1", -1});
  basis.push_back({"c2", -2});
  Dgla a("C_alpha(" + g.name + ")", make_space(basis));
  fill_cone(a, g);
  const std::size_t c1 = a.index("c1"), c2 = a.index("c2");
  a.d.add(c1, c2, 1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t Lx = a.index(cone_L(g.label(x))), Ix = a.index(cone_I(g.label(x)));
      const std::size_t Iy = a.index(cone_I(g.label(y)));
      const Scalar& v = ad.alpha.at(x, y);
      if (!is_zero(v)) {
        a.bracket.at(Lx, Iy).add(c1, v);
        a.bracket.at(Iy, Lx).add(c1, -v);
      }
      Scalar s = ad.alpha.at(x, y) + ad.alpha.at(y, x);
      if (!is_zero(s)) a.bracket.at(Ix, Iy).add(c2, s);
    }
  return a;
}

ExtensionDatum ExtensionDatum::zero(const Dgla& c, const GDiffSpace& v) {
  return ExtensionDatum{BilinearTable(c.dim()), GradedMap(c.space, v.space, 1)};
}

Dgla semidirect(const LieAlgebra& g, const GDiffSpace& v, const ExtensionDatum& ext, const std::string& name) {
  Certificate vc = validate_gdiff(v);
  if (!vc.passed()) {
    const Check* f = vc.first_failure();
    throw Rejected("module: " + f->name, f->witness);
  }
  Dgla cg = cone(g);
  const std::size_t nc = cg.dim(), nv = v.dim();
  if (ext.omega.dim() != nc || ext.delta.source()->dim() != nc || ext.delta.target()->dim() != nv)
    throw Rejected("extension datum shape", {});
  if (ext.delta.degree() != 1 || !ext.delta.degree_violations().empty()) throw Rejected("delta degree", {});

  std::vector<BasisElement> basis = cg.space->basis();
  for (const auto& b : v.space->basis()) {
    if (cg.space->find(b.label)) throw Rejected("label clash", b.label);
    basis.push_back(b);
  }
  Dgla a(name.empty() ? "C(" + g.name + ")x" + v.name : name, make_space(basis));
  std::vector<std::size_t> ci(nc), vi(nv);
  for (std::size_t i = 0; i < nc; ++i) ci[i] = a.index(cg.space->label(i));
  for (std::size_t i = 0; i < nv; ++i) vi[i] = a.index(v.space->label(i));
  auto from_cone = [&](const Vec& x) {
    Vec out;
    for (const auto& [k, c] : x) out.add(ci[k], c);
    return out;
  };
  auto from_v = [&](const Vec& x) {
    Vec out;
    for (const auto& [k, c] : x) out.add(vi[k], c);
    return out;
  };

  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      const Vec& w = ext.omega.at(i, j);
      for (const auto& [k, _] : w)
        if (v.space->degree(k) != cg.degree(i) + cg.degree(j))
          throw Rejected("omega degree", "(" + cg.space->label(i) + "," + cg.space->label(j) + ")");
      Vec anti = w + ext.omega.at(j, i).scaled(koszul(long(cg.degree(i)) * cg.degree(j)));
      if (!anti.empty()) throw Rejected("omega antisymmetry", "(" + cg.space->label(i) + "," + cg.space->label(j) + ")");
      a.bracket.at(ci[i], ci[j]) = from_cone(cg.br(i, j)) + from_v(w);
    }
  // cone element a = L(x) or I(x) acts through the module operators
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t b = 0; b < nv; ++b) {
      const std::size_t Lx = cg.index(cone_L(g.label(x))), Ix = cg.index(cone_I(g.label(x)));
      a.set_bracket(ci[Lx], vi[b], from_v(v.L[x].column(b)));
      a.set_bracket(ci[Ix], vi[b], from_v(v.I[x].column(b)));
    }
  for (std::size_t i = 0; i < nc; ++i) a.d.set_column(ci[i], from_cone(cg.d.column(i)) + from_v(ext.delta.column(i)));
  for (std::size_t b = 0; b < nv; ++b) a.d.set_column(vi[b], from_v(v.d.column(b)));

  auto lab = [&](std::initializer_list<std::size_t> idx) {
    std::string s = "(";
    bool first = true;
    for (auto i : idx) {
      s += (first ? "" : ",") + cg.space->label(i);
      first = false;
    }
    return s + ")";
  };
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t k = 0; k < nc; ++k)
        if (!jacobiator(a, ci[i], ci[j], ci[k]).empty()) throw Rejected("d_Cg omega = 0", lab({i, j, k}));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (!leibniz_defect(a, ci[i], ci[j]).empty()) throw Rejected("d_Cg delta + dbar omega = 0", lab({i, j}));
  for (std::size_t i = 0; i < nc; ++i)
    if (!a.diff(a.d.column(ci[i])).empty()) throw Rejected("dbar delta = 0", lab({i}));
  return a;
}

Dgla deform_by_e(const LieAlgebra& g, const GDiffSpace& v, const Vec& e, const std::string& name) {
  if (!e.empty() && v.space->degree_of(e) != std::optional<int>(1)) throw Rejected("e in degree 1", v.space->describe(e));
  Vec de = v.d.apply(e);
  for (std::size_t x = 0; x < g.dim(); ++x) {
    if (!v.I[x].apply(de).empty()) throw Rejected("de basic: I(x)de = 0", g.label(x));
    if (!v.L[x].apply(de).empty()) throw Rejected("de basic: L(x)de = 0", g.label(x));
  }
  Dgla cg = cone(g);
  ExtensionDatum ext = ExtensionDatum::zero(cg, v);
  for (std::size_t x = 0; x < g.dim(); ++x) {
    ext.delta.set_column(cg.index(cone_I(g.label(x))), v.I[x].apply(e).scaled(-1));
    ext.delta.set_column(cg.index(cone_L(g.label(x))), v.L[x].apply(e));
  }
  return semidirect(g, v, ext, name.empty() ? "C_e(" + g.name + ")x" + v.name : name);
}

FmsTower fms_tower(const LieAlgebra& g, const Form3& p3) {
  require_lie(g);
  const std::size_t n = g.dim();
  if (p3.dim() != n) throw Rejected("p3 dimension", std::to_string(p3.dim()));
  if (!p3.is_symmetric()) throw Rejected("p3 symmetry", {});
  if (auto w = invariance_violation(g, p3); !w.empty()) throw Rejected("p3 invariance", w);

  FmsTower out;
  out.dual = shift(dual_cone_module(g), 2);
  Dgla cg = cone(g);
  ExtensionDatum ext = ExtensionDatum::zero(cg, out.dual);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec w;
      for (std::size_t k = 0; k < n; ++k) w.add(out.dual.space->index(dual_l(g.label(k))), p3.at(x, y, k));
      ext.omega.at(cg.index(cone_I(g.label(x))), cg.index(cone_I(g.label(y)))) = w;
    }
  out.omega = ext;
  out.b = semidirect(g, out.dual, ext, "B(" + g.name + ")");

  std::vector<BasisElement> basis = out.b.space->basis();
  basis.push_back({"c4", -4});
  Dgla f("B_FMS(" + g.name + ")", make_space(basis));
  std::vector<std::size_t> m(out.b.dim());
  for (std::size_t i = 0; i < out.b.dim(); ++i) m[i] = f.index(out.b.space->label(i));
  auto lift = [&](const Vec& x) {
    Vec r;
    for (const auto& [k, c] : x) r.add(m[k], c);
    return r;
  };
  for (std::size_t i = 0; i < out.b.dim(); ++i) {
    f.d.set_column(m[i], lift(out.b.d.column(i)));
    for (std::size_t j = 0; j < out.b.dim(); ++j) f.bracket.at(m[i], m[j]) = lift(out.b.br(i, j));
  }
  const std::size_t c4 = f.index("c4");
  for (std::size_t x = 0; x < n; ++x) {
    // (I(x), ι(ξ)) ↦ ξ(x): only ξ = x* pairs nontrivially
    f.set_bracket(f.index(cone_I(g.label(x))), f.index(dual_i(g.label(x))),
                  f.br(f.index(cone_I(g.label(x))), f.index(dual_i(g.label(x)))) + Vec::unit(c4));
  }
  Certificate cert = validate_dgla(f);
  if (!cert.passed()) {
    const Check* bad = cert.first_failure();
    throw Rejected("B_FMS " + bad->name, bad->witness);
  }
  out.b_fms = std::move(f);
  return out;
}

Dgla sigma_dgla(const GDiffSpace& action, const Vec& h, int k) {
  if (!h.empty() && action.space->degree_of(h) != std::optional<int>(k + 2))
    throw Rejected("H form degree k+2", action.space->describe(h));
  if (!action.d.apply(h).empty()) throw Rejected("dH = 0", action.space->describe(h));
  GDiffSpace v = shift(action, k + 1);
  return deform_by_e(action.g, v, h, "sigma(" + action.name + ",k=" + std::to_string(k) + ")");
}

}  // namespace curalg
