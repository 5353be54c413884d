#include "curalg/functors.hpp"

#include "curalg/constructions.hpp"
#include "curalg/parallel.hpp"

namespace curalg {

namespace {

std::string pair_label(const GradedSpace& s, std::size_t i, std::size_t j) {
  return "(" + s.label(i) + "," + s.label(j) + ")";
}

std::vector<std::string> labels_of(const Subquotient& q) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < q.dim(); ++i) out.push_back(q.space()->label(i));
  return out;
}

// Structure constants in class coordinates, plus antisymmetry/Jacobi checks.
void fill_bracket(CurrentAlgebra& c) {
  const std::size_t n = c.dim();
  c.lie = LieAlgebra(c.tensor->dgla.name + (c.kind == Functor::CA ? " CA" : " SA"), labels_of(c.sub));
  std::vector<Vec> table(n * n);
  std::vector<std::string> failures(n * n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = c.bracket(c.rep(i), c.rep(j));
      if (c.kind == Functor::SA && !c.sub.in_numerator(w)) {
        failures[i * n + j] = "outside";
        continue;
      }
      table[i * n + j] = c.coords(w);
    }
  });
  const GradedSpace& s = *c.sub.space();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (c.kind == Functor::SA) c.cert.record("bracket closure", failures[i * n + j].empty(), pair_label(s, i, j));
      c.lie.bracket.at(i, j) = table[i * n + j];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c.cert.record("antisymmetry", (table[i * n + j] + table[j * n + i]).empty(), pair_label(s, i, j));
  Certificate lie = validate_lie(c.lie);
  if (const Check* jac = lie.find("jacobi"))
    c.cert.checks.push_back(*jac);
  else
    c.cert.check("jacobi");
}

}  // namespace

Vec CurrentAlgebra::bracket(const Vec& x, const Vec& y) const {
  return kind == Functor::CA ? derived_bracket(*tensor, x, y) : tensor->dgla.br(x, y);
}

Vec derived_bracket(const TensorDgla& t, const Vec& x, const Vec& y) { return t.dgla.br(x, t.dgla.diff(y)); }

CurrentAlgebra ca(std::shared_ptr<const TensorDgla> t) {
  CurrentAlgebra c;
  c.kind = Functor::CA;
  c.tensor = t;
  c.cert.subject = "CA(" + t->dgla.name + ")";
  const SpacePtr& s = t->dgla.space;
  std::vector<Vec> exact;
  for (auto j : s->in_degree(-2)) exact.push_back(t->dgla.d.column(j));
  std::vector<Vec> numerator;
  for (auto j : s->in_degree(-1)) numerator.push_back(Vec::unit(j));
  c.sub = Subquotient(s, rref(numerator), rref(exact));
  fill_bracket(c);

  // brackets with an exact element vanish in the quotient, on both sides
  const Echelon& ex = c.sub.denominator();
  for (std::size_t k = 0; k < ex.rank(); ++k)
    for (std::size_t i = 0; i < c.dim(); ++i) {
      bool ok = c.coords(c.bracket(c.rep(i), ex.rows[k])).empty() && c.coords(c.bracket(ex.rows[k], c.rep(i))).empty();
      c.cert.record("derived bracket well-defined", ok, s->describe(ex.rows[k]) + " with " + c.sub.space()->label(i));
    }
  if (!c.cert.find("derived bracket well-defined")) c.cert.check("derived bracket well-defined");
  return c;
}

CurrentAlgebra sa(std::shared_ptr<const TensorDgla> t) {
  CurrentAlgebra c;
  c.kind = Functor::SA;
  c.tensor = t;
  c.cert.subject = "SA(" + t->dgla.name + ")";
  const SpacePtr& s = t->dgla.space;
  const auto& cols = s->in_degree(0);
  Echelon local = null_space(t->dgla.d.rows_for(cols), cols.size());
  std::vector<Vec> closed;
  for (const auto& r : local.rows) {
    Vec v;
    for (const auto& [k, x] : r) v.add(cols[k], x);
    closed.push_back(std::move(v));
  }
  c.sub = span(s, closed);
  fill_bracket(c);
  return c;
}

CurrentAlgebra ca(const Cdga& s, const Dgla& a) { return ca(std::make_shared<const TensorDgla>(tensor_dgla(s, a))); }
CurrentAlgebra sa(const Cdga& s, const Dgla& a) { return sa(std::make_shared<const TensorDgla>(tensor_dgla(s, a))); }

ExactnessCertificate four_term_sequence(const CurrentAlgebra& x, const CurrentAlgebra& y) {
  if (x.kind != Functor::CA || y.kind != Functor::SA || x.tensor != y.tensor)
    throw std::invalid_argument("four_term_sequence: needs CA and SA of the same tensor dgla");
  const Dgla& t = x.dgla();
  ExactnessCertificate out;
  out.cert.subject = t.name;
  CohomologyReport hm1 = cohomology(t.d, -1), h0 = cohomology(t.d, 0);
  out.dim_h_minus1 = hm1.dimension;
  out.dim_h0 = h0.dimension;
  out.dim_ca = x.dim();
  out.dim_sa = y.dim();

  out.inclusion = GradedMap(hm1.classes.space(), x.sub.space(), 0);
  for (std::size_t k = 0; k < hm1.dimension; ++k) out.inclusion.set_column(k, x.coords(hm1.representatives[k]));
  out.d = GradedMap(x.sub.space(), y.sub.space(), 1);
  for (std::size_t i = 0; i < x.dim(); ++i) out.d.set_column(i, y.coords(t.diff(x.rep(i))));
  out.projection = GradedMap(y.sub.space(), h0.classes.space(), 0);
  for (std::size_t j = 0; j < y.dim(); ++j) out.projection.set_column(j, h0.classes.coords(y.rep(j)));

  out.rank_inclusion = rank(out.inclusion);
  out.rank_d = rank(out.d);
  out.rank_projection = rank(out.projection);
  Certificate& c = out.cert;
  c.record("inclusion injective", out.rank_inclusion == out.dim_h_minus1);
  c.record("exact at CA", out.d.compose(out.inclusion).is_zero() && out.rank_inclusion + out.rank_d == out.dim_ca);
  c.record("exact at SA", out.projection.compose(out.d).is_zero() && out.rank_d + out.rank_projection == out.dim_sa);
  c.record("projection surjective", out.rank_projection == out.dim_h0);
  c.record("dim CA = dim H^-1 + rank d", out.dim_ca == out.dim_h_minus1 + out.rank_d);
  c.record("dim SA = rank d + dim H^0", out.dim_sa == out.rank_d + out.dim_h0);

  const GradedSpace& cs = *x.sub.space();
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j) {
      Vec lhs = out.d.apply(x.lie.br(i, j));
      Vec rhs = y.lie.br(out.d.column(i), out.d.column(j));
      c.record("d Lie morphism", lhs == rhs, pair_label(cs, i, j));
    }
  for (std::size_t k = 0; k < hm1.dimension; ++k)
    for (std::size_t i = 0; i < x.dim(); ++i)
      c.record("H^-1 central", x.coords(x.bracket(hm1.representatives[k], x.rep(i))).empty(),
               hm1.labels[k] + " with " + cs.label(i));
  c.check("H^-1 central");
  for (auto b : t.space->in_degree(-1)) {
    Vec db = t.d.column(b);
    if (db.empty()) continue;
    for (std::size_t j = 0; j < y.dim(); ++j)
      c.record("exact ideal in SA", h0.classes.coords(y.bracket(y.rep(j), db)).empty(),
               y.sub.space()->label(j) + " with d" + t.space->label(b));
  }
  c.check("exact ideal in SA");
  return out;
}

ExactnessCertificate four_term_sequence(const Cdga& s, const Dgla& a) {
  auto t = std::make_shared<const TensorDgla>(tensor_dgla(s, a));
  return four_term_sequence(ca(t), sa(t));
}

Certificate validate_morphism(const CdgaMorphism& f) {
  Certificate c;
  c.subject = f.source.name + " -> " + f.target.name;
  const GradedMap& m = f.map;
  c.record("degree 0", m.degree() == 0 && m.degree_violations().empty());
  c.record("unit", m.column(f.source.unit) == Vec::unit(f.target.unit));
  const GradedSpace& s = *f.source.space;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    c.record("commutes with d", m.apply(f.source.d.column(i)) == f.target.diff(m.column(i)), s.label(i));
    for (std::size_t j = 0; j < s.dim(); ++j)
      c.record("multiplicative", m.apply(f.source.product.at(i, j)) == f.target.mul(m.column(i), m.column(j)),
               pair_label(s, i, j));
  }
  return c;
}

Certificate validate_morphism(const DglaMorphism& f) {
  Certificate c;
  c.subject = f.source.name + " -> " + f.target.name;
  const GradedMap& m = f.map;
  c.record("degree 0", m.degree() == 0 && m.degree_violations().empty());
  const GradedSpace& s = *f.source.space;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    c.record("commutes with d", m.apply(f.source.d.column(i)) == f.target.diff(m.column(i)), s.label(i));
    for (std::size_t j = 0; j < s.dim(); ++j)
      c.record("bracket", m.apply(f.source.br(i, j)) == f.target.br(m.column(i), m.column(j)), pair_label(s, i, j));
  }
  c.check("commutes with d");
  c.check("bracket");
  return c;
}

DglaMorphism identity_morphism(const Dgla& a) { return {a, a, GradedMap::identity(a.space)}; }
CdgaMorphism identity_morphism(const Cdga& a) { return {a, a, GradedMap::identity(a.space)}; }
DglaMorphism compose(const DglaMorphism& g, const DglaMorphism& f) { return {f.source, g.target, g.map.compose(f.map)}; }
CdgaMorphism compose(const CdgaMorphism& g, const CdgaMorphism& f) { return {f.source, g.target, g.map.compose(f.map)}; }

LieMorphism current_map(const CurrentAlgebra& x, const CurrentAlgebra& y, const CdgaMorphism& fs,
                        const DglaMorphism& fa) {
  if (x.kind != y.kind) throw std::invalid_argument("current_map: CA and SA mixed");
  for (const Certificate& c : {validate_morphism(fs), validate_morphism(fa)})
    if (const Check* bad = c.first_failure()) throw Rejected("morphism " + bad->name, bad->witness);
  const TensorDgla& tx = *x.tensor;
  const TensorDgla& ty = *y.tensor;
  if (!(*tx.model.space == *fs.source.space) || !(*ty.model.space == *fs.target.space) ||
      !(*tx.factor.space == *fa.source.space) || !(*ty.factor.space == *fa.target.space))
    throw std::invalid_argument("current_map: morphisms do not match the current algebras");
  auto apply = [&](const Vec& v) {
    Vec out;
    for (const auto& [k, c] : v) {
      auto [p, q] = tx.layout.factors[k];
      out.axpy(c, ty.pure(fs.map.column(p), fa.map.column(q)));
    }
    return out;
  };
  LieMorphism m;
  m.cert.subject = x.cert.subject + " -> " + y.cert.subject;
  m.map = GradedMap(x.sub.space(), y.sub.space(), 0);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Vec img = apply(x.rep(i));
    bool inside = y.sub.in_numerator(img);
    m.cert.record("lands in target", inside, x.sub.space()->label(i));
    if (inside) m.map.set_column(i, y.coords(img));
  }
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      m.cert.record("bracket", m.map.apply(x.lie.br(i, j)) == y.lie.br(m.map.column(i), m.map.column(j)),
                    pair_label(*x.sub.space(), i, j));
  m.cert.check("bracket");
  return m;
}

SesImage ses_image(const DglaMorphism& i, const DglaMorphism& p, const Cdga& s) {
  SesImage out;
  Certificate& in = out.input;
  in.subject = i.source.name + " -> " + i.target.name + " -> " + p.target.name;
  in.merge(validate_morphism(i), "i: ");
  in.merge(validate_morphism(p), "p: ");
  in.record("i injective", rank(i.map) == i.source.dim());
  in.record("p surjective", rank(p.map) == p.target.dim());
  in.record("p∘i = 0", p.map.compose(i.map).is_zero());
  in.record("im i = ker p", rank(i.map) + rank(p.map) == i.target.dim());
  int deg = 0;
  if (!is_acyclic(p.target.d, &deg)) throw Rejected("C acyclic", "H^n != 0 at n=" + std::to_string(deg));

  CdgaMorphism id = identity_morphism(s);
  for (Functor kind : {Functor::CA, Functor::SA}) {
    auto make = [&](const Dgla& a) { return kind == Functor::CA ? ca(s, a) : sa(s, a); };
    CurrentAlgebra xa = make(i.source), xb = make(i.target), xc = make(p.target);
    LieMorphism fi = current_map(xa, xb, id, i), fp = current_map(xb, xc, id, p);
    Certificate& c = kind == Functor::CA ? out.ca : out.sa;
    c.subject = std::string(kind == Functor::CA ? "CA" : "SA") + " image";
    c.merge(fi.cert, "i: ");
    c.merge(fp.cert, "p: ");
    std::size_t ri = rank(fi.map), rp = rank(fp.map);
    c.record("injective", ri == xa.dim());
    c.record("surjective", rp == xc.dim());
    c.record("composite zero", fp.map.compose(fi.map).is_zero());
    c.record("exact in the middle", ri + rp == xb.dim());
  }
  return out;
}

LieAlgebra pointwise_current(const Cdga& s, const LieAlgebra& g) {
  const auto& a0 = s.space->in_degree(0);
  std::vector<std::string> labels;
  for (auto f : a0)
    for (std::size_t x = 0; x < g.dim(); ++x) labels.push_back(s.space->label(f) + "*" + g.label(x));
  LieAlgebra out("A0(" + s.name + ")*" + g.name, labels);
  for (auto f : a0)
    for (auto h : a0) {
      const Vec& fh = s.product.at(f, h);
      for (std::size_t x = 0; x < g.dim(); ++x)
        for (std::size_t y = 0; y < g.dim(); ++y) {
          Vec v;
          for (const auto& [k, a] : fh)
            for (const auto& [z, b] : g.br(x, y)) v.add(out.index(s.space->label(k) + "*" + g.label(z)), a * b);
          out.bracket.at(out.index(s.space->label(f) + "*" + g.label(x)),
                         out.index(s.space->label(h) + "*" + g.label(y))) = v;
        }
    }
  return out;
}

CurrentIso current_iso(const Cdga& s, const LieAlgebra& g) {
  Dgla cg = cone(g);
  auto t = std::make_shared<const TensorDgla>(tensor_dgla(s, cg));
  CurrentIso out{pointwise_current(s, g), ca(t), sa(t), {}, {}, {}};
  const LieAlgebra& pw = out.pointwise;
  out.cert.subject = "current iso " + s.name + " / " + g.name;
  out.to_ca = GradedMap(pw.space, out.ca_alg.sub.space(), -1);
  out.to_sa = GradedMap(pw.space, out.sa_alg.sub.space(), 0);
  for (auto f : s.space->in_degree(0))
    for (std::size_t x = 0; x < g.dim(); ++x) {
      std::size_t col = pw.index(s.space->label(f) + "*" + g.label(x));
      Vec i_part = Vec::unit(t->at(f, cg.index(cone_I(g.label(x)))));
      out.to_ca.set_column(col, out.ca_alg.coords(i_part));
      Vec lift = Vec::unit(t->at(f, cg.index(cone_L(g.label(x))))) + t->pure(s.d.column(f), Vec::unit(cg.index(cone_I(g.label(x)))));
      out.to_sa.set_column(col, out.sa_alg.coords(lift));
    }
  Certificate& c = out.cert;
  c.merge(out.ca_alg.cert, "CA ");
  c.merge(out.sa_alg.cert, "SA ");
  const std::size_t n = pw.dim();
  c.record("CA iso", out.ca_alg.dim() == n && rank(out.to_ca) == n);
  c.record("SA iso", out.sa_alg.dim() == n && rank(out.to_sa) == n);
  bool permutation = true;
  for (std::size_t j = 0; j < n; ++j) {
    const Vec& col = out.to_ca.column(j);
    if (col.nnz() != 1 || col.begin()->second != 1) permutation = false;
  }
  c.record("CA basis is the canonical basis", permutation);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string w = pair_label(*pw.space, i, j);
      c.record("CA bracket pointwise", out.to_ca.apply(pw.br(i, j)) ==
                                           out.ca_alg.lie.br(out.to_ca.column(i), out.to_ca.column(j)), w);
      c.record("SA bracket pointwise", out.to_sa.apply(pw.br(i, j)) ==
                                           out.sa_alg.lie.br(out.to_sa.column(i), out.to_sa.column(j)), w);
    }
  ExactnessCertificate seq = four_term_sequence(out.ca_alg, out.sa_alg);
  c.record("d: CA -> SA iso", seq.rank_d == n && seq.dim_ca == n && seq.dim_sa == n);
  c.record("d matches the identifications", seq.d.compose(out.to_ca) == out.to_sa);
  return out;
}

}  // namespace curalg
