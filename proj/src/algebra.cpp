#include "curalg/algebra.hpp"

#include "curalg/parallel.hpp"

#include <stdexcept>

namespace curalg {

Vec BilinearTable::apply(const Vec& a, const Vec& b) const {
  Vec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      const Vec& e = at(i, j);
      if (!e.empty()) out.axpy(x * y, e);
    }
  return out;
}

std::size_t BilinearTable::nonzero_pairs() const {
  std::size_t n = 0;
  for (const auto& e : entries_)
    if (!e.empty()) ++n;
  return n;
}

Dgla::Dgla(std::string name_, SpacePtr space_)
    : name(std::move(name_)), space(std::move(space_)), bracket(space->dim()), d(space, space, 1) {}

void Dgla::set_bracket(std::size_t a, std::size_t b, const Vec& v) {
  bracket.at(a, b) = v;
  if (a != b) bracket.at(b, a) = v.scaled(-koszul(long(degree(a)) * degree(b)));
}

void Dgla::add_bracket(std::size_t a, std::size_t b, const Vec& v) {
  bracket.at(a, b) += v;
  if (a != b) bracket.at(b, a) += v.scaled(-koszul(long(degree(a)) * degree(b)));
}

Cdga::Cdga(std::string name_, SpacePtr space_, const std::string& unit_label)
    : name(std::move(name_)), space(std::move(space_)), product(space->dim()), unit(space->index(unit_label)),
      d(space, space, 1) {}

void Cdga::set_product(std::size_t a, std::size_t b, const Vec& v) {
  product.at(a, b) = v;
  if (a != b) product.at(b, a) = v.scaled(koszul(long(degree(a)) * degree(b)));
}

void Cdga::set_unit_products() {
  for (std::size_t i = 0; i < dim(); ++i) {
    product.at(unit, i) = Vec::unit(i);
    product.at(i, unit) = Vec::unit(i);
  }
}

LieAlgebra::LieAlgebra(std::string name_, const std::vector<std::string>& labels) : name(std::move(name_)) {
  std::vector<BasisElement> basis;
  for (const auto& l : labels) basis.push_back({l, 0});
  space = make_space(std::move(basis));
  bracket = BilinearTable(space->dim());
}

void LieAlgebra::set_bracket(const std::string& a, const std::string& b, const Vec& v) {
  set_bracket(index(a), index(b), v);
}

void LieAlgebra::set_bracket(std::size_t a, std::size_t b, const Vec& v) {
  bracket.at(a, b) = v;
  bracket.at(b, a) = v.scaled(-1);
}

Dgla LieAlgebra::as_dgla() const {
  Dgla out(name, space);
  out.bracket = bracket;
  return out;
}

GradedMap LieAlgebra::ad(std::size_t x) const {
  GradedMap m(space, space, 0);
  for (std::size_t y = 0; y < dim(); ++y) m.set_column(y, bracket.at(x, y));
  return m;
}

GDiffSpace::GDiffSpace(std::string name_, LieAlgebra g_, SpacePtr space_)
    : name(std::move(name_)), g(std::move(g_)), space(std::move(space_)), d(space, space, 1) {
  for (std::size_t a = 0; a < g.dim(); ++a) {
    L.emplace_back(space, space, 0);
    I.emplace_back(space, space, -1);
  }
}

GradedMap GDiffSpace::L_of(const Vec& x) const {
  GradedMap m(space, space, 0);
  for (const auto& [a, c] : x) m = m + L[a].scaled(c);
  return m;
}

GradedMap GDiffSpace::I_of(const Vec& x) const {
  GradedMap m(space, space, -1);
  for (const auto& [a, c] : x) m = m + I[a].scaled(c);
  return m;
}

namespace {

std::string tuple_label(const GradedSpace& s, std::initializer_list<std::size_t> idx) {
  std::string out = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) out += ",";
    first = false;
    out += s.label(i);
  }
  return out + ")";
}

// [e_a, v] and [v, e_c] using the table directly
Vec left_mult(const BilinearTable& t, std::size_t a, const Vec& v) {
  Vec out;
  for (const auto& [k, c] : v) out.axpy(c, t.at(a, k));
  return out;
}

Vec right_mult(const BilinearTable& t, const Vec& v, std::size_t b) {
  Vec out;
  for (const auto& [k, c] : v) out.axpy(c, t.at(k, b));
  return out;
}

void check_table_degrees(Certificate& cert, const std::string& name, const GradedSpace& s, const BilinearTable& t,
                         std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (const auto& [k, _] : t.at(i, j))
        if (s.degree(k) != s.degree(i) + s.degree(j)) ok = false;
      cert.record(name, ok, tuple_label(s, {i, j}));
    }
}

void check_map_degree(Certificate& cert, const std::string& name, const GradedMap& m, int expected) {
  auto bad = m.degree_violations();
  std::string w;
  if (!bad.empty())
    w = m.source()->label(bad.front().second) + " -> " + m.target()->label(bad.front().first);
  else if (m.degree() != expected)
    w = "declared degree " + std::to_string(m.degree());
  cert.record(name, bad.empty() && m.degree() == expected, w);
}

// Runs per-index certificates in parallel and merges them in index order so
// the reported witness is the first failure in basis order.
Certificate gather(std::size_t n, const std::function<void(std::size_t, Certificate&)>& body) {
  std::vector<Certificate> parts(n);
  parallel_for(n, [&](std::size_t i) { body(i, parts[i]); });
  Certificate out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace

Vec jacobiator(const Dgla& a, std::size_t i, std::size_t j, std::size_t k) {
  const BilinearTable& t = a.bracket;
  Vec l = left_mult(t, i, t.at(j, k));
  Vec r = right_mult(t, t.at(i, j), k) + left_mult(t, j, t.at(i, k)).scaled(koszul(long(a.degree(i)) * a.degree(j)));
  return l - r;
}

Vec leibniz_defect(const Dgla& a, std::size_t i, std::size_t j) {
  const BilinearTable& t = a.bracket;
  Vec lhs = a.d.apply(t.at(i, j));
  Vec rhs = right_mult(t, a.d.column(i), j) + left_mult(t, i, a.d.column(j)).scaled(koszul(a.degree(i)));
  return lhs - rhs;
}

Certificate validate_dgla(const Dgla& a) {
  const GradedSpace& s = *a.space;
  const std::size_t n = a.dim();
  const BilinearTable& t = a.bracket;
  Certificate cert;
  cert.subject = a.name;
  check_table_degrees(cert, "bracket degree", s, t, n);
  check_map_degree(cert, "differential degree", a.d, 1);

  Certificate body = gather(n, [&](std::size_t i, Certificate& c) {
    const long di = s.degree(i);
    c.record("d^2 = 0", a.d.apply(a.d.column(i)).empty(), s.label(i));
    for (std::size_t j = 0; j < n; ++j) {
      const long dj = s.degree(j);
      Vec anti = t.at(i, j) + t.at(j, i).scaled(koszul(di * dj));
      c.record("antisymmetry", anti.empty(), tuple_label(s, {i, j}));

      c.record("leibniz", leibniz_defect(a, i, j).empty(), tuple_label(s, {i, j}));
      for (std::size_t k = 0; k < n; ++k)
        c.record("jacobi", jacobiator(a, i, j, k).empty(), tuple_label(s, {i, j, k}));
    }
  });
  cert.merge(body);
  return cert;
}

Certificate validate_cdga(const Cdga& a) {
  const GradedSpace& s = *a.space;
  const std::size_t n = a.dim();
  const BilinearTable& t = a.product;
  Certificate cert;
  cert.subject = a.name;
  check_table_degrees(cert, "product degree", s, t, n);
  check_map_degree(cert, "differential degree", a.d, 1);
  cert.record("unit degree", s.degree(a.unit) == 0, s.label(a.unit));

  std::vector<Vec> dcol(n);
  for (std::size_t i = 0; i < n; ++i) dcol[i] = a.d.column(i);

  Certificate body = gather(n, [&](std::size_t i, Certificate& c) {
    const long di = s.degree(i);
    c.record("d^2 = 0", a.d.apply(a.d.column(i)).empty(), s.label(i));
    c.record("unit", t.at(a.unit, i) == Vec::unit(i) && t.at(i, a.unit) == Vec::unit(i), s.label(i));
    for (std::size_t j = 0; j < n; ++j) {
      const long dj = s.degree(j);
      c.record("graded commutativity", t.at(i, j) == t.at(j, i).scaled(koszul(di * dj)), tuple_label(s, {i, j}));
      Vec lhs = a.d.apply(t.at(i, j));
      Vec rhs = right_mult(t, dcol[i], j) + left_mult(t, i, dcol[j]).scaled(koszul(di));
      c.record("leibniz", lhs == rhs, tuple_label(s, {i, j}));
      for (std::size_t k = 0; k < n; ++k)
        c.record("associativity", right_mult(t, t.at(i, j), k) == left_mult(t, i, t.at(j, k)),
                 tuple_label(s, {i, j, k}));
    }
  });
  cert.merge(body);
  return cert;
}

Certificate validate_lie(const LieAlgebra& g) {
  Certificate cert = validate_dgla(g.as_dgla());
  for (std::size_t i = 0; i < g.dim(); ++i) cert.record("degree 0", g.space->degree(i) == 0, g.label(i));
  return cert;
}

Certificate validate_gdiff(const GDiffSpace& v) {
  Certificate cert;
  cert.subject = v.name;
  cert.merge(validate_lie(v.g), "g: ");
  const GradedSpace& s = *v.space;
  const std::size_t n = v.dim(), m = v.g.dim();
  check_map_degree(cert, "d degree", v.d, 1);
  for (std::size_t x = 0; x < m; ++x) {
    check_map_degree(cert, "L degree", v.L[x], 0);
    check_map_degree(cert, "I degree", v.I[x], -1);
  }
  for (std::size_t b = 0; b < n; ++b) cert.record("d^2 = 0", v.d.apply(v.d.column(b)).empty(), s.label(b));

  auto label3 = [&](std::size_t x, std::size_t y, std::size_t b) {
    return "(" + v.g.label(x) + "," + v.g.label(y) + "," + s.label(b) + ")";
  };
  Certificate body = gather(m, [&](std::size_t x, Certificate& c) {
    for (std::size_t b = 0; b < n; ++b) {
      Vec e = Vec::unit(b);
      Vec cartan = v.d.apply(v.I[x].apply(e)) + v.I[x].apply(v.d.apply(e));
      c.record("cartan L = dI + Id", cartan == v.L[x].apply(e), "(" + v.g.label(x) + "," + s.label(b) + ")");
      for (std::size_t y = 0; y < m; ++y) {
        Vec xy = v.g.br(x, y);
        Vec ll = v.L[x].apply(v.L[y].apply(e)) - v.L[y].apply(v.L[x].apply(e));
        c.record("[L,L] = L[,]", ll == v.L_of(xy).apply(e), label3(x, y, b));
        Vec li = v.L[x].apply(v.I[y].apply(e)) - v.I[y].apply(v.L[x].apply(e));
        c.record("[L,I] = I[,]", li == v.I_of(xy).apply(e), label3(x, y, b));
        Vec ii = v.I[x].apply(v.I[y].apply(e)) + v.I[y].apply(v.I[x].apply(e));
        c.record("[I,I] = 0", ii.empty(), label3(x, y, b));
      }
    }
  });
  cert.merge(body);
  return cert;
}

Cdga tensor_cdga(const Cdga& a, const Cdga& b, std::string name) {
  TensorSpace ts = tensor(a.space, b.space);
  if (name.empty()) name = a.name + "*" + b.name;
  Cdga out(name, ts.space, ts.space->label(ts.at(a.unit, b.unit)));
  const std::size_t na = a.dim(), nb = b.dim();
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t i2 = 0; i2 < na; ++i2) {
      const Vec& pa = a.product.at(i1, i2);
      if (pa.empty()) continue;
      for (std::size_t j1 = 0; j1 < nb; ++j1)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          const Vec& pb = b.product.at(j1, j2);
          if (pb.empty()) continue;
          int sign = koszul(long(b.degree(j1)) * a.degree(i2));
          Vec& slot = out.product.at(ts.at(i1, j1), ts.at(i2, j2));
          for (const auto& [p, x] : pa)
            for (const auto& [q, y] : pb) slot.add(ts.at(p, q), sign * x * y);
        }
    }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Vec col;
      for (const auto& [p, x] : a.d.column(i)) col.add(ts.at(p, j), x);
      int sign = koszul(a.degree(i));
      for (const auto& [q, y] : b.d.column(j)) col.add(ts.at(i, q), sign * y);
      out.d.set_column(ts.at(i, j), col);
    }
  return out;
}

Vec TensorDgla::pure(const Vec& form, const Vec& elem) const {
  Vec out;
  for (const auto& [i, x] : form)
    for (const auto& [j, y] : elem) out.add(at(i, j), x * y);
  return out;
}

TensorDgla tensor_dgla(const Cdga& s, const Dgla& a) {
  TensorDgla out{s, a, tensor(s.space, a.space), {}};
  const TensorSpace& ts = out.layout;
  out.dgla = Dgla(s.name + "*" + a.name, ts.space);
  Dgla& t = out.dgla;
  const std::size_t ns = s.dim(), na = a.dim();

  std::vector<std::pair<std::size_t, std::size_t>> nz;
  for (std::size_t j1 = 0; j1 < na; ++j1)
    for (std::size_t j2 = 0; j2 < na; ++j2)
      if (!a.bracket.at(j1, j2).empty()) nz.emplace_back(j1, j2);

  for (std::size_t i1 = 0; i1 < ns; ++i1)
    for (std::size_t i2 = 0; i2 < ns; ++i2) {
      const Vec& prod = s.product.at(i1, i2);
      if (prod.empty()) continue;
      for (auto [j1, j2] : nz) {
        int sign = koszul(long(a.degree(j1)) * s.degree(i2));
        Vec& slot = t.bracket.at(ts.at(i1, j1), ts.at(i2, j2));
        for (const auto& [p, x] : prod)
          for (const auto& [q, y] : a.bracket.at(j1, j2)) slot.add(ts.at(p, q), sign * x * y);
      }
    }
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      Vec col;
      for (const auto& [p, x] : s.d.column(i)) col.add(ts.at(p, j), x);
      int sign = koszul(s.degree(i));
      for (const auto& [q, y] : a.d.column(j)) col.add(ts.at(i, q), sign * y);
      t.d.set_column(ts.at(i, j), col);
    }
  return out;
}

GDiffSpace shift(const GDiffSpace& v, int k) {
  SpacePtr shifted = shift(*v.space, k);
  GDiffSpace out(v.name + "[" + std::to_string(k) + "]", v.g, shifted);
  const std::size_t n = v.dim();
  // uniform degree shift keeps the basis order
  for (std::size_t j = 0; j < n; ++j) {
    out.d.set_column(j, v.d.column(j));
    for (std::size_t x = 0; x < v.g.dim(); ++x) {
      out.L[x].set_column(j, v.L[x].column(j));
      out.I[x].set_column(j, v.I[x].column(j));
    }
  }
  return out;
}

CohomologyReport cohomology(const GradedMap& d, int degree) {
  if (!d.compose(d).is_zero()) throw std::domain_error("cohomology: d∘d != 0");
  const SpacePtr& s = d.source();
  const auto& cols = s->in_degree(degree);
  Echelon local = null_space(d.rows_for(cols), cols.size());
  std::vector<Vec> z;
  for (const auto& r : local.rows) {
    Vec v;
    for (const auto& [k, c] : r) v.add(cols[k], c);
    z.push_back(std::move(v));
  }
  std::vector<Vec> b;
  for (auto j : s->in_degree(degree - 1)) b.push_back(d.column(j));
  CohomologyReport rep;
  rep.degree = degree;
  rep.classes = Subquotient(s, rref(z), rref(b));
  rep.dimension = rep.classes.dim();
  rep.representatives = rep.classes.representatives();
  for (std::size_t i = 0; i < rep.dimension; ++i) rep.labels.push_back(rep.classes.space()->label(i));
  return rep;
}

bool is_acyclic(const GradedMap& d, int* witness_degree) {
  for (int deg : d.source()->degrees())
    if (cohomology(d, deg).dimension != 0) {
      if (witness_degree) *witness_degree = deg;
      return false;
    }
  return true;
}

}  // namespace curalg
