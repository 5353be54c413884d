#include "curalg/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace curalg::fixtures {

namespace {

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  DenseMatrix c(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

DenseMatrix mat_sub(DenseMatrix a, const DenseMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
  return a;
}

Scalar trace(const DenseMatrix& a) {
  Scalar t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

Vec flatten(const DenseMatrix& a) {
  Vec v;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v.add(i * n + j, a[i][j]);
  return v;
}

DenseMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  DenseMatrix m(n, std::vector<Scalar>(n, Scalar(0)));
  m[i][j] = 1;
  return m;
}

// m with gen·m = ±b, if any.
std::optional<std::size_t> find_cofactor(const Cdga& c, std::size_t gen, std::size_t b) {
  for (std::size_t m = 0; m < c.dim(); ++m) {
    const Vec& p = c.product.at(gen, m);
    if (p.nnz() == 1 && p.leading() == b) return m;
  }
  return std::nullopt;
}

}  // namespace

MatrixLie matrix_lie(const std::string& name, const std::vector<std::string>& labels,
                     const std::vector<DenseMatrix>& mats) {
  if (labels.size() != mats.size()) throw std::invalid_argument("matrix_lie: label/matrix count mismatch");
  MatrixLie out{LieAlgebra(name, labels), {}};
  // reorder matrices to match the sorted basis
  out.mats.resize(mats.size());
  for (std::size_t k = 0; k < labels.size(); ++k) out.mats[out.g.index(labels[k])] = mats[k];

  // Solve Σ c_k M_k = target, using the transposed system on flattened entries.
  const std::size_t n = out.mats.size();
  std::vector<Vec> flat;
  for (const auto& m : out.mats) flat.push_back(flatten(m));
  // augmented rows: flattening of M_k plus a tag column for k; reducing a
  // commutator leaves minus its coordinates in the tag columns
  const std::size_t tag = 1'000'000;
  Echelon e;
  for (std::size_t k = 0; k < n; ++k) {
    Vec row = flat[k];
    row.add(tag + k, 1);
    e.insert(row);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      DenseMatrix c = mat_sub(mat_mul(out.mats[a], out.mats[b]), mat_mul(out.mats[b], out.mats[a]));
      Vec rem = e.reduce(flatten(c));
      Vec coeffs;
      for (const auto& [i, v] : rem) {
        if (i < tag) throw std::invalid_argument("matrix_lie: [" + out.g.label(a) + "," + out.g.label(b) + "] leaves the span");
        coeffs.add(i - tag, -v);
      }
      out.g.set_bracket(a, b, coeffs);
    }
  return out;
}

Form2 trace_form(const MatrixLie& m) {
  const std::size_t n = m.mats.size();
  Form2 p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.at(i, j) = trace(mat_mul(m.mats[i], m.mats[j]));
  return p;
}

Form3 symmetrized_trace3(const MatrixLie& m) {
  const std::size_t n = m.mats.size();
  Form3 p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      DenseMatrix ij = mat_mul(m.mats[i], m.mats[j]);
      for (std::size_t k = 0; k < n; ++k) {
        DenseMatrix ik = mat_mul(m.mats[i], m.mats[k]);
        p.at(i, j, k) = (trace(mat_mul(ij, m.mats[k])) + trace(mat_mul(ik, m.mats[j]))) / 2;
      }
    }
  return p;
}

LieAlgebra abelian(const std::string& name, const std::vector<std::string>& labels) {
  return LieAlgebra(name, labels);
}

LieAlgebra ab1() { return abelian("ab1", {"x"}); }
LieAlgebra ab2() { return abelian("ab2", {"x", "y"}); }
LieAlgebra ab3() { return abelian("ab3", {"e1", "e2", "e3"}); }

LieAlgebra heis3() {
  LieAlgebra g("heis3", {"x", "y", "z"});
  g.set_bracket("x", "y", Vec::unit(g.index("z")));
  return g;
}

MatrixLie sl2() {
  DenseMatrix h = mat_sub(elementary(2, 0, 0), elementary(2, 1, 1));
  return matrix_lie("sl2", {"e", "f", "h"}, {elementary(2, 0, 1), elementary(2, 1, 0), h});
}

MatrixLie gl2() {
  return matrix_lie("gl2", {"e11", "e12", "e21", "e22"},
                    {elementary(2, 0, 0), elementary(2, 0, 1), elementary(2, 1, 0), elementary(2, 1, 1)});
}

MatrixLie sl3() {
  std::vector<std::string> labels;
  std::vector<DenseMatrix> mats;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
        mats.push_back(elementary(3, i, j));
      }
  labels.push_back("h1");
  mats.push_back(mat_sub(elementary(3, 0, 0), elementary(3, 1, 1)));
  labels.push_back("h2");
  mats.push_back(mat_sub(elementary(3, 1, 1), elementary(3, 2, 2)));
  return matrix_lie("sl3", labels, mats);
}

Cdga exterior(const std::string& name, const std::vector<std::string>& generators) {
  const std::size_t k = generators.size();
  auto label_of = [&](unsigned mask) {
    std::string s;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) s += generators[i];
    return s.empty() ? std::string("1") : s;
  };
  std::vector<BasisElement> basis;
  for (unsigned mask = 0; mask < (1u << k); ++mask)
    basis.push_back({label_of(mask), __builtin_popcount(mask)});
  Cdga c(name, make_space(basis), "1");
  const GradedSpace& s = *c.space;
  for (unsigned a = 0; a < (1u << k); ++a)
    for (unsigned b = 0; b < (1u << k); ++b) {
      if (a & b) continue;
      // sign of sorting the concatenation: count pairs (i in a, j in b) with i > j
      int inversions = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (a & (1u << i))
          for (std::size_t j = 0; j < i; ++j)
            if (b & (1u << j)) ++inversions;
      c.product.at(s.index(label_of(a)), s.index(label_of(b))) =
          Vec::unit(s.index(label_of(a | b)), koszul(inversions));
    }
  return c;
}

Cdga pt() { return exterior("Pt", {}); }
Cdga circ() { return exterior("Circ", {"th"}); }
Cdga t2() { return exterior("T2", {"a", "b"}); }
Cdga t3() { return exterior("T3", {"a", "b", "c"}); }

Cdga intv() {
  Cdga c("Intv", make_space({{"1", 0}, {"eps", 0}, {"eta", 1}}), "1");
  c.set_unit_products();
  c.d.add("eta", "eps", 1);
  return c;
}

Cdga circ_intv() { return tensor_cdga(circ(), intv(), "CircIntv"); }
Cdga fms_s() { return tensor_cdga(t3(), intv(), "FmsS"); }

Cdga nil2() {
  Cdga c("Nil2", make_space({{"1", 0}, {"x", 0}, {"y", 0}, {"xy", 0}, {"dx", 1}, {"dy", 1}, {"ydx", 1}, {"xdy", 1},
                             {"dxdy", 2}}),
         "1");
  c.set_unit_products();
  auto set = [&](const char* a, const char* b, const char* r, int sign) {
    c.set_product(c.index(a), c.index(b), Vec::unit(c.index(r), sign));
  };
  set("x", "y", "xy", 1);
  set("x", "dy", "xdy", 1);
  set("y", "dx", "ydx", 1);
  set("dx", "dy", "dxdy", 1);
  c.d.add("dx", "x", 1);
  c.d.add("dy", "y", 1);
  c.d.add("ydx", "xy", 1);
  c.d.add("xdy", "xy", 1);
  c.d.add("dxdy", "ydx", -1);
  c.d.add("dxdy", "xdy", 1);
  return c;
}

Dgla abelian_dgla(const std::string& name, const std::vector<std::string>& labels, int degree) {
  std::vector<BasisElement> b;
  for (const auto& l : labels) b.push_back({l, degree});
  return Dgla(name, make_space(b));
}

GDiffSpace contraction_module(const Cdga& ext, const LieAlgebra& g) {
  GDiffSpace v(ext.name + "/" + g.name, g, ext.space);
  const GradedSpace& s = *ext.space;
  // generator i of the exterior algebra is the i-th degree-1 element
  const auto& gens = s.in_degree(1);
  if (gens.size() != g.dim()) throw std::invalid_argument("contraction_module: generator count differs from dim g");
  for (std::size_t x = 0; x < g.dim(); ++x) {
    // ι_x is the odd derivation with ι_x(gen_y) = δ_xy; peel one generator off:
    // ι(g·m) = ι(g)m - g·ι(m).
    std::vector<Vec> image(s.dim());
    std::vector<bool> done(s.dim(), false);
    std::function<Vec(std::size_t)> iota = [&](std::size_t b) -> Vec {
      if (done[b]) return image[b];
      Vec out;
      for (std::size_t gi = 0; gi < gens.size() && s.degree(b) > 0; ++gi) {
        auto m = find_cofactor(ext, gens[gi], b);
        if (!m) continue;
        Scalar sign = ext.product.at(gens[gi], *m).get(b);
        if (gi == x) out.add(*m, sign);
        for (const auto& [t, c] : iota(*m)) out.axpy(-sign * c, ext.product.at(gens[gi], t));
        break;
      }
      done[b] = true;
      image[b] = out;
      return out;
    };
    for (std::size_t b = 0; b < s.dim(); ++b) v.I[x].set_column(b, iota(b));
  }
  return v;
}

std::vector<std::string> lie_names() { return {"ab1", "ab2", "ab3", "heis3", "sl2", "gl2", "sl3"}; }
std::vector<std::string> cdga_names() { return {"Pt", "Circ", "Intv", "T2", "T3", "CircIntv", "FmsS", "Nil2"}; }

LieAlgebra lie(const std::string& name) {
  static const std::map<std::string, std::function<LieAlgebra()>> table = {
      {"ab1", ab1},   {"ab2", ab2},
      {"ab3", ab3},   {"heis3", heis3},
      {"sl2", [] { return sl2().g; }},
      {"gl2", [] { return gl2().g; }},
      {"sl3", [] { return sl3().g; }},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::out_of_range("unknown Lie algebra fixture: " + name);
  return it->second();
}

Cdga cdga(const std::string& name) {
  static const std::map<std::string, std::function<Cdga()>> table = {
      {"Pt", pt}, {"Circ", circ}, {"Intv", intv}, {"T2", t2}, {"T3", t3},
      {"CircIntv", circ_intv}, {"FmsS", fms_s}, {"Nil2", nil2},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::out_of_range("unknown CDGA fixture: " + name);
  return it->second();
}

}  // namespace curalg::fixtures
