#include "curalg/constructions.hpp"
#include "curalg/fixtures.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace curalg;
namespace fx = curalg::fixtures;

TEST_CASE("matrix fixtures have the expected brackets") {
  auto sl2 = fx::sl2();
  const LieAlgebra& g = sl2.g;
  auto e = g.index("e"), f = g.index("f"), h = g.index("h");
  CHECK(g.br(h, e) == Vec::unit(e, 2));
  CHECK(g.br(h, f) == Vec::unit(f, -2));
  CHECK(g.br(e, f) == Vec::unit(h));

  auto gl2 = fx::gl2();
  CHECK(gl2.g.br(gl2.g.index("e12"), gl2.g.index("e21")) ==
        Vec::unit(gl2.g.index("e11")) - Vec::unit(gl2.g.index("e22")));
  CHECK(fx::sl3().g.dim() == 8);
  for (const auto& name : fx::lie_names()) CHECK_MESSAGE(validate_lie(fx::lie(name)).passed(), name);
}

TEST_CASE("trace forms in the defining representations") {
  auto sl2 = fx::sl2();
  Form2 p = fx::trace_form(sl2);
  const auto& g = sl2.g;
  CHECK(p.at(g.index("h"), g.index("h")) == 2);
  CHECK(p.at(g.index("e"), g.index("f")) == 1);
  CHECK(p.at(g.index("e"), g.index("e")) == 0);
  CHECK(p.at(g.index("e"), g.index("h")) == 0);

  auto gl2 = fx::gl2();
  Form3 p3 = fx::symmetrized_trace3(gl2);
  CHECK(p3.is_symmetric());
  std::size_t a = gl2.g.index("e11"), d = gl2.g.index("e22");
  // value on the identity matrix: expand trilinearly over e11 + e22
  Scalar one = 0;
  for (auto i : {a, d})
    for (auto j : {a, d})
      for (auto k : {a, d}) one += p3.at(i, j, k);
  CHECK(one == 2);
}

TEST_CASE("shipped CDGAs pass the CDGA axioms") {
  for (const auto& name : fx::cdga_names()) {
    Certificate c = validate_cdga(fx::cdga(name));
    CHECK_MESSAGE(c.passed(), name, "\n", c.failures());
  }
  CHECK(fx::t3().dim() == 8);
  CHECK(fx::fms_s().dim() == 24);
}

TEST_CASE("Intv with eps*eta != 0 breaks Leibniz on (eps,eps)") {
  Cdga c = fx::intv();
  c.set_product(c.index("eps"), c.index("eta"), Vec::unit(c.index("eta")));
  Certificate cert = validate_cdga(c);
  REQUIRE_FALSE(cert.passed());
  REQUIRE(cert.find("leibniz") != nullptr);
  CHECK_FALSE(cert.find("leibniz")->passed);
  CHECK(cert.find("leibniz")->witness == "(eps,eps)");
}

TEST_CASE("degree-0 differential of Intv") {
  Cdga c = fx::intv();
  const auto& cols = c.space->in_degree(0);
  Echelon ker = null_space(c.d.rows_for(cols), cols.size());
  REQUIRE(ker.rank() == 1);
  CHECK(ker.rows[0] == Vec::unit(0));  // "1" is the first degree-0 element
  CHECK(c.space->label(cols[0]) == "1");
  std::vector<Vec> im;
  for (auto j : cols) im.push_back(c.d.column(j));
  Subquotient s = span(c.space, im);
  REQUIRE(s.dim() == 1);
  CHECK(s.representative(0) == Vec::unit(c.index("eta")));
}

TEST_CASE("g-differential spaces: dual cone and contractions") {
  auto sl2 = fx::sl2().g;
  GDiffSpace v = dual_cone_module(sl2);
  Certificate c = validate_gdiff(v);
  CHECK_MESSAGE(c.passed(), c.failures());
  const GradedSpace& s = *v.space;
  CHECK(v.L[sl2.index("h")].apply(Vec::unit(s.index("l(e*)"))) == Vec::unit(s.index("l(e*)"), -2));
  for (std::size_t x = 0; x < sl2.dim(); ++x)
    for (const auto& lab : {"i(e*)", "i(f*)", "i(h*)"}) CHECK(v.I[x].apply(Vec::unit(s.index(lab))).empty());

  GDiffSpace ab = dual_cone_module(fx::ab1());
  CHECK(ab.L[0].is_zero());
  CHECK(ab.I[0].is_zero());
  CHECK(ab.d.apply(Vec::unit(ab.space->index("i(x*)"))) == Vec::unit(ab.space->index("l(x*)")));

  GDiffSpace t = fx::contraction_module(fx::t3(), fx::ab3());
  Certificate ct = validate_gdiff(t);
  CHECK_MESSAGE(ct.passed(), ct.failures());
  const GradedSpace& ts = *t.space;
  // ι_{e2}(abc) = -ac, ι_{e1}(abc) = bc
  CHECK(t.I[1].apply(Vec::unit(ts.index("abc"))) == Vec::unit(ts.index("ac"), -1));
  CHECK(t.I[0].apply(Vec::unit(ts.index("abc"))) == Vec::unit(ts.index("bc")));

  t.L[0].add(ts.index("a"), ts.index("a"), 1);
  Certificate bad = validate_gdiff(t);
  REQUIRE(bad.find("cartan L = dI + Id") != nullptr);
  CHECK_FALSE(bad.find("cartan L = dI + Id")->passed);
}

TEST_CASE("cone validation and the Jacobi perturbation") {
  CHECK(validate_dgla(cone(fx::ab2())).passed());
  Dgla c = cone(fx::sl2().g);
  CHECK(validate_dgla(c).passed());
  // [L(h), L(e)] = 2 L(e) becomes 3 L(e)
  c.set_bracket(c.index("L(h)"), c.index("L(e)"), Vec::unit(c.index("L(e)"), 3));
  Certificate cert = validate_dgla(c);
  REQUIRE(cert.find("jacobi") != nullptr);
  CHECK_FALSE(cert.find("jacobi")->passed);
  CHECK(cert.find("antisymmetry")->passed);
  CHECK(std::count(cert.find("jacobi")->witness.begin(), cert.find("jacobi")->witness.end(), ',') == 2);
}

namespace {

// φ⊗a labels of Pt⊗A are "1*a"
std::string strip_unit(const std::string& l) { return l.substr(2); }

}  // namespace

TEST_CASE("Pt tensor A is A") {
  Dgla a = cone(fx::sl2().g);
  TensorDgla t = tensor_dgla(fx::pt(), a);
  REQUIRE(t.dgla.dim() == a.dim());
  auto map = [&](const Vec& v) {
    Vec out;
    for (const auto& [k, c] : v) out.add(a.index(strip_unit(t.dgla.space->label(k))), c);
    return out;
  };
  for (std::size_t i = 0; i < t.dgla.dim(); ++i) {
    std::size_t ai = a.index(strip_unit(t.dgla.space->label(i)));
    CHECK(map(t.dgla.d.column(i)) == a.d.column(ai));
    for (std::size_t j = 0; j < t.dgla.dim(); ++j)
      CHECK(map(t.dgla.br(i, j)) == a.br(ai, a.index(strip_unit(t.dgla.space->label(j)))));
  }
}

TEST_CASE("tensor dgla examples") {
  TensorDgla c = tensor_dgla(fx::circ(), cone(fx::ab1()));
  std::size_t thI = c.dgla.index("th*I(x)");
  CHECK(c.dgla.br(thI, thI).empty());

  TensorDgla t = tensor_dgla(fx::intv(), cone(fx::sl2().g));
  CHECK(validate_dgla(t.dgla).passed());
  Vec d = t.dgla.diff(Vec::unit(t.dgla.index("eps*I(e)")));
  CHECK(d == Vec::unit(t.dgla.index("eta*I(e)")) + Vec::unit(t.dgla.index("eps*L(e)")));
}

TEST_CASE("tensor bracket sign rule on mixed-parity pairs") {
  // [φ⊗a, d(ψ⊗b)] splits as (-1)^{|a|(|ψ|+1)} φdψ⊗[a,b] + (-1)^{|ψ|+|a||ψ|} φψ⊗[a,db]
  Cdga s = fx::circ_intv();
  Dgla a = cone(fx::heis3());
  TensorDgla t = tensor_dgla(s, a);
  CHECK(validate_dgla(t.dgla).passed());
  for (std::size_t p = 0; p < s.dim(); ++p)
    for (std::size_t q = 0; q < s.dim(); ++q)
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
          long da = a.degree(i), dpsi = s.degree(q);
          Vec lhs = t.dgla.br(Vec::unit(t.at(p, i)), t.dgla.diff(Vec::unit(t.at(q, j))));
          Vec rhs = t.pure(s.mul(Vec::unit(p), s.diff(Vec::unit(q))), a.br(i, j)).scaled(koszul(da * (dpsi + 1))) +
                    t.pure(s.mul(Vec::unit(p), Vec::unit(q)), a.br(Vec::unit(i), a.diff(Vec::unit(j))))
                        .scaled(koszul(dpsi + da * dpsi));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("cohomology of small complexes") {
  Cdga i = fx::intv();
  auto h0 = cohomology(i.d, 0);
  CHECK(h0.dimension == 1);
  CHECK(h0.representatives[0] == Vec::unit(i.index("1")));
  CHECK(cohomology(i.d, 1).dimension == 0);

  Cdga c = fx::circ();
  CHECK(cohomology(c.d, 0).dimension == 1);
  CHECK(cohomology(c.d, 1).dimension == 1);

  CHECK(is_acyclic(cone(fx::sl2().g).d));
  CHECK(cohomology(fx::nil2().d, 0).dimension == 1);
  CHECK(cohomology(fx::nil2().d, 1).dimension == 0);
  CHECK(cohomology(fx::nil2().d, 2).dimension == 0);

  for (const auto& s : {fx::pt(), fx::intv(), fx::circ_intv(), fx::t2()}) {
    TensorDgla t = tensor_dgla(s, cone(fx::ab2()));
    CHECK_MESSAGE(is_acyclic(t.dgla.d), s.name);
  }

  GradedMap bad = GradedMap::identity(make_space({{"u", 0}}));
  CHECK_THROWS_AS(cohomology(bad, 0), std::domain_error);
}

TEST_CASE("shifts") {
  SpacePtr r = make_space({{"c", 0}});
  CHECK(shift(*r, 2)->degree(0) == -2);
  GDiffSpace t = fx::contraction_module(fx::t3(), fx::ab3());
  GDiffSpace t0 = shift(t, 0);
  CHECK(*t0.space == *t.space);
  GDiffSpace t2 = shift(t, 2);
  CHECK(t2.space->degree(t2.space->index("abc")) == 1);
  CHECK(validate_gdiff(t2).passed());
}

TEST_CASE("random perturbations of a cone are caught") {
  std::mt19937 rng(7);
  Dgla base = cone(fx::heis3());
  std::uniform_int_distribution<std::size_t> pick(0, base.dim() - 1);
  int caught = 0, tried = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    if (base.degree(k) != base.degree(i) + base.degree(j)) continue;
    ++tried;
    Dgla a = base;
    a.bracket.at(i, j).add(k, 1);
    if (!validate_dgla(a).passed()) ++caught;
  }
  // changing one entry alone always breaks antisymmetry, Jacobi or Leibniz
  CHECK(caught == tried);
}
