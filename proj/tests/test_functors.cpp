#include "curalg/constructions.hpp"
#include "curalg/fixtures.hpp"
#include "curalg/functors.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace curalg;
using testing::rejection;
namespace fx = curalg::fixtures;

namespace {

Vec cls(const CurrentAlgebra& c, const std::string& tensor_label, const Scalar& k = 1) {
  return c.coords(Vec::unit(c.dgla().index(tensor_label), k));
}

Vec br(const CurrentAlgebra& c, const std::string& a, const std::string& b) {
  return c.lie.br(cls(c, a), cls(c, b));
}

void require_ok(const Certificate& c) { CHECK_MESSAGE(c.passed(), c.subject, "\n", c.failures()); }

Form2 sl2_trace() { return fx::trace_form(fx::sl2()); }

}  // namespace

TEST_CASE("CA of the point is the Lie algebra itself") {
  CurrentAlgebra c = ca(fx::pt(), cone(fx::sl2().g));
  require_ok(c.cert);
  REQUIRE(c.dim() == 3);
  CHECK(br(c, "1*I(e)", "1*I(f)") == cls(c, "1*I(h)"));
  CHECK(br(c, "1*I(h)", "1*I(e)") == cls(c, "1*I(e)", 2));
}

TEST_CASE("CA over Intv is pointwise with eps squared zero") {
  CurrentAlgebra c = ca(fx::intv(), cone(fx::sl2().g));
  require_ok(c.cert);
  REQUIRE(c.dim() == 6);
  CHECK(br(c, "eps*I(e)", "eps*I(f)").empty());
  CHECK(br(c, "1*I(e)", "eps*I(f)") == cls(c, "eps*I(h)"));
  CHECK(br(c, "eps*I(h)", "1*I(f)") == cls(c, "eps*I(f)", -2));
}

TEST_CASE("CA over the circle of an abelian cone") {
  CurrentAlgebra c = ca(fx::circ(), cone(fx::ab1()));
  require_ok(c.cert);
  REQUIRE(c.dim() == 1);
  CHECK(c.sub.space()->label(0) == "1*I(x)");
  CHECK(c.lie.br(0, 0).empty());
}

TEST_CASE("derived bracket examples") {
  LieAlgebra g = fx::sl2().g;
  for (const auto& s : {fx::pt(), fx::intv(), fx::circ_intv(), fx::nil2()}) {
    TensorDgla t = tensor_dgla(s, cone(g));
    std::size_t one = s.unit;
    Vec x = Vec::unit(t.at(one, t.factor.index("I(e)"))), y = Vec::unit(t.at(one, t.factor.index("I(f)")));
    CHECK(derived_bracket(t, x, y) == Vec::unit(t.at(one, t.factor.index("I(h)"))));
  }
  // self-bracket of φ⊗I(x) is exact
  auto t = std::make_shared<const TensorDgla>(tensor_dgla(fx::nil2(), cone(g)));
  CurrentAlgebra c = ca(t);
  for (const auto& f : {"x", "y", "xy", "1"}) {
    Vec v = Vec::unit(t->at(t->model.index(f), t->factor.index("I(h)")));
    CHECK(c.coords(derived_bracket(*t, v, v)).empty());
  }
}

TEST_CASE("derived bracket in CA(S, C_p sl2)") {
  Dgla cp = central_extension_cone(fx::sl2().g, {CocycleSpec::Kind::p, sl2_trace()});
  CurrentAlgebra c = ca(fx::intv(), cp);
  require_ok(c.cert);
  // [ε⊗I(e), ε⊗I(f)]_d = -εη⊗p(e,f)c2 + ε²⊗I(h) = 0
  CHECK(br(c, "eps*I(e)", "eps*I(f)").empty());

  // on Nil2: [x⊗I(e), y⊗I(f)]_d = -x dy⊗c2 + xy⊗I(h)
  CurrentAlgebra n = ca(fx::nil2(), cp);
  require_ok(n.cert);
  CHECK(br(n, "x*I(e)", "y*I(f)") == cls(n, "xdy*c2", -1) + cls(n, "xy*I(h)"));
  // the class of y dx ⊗ c2 is minus that of x dy ⊗ c2
  CHECK(cls(n, "ydx*c2") == cls(n, "xdy*c2", -1));
}

TEST_CASE("SA examples") {
  CurrentAlgebra p = sa(fx::pt(), cone(fx::sl2().g));
  require_ok(p.cert);
  REQUIRE(p.dim() == 3);
  CHECK(p.lie.br(cls(p, "1*L(e)"), cls(p, "1*L(f)")) == cls(p, "1*L(h)"));

  CurrentAlgebra i = sa(fx::intv(), cone(fx::ab1()));
  require_ok(i.cert);
  REQUIRE(i.dim() == 2);
  const Dgla& t = i.dgla();
  CHECK(i.rep(0) == Vec::unit(t.index("1*L(x)")));
  CHECK(i.rep(1) == Vec::unit(t.index("eps*L(x)")) + Vec::unit(t.index("eta*I(x)")));
  CHECK(i.lie.bracket.nonzero_pairs() == 0);

  Dgla ab = fx::abelian_dgla("V", {"u", "v"}, 0);
  CHECK(sa(fx::t2(), ab).lie.bracket.nonzero_pairs() == 0);
}

TEST_CASE("four-term sequence bookkeeping") {
  auto pt = four_term_sequence(fx::pt(), cone(fx::sl2().g));
  require_ok(pt.cert);
  CHECK(pt.dim_h_minus1 == 0);
  CHECK(pt.dim_h0 == 0);
  CHECK(pt.rank_d == 3);

  // V abelian in degree -1 with zero differential over Λ(θ): θ⊗V is closed in degree 0
  Dgla v = fx::abelian_dgla("V", {"u", "v"}, -1);
  auto circ = four_term_sequence(fx::circ(), v);
  require_ok(circ.cert);
  CHECK(circ.dim_ca == 2);
  CHECK(circ.dim_h_minus1 == 2);
  CHECK(circ.rank_d == 0);
  CHECK(circ.dim_sa == 2);
  CHECK(circ.dim_h0 == 2);

  Dgla z = central_extension_cone(fx::ab2(), {CocycleSpec::Kind::p, Form2(2)});
  auto intv = four_term_sequence(fx::intv(), z);
  require_ok(intv.cert);
  CHECK(intv.dim_ca == 4);
  CHECK(intv.dim_h_minus1 == 0);
  CHECK(intv.rank_d == 4);

  Dgla cp = central_extension_cone(fx::sl2().g, {CocycleSpec::Kind::p, sl2_trace()});
  auto nil = four_term_sequence(fx::nil2(), cp);
  require_ok(nil.cert);
  auto ci = four_term_sequence(fx::circ_intv(), cp);
  require_ok(ci.cert);
  // H^{-1}(Λ(θ)⊗Intv ⊗ C_p) is spanned by θ⊗c2 (one closed, non-exact class)
  CHECK(ci.dim_h_minus1 == 1);
}

TEST_CASE("functoriality in S and in A") {
  LieAlgebra g = fx::sl2().g;
  Dgla cg = cone(g);
  Cdga circ = fx::circ(), pt = fx::pt();
  CdgaMorphism ev{circ, pt, GradedMap(circ.space, pt.space, 0)};
  ev.map.add("1", "1", 1);
  CdgaMorphism incl{pt, circ, GradedMap(pt.space, circ.space, 0)};
  incl.map.add("1", "1", 1);
  CHECK(validate_morphism(ev).passed());
  CHECK(validate_morphism(incl).passed());

  CurrentAlgebra xc = ca(circ, cg), xp = ca(pt, cg);
  LieMorphism m = current_map(xc, xp, ev, identity_morphism(cg));
  require_ok(m.cert);
  CHECK(m.map == GradedMap::identity(xp.sub.space()).compose(m.map));
  for (const auto& x : {"e", "f", "h"})
    CHECK(m.map.apply(cls(xc, std::string("1*I(") + x + ")")) == cls(xp, std::string("1*I(") + x + ")"));

  LieMorphism back = current_map(xp, xc, incl, identity_morphism(cg));
  LieMorphism round = current_map(xp, xp, compose(ev, incl), identity_morphism(cg));
  CHECK(round.map == m.map.compose(back.map));
  CHECK(current_map(xc, xc, identity_morphism(circ), identity_morphism(cg)).map == GradedMap::identity(xc.sub.space()));

  // θ ↦ 0 is not a morphism Λ(θ) → Λ(θ) with 1 ↦ 0
  CdgaMorphism broken{circ, circ, GradedMap(circ.space, circ.space, 0)};
  CHECK(rejection([&] { current_map(xc, xc, broken, identity_morphism(cg)); }) == "morphism unit");
}

TEST_CASE("morphisms out of the cone into C_p") {
  LieAlgebra g = fx::sl2().g;
  Dgla cg = cone(g);
  Dgla cp = central_extension_cone(g, {CocycleSpec::Kind::p, sl2_trace()});
  DglaMorphism incl{cg, cp, GradedMap(cg.space, cp.space, 0)};
  DglaMorphism proj{cp, cg, GradedMap(cp.space, cg.space, 0)};
  for (std::size_t i = 0; i < cg.dim(); ++i) {
    incl.map.add(cp.index(cg.space->label(i)), i, 1);
    proj.map.add(i, cp.index(cg.space->label(i)), 1);
  }
  // [I(h),I(h)] = 0 in the cone but 2c2 in C_p
  Certificate ci = validate_morphism(incl);
  REQUIRE(ci.find("bracket") != nullptr);
  CHECK_FALSE(ci.find("bracket")->passed);
  require_ok(validate_morphism(proj));

  Cdga s = fx::intv();
  CurrentAlgebra a = ca(s, cp), b = ca(s, cg);
  LieMorphism m = current_map(a, b, identity_morphism(s), proj);
  require_ok(m.cert);
  CHECK(rank(m.map) == b.dim());
  LieMorphism ma = current_map(sa(s, cp), sa(s, cg), identity_morphism(s), proj);
  require_ok(ma.cert);
}

TEST_CASE("short exact sequences of dglas") {
  LieAlgebra g = fx::sl2().g;
  Dgla cg = cone(g);
  Dgla cp = central_extension_cone(g, {CocycleSpec::Kind::p, sl2_trace()});
  Dgla r2 = fx::abelian_dgla("R[2]", {"c2"}, -2);
  DglaMorphism i{r2, cp, GradedMap(r2.space, cp.space, 0)};
  i.map.add("c2", "c2", 1);
  DglaMorphism p{cp, cg, GradedMap(cp.space, cg.space, 0)};
  for (std::size_t k = 0; k < cg.dim(); ++k) p.map.add(k, cp.index(cg.space->label(k)), 1);
  for (const auto& s : {fx::intv(), fx::circ_intv(), fx::nil2()}) {
    SesImage im = ses_image(i, p, s);
    require_ok(im.input);
    require_ok(im.ca);
    require_ok(im.sa);
  }

  Dgla zero("0", make_space({}));
  DglaMorphism z{zero, cg, GradedMap(zero.space, cg.space, 0)};
  SesImage triv = ses_image(z, identity_morphism(cg), fx::intv());
  CHECK(triv.passed());

  Dgla c = fx::abelian_dgla("R[1]", {"u"}, -1);
  DglaMorphism zc{zero, c, GradedMap(zero.space, c.space, 0)};
  Rejected r("", "");
  try {
    ses_image(zc, identity_morphism(c), fx::intv());
  } catch (const Rejected& e) {
    r = e;
  }
  CHECK(r.check() == "C acyclic");
  CHECK(r.witness() == "H^n != 0 at n=-1");
}

TEST_CASE("current algebra identification over the fixture grid") {
  for (const auto& sname : {"Pt", "Circ", "Intv", "T2", "CircIntv", "Nil2"})
    for (const auto& gname : {"ab1", "ab2", "heis3", "sl2"}) {
      CurrentIso iso = current_iso(fx::cdga(sname), fx::lie(gname));
      CHECK_MESSAGE(iso.cert.passed(), sname, "/", gname, "\n", iso.cert.failures());
    }
  CurrentIso ab = current_iso(fx::circ_intv(), fx::ab2());
  CHECK(ab.pointwise.dim() == 4);
  CHECK(ab.ca_alg.lie.bracket.nonzero_pairs() == 0);
}
