#include "curalg/fixtures.hpp"
#include "curalg/taskfile.hpp"

#include <doctest.h>

#include <random>

using namespace curalg;
namespace fx = curalg::fixtures;

namespace {

json taskfile(const std::string& name) { return read_json_file(std::string(CURALG_TASKFILES) + "/" + name); }

bool same(const Dgla& a, const Dgla& b) {
  return *a.space == *b.space && a.bracket == b.bracket && a.d == b.d && a.name == b.name;
}

bool same(const Cdga& a, const Cdga& b) {
  return *a.space == *b.space && a.product == b.product && a.d == b.d && a.unit == b.unit;
}

json with_tasks(json tasks, json extra = json::object()) {
  json doc = {{"schema_version", schema_version}};
  for (auto& [k, v] : extra.items()) doc[k] = v;
  doc["tasks"] = std::move(tasks);
  return doc;
}

}  // namespace

TEST_CASE("structure-constant documents round-trip") {
  for (const auto& n : fx::lie_names()) {
    LieAlgebra g = fx::lie(n);
    json doc = export_lie(g);
    LieAlgebra back = import_lie(doc, "lie");
    CHECK(back.bracket == g.bracket);
    CHECK(export_lie(back).dump() == doc.dump());
    Dgla c = cone(g);
    CHECK(same(import_dgla(export_dgla(c), "dgla"), c));
  }
  for (const auto& n : fx::cdga_names()) {
    Cdga c = fx::cdga(n);
    CHECK_MESSAGE(same(import_cdga(export_cdga(c), "cdga"), c), n);
  }
  auto gl2 = fx::gl2();
  FmsTower t = fms_tower(gl2.g, fx::symmetrized_trace3(gl2));
  CHECK(same(import_dgla(export_dgla(t.b_fms), "b"), t.b_fms));

  GDiffSpace m = fx::contraction_module(fx::t3(), fx::ab3());
  GDiffSpace mb = import_gdiff(export_gdiff(m), "m", [](const std::string& n) { return fx::lie(n); });
  CHECK(mb.d == m.d);
  CHECK(mb.L == m.L);
  CHECK(mb.I == m.I);
  CHECK(mb.g.bracket == m.g.bracket);

  Dgla s = sigma_dgla(m, Vec::unit(m.space->index("abc")), 1);
  Cocycle2 h = extract_current(ca(fx::circ(), s), fx::ab3()).cocycle();
  Cocycle2 hb = import_cocycle(export_cocycle(h), "h");
  CHECK(hb.values == h.values);
  CHECK(export_cocycle(hb).dump() == export_cocycle(h).dump());
}

TEST_CASE("round-trip of random tables without symmetry") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3), deg(-2, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BasisElement> basis;
    for (int k = 0; k < 4; ++k) basis.push_back({"v" + std::to_string(k), deg(rng)});
    Dgla a("rand", make_space(basis));
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k)
          if (a.degree(k) == a.degree(i) + a.degree(j) && coef(rng) > 1) a.bracket.at(i, j).add(k, coef(rng));
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.degree(k) == a.degree(i) + 1 && coef(rng) > 1) a.d.add(k, i, coef(rng));
    CHECK(same(import_dgla(export_dgla(a), "rand"), a));
  }
}

TEST_CASE("export examples") {
  json cone_doc = export_dgla(cone(fx::sl2().g));
  CHECK(cone_doc["basis"].size() == 6);
  CHECK(cone_doc["brackets"].size() == 9);  // i < j entries of [L,L] and [L,I]

  Form2 gamma(2);
  gamma.at(0, 1) = 1;
  gamma.at(1, 0) = -1;
  Dgla cg = central_extension_cone(fx::ab2(), {CocycleSpec::Kind::lambda, gamma});
  json t = export_cocycle(extract_current(ca(fx::pt(), cg), fx::ab2()).cocycle());
  REQUIRE(t["table"].size() == 1);
  CHECK(t["table"][0].dump() == R"(["1*x","1*y",{"1*c1":"1"}])");
  CHECK(text_table(t).find("sigma(1*x, 1*y) = 1*c1") != std::string::npos);

  LieAlgebra empty("empty", {});
  CHECK(export_lie(empty)["brackets"].empty());
  CHECK(import_lie(export_lie(empty), "e").dim() == 0);
}

TEST_CASE("import errors carry a location") {
  json bad = {{"basis", {"x", "y"}}, {"brackets", {{"x", "w", {{"y", "1"}}}}}};
  try {
    import_lie(bad, "/lie_algebras/0");
    FAIL("accepted an unknown label");
  } catch (const InputError& e) {
    CHECK(e.where() == "/lie_algebras/0/brackets/0/1");
    CHECK(std::string(e.what()).find("\"w\"") != std::string::npos);
  }
  CHECK_THROWS_AS(import_lie(json{{"basis", {"x"}}, {"brackets", {{"x", "x", {{"x", "1/0"}}}}}}, "l"), InputError);
  json deg = {{"basis", {{"a", 0}, {"b", -1}}}, {"differential", {{"a", {{"b", "1"}}}}}};
  CHECK_THROWS_AS(import_dgla(deg, "d"), InputError);
}

TEST_CASE("task file runs: pass, validator failure, input errors") {
  RunResult demo = run_taskfile(taskfile("demo.json"), {false, std::nullopt});
  CHECK(demo.exit_code == 0);
  CHECK(demo.report["summary"]["failed"] == 0);
  CHECK(demo.report["summary"]["tasks"] == demo.report["tasks"].size());
  CHECK_FALSE(demo.report.contains("timestamp"));
  CHECK(demo.report["summary"]["lines"].back() == demo.lines.back());
  RunResult again = run_taskfile(taskfile("demo.json"), {false, std::nullopt});
  CHECK(again.report.dump() == demo.report.dump());
  CHECK(run_taskfile(taskfile("demo.json"), {true, std::string("ca")}).report.contains("timestamp"));

  RunResult broken = run_taskfile(taskfile("broken_jacobi.json"), {false, std::nullopt});
  CHECK(broken.exit_code == 1);
  CHECK(broken.lines.front().find("jacobi at (e,f,h)") != std::string::npos);

  RunResult undefined = run_taskfile(taskfile("undefined_name.json"), {false, std::nullopt});
  CHECK(undefined.exit_code == 2);
  CHECK(undefined.report["error"]["message"].get<std::string>().find("\"so3\"") != std::string::npos);

  CHECK(run_taskfile(json{{"tasks", json::array()}}, {}).exit_code == 2);
  CHECK(run_taskfile(json{{"schema_version", 99}}, {}).exit_code == 2);
  CHECK(run_taskfile(json{{"schema_version", 1}, {"algebras", json::array()}}, {}).exit_code == 2);
  CHECK(run_taskfile(with_tasks({{{"verb", "frobnicate"}}}), {}).exit_code == 2);
}

TEST_CASE("task verbs report failures with witnesses") {
  json extra = {{"cocycle_data", {{{"name", "tr"}, {"type", "form2"}, {"lie", "sl2"}, {"from", "trace"}}}},
                {"builds", {{{"name", "Ca"}, {"constructor", "alpha_extension"}, {"lie", "sl2"}, {"alpha", "tr"}}}}};
  RunResult r = run_taskfile(with_tasks(json::array(), extra), {false, std::nullopt});
  CHECK(r.exit_code == 1);
  CHECK(r.lines.front().find("build Ca (alpha_extension)") != std::string::npos);

  RunResult c = run_taskfile(with_tasks({{{"verb", "cohomology"}, {"lie", "sl2"}, {"module", "trivial"}, {"degree", 3}},
                                         {{"verb", "cohomology"}, {"dgla", "cone(sl2)"}, {"degree", 0}}}),
                             {false, std::nullopt});
  CHECK(c.exit_code == 0);
  CHECK(c.report["tasks"][0]["cohomology"]["dimension"] == 1);
  CHECK(c.report["tasks"][1]["cohomology"]["dimension"] == 0);

  RunResult s = run_taskfile(with_tasks({{{"verb", "sequence"}, {"cdga", "Circ"}, {"dgla", "V"}}},
                                        {{"builds", {{{"name", "V"}, {"constructor", "abelian"},
                                                      {"labels", {"u", "v"}}, {"degree", -1}}}}}),
                             {false, std::nullopt});
  CHECK(s.exit_code == 0);
  CHECK(s.report["tasks"][0]["dimensions"]["H^-1"] == 2);
  CHECK(s.report["tasks"][0]["dimensions"]["rank d"] == 0);
}

TEST_CASE("certification report") {
  std::vector<CriterionResult> r = {certify_criterion(7)};
  CHECK(r[0].passed());
  json a = criteria_report(r, false), b = criteria_report({certify_criterion(7)}, false);
  CHECK(a.dump() == b.dump());
  CHECK(criteria_report(r, true).contains("timestamp"));
  CHECK(summary_line(r[0]).rfind("criterion 7 [PRIMARY] sigma model: PASS", 0) == 0);

  CriterionResult five = certify_criterion(5);
  CHECK_FALSE(five.passed());
  CHECK(five.only_known_failures());
  CHECK(five.cert.first_failure()->name == "Intv/sl2-trace: C_alpha builds");
}
