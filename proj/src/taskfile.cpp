#include "curalg/taskfile.hpp"

#include "curalg/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace curalg {

namespace fx = fixtures;

namespace {

std::string at_index(const std::string& where, std::size_t k) { return where + "/" + std::to_string(k); }

const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where, "missing field \"" + key + "\"");
  return j.at(key);
}

std::string need_string(const json& j, const std::string& key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) throw InputError(where + "/" + key, "expected a string");
  return v.get<std::string>();
}

int need_int(const json& j, const std::string& key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer()) throw InputError(where + "/" + key, "expected an integer");
  return v.get<int>();
}

Scalar entry_scalar(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return parse_scalar(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where, e.what());
  }
  throw InputError(where, "expected a \"p/q\" string");
}

std::size_t label_index(const GradedSpace& s, const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where, "expected a basis label");
  auto i = s.find(j.get<std::string>());
  if (!i) throw InputError(where, "unknown basis label \"" + j.get<std::string>() + "\"");
  return *i;
}

// "f(arg)" -> arg when the prefix matches
std::optional<std::string> call_arg(const std::string& name, const std::string& f) {
  if (name.size() > f.size() + 2 && name.rfind(f + "(", 0) == 0 && name.back() == ')')
    return name.substr(f.size() + 1, name.size() - f.size() - 2);
  return std::nullopt;
}

std::optional<fx::MatrixLie> matrix_fixture(const std::string& name) {
  if (name == "sl2") return fx::sl2();
  if (name == "gl2") return fx::gl2();
  if (name == "sl3") return fx::sl3();
  return std::nullopt;
}

template <class M>
void unique_name(const M& m, const std::string& name, const std::string& where) {
  if (name.empty()) throw InputError(where, "empty name");
  if (m.count(name)) throw InputError(where, "duplicate name \"" + name + "\"");
}

const json& section(const json& doc, const char* key) {
  static const json empty = json::array();
  auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_array()) throw InputError(std::string("/") + key, "expected an array");
  return *it;
}

std::string reject_text(const Rejected& r) { return r.check() + (r.witness().empty() ? "" : " at " + r.witness()); }

class Loader {
 public:
  explicit Loader(Workspace& w) : w_(w) {}

  void lie_algebra(const json& j, const std::string& where) {
    LieAlgebra g = import_lie(j, where);
    unique_name(w_.lie, g.name, where);
    w_.preflight.merge(validate_lie(g), g.name + " ");
    w_.lie.emplace(g.name, std::move(g));
  }

  void cdga(const json& j, const std::string& where) {
    Cdga c = import_cdga(j, where);
    unique_name(w_.cdgas, c.name, where);
    w_.preflight.merge(validate_cdga(c), c.name + " ");
    w_.cdgas.emplace(c.name, std::move(c));
  }

  void gdiff(const json& j, const std::string& where) {
    if (j.contains("constructor")) {
      const std::string name = need_string(j, "name", where), ctor = need_string(j, "constructor", where);
      if (ctor != "dual_cone" && ctor != "contraction" && ctor != "shift")
        throw InputError(where + "/constructor", "g-differential constructors are dual_cone, contraction, shift");
      construct(name, ctor, j, where);
      return;
    }
    GDiffSpace v = import_gdiff(j, where, [&](const std::string& n) { return w_.find_lie(n, where + "/lie"); });
    add_gdiff(std::move(v), where);
  }

  void cocycle_datum(const json& j, const std::string& where) {
    const std::string name = need_string(j, "name", where), type = need_string(j, "type", where);
    if (type == "form2") {
      unique_name(w_.forms2, name, where);
      w_.forms2.emplace(name, form2(j, where));
    } else if (type == "form3") {
      unique_name(w_.forms3, name, where);
      w_.forms3.emplace(name, form3(j, where));
    } else if (type == "vector") {
      unique_name(w_.vectors, name, where);
      const std::string v = need_string(j, "gdiff", where);
      GDiffSpace space = w_.find_gdiff(v, where + "/gdiff");
      w_.vectors.emplace(name, std::make_pair(v, vec_from_json(*space.space, need(j, "value", where), where + "/value")));
    } else if (type == "extension") {
      unique_name(w_.extensions, name, where);
      w_.extensions.emplace(name, extension(j, where));
    } else {
      throw InputError(where + "/type", "unknown cocycle datum type \"" + type + "\"");
    }
  }

  void build(const json& j, const std::string& where) {
    const std::string name = need_string(j, "name", where), ctor = need_string(j, "constructor", where);
    unique_name(w_.dglas, name, where);
    if (w_.gdiff.count(name) || w_.cdgas.count(name) || w_.cocycles.count(name))
      throw InputError(where, "duplicate name \"" + name + "\"");
    try {
      construct(name, ctor, j, where);
    } catch (const Rejected& r) {
      w_.preflight.record("build " + name + " (" + ctor + ")", false, where + ": " + reject_text(r));
    } catch (const std::logic_error& e) {
      w_.preflight.record("build " + name + " (" + ctor + ")", false, where + ": " + e.what());
    }
  }

 private:
  Workspace& w_;

  void add_gdiff(GDiffSpace v, const std::string& where) {
    unique_name(w_.gdiff, v.name, where);
    w_.preflight.merge(validate_gdiff(v), v.name + " ");
    w_.gdiff.emplace(v.name, std::move(v));
  }

  void add_dgla(const std::string& name, Dgla a) {
    a.name = name;
    w_.preflight.merge(validate_dgla(a), name + " ");
    w_.dglas.emplace(name, std::move(a));
  }

  void add_cocycle(const std::string& name, Cocycle2 c) {
    c.name = name;
    w_.preflight.merge(validate_cocycle(c), name + " ");
    w_.cocycles.emplace(name, std::move(c));
  }

  Form2 form2(const json& j, const std::string& where) {
    const std::string lie = need_string(j, "lie", where);
    if (j.contains("from")) {
      if (need_string(j, "from", where) != "trace") throw InputError(where + "/from", "only \"trace\" is shipped");
      return w_.find_form2("trace(" + lie + ")", where + "/from");
    }
    LieAlgebra g = w_.find_lie(lie, where + "/lie");
    Form2 f(g.dim());
    const json& rows = need(j, "entries", where);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::string w = at_index(where + "/entries", k);
      const json& r = rows[k];
      if (!r.is_array() || r.size() != 3) throw InputError(w, "expected [x, y, value]");
      f.at(label_index(*g.space, r[0], w), label_index(*g.space, r[1], w)) = entry_scalar(r[2], w);
    }
    return f;
  }

  Form3 form3(const json& j, const std::string& where) {
    const std::string lie = need_string(j, "lie", where);
    if (j.contains("from")) {
      if (need_string(j, "from", where) != "symmetrized_trace3")
        throw InputError(where + "/from", "only \"symmetrized_trace3\" is shipped");
      return w_.find_form3("sym_trace3(" + lie + ")", where + "/from");
    }
    LieAlgebra g = w_.find_lie(lie, where + "/lie");
    bool sym = j.value("symmetric", false);
    Form3 f(g.dim());
    const json& rows = need(j, "entries", where);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::string w = at_index(where + "/entries", k);
      const json& r = rows[k];
      if (!r.is_array() || r.size() != 4) throw InputError(w, "expected [x, y, z, value]");
      std::size_t a = label_index(*g.space, r[0], w), b = label_index(*g.space, r[1], w),
                  c = label_index(*g.space, r[2], w);
      Scalar v = entry_scalar(r[3], w);
      if (sym) f.set_symmetric(a, b, c, v);
      else f.at(a, b, c) = v;
    }
    return f;
  }

  ExtensionDatum extension(const json& j, const std::string& where) {
    LieAlgebra g = w_.find_lie(need_string(j, "lie", where), where + "/lie");
    GDiffSpace v = w_.find_gdiff(need_string(j, "gdiff", where), where + "/gdiff");
    Dgla cg = cone(g);
    ExtensionDatum e = ExtensionDatum::zero(cg, v);
    if (j.contains("omega")) {
      const json& rows = j.at("omega");
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const std::string w = at_index(where + "/omega", k);
        const json& r = rows[k];
        if (!r.is_array() || r.size() != 3) throw InputError(w, "expected [a, b, value]");
        e.omega.at(label_index(*cg.space, r[0], w), label_index(*cg.space, r[1], w)) =
            vec_from_json(*v.space, r[2], w);
      }
    }
    if (j.contains("delta")) {
      const json& rows = j.at("delta");
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const std::string w = at_index(where + "/delta", k);
        const json& r = rows[k];
        if (!r.is_array() || r.size() != 2) throw InputError(w, "expected [a, value]");
        e.delta.set_column(label_index(*cg.space, r[0], w), vec_from_json(*v.space, r[1], w));
      }
    }
    return e;
  }

  CocycleSpec::Kind spec_kind(const json& j, const std::string& where) {
    const std::string k = need_string(j, "kind", where);
    if (k == "rho") return CocycleSpec::Kind::rho;
    if (k == "lambda") return CocycleSpec::Kind::lambda;
    if (k == "p") return CocycleSpec::Kind::p;
    throw InputError(where + "/kind", "kind is one of rho, lambda, p");
  }

  void construct(const std::string& name, const std::string& ctor, const json& j, const std::string& where) {
    auto lie = [&] { return w_.find_lie(need_string(j, "lie", where), where + "/lie"); };
    auto module = [&] { return w_.find_gdiff(need_string(j, "gdiff", where), where + "/gdiff"); };
    auto vector_of = [&](const char* key, const std::string& gd) {
      return w_.find_vector(need_string(j, key, where), gd, where + "/" + key);
    };
    auto extraction = [&] { return w_.find_extraction(need_string(j, "extraction", where), where + "/extraction"); };

    if (ctor == "cone") {
      add_dgla(name, cone(lie()));
    } else if (ctor == "lie_as_dgla") {
      add_dgla(name, lie().as_dgla());
    } else if (ctor == "abelian") {
      std::vector<std::string> labels;
      for (const auto& l : need(j, "labels", where)) labels.push_back(l.get<std::string>());
      add_dgla(name, fx::abelian_dgla(name, labels, need_int(j, "degree", where)));
    } else if (ctor == "central_extension") {
      add_dgla(name, central_extension_cone(lie(), {spec_kind(j, where), w_.find_form2(need_string(j, "form", where),
                                                                                            where + "/form")}));
    } else if (ctor == "alpha_extension") {
      LieAlgebra g = lie();
      add_dgla(name, cone_alpha_extension(g, decompose_alpha(g, w_.find_form2(need_string(j, "alpha", where),
                                                                              where + "/alpha"))));
    } else if (ctor == "semidirect") {
      add_dgla(name, semidirect(lie(), module(),
                                w_.find_extension(need_string(j, "extension", where), where + "/extension")));
    } else if (ctor == "deform_by_e") {
      const std::string gd = need_string(j, "gdiff", where);
      add_dgla(name, deform_by_e(lie(), module(), vector_of("e", gd)));
    } else if (ctor == "fms") {
      FmsTower t = fms_tower(lie(), w_.find_form3(need_string(j, "p3", where), where + "/p3"));
      const std::string part = j.value("part", "b");
      if (part != "b" && part != "b_fms") throw InputError(where + "/part", "part is b or b_fms");
      add_dgla(name, part == "b" ? t.b : t.b_fms);
    } else if (ctor == "sigma") {
      const std::string gd = need_string(j, "gdiff", where);
      add_dgla(name, sigma_dgla(module(), vector_of("h", gd), need_int(j, "k", where)));
    } else if (ctor == "dgla") {
      add_dgla(name, import_dgla(need(j, "value", where), where + "/value"));
    } else if (ctor == "dual_cone") {
      GDiffSpace v = dual_cone_module(lie());
      v.name = name;
      add_gdiff(std::move(v), where);
    } else if (ctor == "contraction") {
      GDiffSpace v = fx::contraction_module(w_.find_cdga(need_string(j, "cdga", where), where + "/cdga"), lie());
      v.name = name;
      add_gdiff(std::move(v), where);
    } else if (ctor == "shift") {
      GDiffSpace v = shift(module(), need_int(j, "k", where));
      v.name = name;
      add_gdiff(std::move(v), where);
    } else if (ctor == "tensor_cdga") {
      Cdga c = tensor_cdga(w_.find_cdga(need_string(j, "a", where), where + "/a"),
                           w_.find_cdga(need_string(j, "b", where), where + "/b"), name);
      w_.preflight.merge(validate_cdga(c), name + " ");
      w_.cdgas.emplace(name, std::move(c));
    } else if (ctor == "extract") {
      Cdga s = w_.find_cdga(need_string(j, "cdga", where), where + "/cdga");
      Dgla a = w_.find_dgla(need_string(j, "dgla", where), where + "/dgla");
      const std::string f = j.value("functor", "ca");
      if (f != "ca" && f != "sa") throw InputError(where + "/functor", "functor is ca or sa");
      CurrentAlgebra total = f == "ca" ? ca(s, a) : sa(s, a);
      CurrentExtraction ex;
      if (j.contains("fiber")) {
        std::vector<std::string> fiber;
        for (const auto& l : j.at("fiber")) {
          if (!l.is_string() || !a.space->find(l.get<std::string>()))
            throw InputError(where + "/fiber", "unknown factor label " + l.dump());
          fiber.push_back(l.get<std::string>());
        }
        ex = extract_quotient(total, fiber, name);
      } else {
        ex = extract_current(total, lie(), name);
      }
      w_.preflight.merge(ex.ext.cert, name + " extraction ");
      add_cocycle(name, ex.cocycle());
      w_.extractions.emplace(name, std::move(ex));
    } else if (ctor == "sigma_gamma" || ctor == "sigma_p") {
      const CurrentExtraction& e = extraction();
      Form2 f = w_.find_form2(need_string(j, "form", where), where + "/form");
      add_cocycle(name, ctor == "sigma_gamma" ? sigma_gamma(e, f) : sigma_p(e, f));
    } else if (ctor == "sigma_omega_delta") {
      add_cocycle(name, sigma_omega_delta(extraction(), lie(), module(),
                                          w_.find_extension(need_string(j, "extension", where), where + "/extension")));
    } else if (ctor == "sigma_e" || ctor == "sigma_e_sa" || ctor == "sigma_H") {
      const std::string gd = need_string(j, "gdiff", where);
      const char* key = ctor == "sigma_H" ? "h" : "e";
      GDiffSpace v = module();
      if (j.contains("shift")) v = shift(v, need_int(j, "shift", where));
      Vec x = vector_of(key, gd);
      const CurrentExtraction& e = extraction();
      add_cocycle(name, ctor == "sigma_e" ? sigma_e(e, v, x) : ctor == "sigma_e_sa" ? sigma_e_sa(e, v, x) : sigma_H(e, v, x));
    } else if (ctor == "differential") {
      const CurrentExtraction& src = w_.find_extraction(need_string(j, "source", where), where + "/source");
      const CurrentExtraction& tgt = w_.find_extraction(need_string(j, "target", where), where + "/target");
      add_cocycle(name, differential(src, src.cocycle(), tgt));
    } else if (ctor == "cocycle") {
      add_cocycle(name, import_cocycle(need(j, "value", where), where + "/value"));
    } else {
      throw InputError(where + "/constructor", "unknown constructor \"" + ctor + "\"");
    }
  }
};

// ---- tasks

struct TaskRecord {
  json out;
  bool passed = true;
};

json cohomology_json(const CohomologyReport& r, const GradedSpace& s) {
  json reps = json::array();
  for (const auto& v : r.representatives) reps.push_back(vec_json(s, v));
  return {{"degree", r.degree}, {"dimension", r.dimension}, {"representatives", std::move(reps)}};
}

LieModule named_module(const LieAlgebra& g, const std::string& kind, const std::string& where) {
  if (kind == "trivial") return trivial_module(g, make_space({{"1", 0}}));
  if (kind == "adjoint") return adjoint_module(g);
  if (kind == "coadjoint") return coadjoint_module(g);
  throw InputError(where, "module is trivial, adjoint or coadjoint");
}

TaskRecord run_task(const Workspace& w, const json& t, const std::string& where) {
  const std::string verb = need_string(t, "verb", where);
  TaskRecord r;
  r.out["verb"] = verb;
  r.out["inputs"] = t;
  auto fail_on = [&](const Certificate& c) {
    r.out["certificate"] = to_json(c);
    r.passed = r.passed && c.passed();
  };
  auto pair = [&] {
    return std::make_pair(w.find_cdga(need_string(t, "cdga", where), where + "/cdga"),
                          w.find_dgla(need_string(t, "dgla", where), where + "/dgla"));
  };
  if (verb == "validate") {
    const std::string name = need_string(t, "object", where);
    const std::string at = where + "/object";
    if (w.cocycles.count(name)) fail_on(validate_cocycle(w.cocycles.at(name)));
    else if (w.gdiff.count(name)) fail_on(validate_gdiff(w.gdiff.at(name)));
    else if (w.dglas.count(name) || call_arg(name, "cone")) fail_on(validate_dgla(w.find_dgla(name, at)));
    else if (w.cdgas.count(name) || std::ranges::count(fx::cdga_names(), name)) fail_on(validate_cdga(w.find_cdga(name, at)));
    else fail_on(validate_lie(w.find_lie(name, at)));
  } else if (verb == "ca" || verb == "sa") {
    auto [s, a] = pair();
    CurrentAlgebra x = verb == "ca" ? ca(s, a) : sa(s, a);
    r.out["dimension"] = x.dim();
    r.out["lie_algebra"] = export_lie(x.lie);
    fail_on(x.cert);
  } else if (verb == "sequence") {
    auto [s, a] = pair();
    ExactnessCertificate e = four_term_sequence(s, a);
    r.out["dimensions"] = {{"H^-1", e.dim_h_minus1}, {"CA", e.dim_ca}, {"SA", e.dim_sa}, {"H^0", e.dim_h0},
                           {"rank inclusion", e.rank_inclusion}, {"rank d", e.rank_d},
                           {"rank projection", e.rank_projection}};
    fail_on(e.cert);
  } else if (verb == "cohomology") {
    int n = need_int(t, "degree", where);
    if (t.contains("lie")) {
      LieAlgebra g = w.find_lie(need_string(t, "lie", where), where + "/lie");
      LieModule m = named_module(g, t.value("module", "trivial"), where + "/module");
      if (n < 0 || n > 3) throw InputError(where + "/degree", "Chevalley-Eilenberg degree is 0..3");
      CeComplex ce = ce_complex(g, m);
      r.out["cohomology"] = cohomology_json(ce_cohomology(g, m, n), *ce.space);
    } else if (t.contains("cdga")) {
      Cdga c = w.find_cdga(need_string(t, "cdga", where), where + "/cdga");
      r.out["cohomology"] = cohomology_json(cohomology(c.d, n), *c.space);
    } else if (t.contains("gdiff")) {
      GDiffSpace v = w.find_gdiff(need_string(t, "gdiff", where), where + "/gdiff");
      r.out["cohomology"] = cohomology_json(cohomology(v.d, n), *v.space);
    } else {
      Dgla a = w.find_dgla(need_string(t, "dgla", where), where + "/dgla");
      r.out["cohomology"] = cohomology_json(cohomology(a.d, n), *a.space);
    }
  } else if (verb == "extract") {
    const std::string name = need_string(t, "cocycle", where);
    Cocycle2 c = w.find_cocycle(name, where + "/cocycle");
    r.out["cocycle"] = export_cocycle(c);
    Certificate cert = validate_cocycle(c);
    if (w.extractions.count(name)) cert.merge(w.extractions.at(name).ext.cert, "extraction ");
    fail_on(cert);
  } else if (verb == "compare") {
    Cocycle2 a = w.find_cocycle(need_string(t, "left", where), where + "/left");
    Cocycle2 b = w.find_cocycle(need_string(t, "right", where), where + "/right");
    const std::string mode = t.value("mode", "exact");
    if (mode != "exact" && mode != "cohomologous") throw InputError(where + "/mode", "mode is exact or cohomologous");
    if (!(*a.base.space == *b.base.space) || !(*a.module.space == *b.module.space))
      throw InputError(where, "compared cocycles live on different bases");
    CocycleComparison cmp = compare_cocycles(a, b, mode == "exact" ? CompareMode::exact : CompareMode::cohomologous);
    Certificate c;
    c.record(mode == "exact" ? "exact equality" : "cohomologous", cmp.equal, cmp.witness);
    if (cmp.tau) {
      json tau = json::object();
      for (std::size_t i = 0; i < cmp.tau->size(); ++i) tau[a.base.label(i)] = vec_json(*a.module.space, (*cmp.tau)[i]);
      r.out["tau"] = std::move(tau);
    }
    fail_on(c);
  } else if (verb == "certify") {
    const json& which = need(t, "criterion", where);
    std::vector<CriterionResult> res;
    if (which == "all") {
      res = certify_all();
    } else if (which.is_number_integer() && which.get<int>() >= 1 && which.get<int>() <= criterion_count) {
      res.push_back(certify_criterion(which.get<int>()));
    } else {
      throw InputError(where + "/criterion", "criterion is 1.." + std::to_string(criterion_count) + " or \"all\"");
    }
    json items = json::array();
    for (const auto& c : res) {
      items.push_back(to_json(c));
      r.passed = r.passed && c.passed();
    }
    r.out["criteria"] = std::move(items);
  } else {
    throw InputError(where + "/verb", "unknown verb \"" + verb + "\"");
  }
  r.out["passed"] = r.passed;
  return r;
}

TaskRecord guarded_task(const Workspace& w, const json& t, const std::string& where) {
  try {
    return run_task(w, t, where);
  } catch (const InputError&) {
    throw;
  } catch (const Rejected& e) {
    return {{{"verb", t.value("verb", "")}, {"inputs", t}, {"passed", false}, {"error", where + ": " + reject_text(e)}},
            false};
  } catch (const std::exception& e) {
    return {{{"verb", t.value("verb", "")}, {"inputs", t}, {"passed", false}, {"error", where + ": " + e.what()}},
            false};
  }
}

std::string task_line(std::size_t i, const TaskRecord& r) {
  std::string line = "task " + std::to_string(i) + " " + r.out["verb"].get<std::string>() + ": " +
                     (r.passed ? "PASS" : "FAIL");
  if (!r.passed) {
    std::string reason;
    if (r.out.contains("certificate"))
      for (const auto& c : r.out["certificate"]["checks"])
        if (!c["passed"].get<bool>()) {
          reason = c["name"].get<std::string>() + (c.contains("witness") ? " at " + c["witness"].get<std::string>() : "");
          break;
        }
    if (r.out.contains("criteria"))
      for (const auto& c : r.out["criteria"])
        if (!c["passed"].get<bool>()) {
          reason = c["summary"].get<std::string>();
          break;
        }
    if (r.out.contains("error")) reason = r.out["error"].get<std::string>();
    if (!reason.empty()) line += " (" + reason + ")";
  } else if (r.out.contains("cohomology")) {
    line += " (dim " + std::to_string(r.out["cohomology"]["dimension"].get<std::size_t>()) + ")";
  } else if (r.out.contains("dimension")) {
    line += " (dim " + std::to_string(r.out["dimension"].get<std::size_t>()) + ")";
  }
  return line;
}

json object_dimensions(const Workspace& w) {
  auto dims = [](const auto& m) {
    json out = json::object();
    for (const auto& [name, x] : m) out[name] = x.dim();
    return out;
  };
  json forms = json::array();
  for (const auto& [n, f] : w.forms2) forms.push_back(n);
  for (const auto& [n, f] : w.forms3) forms.push_back(n);
  for (const auto& [n, f] : w.vectors) forms.push_back(n);
  for (const auto& [n, f] : w.extensions) forms.push_back(n);
  return {{"lie_algebras", dims(w.lie)}, {"cdgas", dims(w.cdgas)},   {"gdiff_actions", dims(w.gdiff)},
          {"dglas", dims(w.dglas)},      {"cocycles", dims(w.cocycles)}, {"cocycle_data", std::move(forms)}};
}

}  // namespace

LieAlgebra Workspace::find_lie(const std::string& name, const std::string& where) const {
  if (auto it = lie.find(name); it != lie.end()) return it->second;
  if (std::ranges::count(fx::lie_names(), name)) return fx::lie(name);
  throw InputError(where, "undefined Lie algebra \"" + name + "\"");
}

Cdga Workspace::find_cdga(const std::string& name, const std::string& where) const {
  if (auto it = cdgas.find(name); it != cdgas.end()) return it->second;
  if (std::ranges::count(fx::cdga_names(), name)) return fx::cdga(name);
  throw InputError(where, "undefined CDGA \"" + name + "\"");
}

GDiffSpace Workspace::find_gdiff(const std::string& name, const std::string& where) const {
  if (auto it = gdiff.find(name); it != gdiff.end()) return it->second;
  throw InputError(where, "undefined g-differential space \"" + name + "\"");
}

Dgla Workspace::find_dgla(const std::string& name, const std::string& where) const {
  if (auto it = dglas.find(name); it != dglas.end()) return it->second;
  if (auto g = call_arg(name, "cone")) {
    Dgla c = cone(find_lie(*g, where));
    c.name = name;
    return c;
  }
  throw InputError(where, "undefined dgla \"" + name + "\"");
}

Form2 Workspace::find_form2(const std::string& name, const std::string& where) const {
  if (auto it = forms2.find(name); it != forms2.end()) return it->second;
  if (auto g = call_arg(name, "trace"))
    if (auto m = matrix_fixture(*g)) return fx::trace_form(*m);
  throw InputError(where, "undefined bilinear form \"" + name + "\"");
}

Form3 Workspace::find_form3(const std::string& name, const std::string& where) const {
  if (auto it = forms3.find(name); it != forms3.end()) return it->second;
  if (auto g = call_arg(name, "sym_trace3"))
    if (auto m = matrix_fixture(*g)) return fx::symmetrized_trace3(*m);
  throw InputError(where, "undefined trilinear form \"" + name + "\"");
}

Vec Workspace::find_vector(const std::string& name, const std::string& gd, const std::string& where) const {
  auto it = vectors.find(name);
  if (it == vectors.end()) throw InputError(where, "undefined vector \"" + name + "\"");
  if (it->second.first != gd)
    throw InputError(where, "vector \"" + name + "\" lives in \"" + it->second.first + "\", not \"" + gd + "\"");
  return it->second.second;
}

const ExtensionDatum& Workspace::find_extension(const std::string& name, const std::string& where) const {
  auto it = extensions.find(name);
  if (it == extensions.end()) throw InputError(where, "undefined extension datum \"" + name + "\"");
  return it->second;
}

const CurrentExtraction& Workspace::find_extraction(const std::string& name, const std::string& where) const {
  auto it = extractions.find(name);
  if (it == extractions.end()) throw InputError(where, "undefined extraction \"" + name + "\"");
  return it->second;
}

Cocycle2 Workspace::find_cocycle(const std::string& name, const std::string& where) const {
  auto it = cocycles.find(name);
  if (it == cocycles.end()) throw InputError(where, "undefined cocycle \"" + name + "\"");
  return it->second;
}

json Workspace::export_object(const std::string& name) const {
  const std::string where = "export";
  if (cocycles.count(name)) return export_cocycle(cocycles.at(name));
  if (gdiff.count(name)) return export_gdiff(gdiff.at(name));
  if (dglas.count(name) || call_arg(name, "cone")) return export_dgla(find_dgla(name, where));
  if (cdgas.count(name) || std::ranges::count(fx::cdga_names(), name)) return export_cdga(find_cdga(name, where));
  if (lie.count(name) || std::ranges::count(fx::lie_names(), name)) return export_lie(find_lie(name, where));
  throw InputError(where, "unknown object \"" + name + "\"");
}

Workspace load_workspace(const json& doc) {
  if (!doc.is_object()) throw InputError("/", "task file must be a JSON object");
  if (!doc.contains("schema_version")) throw InputError("/schema_version", "missing field \"schema_version\"");
  if (doc["schema_version"] != schema_version)
    throw InputError("/schema_version", "unsupported schema version " + doc["schema_version"].dump() +
                                            " (expected " + std::to_string(schema_version) + ")");
  static const std::vector<std::string> known = {"schema_version", "lie_algebras", "cdgas",  "gdiff_actions",
                                                 "cocycle_data",   "builds",       "tasks",  "description"};
  for (const auto& [k, v] : doc.items())
    if (std::ranges::count(known, k) == 0) throw InputError("/" + k, "unknown section \"" + k + "\"");

  Workspace w;
  w.preflight.subject = "task file data";
  Loader load(w);
  auto each = [&](const char* key, auto fn) {
    const json& s = section(doc, key);
    for (std::size_t k = 0; k < s.size(); ++k) (load.*fn)(s[k], at_index(std::string("/") + key, k));
  };
  each("lie_algebras", &Loader::lie_algebra);
  each("cdgas", &Loader::cdga);
  each("gdiff_actions", &Loader::gdiff);
  each("cocycle_data", &Loader::cocycle_datum);
  each("builds", &Loader::build);
  return w;
}

RunResult run_taskfile(const json& doc, const RunOptions& options) {
  RunResult res;
  json report = {{"schema_version", schema_version}, {"kind", "report"}};
  auto input_error = [&](const InputError& e) {
    res.report = report;
    res.report["error"] = {{"where", e.where()}, {"message", e.what()}};
    res.lines = {std::string("input error: ") + e.what()};
    res.exit_code = 2;
    return res;
  };
  try {
    Workspace w = load_workspace(doc);
    if (options.timestamp) report["timestamp"] = utc_timestamp();
    report["preflight"] = to_json(w.preflight);
    report["objects"] = object_dimensions(w);
    json tasks = json::array();
    std::size_t passed = 0, run = 0;
    if (!w.preflight.passed()) {
      res.lines.push_back("preflight: FAIL (" + w.preflight.first_failure()->name + " at " +
                          w.preflight.first_failure()->witness + ")");
    } else {
      const json& ts = section(doc, "tasks");
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const std::string where = at_index("/tasks", k);
        if (options.verb && need_string(ts[k], "verb", where) != *options.verb) continue;
        TaskRecord r = guarded_task(w, ts[k], where);
        r.out["index"] = k;
        res.lines.push_back(task_line(k, r));
        passed += r.passed;
        ++run;
        tasks.push_back(std::move(r.out));
      }
    }
    bool ok = w.preflight.passed() && passed == run;
    std::string total = std::string(ok ? "PASS" : "FAIL") + ": " + std::to_string(passed) + "/" +
                        std::to_string(run) + " tasks passed" + (w.preflight.passed() ? "" : ", preflight failed");
    res.lines.push_back(total);
    report["tasks"] = std::move(tasks);
    report["summary"] = {{"tasks", run}, {"passed", passed}, {"failed", run - passed},
                         {"preflight_passed", w.preflight.passed()}, {"lines", res.lines}};
    res.report = std::move(report);
    res.exit_code = ok ? 0 : 1;
    return res;
  } catch (const InputError& e) {
    return input_error(e);
  } catch (const json::exception& e) {
    return input_error(InputError("/", e.what()));
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError(path, e.what());
  }
}

json fixture_catalogue() {
  json lies = json::array(), cdgas = json::array();
  for (const auto& n : fx::lie_names()) lies.push_back(n);
  for (const auto& n : fx::cdga_names()) cdgas.push_back(n);
  return {{"lie_algebras", std::move(lies)},
          {"cdgas", std::move(cdgas)},
          {"dglas", json::array({"cone(<lie>)"})},
          {"forms", json::array({"trace(sl2)", "trace(gl2)", "trace(sl3)", "sym_trace3(sl2)", "sym_trace3(gl2)",
                                 "sym_trace3(sl3)"})},
          {"criteria", criterion_count}};
}

}  // namespace curalg
