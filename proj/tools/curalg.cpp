#include "curalg/taskfile.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace curalg;

namespace {

struct Common {
  std::string file, report;
  bool no_timestamp = false, print_json = false;
};

void add_common(CLI::App* cmd, Common& c, bool file_required) {
  auto* f = cmd->add_option("taskfile", c.file, "JSON task file");
  if (file_required) f->required();
  cmd->add_option("--report", c.report, "write the JSON report to this path");
  cmd->add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp field from the report");
  cmd->add_flag("--json", c.print_json, "print the JSON report to stdout");
}

int emit(const RunResult& r, const Common& c) {
  for (const auto& l : r.lines) (r.exit_code == 2 ? std::cerr : std::cout) << l << "\n";
  const std::string text = r.report.dump(2) + "\n";
  if (c.print_json) std::cout << text;
  if (!c.report.empty()) {
    std::ofstream out(c.report, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << c.report << "\n";
      return 2;
    }
    out << text;
  }
  return r.exit_code;
}

int run_doc(const json& doc, const Common& c, std::optional<std::string> verb) {
  return emit(run_taskfile(doc, {!c.no_timestamp, std::move(verb)}), c);
}

int run_file(const Common& c, std::optional<std::string> verb) {
  json doc;
  try {
    doc = read_json_file(c.file);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return run_doc(doc, c, std::move(verb));
}

json inline_doc(json task) { return {{"schema_version", schema_version}, {"tasks", json::array({std::move(task)})}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curalg: current algebras of differential graded Lie algebras"};
  app.require_subcommand(0, 1);
  bool fixtures = false;
  app.add_flag("--fixtures", fixtures, "list the shipped fixture catalogue");

  Common run_c;
  auto* run = app.add_subcommand("run", "run every task of a task file");
  add_common(run, run_c, true);

  Common build_c;
  auto* build = app.add_subcommand("build", "load a task file, run its constructors and validators");
  add_common(build, build_c, true);

  // verbs that filter the task file or take inline names
  struct Inline {
    Common c;
    std::string cdga, dgla, lie, module = "trivial", object;
    int degree = 0;
    std::string mode = "exact";
  };
  std::map<std::string, Inline> inl;
  std::map<std::string, CLI::App*> verbs;
  for (const char* v : {"validate", "ca", "sa", "sequence", "cohomology", "extract", "compare"}) {
    auto* cmd = app.add_subcommand(v, std::string("run the \"") + v + "\" tasks of a task file");
    Inline& i = inl[v];
    add_common(cmd, i.c, false);
    verbs[v] = cmd;
  }
  for (const char* v : {"ca", "sa", "sequence"}) {
    verbs[v]->add_option("--cdga", inl[v].cdga, "CDGA name (without a task file)");
    verbs[v]->add_option("--dgla", inl[v].dgla, "dgla name, e.g. cone(sl2)");
  }
  verbs["validate"]->add_option("--object", inl["validate"].object, "fixture name (without a task file)");
  {
    Inline& i = inl["cohomology"];
    auto* cmd = verbs["cohomology"];
    cmd->add_option("--lie", i.lie, "Chevalley-Eilenberg cohomology of this Lie algebra");
    cmd->add_option("--module", i.module, "trivial, adjoint or coadjoint")->check(CLI::IsMember({"trivial", "adjoint", "coadjoint"}));
    cmd->add_option("--cdga", i.cdga, "cohomology of a CDGA");
    cmd->add_option("--dgla", i.dgla, "cohomology of a dgla");
    cmd->add_option("--degree", i.degree, "degree");
  }

  Common cert_c;
  bool all = false;
  int criterion = 0;
  auto* certify = app.add_subcommand("certify", "run the acceptance certification");
  certify->add_flag("--all", all, "all criteria");
  certify->add_option("--criterion", criterion, "a single criterion")->check(CLI::Range(1, criterion_count));
  certify->add_option("--report", cert_c.report, "write the JSON report to this path");
  certify->add_flag("--no-timestamp", cert_c.no_timestamp, "omit the timestamp field from the report");
  certify->add_flag("--json", cert_c.print_json, "print the JSON report to stdout");

  std::string export_name, export_file, format = "json", output;
  auto* exp = app.add_subcommand("export", "print the structure constants of a named object");
  exp->add_option("name", export_name, "object name (fixture, cone(<lie>) or task-file object)")->required();
  exp->add_option("--taskfile", export_file, "task file defining the object");
  exp->add_option("--format", format, "json or text-table")->check(CLI::IsMember({"json", "text-table"}));
  exp->add_option("-o,--output", output, "write to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (fixtures) {
    std::cout << fixture_catalogue().dump(2) << "\n";
    return 0;
  }
  if (*run) return run_file(run_c, std::nullopt);
  if (*build) return run_file(build_c, std::string("build"));
  for (auto& [v, cmd] : verbs) {
    if (!*cmd) continue;
    Inline& i = inl[v];
    if (!i.c.file.empty()) return run_file(i.c, v);
    json task = {{"verb", v}};
    if (v == "ca" || v == "sa" || v == "sequence") {
      if (i.cdga.empty() || i.dgla.empty()) {
        std::cerr << v << ": give a task file or both --cdga and --dgla\n";
        return 2;
      }
      task["cdga"] = i.cdga;
      task["dgla"] = i.dgla;
    } else if (v == "validate" && !i.object.empty()) {
      task["object"] = i.object;
    } else if (v == "cohomology" && (!i.lie.empty() || !i.cdga.empty() || !i.dgla.empty())) {
      task["degree"] = i.degree;
      if (!i.lie.empty()) {
        task["lie"] = i.lie;
        task["module"] = i.module;
      } else if (!i.cdga.empty()) {
        task["cdga"] = i.cdga;
      } else {
        task["dgla"] = i.dgla;
      }
    } else {
      std::cerr << v << ": a task file is required\n";
      return 2;
    }
    return run_doc(inline_doc(std::move(task)), i.c, std::nullopt);
  }
  if (*certify) {
    if (!all && criterion == 0) {
      std::cerr << "certify: give --all or --criterion N\n";
      return 2;
    }
    std::vector<CriterionResult> res;
    if (all) res = certify_all();
    else res.push_back(certify_criterion(criterion));
    RunResult r;
    r.report = criteria_report(res, !cert_c.no_timestamp);
    bool ok = true;
    for (const auto& c : res) {
      r.lines.push_back(summary_line(c));
      ok = ok && c.passed();
    }
    r.exit_code = ok ? 0 : 1;
    return emit(r, cert_c);
  }
  if (*exp) {
    try {
      Workspace w;
      if (!export_file.empty()) {
        w = load_workspace(read_json_file(export_file));
        if (!w.preflight.passed()) {
          std::cerr << "export: task file data failed validation: " << w.preflight.first_failure()->name << "\n";
          return 1;
        }
      }
      json doc = w.export_object(export_name);
      std::string text = format == "json" ? doc.dump(2) + "\n" : text_table(doc);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(output, std::ios::binary) << text;
      }
      return 0;
    } catch (const InputError& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return 2;
    }
  }
  std::cout << app.help();
  return 0;
}
