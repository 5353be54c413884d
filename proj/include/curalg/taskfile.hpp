#pragma once

#include "curalg/io.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curalg {

/// Everything a task file defines, plus on-demand fixtures. Lookups fall
/// back to the shipped catalogue: Lie algebra and CDGA fixture names,
/// "cone(<lie>)" for dglas, "trace(<lie>)" and "sym_trace3(<lie>)" for the
/// matrix-realized Lie algebras.
struct Workspace {
  std::map<std::string, LieAlgebra> lie;
  std::map<std::string, Cdga> cdgas;
  std::map<std::string, GDiffSpace> gdiff;
  std::map<std::string, Form2> forms2;
  std::map<std::string, Form3> forms3;
  std::map<std::string, std::pair<std::string, Vec>> vectors;  // (gdiff name, value)
  std::map<std::string, ExtensionDatum> extensions;
  std::map<std::string, Dgla> dglas;
  std::map<std::string, CurrentExtraction> extractions;
  std::map<std::string, Cocycle2> cocycles;
  /// Validators of every defined object, in definition order.
  Certificate preflight;

  LieAlgebra find_lie(const std::string& name, const std::string& where) const;
  Cdga find_cdga(const std::string& name, const std::string& where) const;
  GDiffSpace find_gdiff(const std::string& name, const std::string& where) const;
  Dgla find_dgla(const std::string& name, const std::string& where) const;
  Form2 find_form2(const std::string& name, const std::string& where) const;
  Form3 find_form3(const std::string& name, const std::string& where) const;
  Vec find_vector(const std::string& name, const std::string& gdiff, const std::string& where) const;
  const ExtensionDatum& find_extension(const std::string& name, const std::string& where) const;
  const CurrentExtraction& find_extraction(const std::string& name, const std::string& where) const;
  Cocycle2 find_cocycle(const std::string& name, const std::string& where) const;

  /// Structure-constant document of any named object.
  json export_object(const std::string& name) const;
};

/// Parses every section except "tasks". Throws InputError on schema errors
/// and unknown names; a construction that rejects its input is recorded as
/// a failed preflight check instead.
Workspace load_workspace(const json& doc);

struct RunOptions {
  bool timestamp = true;
  /// Run only the tasks with this verb.
  std::optional<std::string> verb;
};

struct RunResult {
  json report;
  std::vector<std::string> lines;  // human summary, one per task plus a total
  int exit_code = 0;
};

/// 0 all pass, 1 a validator or certification failed, 2 input error (the
/// report then holds only the error).
RunResult run_taskfile(const json& doc, const RunOptions& options);

/// Reads and parses a file; throws InputError when unreadable or not JSON.
json read_json_file(const std::string& path);

/// Shipped names, grouped by kind.
json fixture_catalogue();

}  // namespace curalg
