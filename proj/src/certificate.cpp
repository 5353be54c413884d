#include "curalg/certificate.hpp"

#include <algorithm>

namespace curalg {

bool Certificate::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Check& Certificate::check(const std::string& name) {
  for (auto& c : checks)
    if (c.name == name) return c;
  checks.push_back(Check{name, true, 0, {}});
  return checks.back();
}

const Check* Certificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const Check* Certificate::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

void Certificate::record(const std::string& name, bool ok, const std::string& witness) {
  Check& c = check(name);
  ++c.cases;
  if (!ok && c.passed) {
    c.passed = false;
    c.witness = witness;
  }
}

void Certificate::merge(const Certificate& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check& mine = check(prefix + c.name);
    mine.cases += c.cases;
    if (!c.passed && mine.passed) {
      mine.passed = false;
      mine.witness = c.witness;
    }
  }
}

std::string Certificate::failures() const {
  std::string out;
  for (const auto& c : checks)
    if (!c.passed) out += c.name + ": fail (" + c.witness + ")\n";
  return out;
}

}  // namespace curalg
