#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace curalg {

/// One verified identity family: how many basis tuples were checked and,
/// on failure, the first offending tuple in basis order.
struct Check {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;
};

struct Certificate {
  std::string subject;
  std::vector<Check> checks;

  bool passed() const;
  Check& check(const std::string& name);
  const Check* find(const std::string& name) const;
  /// Records one case; keeps the first failure as the witness.
  void record(const std::string& name, bool ok, const std::string& witness = {});
  void merge(const Certificate& other, const std::string& prefix = {});
  /// First failed check in recording order, or nullptr.
  const Check* first_failure() const;
  /// "name: fail (witness)" lines for every failed check.
  std::string failures() const;
};

}  // namespace curalg
