#pragma once

#include "curalg/constructions.hpp"

#include <string>

namespace testing {

/// Name of the check a constructor rejected with, or "" when it succeeded.
template <class F>
std::string rejection(F&& f) {
  try {
    f();
  } catch (const curalg::Rejected& r) {
    return r.check();
  }
  return {};
}

inline curalg::Vec at(const curalg::Dgla& a, const std::string& label, const curalg::Scalar& c = 1) {
  return curalg::Vec::unit(a.index(label), c);
}

}  // namespace testing
