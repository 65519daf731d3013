#pragma once

#include <map>
#include <memory>
#include <string>

#include "mckay/verify.hpp"

namespace mckay::test {

// One cached pipeline per group for the whole test binary.
inline const Pipeline& pipeline(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<Pipeline>> cache;
  auto& slot = cache[spec];
  if (!slot) slot = make_pipeline(spec);
  return *slot;
}

inline const std::vector<std::string>& all_groups() {
  static const std::vector<std::string> g{"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "dihedral:2",
                                          "dihedral:3", "dihedral:4", "tetra", "octa", "icosa"};
  return g;
}

}  // namespace mckay::test
