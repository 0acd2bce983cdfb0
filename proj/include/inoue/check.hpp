#pragma once

#include <string>
#include <vector>

namespace inoue {

struct Check {
  std::string name;
  std::string anchor;  // where the stated identity comes from
  bool passed = false;
  std::string details;
};

using CheckList = std::vector<Check>;

inline bool all_passed(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

inline void append(CheckList& into, const CheckList& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace inoue
