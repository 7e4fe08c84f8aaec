#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lag2 {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string title;
  std::vector<Check> checks;

  std::size_t passed() const;
  bool ok() const { return passed() == checks.size(); }
};

}  // namespace lag2
