#include "lag2/report.hpp"

#include <algorithm>

namespace lag2 {

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.passed; }));
}

}  // namespace lag2
