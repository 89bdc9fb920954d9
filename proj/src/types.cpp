#include "dea/types.hpp"

#include <cstdlib>

namespace dea {

namespace {
void read_env(const char* name, Real& value) {
  if (const char* s = std::getenv(name)) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && v > 0) value = v;
  }
}
}  // namespace

Tolerances Tolerances::from_env() {
  Tolerances tol;
  read_env("DEA_FEAS_TOL", tol.feas);
  read_env("DEA_GAP_TOL", tol.gap);
  read_env("DEA_PIVOT_TOL", tol.pivot);
  read_env("DEA_MEMBER_TOL", tol.member);
  return tol;
}

}  // namespace dea
