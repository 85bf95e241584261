#pragma once

#include <vector>

#include "ditopo/rat.hpp"

namespace ditopo {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value;
  std::vector<Rat> x;
};

// Exact two-phase simplex (Bland's rule):
//   minimize c.x  subject to  A x = b,  x >= 0.
LPResult lp_minimize(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                     const std::vector<Rat>& c);

}  // namespace ditopo
