#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace dynlab {

struct HeightInterval;

// Iteration/size budget exceeded. Carries the best certified data computed
// before the budget ran out, when there is any.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
  resource_error(const std::string& what, double lo, double hi)
      : std::runtime_error(what), best_lo(lo), best_hi(hi), has_best(true) {}

  double best_lo = 0.0;
  double best_hi = 0.0;
  bool has_best = false;
};

}  // namespace dynlab
