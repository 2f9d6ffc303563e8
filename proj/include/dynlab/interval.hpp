#pragma once
//
// Certified enclosure [lo, hi] of a canonical-height value. The true value is
// guaranteed to lie inside; lo is clamped at 0 since canonical heights are
// nonnegative.
//

#include <algorithm>
#include <stdexcept>

namespace dynlab {

struct HeightInterval {
  double lo = 0.0;
  double hi = 0.0;

  HeightInterval() = default;
  HeightInterval(double l, double h) {
    lo = std::max(0.0, l);
    if (h < lo) {
      if (h < lo - 1e-9) throw std::logic_error("HeightInterval: hi < lo");
      h = lo;
    }
    hi = h;
  }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains(const HeightInterval& o) const { return lo <= o.lo && o.hi <= hi; }
};

inline bool intervals_overlap(double alo, double ahi, double blo, double bhi) {
  return alo <= bhi && blo <= ahi;
}

inline bool intervals_overlap(const HeightInterval& a, const HeightInterval& b) {
  return intervals_overlap(a.lo, a.hi, b.lo, b.hi);
}

}  // namespace dynlab
