#pragma once

#include <limits>
#include <string>

namespace tailsmith {

// Interval on the extended real line.  Endpoints may be +-infinity.
// Membership is closed at finite endpoints except where a caller asks for
// the interior (MGF domains are open at finite endpoints).
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  static Interval all() { return {}; }
  static Interval at_least(double lo) { return {lo, std::numeric_limits<double>::infinity()}; }
  static Interval at_most(double hi) { return {-std::numeric_limits<double>::infinity(), hi}; }

  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains_interior(double x) const { return lo < x && x < hi; }
  // this interval covers `other` entirely (closed-endpoint containment)
  bool covers(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  std::string str() const;
};

}  // namespace tailsmith
