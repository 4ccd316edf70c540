#pragma once

#include <stdexcept>
#include <string>

namespace tailsmith {

// Bad numeric argument: t outside the MGF domain, a <= 0 where a > 0 is
// required, window wider than the threshold, sign mismatches, t = 0 for a
// smoothed Chernoff window.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// The distribution fails a hypothesis of the requested bound (negative
// support for Markov, missing variance for Chebyshev, non-unimodal for the
// Gauss bound, ...).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Gauss-bound threshold a^2 >= (4/3) E[X^2] not met.
class applicability_error : public precondition_error {
 public:
  explicit applicability_error(const std::string& what) : precondition_error(what) {}
};

// Distribution literal / CLI grammar errors.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tailsmith
