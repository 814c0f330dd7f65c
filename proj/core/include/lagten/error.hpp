#pragma once

#include <stdexcept>
#include <string>

namespace lagten {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear system has no solution.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// A scan or search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A plane does not project isomorphically onto the requested chart.
class NotTransverse : public Error {
 public:
  explicit NotTransverse(const std::string& what, int rank_defect = 0)
      : Error(what), rank_defect_(rank_defect) {}
  int rank_defect() const noexcept { return rank_defect_; }

 private:
  int rank_defect_;
};

/// A linear system or subspace had a different dimension than required.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, long expected, long actual)
      : Error(what + " (expected " + std::to_string(expected) + ", got " +
              std::to_string(actual) + ")"),
        expected_(expected),
        actual_(actual) {}
  long expected() const noexcept { return expected_; }
  long actual() const noexcept { return actual_; }

 private:
  long expected_;
  long actual_;
};

}  // namespace lagten
