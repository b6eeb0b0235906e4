#pragma once

#include <stdexcept>
#include <string>

namespace rightsize {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance, schedule or table dimensions disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// No finite-cost schedule exists, or a given schedule violates capacity/fleet limits.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Bad algorithm parameter (epsilon, gamma, wrong instance kind for an algorithm).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// DP grid or enumeration larger than the configured ceiling.
class CapacityLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace rightsize
