#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rightsize/instance.hpp"

namespace rightsize {

/// Box of server configurations: the product of per-type sorted value lists,
/// stored densely in mixed-radix order with type 0 most significant. Index
/// order is therefore lexicographic order of the configurations, and index 0
/// is the all-zero configuration (every axis starts at 0).
class ConfigGrid {
 public:
  ConfigGrid() = default;
  explicit ConfigGrid(std::vector<std::vector<int>> axes);

  // {0, 1, ..., m_j} per type.
  static ConfigGrid full(std::span<const int> fleet);

  std::size_t types() const { return axes_.size(); }
  std::size_t size() const { return size_; }
  const std::vector<int>& axis(std::size_t j) const { return axes_[j]; }
  const std::vector<std::vector<int>>& axes() const { return axes_; }
  std::size_t stride(std::size_t j) const { return strides_[j]; }

  ServerConfig config(std::size_t index) const;
  void decode(std::size_t index, std::span<int> counts) const;
  // Index of `counts`, or nullopt when some count is not on its axis.
  std::optional<std::size_t> find(std::span<const int> counts) const;

  friend bool operator==(const ConfigGrid& a, const ConfigGrid& b) { return a.axes_ == b.axes_; }

 private:
  std::vector<std::vector<int>> axes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// DP values over one layer's grid. `argmin[i]` is the grid index of the
/// configuration attaining `values[i]` (the arrival configuration after an
/// up-sweep, the operating configuration after a down-sweep).
struct LayerValueTable {
  std::vector<double> values;
  std::vector<std::uint32_t> argmin;

  // Every value +inf except `zero_value` at index 0; argmin is the identity.
  static LayerValueTable origin(std::size_t size, double zero_value = 0.0);
  // Given values, identity argmin.
  static LayerValueTable from_values(std::vector<double> values);

  std::size_t size() const { return values.size(); }
};

}  // namespace rightsize
