#include "rightsize/grid.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

#include "rightsize/cost_function.hpp"

namespace rightsize {

ConfigGrid::ConfigGrid(std::vector<std::vector<int>> axes) : axes_(std::move(axes)), strides_(axes_.size()) {
  size_ = 1;
  for (std::size_t j = axes_.size(); j-- > 0;) {
    assert(!axes_[j].empty() && axes_[j].front() == 0);
    assert(std::is_sorted(axes_[j].begin(), axes_[j].end()));
    strides_[j] = size_;
    size_ *= axes_[j].size();
  }
}

ConfigGrid ConfigGrid::full(std::span<const int> fleet) {
  std::vector<std::vector<int>> axes;
  for (int m : fleet) {
    std::vector<int> axis(static_cast<std::size_t>(m) + 1);
    std::iota(axis.begin(), axis.end(), 0);
    axes.push_back(std::move(axis));
  }
  return ConfigGrid(std::move(axes));
}

void ConfigGrid::decode(std::size_t index, std::span<int> counts) const {
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    counts[j] = axes_[j][index / strides_[j]];
    index %= strides_[j];
  }
}

ServerConfig ConfigGrid::config(std::size_t index) const {
  std::vector<int> counts(axes_.size());
  decode(index, counts);
  return ServerConfig(std::move(counts));
}

std::optional<std::size_t> ConfigGrid::find(std::span<const int> counts) const {
  std::size_t index = 0;
  for (std::size_t j = 0; j < axes_.size(); ++j) {
    const auto& axis = axes_[j];
    const auto it = std::lower_bound(axis.begin(), axis.end(), counts[j]);
    if (it == axis.end() || *it != counts[j]) return std::nullopt;
    index += static_cast<std::size_t>(it - axis.begin()) * strides_[j];
  }
  return index;
}

LayerValueTable LayerValueTable::origin(std::size_t size, double zero_value) {
  std::vector<double> values(size, kInfiniteCost);
  values[0] = zero_value;
  return from_values(std::move(values));
}

LayerValueTable LayerValueTable::from_values(std::vector<double> values) {
  assert(values.size() <= std::numeric_limits<std::uint32_t>::max());
  LayerValueTable table;
  table.argmin.resize(values.size());
  std::iota(table.argmin.begin(), table.argmin.end(), std::uint32_t{0});
  table.values = std::move(values);
  return table;
}

}  // namespace rightsize
