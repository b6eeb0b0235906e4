#pragma once

#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rightsize {

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

// Loads within this relative margin of a capacity count as fitting, so that
// e.g. 0.28 * 5 against 2 * 0.7 is not rejected over the last bit.
inline constexpr double kCapacitySlack = 1e-12;

inline bool exceeds_capacity(double load, double capacity) { return load > capacity * (1.0 + kCapacitySlack); }

// f(z) = a + b*z
struct Affine {
  double a = 0.0;
  double b = 0.0;
};

// f(z) = a + b*z^p, p >= 1
struct Power {
  double a = 0.0;
  double b = 0.0;
  double p = 1.0;
};

struct Breakpoint {
  double z = 0.0;
  double value = 0.0;
};

// Linear interpolation between breakpoints; past the last breakpoint the last
// slope is extended up to z_max.
struct PiecewiseLinear {
  std::vector<Breakpoint> breakpoints;
};

// One linear piece of a piecewise-linear function on [begin, end].
struct LinearSegment {
  double begin = 0.0;
  double end = 0.0;
  double slope = 0.0;
};

/// Per-server operating cost as a function of the load z in [0, z_max].
///
/// Loads above z_max cost +inf. The function is plain data; use
/// `violations()` to check convexity and monotonicity before solving.
class CostFunction {
 public:
  using Form = std::variant<Affine, Power, PiecewiseLinear>;

  CostFunction() = default;
  CostFunction(Form form, double z_max) : form_(std::move(form)), z_max_(z_max) {}

  static CostFunction affine(double a, double b, double z_max) {
    return {Affine{a, b}, z_max};
  }
  static CostFunction power(double a, double b, double p, double z_max) {
    return {Power{a, b, p}, z_max};
  }
  static CostFunction piecewise(std::vector<Breakpoint> points, double z_max) {
    return {PiecewiseLinear{std::move(points)}, z_max};
  }

  const Form& form() const { return form_; }
  double z_max() const { return z_max_; }

  // "affine", "power" or "piecewise"
  std::string form_name() const;

  double operator()(double z) const;

  // Idle cost f(0).
  double idle() const;

  // True for affine, power with p == 1 or b == 0, and piecewise forms.
  bool is_piecewise_linear() const;
  // f(z) = f(0) on [0, z_max].
  bool is_load_independent() const;

  /// Loads at which the subgradient of f contains `threshold`, as the
  /// interval [low, high] clamped to [0, z_max]. `low` is the smallest load
  /// whose right-derivative reaches the threshold, `high` the largest whose
  /// left-derivative does not exceed it.
  std::pair<double, double> loads_at_marginal_cost(double threshold) const;

  // Left derivative at z_max (the largest finite marginal cost).
  double marginal_cost_at_capacity() const;

  // Linear pieces on [0, z_max]; only valid if is_piecewise_linear().
  std::vector<LinearSegment> segments() const;

  CostFunction scaled(double factor) const;

  // Empty when the function satisfies every structural requirement.
  std::vector<std::string> violations() const;

  friend bool operator==(const CostFunction& lhs, const CostFunction& rhs);

 private:
  Form form_ = Affine{};
  double z_max_ = 0.0;
};

bool operator==(const Affine& lhs, const Affine& rhs);
bool operator==(const Power& lhs, const Power& rhs);
bool operator==(const Breakpoint& lhs, const Breakpoint& rhs);
bool operator==(const PiecewiseLinear& lhs, const PiecewiseLinear& rhs);

}  // namespace rightsize
