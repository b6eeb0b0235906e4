#include "rightsize/cost_function.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "format.hpp"

namespace rightsize {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool power_is_linear(const Power& f) { return f.b == 0.0 || f.p == 1.0; }

double last_slope(const PiecewiseLinear& f) {
  const auto& pts = f.breakpoints;
  if (pts.size() < 2) return 0.0;
  const auto& lo = pts[pts.size() - 2];
  const auto& hi = pts.back();
  return (hi.value - lo.value) / (hi.z - lo.z);
}

std::pair<double, double> linear_loads(double slope, double threshold, double z_max) {
  return {slope < threshold ? z_max : 0.0, slope <= threshold ? z_max : 0.0};
}

}  // namespace

std::string CostFunction::form_name() const {
  return std::visit(Overloaded{[](const Affine&) { return std::string("affine"); },
                               [](const Power&) { return std::string("power"); },
                               [](const PiecewiseLinear&) { return std::string("piecewise"); }},
                    form_);
}

double CostFunction::operator()(double z) const {
  assert(z >= 0.0);
  if (z > z_max_) return kInfiniteCost;
  return std::visit(
      Overloaded{[z](const Affine& f) { return f.a + f.b * z; },
                 [z](const Power& f) { return f.a + f.b * std::pow(z, f.p); },
                 [z](const PiecewiseLinear& f) {
                   const auto& pts = f.breakpoints;
                   if (pts.empty()) return 0.0;
                   if (z >= pts.back().z) return pts.back().value + last_slope(f) * (z - pts.back().z);
                   auto hi = std::upper_bound(pts.begin(), pts.end(), z,
                                              [](double v, const Breakpoint& p) { return v < p.z; });
                   auto lo = hi - 1;
                   const double slope = (hi->value - lo->value) / (hi->z - lo->z);
                   return lo->value + slope * (z - lo->z);
                 }},
      form_);
}

double CostFunction::idle() const {
  return std::visit(Overloaded{[](const Affine& f) { return f.a; }, [](const Power& f) { return f.a; },
                               [](const PiecewiseLinear& f) {
                                 return f.breakpoints.empty() ? 0.0 : f.breakpoints.front().value;
                               }},
                    form_);
}

bool CostFunction::is_piecewise_linear() const {
  if (const auto* p = std::get_if<Power>(&form_)) return power_is_linear(*p);
  return true;
}

bool CostFunction::is_load_independent() const {
  return std::visit(Overloaded{[](const Affine& f) { return f.b == 0.0; }, [](const Power& f) { return f.b == 0.0; },
                               [](const PiecewiseLinear& f) {
                                 return std::all_of(f.breakpoints.begin(), f.breakpoints.end(), [&](const Breakpoint& p) {
                                   return p.value == f.breakpoints.front().value;
                                 });
                               }},
                    form_);
}

std::pair<double, double> CostFunction::loads_at_marginal_cost(double threshold) const {
  return std::visit(
      Overloaded{[&](const Affine& f) { return linear_loads(f.b, threshold, z_max_); },
                 [&](const Power& f) -> std::pair<double, double> {
                   if (power_is_linear(f)) return linear_loads(f.b, threshold, z_max_);
                   if (threshold <= 0.0) return {0.0, 0.0};
                   const double z = std::min(z_max_, std::pow(threshold / (f.b * f.p), 1.0 / (f.p - 1.0)));
                   return {z, z};
                 },
                 [&](const PiecewiseLinear&) -> std::pair<double, double> {
                   double low = 0.0;
                   double high = 0.0;
                   for (const auto& seg : segments()) {
                     if (seg.slope < threshold) low = seg.end;
                     if (seg.slope <= threshold) {
                       high = seg.end;
                     } else {
                       break;
                     }
                   }
                   return {low, high};
                 }},
      form_);
}

double CostFunction::marginal_cost_at_capacity() const {
  return std::visit(Overloaded{[](const Affine& f) { return f.b; },
                               [this](const Power& f) {
                                 if (power_is_linear(f)) return f.b;
                                 return f.b * f.p * std::pow(z_max_, f.p - 1.0);
                               },
                               [this](const PiecewiseLinear&) {
                                 const auto segs = segments();
                                 return segs.empty() ? 0.0 : segs.back().slope;
                               }},
                    form_);
}

std::vector<LinearSegment> CostFunction::segments() const {
  assert(is_piecewise_linear());
  std::vector<LinearSegment> out;
  if (z_max_ <= 0.0) return out;
  std::visit(Overloaded{[&](const Affine& f) { out.push_back({0.0, z_max_, f.b}); },
                        [&](const Power& f) { out.push_back({0.0, z_max_, f.b}); },
                        [&](const PiecewiseLinear& f) {
                          const auto& pts = f.breakpoints;
                          for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
                            if (pts[k].z >= z_max_) return;
                            const double slope = (pts[k + 1].value - pts[k].value) / (pts[k + 1].z - pts[k].z);
                            out.push_back({pts[k].z, std::min(pts[k + 1].z, z_max_), slope});
                          }
                          const double tail = pts.empty() ? 0.0 : pts.back().z;
                          if (tail < z_max_) out.push_back({tail, z_max_, last_slope(f)});
                        }},
             form_);
  return out;
}

CostFunction CostFunction::scaled(double factor) const {
  Form form = std::visit(Overloaded{[&](const Affine& f) -> Form { return Affine{f.a * factor, f.b * factor}; },
                                    [&](const Power& f) -> Form {
                                      return Power{f.a * factor, f.b * factor, f.p};
                                    },
                                    [&](const PiecewiseLinear& f) -> Form {
                                      PiecewiseLinear g = f;
                                      for (auto& p : g.breakpoints) p.value *= factor;
                                      return g;
                                    }},
                         form_);
  return {std::move(form), z_max_};
}

std::vector<std::string> CostFunction::violations() const {
  using detail::compact;
  std::vector<std::string> out;
  if (!std::isfinite(z_max_) || z_max_ < 0.0) out.push_back("z_max must be finite and >= 0, got " + compact(z_max_));
  auto check_ab = [&](double a, double b) {
    if (!std::isfinite(a) || a < 0.0) out.push_back("a must be finite and >= 0, got " + compact(a));
    if (!std::isfinite(b) || b < 0.0) out.push_back("b must be finite and >= 0, got " + compact(b));
  };
  std::visit(Overloaded{[&](const Affine& f) { check_ab(f.a, f.b); },
                        [&](const Power& f) {
                          check_ab(f.a, f.b);
                          if (!std::isfinite(f.p) || f.p < 1.0) out.push_back("p must be >= 1, got " + compact(f.p));
                        },
                        [&](const PiecewiseLinear& f) {
                          const auto& pts = f.breakpoints;
                          if (pts.empty()) {
                            out.push_back("piecewise function needs at least one breakpoint");
                            return;
                          }
                          for (const auto& p : pts) {
                            if (!std::isfinite(p.z) || !std::isfinite(p.value)) {
                              out.push_back("breakpoints must be finite");
                              return;
                            }
                          }
                          if (pts.front().z != 0.0) out.push_back("first breakpoint must be at z = 0, got " + compact(pts.front().z));
                          if (pts.front().value < 0.0) out.push_back("f(0) must be >= 0, got " + compact(pts.front().value));
                          double prev_slope = -kInfiniteCost;
                          for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
                            if (!(pts[k + 1].z > pts[k].z)) {
                              out.push_back("breakpoints not strictly increasing at z = " + compact(pts[k + 1].z));
                              return;
                            }
                            if (pts[k + 1].value < pts[k].value) {
                              out.push_back("decreasing: f(" + compact(pts[k + 1].z) + ") < f(" + compact(pts[k].z) + ")");
                            }
                            const double slope = (pts[k + 1].value - pts[k].value) / (pts[k + 1].z - pts[k].z);
                            if (slope < prev_slope) {
                              out.push_back("non-convex: slope decreases " + compact(prev_slope) + "→" + compact(slope));
                            }
                            prev_slope = slope;
                          }
                        }},
             form_);
  return out;
}

bool operator==(const Affine& lhs, const Affine& rhs) { return lhs.a == rhs.a && lhs.b == rhs.b; }
bool operator==(const Power& lhs, const Power& rhs) { return lhs.a == rhs.a && lhs.b == rhs.b && lhs.p == rhs.p; }
bool operator==(const Breakpoint& lhs, const Breakpoint& rhs) { return lhs.z == rhs.z && lhs.value == rhs.value; }
bool operator==(const PiecewiseLinear& lhs, const PiecewiseLinear& rhs) { return lhs.breakpoints == rhs.breakpoints; }
bool operator==(const CostFunction& lhs, const CostFunction& rhs) {
  return lhs.z_max_ == rhs.z_max_ && lhs.form_ == rhs.form_;
}

}  // namespace rightsize
