#include "ftcslab/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ftcslab {

std::vector<double> Grid1D::nodes() const {
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = node(j);
  return x;
}

Grid1D build_grid(double x_min, double x_max, std::size_t n) {
  if (n < 3) throw std::invalid_argument("grid needs at least 3 nodes for a 3-point stencil");
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max))
    throw std::invalid_argument("grid interval must satisfy x_min < x_max");
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n = n;
  g.h = (x_max - x_min) / static_cast<double>(n - 1);
  return g;
}

Grid1D build_periodic_grid(double x_min, double x_max, std::size_t n) {
  if (n < 3) throw std::invalid_argument("grid needs at least 3 nodes for a 3-point stencil");
  if (!(x_min < x_max)) throw std::invalid_argument("grid interval must satisfy x_min < x_max");
  const double h = (x_max - x_min) / static_cast<double>(n);
  Grid1D g = build_grid(x_min, x_max - h, n);
  g.h = h;
  return g;
}

SolutionField::SolutionField(const Grid1D& g, std::vector<double> v, double t)
    : grid(g), values(std::move(v)), time(t) {
  if (values.size() != grid.n)
    throw std::invalid_argument("field length does not match grid node count");
}

bool SolutionField::all_finite() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

double SolutionField::max_norm() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

void apply_boundary_in_place(SolutionField& field, BoundaryRule rule) {
  if (field.values.empty()) throw std::invalid_argument("cannot fill ghosts of an empty field");
  switch (rule) {
    case BoundaryRule::Periodic:
      field.ghost_left = field.values.back();
      field.ghost_right = field.values.front();
      break;
    case BoundaryRule::Outflow:
      field.ghost_left = field.values.front();
      field.ghost_right = field.values.back();
      break;
  }
}

SolutionField apply_boundary(SolutionField field, BoundaryRule rule) {
  apply_boundary_in_place(field, rule);
  return field;
}

const char* to_string(BoundaryRule rule) {
  return rule == BoundaryRule::Periodic ? "periodic" : "outflow";
}

BoundaryRule boundary_from_string(const std::string& name) {
  if (name == "periodic") return BoundaryRule::Periodic;
  if (name == "outflow") return BoundaryRule::Outflow;
  throw std::invalid_argument("unknown boundary rule '" + name + "'");
}

}  // namespace ftcslab
