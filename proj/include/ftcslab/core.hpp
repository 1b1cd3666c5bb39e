#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ftcslab {

/// Uniform node-centred mesh over the closed interval [x_min, x_max].
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t n = 3;
  double h = 0.5;

  double node(std::size_t j) const { return x_min + static_cast<double>(j) * h; }
  std::vector<double> nodes() const;

  bool operator==(const Grid1D&) const = default;
};

/// Builds a grid with n nodes where node 0 = x_min and node n-1 = x_max.
/// Throws std::invalid_argument for n < 3 or an empty interval.
Grid1D build_grid(double x_min, double x_max, std::size_t n);

/// Grid sampling one period [x_min, x_max) with n distinct nodes, h = (x_max - x_min)/n.
/// The node at x_max is the image of node 0 and is not stored, so the
/// periodic ghost rule wraps onto the correct neighbour.
Grid1D build_periodic_grid(double x_min, double x_max, std::size_t n);

/// Node values at one time level plus one ghost node on each side.
struct SolutionField {
  Grid1D grid;
  std::vector<double> values;
  double ghost_left = 0.0;
  double ghost_right = 0.0;
  double time = 0.0;

  SolutionField() = default;
  explicit SolutionField(const Grid1D& g, double t = 0.0)
      : grid(g), values(g.n, 0.0), time(t) {}
  SolutionField(const Grid1D& g, std::vector<double> v, double t = 0.0);

  std::size_t size() const { return values.size(); }

  // Neighbour access with ghosts: left(0) is ghost_left, right(n-1) is ghost_right.
  double left(std::size_t j) const { return j == 0 ? ghost_left : values[j - 1]; }
  double right(std::size_t j) const {
    return j + 1 == values.size() ? ghost_right : values[j + 1];
  }

  bool all_finite() const;
  double max_norm() const;
};

enum class BoundaryRule { Periodic, Outflow };

/// Fills the ghost nodes; interior values are left untouched.
SolutionField apply_boundary(SolutionField field, BoundaryRule rule);
void apply_boundary_in_place(SolutionField& field, BoundaryRule rule);

const char* to_string(BoundaryRule rule);
BoundaryRule boundary_from_string(const std::string& name);

}  // namespace ftcslab
