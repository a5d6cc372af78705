#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace lebmesh {

/// Flat, row-major list of d-dimensional points, optionally carrying one
/// weight per point. Weighted sets represent discrete measures.
struct PointSet {
  int dim = 0;
  std::vector<double> coords;   // card * dim
  std::vector<double> weights;  // empty, or card entries

  PointSet() = default;
  PointSet(int d, std::vector<double> xs, std::vector<double> ws = {});

  std::size_t card() const { return dim > 0 ? coords.size() / static_cast<std::size_t>(dim) : 0; }
  const double* point(std::size_t i) const { return coords.data() + i * static_cast<std::size_t>(dim); }
  double* point(std::size_t i) { return coords.data() + i * static_cast<std::size_t>(dim); }
  bool has_weights() const { return !weights.empty(); }
  void push_point(const double* x);
};

struct Box {
  std::vector<double> lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
  double width(int s) const { return hi[s] - lo[s]; }
};

struct Simplex {
  int dim = 0;
  std::vector<double> vertices;  // (dim+1) * dim, row-major
  const double* vertex(int i) const { return vertices.data() + static_cast<std::size_t>(i) * dim; }
};

struct Ball {
  std::vector<double> center;
  double radius = 1.0;
  int dim() const { return static_cast<int>(center.size()); }
};

/// Tagged compact domain. All mesh and projector machinery dispatches on the
/// shape held here.
struct Domain {
  std::variant<Box, Simplex, Ball> shape;

  int dim() const;
  const char* tag() const;  // "box" | "simplex" | "ball"
  /// Characteristic length used to scale geometric tolerances.
  double scale() const;
  bool contains(const double* x, double tol) const;

  const Box* as_box() const { return std::get_if<Box>(&shape); }
  const Simplex* as_simplex() const { return std::get_if<Simplex>(&shape); }
  const Ball* as_ball() const { return std::get_if<Ball>(&shape); }
};

Domain make_box(std::vector<double> lo, std::vector<double> hi);
Domain make_cube(int dim);  // [-1,1]^dim
Domain make_simplex(int dim, std::vector<double> vertices);
Domain make_unit_simplex(int dim);  // conv{0, e_1, ..., e_d}
Domain make_ball(std::vector<double> center, double radius);
Domain make_unit_ball(int dim);

/// True when both domains have the same shape, dimension and geometry
/// (coordinates compared to 1e-12 of the domain scale).
bool same_domain(const Domain& a, const Domain& b);

}  // namespace lebmesh
