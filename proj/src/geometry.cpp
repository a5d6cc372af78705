#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "errors.hpp"

namespace lebmesh {

PointSet::PointSet(int d, std::vector<double> xs, std::vector<double> ws)
    : dim(d), coords(std::move(xs)), weights(std::move(ws)) {
  require(d >= 1, errc::invalid_argument, "point set dimension must be positive");
  require(coords.size() % static_cast<std::size_t>(d) == 0, errc::invalid_argument,
          "coordinate count is not a multiple of the dimension");
  require(weights.empty() || weights.size() == card(), errc::invalid_argument,
          "weight count does not match point count");
}

void PointSet::push_point(const double* x) { coords.insert(coords.end(), x, x + dim); }

namespace {

// Determinant of the d x d edge matrix (columns v_i - v_0) by plain Gaussian
// elimination with partial pivoting; also returns the product of column norms
// so callers can judge degeneracy relative to scale.
std::pair<double, double> edge_determinant(const Simplex& s) {
  const int d = s.dim;
  std::vector<double> m(static_cast<std::size_t>(d) * d);
  double norm_product = 1.0;
  for (int j = 0; j < d; ++j) {
    double nrm2 = 0.0;
    for (int i = 0; i < d; ++i) {
      const double e = s.vertex(j + 1)[i] - s.vertex(0)[i];
      m[static_cast<std::size_t>(i) * d + j] = e;
      nrm2 += e * e;
    }
    norm_product *= std::sqrt(nrm2);
  }
  double det = 1.0;
  for (int k = 0; k < d; ++k) {
    int p = k;
    for (int i = k + 1; i < d; ++i)
      if (std::abs(m[static_cast<std::size_t>(i) * d + k]) > std::abs(m[static_cast<std::size_t>(p) * d + k])) p = i;
    if (p != k) {
      for (int j = 0; j < d; ++j) std::swap(m[static_cast<std::size_t>(p) * d + j], m[static_cast<std::size_t>(k) * d + j]);
      det = -det;
    }
    const double piv = m[static_cast<std::size_t>(k) * d + k];
    if (piv == 0.0) return {0.0, norm_product};
    det *= piv;
    for (int i = k + 1; i < d; ++i) {
      const double f = m[static_cast<std::size_t>(i) * d + k] / piv;
      for (int j = k; j < d; ++j) m[static_cast<std::size_t>(i) * d + j] -= f * m[static_cast<std::size_t>(k) * d + j];
    }
  }
  return {det, norm_product};
}

// Barycentric coordinates of x relative to the simplex (lambda_1..lambda_d for
// vertices 1..d; lambda_0 = 1 - sum). Solved fresh each call; d is tiny.
bool barycentric_inside(const Simplex& s, const double* x, double tol) {
  const int d = s.dim;
  std::vector<double> m(static_cast<std::size_t>(d) * (d + 1));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m[static_cast<std::size_t>(i) * (d + 1) + j] = s.vertex(j + 1)[i] - s.vertex(0)[i];
    m[static_cast<std::size_t>(i) * (d + 1) + d] = x[i] - s.vertex(0)[i];
  }
  for (int k = 0; k < d; ++k) {
    int p = k;
    for (int i = k + 1; i < d; ++i)
      if (std::abs(m[static_cast<std::size_t>(i) * (d + 1) + k]) > std::abs(m[static_cast<std::size_t>(p) * (d + 1) + k])) p = i;
    if (p != k)
      for (int j = k; j <= d; ++j) std::swap(m[static_cast<std::size_t>(p) * (d + 1) + j], m[static_cast<std::size_t>(k) * (d + 1) + j]);
    const double piv = m[static_cast<std::size_t>(k) * (d + 1) + k];
    if (piv == 0.0) return false;
    for (int i = k + 1; i < d; ++i) {
      const double f = m[static_cast<std::size_t>(i) * (d + 1) + k] / piv;
      for (int j = k; j <= d; ++j) m[static_cast<std::size_t>(i) * (d + 1) + j] -= f * m[static_cast<std::size_t>(k) * (d + 1) + j];
    }
  }
  std::vector<double> lambda(d);
  for (int i = d - 1; i >= 0; --i) {
    double v = m[static_cast<std::size_t>(i) * (d + 1) + d];
    for (int j = i + 1; j < d; ++j) v -= m[static_cast<std::size_t>(i) * (d + 1) + j] * lambda[j];
    lambda[i] = v / m[static_cast<std::size_t>(i) * (d + 1) + i];
  }
  double sum = 0.0;
  for (int j = 0; j < d; ++j) {
    if (lambda[j] < -tol) return false;
    sum += lambda[j];
  }
  return sum <= 1.0 + tol;
}

}  // namespace

int Domain::dim() const {
  if (auto* b = as_box()) return b->dim();
  if (auto* s = as_simplex()) return s->dim;
  return as_ball()->dim();
}

const char* Domain::tag() const {
  if (as_box()) return "box";
  if (as_simplex()) return "simplex";
  return "ball";
}

double Domain::scale() const {
  if (auto* b = as_box()) {
    double w = 0.0;
    for (int s = 0; s < b->dim(); ++s) w = std::max(w, b->width(s));
    return w;
  }
  if (auto* s = as_simplex()) {
    double w = 0.0;
    for (int i = 1; i <= s->dim; ++i) {
      double nrm2 = 0.0;
      for (int c = 0; c < s->dim; ++c) {
        const double e = s->vertex(i)[c] - s->vertex(0)[c];
        nrm2 += e * e;
      }
      w = std::max(w, std::sqrt(nrm2));
    }
    return w;
  }
  return 2.0 * as_ball()->radius;
}

bool Domain::contains(const double* x, double tol) const {
  if (auto* b = as_box()) {
    for (int s = 0; s < b->dim(); ++s)
      if (x[s] < b->lo[s] - tol || x[s] > b->hi[s] + tol) return false;
    return true;
  }
  if (auto* s = as_simplex()) {
    const double rel = tol / std::max(scale(), 1e-300);
    return barycentric_inside(*s, x, rel);
  }
  const Ball* bl = as_ball();
  double r2 = 0.0;
  for (int s = 0; s < bl->dim(); ++s) {
    const double e = x[s] - bl->center[s];
    r2 += e * e;
  }
  return std::sqrt(r2) <= bl->radius + tol;
}

Domain make_box(std::vector<double> lo, std::vector<double> hi) {
  require(!lo.empty() && lo.size() == hi.size(), errc::invalid_argument, "box bounds must be nonempty and equally sized");
  for (std::size_t s = 0; s < lo.size(); ++s)
    require(lo[s] < hi[s], errc::invalid_argument, "box requires lo < hi in every coordinate");
  return Domain{Box{std::move(lo), std::move(hi)}};
}

Domain make_cube(int dim) {
  require(dim >= 1, errc::invalid_argument, "cube dimension must be positive");
  return make_box(std::vector<double>(dim, -1.0), std::vector<double>(dim, 1.0));
}

Domain make_simplex(int dim, std::vector<double> vertices) {
  require(dim >= 1, errc::invalid_argument, "simplex dimension must be positive");
  require(vertices.size() == static_cast<std::size_t>(dim + 1) * dim, errc::invalid_argument,
          "simplex needs dim+1 vertices of dim coordinates each");
  Simplex s{dim, std::move(vertices)};
  auto [det, norm_product] = edge_determinant(s);
  require(std::abs(det) > 1e-12 * std::max(norm_product, 1e-300), errc::invalid_argument,
          "simplex vertices are affinely dependent (degenerate)");
  return Domain{std::move(s)};
}

Domain make_unit_simplex(int dim) {
  require(dim >= 1, errc::invalid_argument, "simplex dimension must be positive");
  std::vector<double> v(static_cast<std::size_t>(dim + 1) * dim, 0.0);
  for (int i = 1; i <= dim; ++i) v[static_cast<std::size_t>(i) * dim + (i - 1)] = 1.0;
  return make_simplex(dim, std::move(v));
}

Domain make_ball(std::vector<double> center, double radius) {
  require(!center.empty(), errc::invalid_argument, "ball center must be nonempty");
  require(radius > 0.0, errc::invalid_argument, "ball radius must be positive");
  return Domain{Ball{std::move(center), radius}};
}

Domain make_unit_ball(int dim) {
  require(dim >= 1, errc::invalid_argument, "ball dimension must be positive");
  return make_ball(std::vector<double>(dim, 0.0), 1.0);
}

bool same_domain(const Domain& a, const Domain& b) {
  if (a.shape.index() != b.shape.index() || a.dim() != b.dim()) return false;
  const double tol = 1e-12 * std::max(a.scale(), b.scale());
  auto close = [tol](const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (std::abs(u[i] - v[i]) > tol) return false;
    return true;
  };
  if (auto* ba = a.as_box()) {
    auto* bb = b.as_box();
    return close(ba->lo, bb->lo) && close(ba->hi, bb->hi);
  }
  if (auto* sa = a.as_simplex()) {
    auto* sb = b.as_simplex();
    return close(sa->vertices, sb->vertices);
  }
  auto* la = a.as_ball();
  auto* lb = b.as_ball();
  return close(la->center, lb->center) && std::abs(la->radius - lb->radius) <= tol;
}

}  // namespace lebmesh
