#include "lift/simplex.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "lift/errors.hpp"

namespace lift {

namespace {

// edge matrix E[:,i] = V[i+1] - V[0]; returns |det| and the max |entry|
void edge_stats(const Triangulation& tri, std::size_t s, double* abs_det,
                double* scale) {
  std::size_t d = tri.dim;
  const auto& sx = tri.simplices[s];
  std::vector<double> e(d * d);
  double sc = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      double v = tri.vertices[sx[i + 1]][k] - tri.vertices[sx[0]][k];
      e[k * d + i] = v;
      sc = std::max(sc, std::fabs(v));
    }
  // determinant by elimination with partial pivoting
  double det = 1.0;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < d; ++r)
      if (std::fabs(e[r * d + c]) > std::fabs(e[piv * d + c])) piv = r;
    if (piv != c) {
      for (std::size_t k = 0; k < d; ++k)
        std::swap(e[c * d + k], e[piv * d + k]);
      det = -det;
    }
    double p = e[c * d + c];
    det *= p;
    if (p == 0.0) break;
    for (std::size_t r = c + 1; r < d; ++r) {
      double f = e[r * d + c] / p;
      for (std::size_t k = c; k < d; ++k) e[r * d + k] -= f * e[c * d + k];
    }
  }
  *abs_det = std::fabs(det);
  *scale = sc;
}

void check_point_dim(const std::vector<double>& x, const Triangulation& tri,
                     const char* op) {
  if (x.size() != tri.dim)
    throw DimensionError(std::string(op) + ": point has dimension " +
                         std::to_string(x.size()) + ", triangulation has " +
                         std::to_string(tri.dim));
}

}  // namespace

void validate_triangulation(const Triangulation& tri) {
  if (tri.dim == 0) throw DomainError("triangulation: dimension must be >= 1");
  std::size_t L = tri.vertex_count();
  for (const auto& v : tri.vertices)
    if (v.size() != tri.dim)
      throw DimensionError("triangulation: vertex with wrong dimension");
  for (std::size_t s = 0; s < tri.simplex_count(); ++s) {
    const auto& sx = tri.simplices[s];
    if (sx.size() != tri.dim + 1)
      throw DimensionError("triangulation: simplex " + std::to_string(s) +
                           " has " + std::to_string(sx.size()) +
                           " vertices, expected " + std::to_string(tri.dim + 1));
    for (std::size_t idx : sx)
      if (idx >= L)
        throw DomainError("triangulation: simplex " + std::to_string(s) +
                          " references vertex " + std::to_string(idx) +
                          " out of range");
    double abs_det = 0.0, scale = 0.0;
    edge_stats(tri, s, &abs_det, &scale);
    double thresh = 1e-12 * std::pow(std::max(scale, 1e-300), tri.dim);
    if (!(abs_det > thresh))
      throw SingularSimplexError("triangulation: simplex " + std::to_string(s) +
                                 " is degenerate (|det| = " +
                                 std::to_string(abs_det) + ")");
  }
}

BarycentricCoords barycentric(const std::vector<double>& x,
                              const Triangulation& tri,
                              std::size_t simplex_index) {
  check_point_dim(x, tri, "barycentric");
  if (simplex_index >= tri.simplex_count())
    throw DomainError("barycentric: simplex index " +
                      std::to_string(simplex_index) + " out of range");
  std::size_t d = tri.dim;
  const auto& sx = tri.simplices[simplex_index];
  // solve E mu = x - V0, then lambda = (1 - sum(mu), mu...)
  std::vector<double> a(d * (d + 1));
  double scale = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      double v = tri.vertices[sx[c + 1]][r] - tri.vertices[sx[0]][r];
      a[r * (d + 1) + c] = v;
      scale = std::max(scale, std::fabs(v));
    }
    a[r * (d + 1) + d] = x[r] - tri.vertices[sx[0]][r];
  }
  double thresh = 1e-12 * std::max(scale, 1e-300);
  std::size_t w = d + 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < d; ++r)
      if (std::fabs(a[r * w + c]) > std::fabs(a[piv * w + c])) piv = r;
    if (std::fabs(a[piv * w + c]) <= thresh)
      throw SingularSimplexError(
          "barycentric: singular edge system for simplex " +
          std::to_string(simplex_index));
    if (piv != c)
      for (std::size_t k = c; k < w; ++k) std::swap(a[c * w + k], a[piv * w + k]);
    for (std::size_t r = c + 1; r < d; ++r) {
      double f = a[r * w + c] / a[c * w + c];
      for (std::size_t k = c; k < w; ++k) a[r * w + k] -= f * a[c * w + k];
    }
  }
  std::vector<double> mu(d);
  for (std::size_t c = d; c-- > 0;) {
    double s = a[c * w + d];
    for (std::size_t k = c + 1; k < d; ++k) s -= a[c * w + k] * mu[k];
    mu[c] = s / a[c * w + c];
  }
  BarycentricCoords bc;
  bc.simplex_index = simplex_index;
  bc.lambdas.resize(d + 1);
  double msum = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    bc.lambdas[i + 1] = mu[i];
    msum += mu[i];
  }
  bc.lambdas[0] = 1.0 - msum;
  return bc;
}

std::size_t locate_simplex(const std::vector<double>& x,
                           const Triangulation& tri) {
  check_point_dim(x, tri, "locate_simplex");
  for (std::size_t s = 0; s < tri.simplex_count(); ++s) {
    BarycentricCoords bc = barycentric(x, tri, s);
    bool inside = true;
    for (double l : bc.lambdas)
      if (l < -1e-12) {
        inside = false;
        break;
      }
    if (inside) return s;
  }
  std::ostringstream os;
  os << "locate_simplex: point (";
  for (std::size_t k = 0; k < x.size(); ++k)
    os << (k ? ", " : "") << x[k];
  os << ") is not inside any simplex";
  throw OutsideDomainError(os.str());
}

std::vector<double> lift_nd(const std::vector<double>& x,
                            const Triangulation& tri) {
  std::size_t s = locate_simplex(x, tri);
  BarycentricCoords bc = barycentric(x, tri, s);
  std::vector<double> z(tri.vertex_count(), 0.0);
  const auto& sx = tri.simplices[s];
  for (std::size_t i = 0; i <= tri.dim; ++i)
    z[sx[i]] = bc.lambdas[i] < 0.0 ? 0.0 : bc.lambdas[i];
  return z;
}

std::vector<double> inverse_lift_nd(const std::vector<double>& z,
                                    const Triangulation& tri) {
  if (z.size() != tri.vertex_count())
    throw DimensionError("inverse_lift_nd: vector length " +
                         std::to_string(z.size()) +
                         " does not match vertex count " +
                         std::to_string(tri.vertex_count()));
  std::vector<double> p(tri.dim, 0.0);
  for (std::size_t l = 0; l < z.size(); ++l) {
    double c = z[l];
    if (c == 0.0) continue;
    for (std::size_t k = 0; k < tri.dim; ++k) p[k] += c * tri.vertices[l][k];
  }
  return p;
}

Triangulation grid_triangulation(const std::vector<KnotSequence>& axes) {
  std::size_t d = axes.size();
  if (d == 0) throw DomainError("grid_triangulation: need at least one axis");
  std::vector<std::size_t> n(d), stride(d);
  std::size_t L = 1;
  for (std::size_t k = 0; k < d; ++k) {
    n[k] = axes[k].size();
    stride[k] = L;
    L *= n[k];
  }
  Triangulation tri;
  tri.dim = d;
  tri.vertices.resize(L, std::vector<double>(d));
  for (std::size_t v = 0; v < L; ++v)
    for (std::size_t k = 0; k < d; ++k)
      tri.vertices[v][k] = axes[k][(v / stride[k]) % n[k]];

  std::size_t cells = 1;
  for (std::size_t k = 0; k < d; ++k) cells *= n[k] - 1;
  std::vector<std::size_t> perm(d);
  std::vector<std::size_t> cell(d, 0);
  for (std::size_t c = 0; c < cells; ++c) {
    std::size_t base = 0;
    for (std::size_t k = 0; k < d; ++k) base += cell[k] * stride[k];
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<std::size_t> sx(d + 1);
      sx[0] = base;
      for (std::size_t t = 0; t < d; ++t) sx[t + 1] = sx[t] + stride[perm[t]];
      tri.simplices.push_back(std::move(sx));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t k = 0; k < d; ++k) {  // advance cell counter, axis 0 fastest
      if (++cell[k] < n[k] - 1) break;
      cell[k] = 0;
    }
  }
  return tri;
}

std::vector<double> evaluate_spline_nd(const Matrix& theta,
                                       const Triangulation& tri,
                                       const std::vector<double>& x) {
  if (theta.cols != tri.vertex_count())
    throw DimensionError("evaluate_spline_nd: theta has " +
                         std::to_string(theta.cols) +
                         " columns, triangulation has " +
                         std::to_string(tri.vertex_count()) + " vertices");
  std::size_t s = locate_simplex(x, tri);
  BarycentricCoords bc = barycentric(x, tri, s);
  const auto& sx = tri.simplices[s];
  std::vector<double> out(theta.rows, 0.0);
  for (std::size_t j = 0; j < theta.rows; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i <= tri.dim; ++i)
      acc += (bc.lambdas[i] < 0.0 ? 0.0 : bc.lambdas[i]) * theta(j, sx[i]);
    out[j] = acc;
  }
  return out;
}

Matrix fit_spline_nd(
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& data,
    const Triangulation& tri) {
  if (data.empty()) throw DomainError("fit_spline_nd: empty data");
  std::size_t L = tri.vertex_count();
  std::size_t r = data.front().second.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(L, L);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(L, r);
  std::vector<std::size_t> idx(tri.dim + 1);
  std::vector<double> w(tri.dim + 1);
  for (const auto& [x, y] : data) {
    if (y.size() != r)
      throw DimensionError("fit_spline_nd: inconsistent target dimension");
    std::size_t s = locate_simplex(x, tri);
    BarycentricCoords bc = barycentric(x, tri, s);
    const auto& sx = tri.simplices[s];
    for (std::size_t i = 0; i <= tri.dim; ++i) {
      idx[i] = sx[i];
      w[i] = bc.lambdas[i] < 0.0 ? 0.0 : bc.lambdas[i];
    }
    for (std::size_t i = 0; i <= tri.dim; ++i) {
      for (std::size_t j = 0; j <= tri.dim; ++j)
        a(idx[i], idx[j]) += w[i] * w[j];
      for (std::size_t j = 0; j < r; ++j) b(idx[i], j) += w[i] * y[j];
    }
  }
  for (std::size_t l = 0; l < L; ++l) a(l, l) += 1e-10;
  Eigen::MatrixXd sol = a.ldlt().solve(b);
  Matrix theta(r, L);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < L; ++l) theta(j, l) = sol(l, j);
  return theta;
}

double mesh_diameter(const Triangulation& tri) {
  double best = 0.0;
  for (const auto& sx : tri.simplices)
    for (std::size_t i = 0; i < sx.size(); ++i)
      for (std::size_t j = i + 1; j < sx.size(); ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < tri.dim; ++k) {
          double dxy = tri.vertices[sx[i]][k] - tri.vertices[sx[j]][k];
          s += dxy * dxy;
        }
        best = std::max(best, std::sqrt(s));
      }
  return best;
}

void write_mesh(std::ostream& os, const Triangulation& tri) {
  os << tri.dim << " " << tri.vertex_count() << " " << tri.simplex_count()
     << "\n";
  os.precision(17);
  for (const auto& v : tri.vertices) {
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
    os << "\n";
  }
  for (const auto& sx : tri.simplices) {
    for (std::size_t i = 0; i < sx.size(); ++i) os << (i ? " " : "") << sx[i];
    os << "\n";
  }
}

Triangulation read_mesh(std::istream& is) {
  Triangulation tri;
  std::size_t L = 0, M = 0;
  if (!(is >> tri.dim >> L >> M))
    throw DomainError("read_mesh: malformed header, expected 'd L M'");
  if (tri.dim < 1 || tri.dim > 64 || L > 10000000 || M > 10000000)
    throw DomainError("read_mesh: implausible header dimensions");
  tri.vertices.resize(L, std::vector<double>(tri.dim));
  for (std::size_t v = 0; v < L; ++v)
    for (std::size_t k = 0; k < tri.dim; ++k)
      if (!(is >> tri.vertices[v][k]))
        throw DomainError("read_mesh: truncated vertex block at vertex " +
                          std::to_string(v));
  tri.simplices.resize(M, std::vector<std::size_t>(tri.dim + 1));
  for (std::size_t s = 0; s < M; ++s)
    for (std::size_t i = 0; i <= tri.dim; ++i)
      if (!(is >> tri.simplices[s][i]))
        throw DomainError("read_mesh: truncated simplex block at simplex " +
                          std::to_string(s));
  validate_triangulation(tri);
  return tri;
}

}  // namespace lift
