#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "lift/knots.hpp"
#include "lift/matrix.hpp"

namespace lift {

// Simplicial decomposition of a compact domain in R^d: L vertices and M
// simplices of d+1 zero-based vertex indices each.  Immutable by convention
// once built or loaded.
struct Triangulation {
  std::size_t dim = 0;
  std::vector<std::vector<double>> vertices;
  std::vector<std::vector<std::size_t>> simplices;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t simplex_count() const { return simplices.size(); }
};

// Checks index ranges and non-degeneracy (edge-matrix determinant above
// 1e-12 * scale^d).  Throws DomainError or SingularSimplexError.
void validate_triangulation(const Triangulation& tri);

struct BarycentricCoords {
  std::size_t simplex_index = 0;
  std::vector<double> lambdas;  // length d+1, sums to 1
};

// Affine weights of x with respect to the vertices of one simplex, solved
// from the d x d edge system by Gaussian elimination with partial pivoting.
BarycentricCoords barycentric(const std::vector<double>& x,
                              const Triangulation& tri,
                              std::size_t simplex_index);

// Lowest simplex index whose barycentric coordinates are all >= -1e-12.
// Linear scan; throws OutsideDomainError if no simplex qualifies.
std::size_t locate_simplex(const std::vector<double>& x,
                           const Triangulation& tri);

// Length-L weight vector: barycentric coordinates of x scattered to the
// located simplex's vertex slots (tiny negatives clamped to 0).
std::vector<double> lift_nd(const std::vector<double>& x,
                            const Triangulation& tri);

// Vertex-weighted sum; inverts lift_nd.
std::vector<double> inverse_lift_nd(const std::vector<double>& z,
                                    const Triangulation& tri);

// Cartesian product grid of the given per-axis knots (first axis fastest in
// the vertex numbering), each cell split into d! simplices by the Kuhn
// subdivision.  For d=2 every cell is cut along its (low,low)-(high,high)
// diagonal.
Triangulation grid_triangulation(const std::vector<KnotSequence>& axes);

// theta is r x L (one row per output component); returns theta * lift_nd(x)
std::vector<double> evaluate_spline_nd(const Matrix& theta,
                                       const Triangulation& tri,
                                       const std::vector<double>& x);

// Least-squares vertex values for vector-valued targets, solved through the
// normal equations with ridge 1e-10 on the diagonal so vertices without
// supporting data stay solvable.  Returns r x L.
Matrix fit_spline_nd(
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& data,
    const Triangulation& tri);

// max over simplices of the max pairwise vertex distance
double mesh_diameter(const Triangulation& tri);

// Plain text mesh format: header "d L M", then L vertex lines of d floats,
// then M simplex lines of d+1 zero-based indices.
void write_mesh(std::ostream& os, const Triangulation& tri);
Triangulation read_mesh(std::istream& is);

}  // namespace lift
