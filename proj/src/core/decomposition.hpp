#pragma once

#include <vector>

#include "mesh.hpp"

namespace fhs {

// One graph piece of the boundary: all elements whose outward normal makes
// the surface a Lipschitz graph over the coordinate hyperplane `axis` with
// slope at most sqrt(n + epsilon).
struct GraphPiece {
    int axis = 0;  // 0-based coordinate axis in {0, ..., n}
    int sign = 1;  // sign of nu_axis on the piece
    std::vector<int> element_ids;
    double max_slope = 0.0;
    double area = 0.0;
};

struct CoverageReport {
    double covered_area_fraction = 0.0;
    int piece_count = 0;
    double global_max_slope = 0.0;
};

// Classifies a single unit normal: argmax_i |nu_i|, ties broken by lowest
// axis then positive sign. The returned axis always passes the threshold
// |nu_i| > 1/sqrt(1+n+eps) by the pigeonhole bound max_i |nu_i| >= 1/sqrt(n+1).
void classify_normal(Vec3 nu, int dim_n, double epsilon, int& axis, int& sign);

// Slope of the graph over the axis hyperplane induced by a unit normal:
// sqrt(1/nu_axis^2 - 1).
double graph_slope(Vec3 nu, int axis);

// Disjoint assignment of every element to one of at most 2(n+1) pieces.
std::vector<GraphPiece> decompose(const SurfaceMesh& mesh, double epsilon);

CoverageReport coverage_report(const std::vector<GraphPiece>& pieces, const SurfaceMesh& mesh);

} // namespace fhs
