#include "decomposition.hpp"

#include <algorithm>
#include <cmath>

namespace fhs {

void classify_normal(Vec3 nu, int dim_n, double epsilon, int& axis, int& sign) {
    (void)epsilon; // the argmax axis passes any threshold below 1/sqrt(n+1)
    int best = 0;
    double bv = std::fabs(nu.x);
    for (int i = 1; i <= dim_n; ++i) {
        double v = std::fabs(nu[i]);
        if (v > bv) {
            bv = v;
            best = i;
        }
    }
    axis = best;
    sign = nu[best] >= 0 ? 1 : -1;
}

double graph_slope(Vec3 nu, int axis) {
    double c = nu[axis];
    double s2 = 1.0 / (c * c) - 1.0;
    return std::sqrt(std::max(0.0, s2));
}

std::vector<GraphPiece> decompose(const SurfaceMesh& mesh, double epsilon) {
    if (!(epsilon > 0)) fail(Err::InvalidArgument, "epsilon must be positive");
    int n = mesh.dim_n;
    double threshold = 1.0 / std::sqrt(1.0 + n + epsilon);

    // slot = 2*axis + (sign < 0)
    std::vector<GraphPiece> slots(2 * (n + 1));
    for (int a = 0; a <= n; ++a)
        for (int s = 0; s < 2; ++s) {
            slots[2 * a + s].axis = a;
            slots[2 * a + s].sign = s == 0 ? 1 : -1;
        }

    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        Vec3 nu = mesh.normals[e];
        if (std::fabs(norm(nu) - 1.0) > 1e-8)
            fail(Err::NormalDegenerate, "element normal is not unit length");
        int axis, sign;
        classify_normal(nu, n, epsilon, axis, sign);
        if (std::fabs(nu[axis]) <= threshold)
            fail(Err::Internal, "pigeonhole classification failed"); // cannot happen
        auto& piece = slots[2 * axis + (sign < 0 ? 1 : 0)];
        piece.element_ids.push_back(static_cast<int>(e));
        piece.area += mesh.areas[e];
        piece.max_slope = std::max(piece.max_slope, graph_slope(nu, axis));
    }

    std::vector<GraphPiece> pieces;
    for (auto& p : slots)
        if (!p.element_ids.empty()) pieces.push_back(std::move(p));
    return pieces;
}

CoverageReport coverage_report(const std::vector<GraphPiece>& pieces, const SurfaceMesh& mesh) {
    CoverageReport rep;
    rep.piece_count = static_cast<int>(pieces.size());
    std::vector<std::uint8_t> assigned(mesh.element_count(), 0);
    for (const auto& p : pieces) {
        rep.global_max_slope = std::max(rep.global_max_slope, p.max_slope);
        for (int e : p.element_ids) assigned[static_cast<std::size_t>(e)] = 1;
    }
    // Summed in element order so a full cover reproduces total_area() bitwise.
    double covered = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e)
        if (assigned[e]) covered += mesh.areas[e];
    double total = mesh.total_area();
    rep.covered_area_fraction = total > 0 ? covered / total : 0.0;
    return rep;
}

} // namespace fhs
