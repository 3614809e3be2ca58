#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "rng.hpp"
#include "vec.hpp"

namespace fhs {

// Simplicial approximation of a convex boundary: polyline for n = 1,
// triangle mesh for n = 2. Element data is piecewise constant at centroids;
// centroids are re-projected onto the analytic surface when the source body
// kind permits. Normals are the exact flat-element normals, oriented outward.
struct SurfaceMesh {
    int dim_n = 2;
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> elements; // [2] == -1 for segments
    std::vector<double> areas;
    std::vector<Vec3> centroids;
    std::vector<Vec3> normals;
    double h_max = 0.0;
    Vec3 interior_ref{};
    std::optional<ConvexBody> source;

    std::size_t element_count() const { return elements.size(); }
    double total_area() const;
    double element_diam(std::size_t e) const;
    int verts_per_element() const { return dim_n + 1; }
};

// patch_extent is required for HalfSpace bodies: the boundary plane is
// realized as a flat patch [-extent, extent]^n around the projection of the
// origin onto the plane.
SurfaceMesh mesh_boundary(const ConvexBody& body, double target_h, double patch_extent = 0.0);
SurfaceMesh refine(const SurfaceMesh& mesh);
SurfaceMesh scale_mesh(const SurfaceMesh& mesh, const Transform& t);

void write_off(const SurfaceMesh& mesh, const std::string& path);
SurfaceMesh read_off(const std::string& path);

using SubsetMask = std::vector<std::uint8_t>;

SubsetMask full_mask(const SurfaceMesh& mesh);
SubsetMask empty_mask(const SurfaceMesh& mesh);
// Elements whose centroid lies within Euclidean distance r of `center`.
SubsetMask cap_mask(const SurfaceMesh& mesh, Vec3 center, double r);
SubsetMask random_mask(const SurfaceMesh& mesh, double prob, Rng& rng);
double mask_area(const SurfaceMesh& mesh, const SubsetMask& mask);
// Lifts a mask through one refinement (children inherit the parent bit).
SubsetMask refine_mask(const SurfaceMesh& parent, const SubsetMask& mask);

} // namespace fhs
