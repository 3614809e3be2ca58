#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "vec.hpp"

namespace fhs {

enum class BodyKind { Ball, Ellipsoid, Cylinder, Cube, Polytope, HalfSpace };

struct HalfspaceIneq {
    Vec3 a;       // <a, x> <= b
    double b = 0;
};

// Open convex set in R^{n+1}, n in {1,2}. Axis-aligned analytic kinds plus
// H-representation polytopes. Immutable value; transforms return new bodies.
struct ConvexBody {
    int dim_n = 2;
    BodyKind kind = BodyKind::Ball;
    Vec3 translation{};

    double radius = 1.0;                       // Ball
    Vec3 semi_axes{1, 1, 1};                   // Ellipsoid
    double cyl_radius = 1.0;                   // Cylinder: outer radius,
    double cyl_half_height = 1.0;              //   outer half-height,
    double cyl_rounding = 0.0;                 //   rim rounding radius (<= min(r, h))
    double half_side = 1.0;                    // Cube
    std::vector<HalfspaceIneq> halfspaces;     // Polytope, world frame
    Vec3 hs_normal{0, 0, 1};                   // HalfSpace: outward unit normal
    double hs_offset = 0.0;                    //   boundary plane <nu, x> = offset
};

struct Transform {
    double scale = 1.0;
    Vec3 translate{};
};

ConvexBody make_ball(int dim_n, double radius, Vec3 center = {});
ConvexBody make_ellipsoid(int dim_n, Vec3 semi_axes, Vec3 center = {});
ConvexBody make_cylinder(double radius, double half_height, double rounding, Vec3 center = {});
ConvexBody make_cube(int dim_n, double half_side, Vec3 center = {});
ConvexBody make_polytope(int dim_n, std::vector<HalfspaceIneq> hs);
ConvexBody make_halfspace(int dim_n, Vec3 outward_normal, double offset);

bool contains(const ConvexBody& body, Vec3 p);
Vec3 support_point(const ConvexBody& body, Vec3 direction);
ConvexBody apply_transform(const ConvexBody& body, const Transform& t);

bool is_bounded(const ConvexBody& body);
bool is_analytic(const ConvexBody& body); // Ball, Ellipsoid, Cylinder (projectable)

// Radius of a ball around `translation` containing the body.
double bounding_radius(const ConvexBody& body);
// A point in the open interior (the reference center; recomputed for polytopes).
Vec3 interior_point(const ConvexBody& body);

// Closest/radial projection onto the boundary surface, analytic kinds only.
Vec3 project_to_surface(const ConvexBody& body, Vec3 p);
// Outward unit normal at a boundary point, analytic kinds and HalfSpace.
Vec3 analytic_normal(const ConvexBody& body, Vec3 x);
// Exit parameter t* = sup{t : x + t d in body} for x on the boundary.
// Closed form for Ball/Ellipsoid, certified bisection for Cylinder.
double chord_exit(const ConvexBody& body, Vec3 x, Vec3 d);

// Vertices of a bounded polytope from its halfspace list.
std::vector<Vec3> polytope_vertices(const ConvexBody& body);

// One halfspace per line: "a1 ... a_{n+1} b" meaning <a, x> <= b.
ConvexBody read_halfspace_file(const std::string& path);

// "ball:r" | "ellipsoid:a,b[,c]" | "cylinder:r,h,rho" | "cube:h" |
// "polytope:path" | "halfspace:nx,ny[,nz],b", optionally "@tx,ty[,tz]".
ConvexBody parse_body_spec(const std::string& spec, int dim_n);
std::string body_spec_string(const ConvexBody& body);

} // namespace fhs
