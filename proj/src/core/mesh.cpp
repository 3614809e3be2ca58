#include "mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

namespace fhs {

namespace {

constexpr double kPi = std::numbers::pi;

double tri_area(Vec3 a, Vec3 b, Vec3 c) { return 0.5 * norm(cross(b - a, c - a)); }

Vec3 tri_normal(Vec3 a, Vec3 b, Vec3 c) {
    Vec3 n = cross(b - a, c - a);
    double nn = norm(n);
    if (nn < 1e-300) return {0, 0, 0};
    return n / nn;
}

// Outward normal of a segment (n=1): edge direction rotated by -90 degrees,
// sign fixed afterwards against the interior reference point.
Vec3 seg_normal(Vec3 a, Vec3 b) {
    Vec3 t = b - a;
    Vec3 n{t.y, -t.x, 0};
    double nn = norm(n);
    if (nn < 1e-300) return {0, 0, 0};
    return n / nn;
}

struct Builder {
    SurfaceMesh m;

    explicit Builder(int dim_n) { m.dim_n = dim_n; }

    int add_vertex(Vec3 v) {
        m.vertices.push_back(v);
        return static_cast<int>(m.vertices.size()) - 1;
    }
    void add_tri(int a, int b, int c) { m.elements.push_back({a, b, c}); }
    void add_seg(int a, int b) { m.elements.push_back({a, b, -1}); }
};

// Derives areas/centroids/normals from vertices, orients normals outward
// against interior_ref, projects centroids for analytic source kinds.
void finalize(SurfaceMesh& m) {
    std::size_t ne = m.elements.size();
    m.areas.assign(ne, 0.0);
    m.centroids.assign(ne, Vec3{});
    m.normals.assign(ne, Vec3{});
    m.h_max = 0.0;
    bool project = m.source && is_analytic(*m.source);
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& el = m.elements[e];
        Vec3 a = m.vertices[el[0]], b = m.vertices[el[1]];
        Vec3 c_flat, nu;
        double area;
        if (m.dim_n == 1) {
            area = dist(a, b);
            c_flat = 0.5 * (a + b);
            nu = seg_normal(a, b);
            m.h_max = std::max(m.h_max, area);
        } else {
            Vec3 c = m.vertices[el[2]];
            area = tri_area(a, b, c);
            c_flat = (a + b + c) / 3.0;
            nu = tri_normal(a, b, c);
            m.h_max = std::max({m.h_max, dist(a, b), dist(b, c), dist(c, a)});
        }
        if (!(area > 0)) fail(Err::Internal, "degenerate mesh element");
        if (dot(nu, c_flat - m.interior_ref) < 0) {
            nu = -nu;
            std::swap(m.elements[e][0], m.elements[e][1]);
        }
        m.areas[e] = area;
        m.normals[e] = nu;
        m.centroids[e] = project ? project_to_surface(*m.source, c_flat) : c_flat;
    }
}

// ---- sphere / ellipsoid -------------------------------------------------

void icosahedron(std::vector<Vec3>& verts, std::vector<std::array<int, 3>>& faces) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> raw = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    verts.clear();
    for (auto v : raw) verts.push_back(normalized(v));
    faces = {{0, 11, 5},  {0, 5, 1},   {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
             {1, 5, 9},   {5, 11, 4},  {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
             {3, 9, 4},   {3, 4, 2},   {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
             {4, 9, 5},   {2, 4, 11},  {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
}

void subdivide_sphere(std::vector<Vec3>& verts, std::vector<std::array<int, 3>>& faces) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int i, int j) {
        auto key = std::minmax(i, j);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        Vec3 v = normalized(0.5 * (verts[i] + verts[j]));
        verts.push_back(v);
        int idx = static_cast<int>(verts.size()) - 1;
        midpoint[key] = idx;
        return idx;
    };
    std::vector<std::array<int, 3>> out;
    out.reserve(faces.size() * 4);
    for (auto [a, b, c] : faces) {
        int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
        out.push_back({a, ab, ca});
        out.push_back({ab, b, bc});
        out.push_back({ca, bc, c});
        out.push_back({ab, bc, ca});
    }
    faces = std::move(out);
}

SurfaceMesh mesh_sphere_like(const ConvexBody& body, double target_h) {
    Vec3 axes = body.kind == BodyKind::Ball
                    ? Vec3{body.radius, body.radius, body.radius}
                    : body.semi_axes;
    std::vector<Vec3> verts;
    std::vector<std::array<int, 3>> faces;
    icosahedron(verts, faces);
    auto build = [&](void) {
        Builder bl(2);
        bl.m.source = body;
        bl.m.interior_ref = body.translation;
        for (auto v : verts) bl.add_vertex(body.translation + hadamard(axes, v));
        for (auto f : faces) bl.add_tri(f[0], f[1], f[2]);
        finalize(bl.m);
        return bl.m;
    };
    SurfaceMesh m = build();
    int guard = 0;
    while (m.h_max > target_h && ++guard <= 9) {
        subdivide_sphere(verts, faces);
        m = build();
        if (faces.size() > 2'000'000) fail(Err::InvalidArgument, "target_h too small");
    }
    return m;
}

SurfaceMesh mesh_circle_like(const ConvexBody& body, double target_h) {
    double ax = body.kind == BodyKind::Ball ? body.radius : body.semi_axes.x;
    double ay = body.kind == BodyKind::Ball ? body.radius : body.semi_axes.y;
    double rmax = std::max(ax, ay);
    int k = std::max<int>(8, static_cast<int>(std::ceil(2.0 * kPi * rmax / target_h)));
    for (;;) {
        Builder bl(1);
        bl.m.source = body;
        bl.m.interior_ref = body.translation;
        for (int i = 0; i < k; ++i) {
            double t = 2.0 * kPi * i / k;
            bl.add_vertex(body.translation + Vec3{ax * std::cos(t), ay * std::sin(t), 0});
        }
        for (int i = 0; i < k; ++i) bl.add_seg(i, (i + 1) % k);
        finalize(bl.m);
        if (bl.m.h_max <= target_h || k > 2'000'000) return bl.m;
        k *= 2;
    }
}

// ---- cube ---------------------------------------------------------------

SurfaceMesh mesh_cube3(const ConvexBody& body, double target_h) {
    double hs = body.half_side;
    int m = std::max<int>(1, static_cast<int>(std::ceil(2.0 * hs * std::sqrt(2.0) / target_h)));
    Builder bl(2);
    bl.m.source = body;
    bl.m.interior_ref = body.translation;
    // Six faces: axis, sign. Grid of (m+1)^2 vertices per face (vertices on
    // shared edges are duplicated across faces; harmless for integral data).
    for (int axis = 0; axis < 3; ++axis) {
        for (int sign = -1; sign <= 1; sign += 2) {
            int u_axis = (axis + 1) % 3, v_axis = (axis + 2) % 3;
            int base = static_cast<int>(bl.m.vertices.size());
            for (int i = 0; i <= m; ++i) {
                for (int j = 0; j <= m; ++j) {
                    Vec3 p{};
                    p[axis] = sign * hs;
                    p[u_axis] = -hs + 2.0 * hs * i / m;
                    p[v_axis] = -hs + 2.0 * hs * j / m;
                    bl.add_vertex(body.translation + p);
                }
            }
            auto at = [&](int i, int j) { return base + i * (m + 1) + j; };
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    bl.add_tri(at(i, j), at(i + 1, j), at(i + 1, j + 1));
                    bl.add_tri(at(i, j), at(i + 1, j + 1), at(i, j + 1));
                }
        }
    }
    finalize(bl.m);
    return bl.m;
}

SurfaceMesh mesh_square(const ConvexBody& body, double target_h) {
    double hs = body.half_side;
    int m = std::max<int>(1, static_cast<int>(std::ceil(2.0 * hs / target_h)));
    Builder bl(1);
    bl.m.source = body;
    bl.m.interior_ref = body.translation;
    Vec3 corners[4] = {{-hs, -hs, 0}, {hs, -hs, 0}, {hs, hs, 0}, {-hs, hs, 0}};
    for (int side = 0; side < 4; ++side) {
        Vec3 a = body.translation + corners[side];
        Vec3 b = body.translation + corners[(side + 1) % 4];
        int base = static_cast<int>(bl.m.vertices.size());
        for (int i = 0; i <= m; ++i) bl.add_vertex(a + (static_cast<double>(i) / m) * (b - a));
        for (int i = 0; i < m; ++i) bl.add_seg(base + i, base + i + 1);
    }
    finalize(bl.m);
    return bl.m;
}

// ---- rounded cylinder ---------------------------------------------------

// Profile of the revolved surface in the (u, z) half-plane, u >= 0, built from
// cap disks, rounding arcs, and the lateral wall. Nodes are exact surface
// points. rings[k] = (u, z); u == 0 marks a pole.
std::vector<std::pair<double, double>> cylinder_profile(double r, double h, double rho,
                                                        double target_h) {
    std::vector<std::pair<double, double>> prof;
    double rc = r - rho, hc = h - rho;
    int K = std::max<int>(1, static_cast<int>(std::ceil(std::max(rc, 1e-12) / target_h)));
    int A = rho > 0 ? std::max<int>(2, static_cast<int>(std::ceil(0.5 * kPi * rho / target_h)))
                    : 0;
    int M = hc > 1e-15 ? std::max<int>(1, static_cast<int>(std::ceil(2.0 * hc / target_h))) : 0;

    prof.push_back({0.0, h}); // top pole
    for (int j = 1; j <= K; ++j) prof.push_back({rc * j / K, h});
    for (int j = 1; j <= A; ++j) {
        double t = 0.5 * kPi * j / A;
        prof.push_back({rc + rho * std::sin(t), hc + rho * std::cos(t)});
    }
    for (int j = 1; j <= M; ++j) prof.push_back({r, hc - 2.0 * hc * j / M});
    for (int j = 1; j <= A; ++j) {
        double t = 0.5 * kPi + 0.5 * kPi * j / A;
        prof.push_back({rc + rho * std::sin(t), -hc + rho * std::cos(t)});
    }
    for (int j = 1; j <= K; ++j) prof.push_back({rc * (K - j) / K, -h});
    if (rho <= 0) {
        // Sharp cylinder: insert the rim corners explicitly.
        prof.clear();
        prof.push_back({0.0, h});
        for (int j = 1; j <= K; ++j) prof.push_back({r * j / K, h});
        for (int j = 1; j <= M; ++j) prof.push_back({r, h - 2.0 * h * j / M});
        for (int j = 1; j <= K; ++j) prof.push_back({r * (K - j) / K, -h});
    }
    return prof;
}

SurfaceMesh mesh_cylinder(const ConvexBody& body, double target_h) {
    double r = body.cyl_radius, h = body.cyl_half_height, rho = body.cyl_rounding;
    double th = target_h;
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto prof = cylinder_profile(r, h, rho, th);
        int nphi = std::max<int>(6, static_cast<int>(std::ceil(2.0 * kPi * r / th)));
        Builder bl(2);
        bl.m.source = body;
        bl.m.interior_ref = body.translation;
        // ring_start[k] = first vertex of ring k, or the pole vertex id.
        std::vector<int> ring_start(prof.size());
        std::vector<bool> is_pole(prof.size());
        for (std::size_t k = 0; k < prof.size(); ++k) {
            auto [u, z] = prof[k];
            is_pole[k] = u < 1e-14;
            if (is_pole[k]) {
                ring_start[k] = bl.add_vertex(body.translation + Vec3{0, 0, z});
            } else {
                ring_start[k] = static_cast<int>(bl.m.vertices.size());
                for (int p = 0; p < nphi; ++p) {
                    double t = 2.0 * kPi * p / nphi;
                    bl.add_vertex(body.translation +
                                  Vec3{u * std::cos(t), u * std::sin(t), z});
                }
            }
        }
        for (std::size_t k = 0; k + 1 < prof.size(); ++k) {
            bool pa = is_pole[k], pb = is_pole[k + 1];
            int ra = ring_start[k], rb = ring_start[k + 1];
            if (pa && pb) continue;
            for (int p = 0; p < nphi; ++p) {
                int pn = (p + 1) % nphi;
                if (pa) {
                    bl.add_tri(ra, rb + p, rb + pn);
                } else if (pb) {
                    bl.add_tri(ra + p, rb, ra + pn);
                } else {
                    bl.add_tri(ra + p, rb + p, rb + pn);
                    bl.add_tri(ra + p, rb + pn, ra + pn);
                }
            }
        }
        finalize(bl.m);
        if (bl.m.h_max <= target_h || bl.m.elements.size() > 2'000'000) return bl.m;
        th *= 0.5;
    }
    fail(Err::Internal, "cylinder meshing did not reach target resolution");
}

// ---- polytopes ----------------------------------------------------------

SurfaceMesh mesh_polytope3(const ConvexBody& body, double target_h) {
    auto verts = polytope_vertices(body);
    if (verts.size() < 4) fail(Err::InvalidArgument, "degenerate polytope");
    double scale = 1.0;
    for (const auto& v : verts) scale = std::max(scale, norm(v - body.translation));
    Builder bl(2);
    bl.m.source = body;
    bl.m.interior_ref = body.translation;
    for (const auto& h : body.halfspaces) {
        double an = norm(h.a);
        if (an < 1e-14) continue;
        std::vector<Vec3> face;
        for (const auto& v : verts)
            if (std::fabs(dot(h.a, v) - h.b) < 1e-7 * an * scale) face.push_back(v);
        if (face.size() < 3) continue; // redundant halfspace
        Vec3 fc{};
        for (const auto& v : face) fc = fc + v;
        fc = fc / static_cast<double>(face.size());
        Vec3 nu = h.a / an;
        // Order face vertices by angle around the face centroid.
        Vec3 e1 = normalized(face[0] - fc);
        Vec3 e2 = cross(nu, e1);
        std::sort(face.begin(), face.end(), [&](Vec3 p, Vec3 q) {
            return std::atan2(dot(p - fc, e2), dot(p - fc, e1)) <
                   std::atan2(dot(q - fc, e2), dot(q - fc, e1));
        });
        int ic = bl.add_vertex(fc);
        int base = static_cast<int>(bl.m.vertices.size());
        for (const auto& v : face) bl.add_vertex(v);
        int nf = static_cast<int>(face.size());
        for (int i = 0; i < nf; ++i) bl.add_tri(ic, base + i, base + (i + 1) % nf);
    }
    finalize(bl.m);
    SurfaceMesh mesh = bl.m;
    while (mesh.h_max > target_h && mesh.elements.size() <= 1'000'000) mesh = refine(mesh);
    return mesh;
}

SurfaceMesh mesh_polygon(const ConvexBody& body, double target_h) {
    auto verts = polytope_vertices(body);
    if (verts.size() < 3) fail(Err::InvalidArgument, "degenerate polygon");
    Vec3 c = body.translation;
    std::sort(verts.begin(), verts.end(), [&](Vec3 p, Vec3 q) {
        return std::atan2(p.y - c.y, p.x - c.x) < std::atan2(q.y - c.y, q.x - c.x);
    });
    Builder bl(1);
    bl.m.source = body;
    bl.m.interior_ref = c;
    int n = static_cast<int>(verts.size());
    for (const auto& v : verts) bl.add_vertex(v);
    for (int i = 0; i < n; ++i) bl.add_seg(i, (i + 1) % n);
    finalize(bl.m);
    SurfaceMesh mesh = bl.m;
    while (mesh.h_max > target_h && mesh.elements.size() <= 1'000'000) mesh = refine(mesh);
    return mesh;
}

// ---- halfspace patch ----------------------------------------------------

void plane_basis(Vec3 nu, Vec3& e1, Vec3& e2) {
    int least = 0;
    double amin = std::fabs(nu.x);
    if (std::fabs(nu.y) < amin) { least = 1; amin = std::fabs(nu.y); }
    if (std::fabs(nu.z) < amin) least = 2;
    Vec3 axis{};
    axis[least] = 1.0;
    e1 = normalized(axis - dot(axis, nu) * nu);
    e2 = cross(nu, e1);
}

SurfaceMesh mesh_halfspace_patch(const ConvexBody& body, double target_h, double extent) {
    if (!(extent > 0)) fail(Err::UnboundedBody, "halfspace meshing needs a patch extent");
    Vec3 nu = body.hs_normal;
    double off = body.hs_offset + dot(nu, body.translation);
    Vec3 q = off * nu; // projection of the origin onto the boundary plane
    Builder bl(body.dim_n);
    bl.m.source = body;
    bl.m.interior_ref = q - nu; // one unit into the halfspace
    if (body.dim_n == 1) {
        Vec3 tau{-nu.y, nu.x, 0};
        int m = std::max<int>(8, static_cast<int>(std::ceil(2.0 * extent / target_h)));
        for (int i = 0; i <= m; ++i)
            bl.add_vertex(q + (-extent + 2.0 * extent * i / m) * tau);
        for (int i = 0; i < m; ++i) bl.add_seg(i, i + 1);
    } else {
        Vec3 e1, e2;
        plane_basis(nu, e1, e2);
        int m = std::max<int>(
            4, static_cast<int>(std::ceil(2.0 * extent * std::sqrt(2.0) / target_h)));
        auto at = [&](int i, int j) { return i * (m + 1) + j; };
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j)
                bl.add_vertex(q + (-extent + 2.0 * extent * i / m) * e1 +
                              (-extent + 2.0 * extent * j / m) * e2);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                bl.add_tri(at(i, j), at(i + 1, j), at(i + 1, j + 1));
                bl.add_tri(at(i, j), at(i + 1, j + 1), at(i, j + 1));
            }
    }
    finalize(bl.m);
    return bl.m;
}

} // namespace

double SurfaceMesh::total_area() const {
    double s = 0;
    for (double a : areas) s += a;
    return s;
}

double SurfaceMesh::element_diam(std::size_t e) const {
    const auto& el = elements[e];
    Vec3 a = vertices[el[0]], b = vertices[el[1]];
    if (dim_n == 1) return dist(a, b);
    Vec3 c = vertices[el[2]];
    return std::max({dist(a, b), dist(b, c), dist(c, a)});
}

SurfaceMesh mesh_boundary(const ConvexBody& body, double target_h, double patch_extent) {
    if (!(target_h > 0)) fail(Err::InvalidArgument, "target_h must be positive");
    SurfaceMesh m;
    switch (body.kind) {
        case BodyKind::Ball:
        case BodyKind::Ellipsoid:
            m = body.dim_n == 2 ? mesh_sphere_like(body, target_h)
                                : mesh_circle_like(body, target_h);
            break;
        case BodyKind::Cylinder:
            m = mesh_cylinder(body, target_h);
            break;
        case BodyKind::Cube:
            m = body.dim_n == 2 ? mesh_cube3(body, target_h) : mesh_square(body, target_h);
            break;
        case BodyKind::Polytope:
            m = body.dim_n == 2 ? mesh_polytope3(body, target_h) : mesh_polygon(body, target_h);
            break;
        case BodyKind::HalfSpace:
            m = mesh_halfspace_patch(body, target_h, patch_extent);
            break;
    }
    if (m.element_count() < 8)
        fail(Err::ResolutionTooCoarse, "mesh has fewer than 8 elements; decrease target_h");
    if (m.h_max > 2.0 * target_h)
        fail(Err::Internal, "mesh exceeded the resolution contract");
    return m;
}

SurfaceMesh refine(const SurfaceMesh& mesh) {
    SurfaceMesh out;
    out.dim_n = mesh.dim_n;
    out.interior_ref = mesh.interior_ref;
    out.source = mesh.source;
    out.vertices = mesh.vertices;
    bool project = mesh.source && is_analytic(*mesh.source);

    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int i, int j) {
        auto key = std::minmax(i, j);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        Vec3 v = 0.5 * (out.vertices[i] + out.vertices[j]);
        if (project) v = project_to_surface(*mesh.source, v);
        out.vertices.push_back(v);
        int idx = static_cast<int>(out.vertices.size()) - 1;
        midpoint[key] = idx;
        return idx;
    };

    for (const auto& el : mesh.elements) {
        if (mesh.dim_n == 1) {
            int m01 = mid(el[0], el[1]);
            out.elements.push_back({el[0], m01, -1});
            out.elements.push_back({m01, el[1], -1});
        } else {
            int ab = mid(el[0], el[1]), bc = mid(el[1], el[2]), ca = mid(el[2], el[0]);
            out.elements.push_back({el[0], ab, ca});
            out.elements.push_back({ab, el[1], bc});
            out.elements.push_back({ca, bc, el[2]});
            out.elements.push_back({ab, bc, ca});
        }
    }
    finalize(out);
    return out;
}

SurfaceMesh scale_mesh(const SurfaceMesh& mesh, const Transform& t) {
    if (!(t.scale > 0)) fail(Err::InvalidArgument, "transform scale must be positive");
    SurfaceMesh out = mesh;
    double lam = t.scale;
    for (auto& v : out.vertices) v = lam * v + t.translate;
    for (auto& c : out.centroids) c = lam * c + t.translate;
    out.interior_ref = lam * out.interior_ref + t.translate;
    double area_factor = mesh.dim_n == 1 ? lam : lam * lam;
    for (auto& a : out.areas) a *= area_factor;
    out.h_max = lam * out.h_max;
    if (out.source) out.source = apply_transform(*out.source, t);
    return out;
}

void write_off(const SurfaceMesh& mesh, const std::string& path) {
    std::ofstream f(path);
    if (!f) fail(Err::Io, "cannot open for writing: " + path);
    f << "OFF\n" << mesh.vertices.size() << " " << mesh.elements.size() << " 0\n";
    f.precision(17);
    for (const auto& v : mesh.vertices) f << v.x << " " << v.y << " " << v.z << "\n";
    for (const auto& el : mesh.elements) {
        if (mesh.dim_n == 1)
            f << "2 " << el[0] << " " << el[1] << "\n";
        else
            f << "3 " << el[0] << " " << el[1] << " " << el[2] << "\n";
    }
    if (!f) fail(Err::Io, "write failed: " + path);
}

SurfaceMesh read_off(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(Err::Io, "cannot open: " + path);
    std::string magic;
    f >> magic;
    if (magic != "OFF") fail(Err::Parse, "not an OFF file: " + path);
    std::size_t nv = 0, ne = 0, dummy = 0;
    f >> nv >> ne >> dummy;
    if (!f || nv == 0 || ne == 0) fail(Err::Parse, "bad OFF header");
    SurfaceMesh m;
    m.vertices.resize(nv);
    for (auto& v : m.vertices) f >> v.x >> v.y >> v.z;
    int dim_n = -1;
    for (std::size_t e = 0; e < ne; ++e) {
        int k = 0;
        f >> k;
        if (k != 2 && k != 3) fail(Err::Parse, "OFF faces must have 2 or 3 vertices");
        int this_dim = k - 1;
        if (dim_n == -1) dim_n = this_dim;
        if (dim_n != this_dim) fail(Err::Parse, "mixed face arities in OFF file");
        std::array<int, 3> el{-1, -1, -1};
        for (int i = 0; i < k; ++i) f >> el[i];
        m.elements.push_back(el);
    }
    if (!f) fail(Err::Parse, "truncated OFF file");
    m.dim_n = dim_n;
    Vec3 c{};
    for (const auto& v : m.vertices) c = c + v;
    m.interior_ref = c / static_cast<double>(nv);
    finalize(m);
    return m;
}

SubsetMask full_mask(const SurfaceMesh& mesh) { return SubsetMask(mesh.element_count(), 1); }
SubsetMask empty_mask(const SurfaceMesh& mesh) { return SubsetMask(mesh.element_count(), 0); }

SubsetMask cap_mask(const SurfaceMesh& mesh, Vec3 center, double r) {
    SubsetMask mask(mesh.element_count(), 0);
    for (std::size_t e = 0; e < mesh.element_count(); ++e)
        if (dist(mesh.centroids[e], center) <= r) mask[e] = 1;
    return mask;
}

SubsetMask random_mask(const SurfaceMesh& mesh, double prob, Rng& rng) {
    SubsetMask mask(mesh.element_count(), 0);
    for (auto& b : mask) b = rng.uniform() < prob ? 1 : 0;
    return mask;
}

double mask_area(const SurfaceMesh& mesh, const SubsetMask& mask) {
    double s = 0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e)
        if (mask[e]) s += mesh.areas[e];
    return s;
}

SubsetMask refine_mask(const SurfaceMesh& parent, const SubsetMask& mask) {
    int children = parent.dim_n == 1 ? 2 : 4;
    SubsetMask out(mask.size() * children, 0);
    for (std::size_t e = 0; e < mask.size(); ++e)
        for (int c = 0; c < children; ++c) out[e * children + c] = mask[e];
    return out;
}

} // namespace fhs
