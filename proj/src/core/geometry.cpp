#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fhs {

namespace {

void check_dim(int dim_n) {
    if (dim_n != 1 && dim_n != 2) fail(Err::InvalidArgument, "dim_n must be 1 or 2");
}

// Profile-plane distance from (u, z), u >= 0, to the core rectangle
// [0, r-rho] x [-(h-rho), h-rho] of a rounded cylinder.
double cyl_profile_dist(double u, double z, double r, double h, double rho) {
    double du = std::max(0.0, u - (r - rho));
    double dz = std::max(0.0, std::fabs(z) - (h - rho));
    return std::hypot(du, dz);
}

} // namespace

ConvexBody make_ball(int dim_n, double radius, Vec3 center) {
    check_dim(dim_n);
    if (!(radius > 0)) fail(Err::InvalidArgument, "ball radius must be positive");
    ConvexBody b;
    b.dim_n = dim_n;
    b.kind = BodyKind::Ball;
    b.radius = radius;
    b.translation = center;
    if (dim_n == 1) b.translation.z = 0;
    return b;
}

ConvexBody make_ellipsoid(int dim_n, Vec3 semi_axes, Vec3 center) {
    check_dim(dim_n);
    if (dim_n == 1) semi_axes.z = 1.0; // unused coordinate
    if (!(semi_axes.x > 0 && semi_axes.y > 0 && semi_axes.z > 0))
        fail(Err::InvalidArgument, "ellipsoid semi-axes must be positive");
    ConvexBody b;
    b.dim_n = dim_n;
    b.kind = BodyKind::Ellipsoid;
    b.semi_axes = semi_axes;
    b.translation = center;
    if (dim_n == 1) b.translation.z = 0;
    return b;
}

ConvexBody make_cylinder(double radius, double half_height, double rounding, Vec3 center) {
    if (!(radius > 0 && half_height > 0))
        fail(Err::InvalidArgument, "cylinder radius and half-height must be positive");
    if (rounding < 0 || rounding > std::min(radius, half_height) + 1e-15)
        fail(Err::InvalidArgument, "cylinder rounding must lie in [0, min(radius, half_height)]");
    ConvexBody b;
    b.dim_n = 2;
    b.kind = BodyKind::Cylinder;
    b.cyl_radius = radius;
    b.cyl_half_height = half_height;
    b.cyl_rounding = std::min(rounding, std::min(radius, half_height));
    b.translation = center;
    return b;
}

ConvexBody make_cube(int dim_n, double half_side, Vec3 center) {
    check_dim(dim_n);
    if (!(half_side > 0)) fail(Err::InvalidArgument, "cube half-side must be positive");
    ConvexBody b;
    b.dim_n = dim_n;
    b.kind = BodyKind::Cube;
    b.half_side = half_side;
    b.translation = center;
    if (dim_n == 1) b.translation.z = 0;
    return b;
}

ConvexBody make_polytope(int dim_n, std::vector<HalfspaceIneq> hs) {
    check_dim(dim_n);
    if (hs.size() < static_cast<std::size_t>(dim_n + 2))
        fail(Err::InvalidArgument, "polytope needs at least n+2 halfspaces to be bounded");
    ConvexBody b;
    b.dim_n = dim_n;
    b.kind = BodyKind::Polytope;
    b.halfspaces = std::move(hs);
    if (dim_n == 1)
        for (auto& h : b.halfspaces) h.a.z = 0;
    // Bounded iff every direction is blocked by some halfspace; sampled check.
    int nd = dim_n == 1 ? 128 : 512;
    for (int k = 0; k < nd; ++k) {
        Vec3 d;
        if (dim_n == 1) {
            double t = 2.0 * 3.141592653589793 * (k + 0.5) / nd;
            d = {std::cos(t), std::sin(t), 0};
        } else {
            double zc = 1.0 - 2.0 * (k + 0.5) / nd;
            double r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
            double t = 2.399963229728653 * k; // golden angle
            d = {r * std::cos(t), r * std::sin(t), zc};
        }
        double best = -1.0;
        for (const auto& h : b.halfspaces) best = std::max(best, dot(normalized(h.a), d));
        if (best <= 1e-9) fail(Err::UnboundedBody, "polytope is unbounded");
    }
    auto verts = polytope_vertices(b);
    if (verts.empty()) fail(Err::InvalidArgument, "polytope halfspace intersection is empty");
    Vec3 c{};
    for (auto& v : verts) c = c + v;
    b.translation = c / static_cast<double>(verts.size());
    // Interior must be nonempty: the vertex mean has to satisfy all constraints strictly.
    for (const auto& h : b.halfspaces)
        if (dot(h.a, b.translation) >= h.b - 1e-12 * (1.0 + std::fabs(h.b)))
            fail(Err::InvalidArgument, "polytope has empty interior");
    return b;
}

ConvexBody make_halfspace(int dim_n, Vec3 outward_normal, double offset) {
    check_dim(dim_n);
    if (dim_n == 1) outward_normal.z = 0;
    double nn = norm(outward_normal);
    if (nn < 1e-12) fail(Err::InvalidArgument, "halfspace normal must be nonzero");
    ConvexBody b;
    b.dim_n = dim_n;
    b.kind = BodyKind::HalfSpace;
    b.hs_normal = outward_normal / nn;
    b.hs_offset = offset / nn;
    b.translation = {};
    return b;
}

bool contains(const ConvexBody& body, Vec3 p) {
    Vec3 w = p - body.translation;
    switch (body.kind) {
        case BodyKind::Ball:
            return norm2(w) < body.radius * body.radius;
        case BodyKind::Ellipsoid: {
            double s = 0;
            s += (w.x / body.semi_axes.x) * (w.x / body.semi_axes.x);
            s += (w.y / body.semi_axes.y) * (w.y / body.semi_axes.y);
            if (body.dim_n == 2) s += (w.z / body.semi_axes.z) * (w.z / body.semi_axes.z);
            return s < 1.0;
        }
        case BodyKind::Cylinder: {
            double u = std::hypot(w.x, w.y);
            double rho = body.cyl_rounding;
            if (rho <= 0.0)
                return u < body.cyl_radius && std::fabs(w.z) < body.cyl_half_height;
            return cyl_profile_dist(u, w.z, body.cyl_radius, body.cyl_half_height, rho) < rho;
        }
        case BodyKind::Cube: {
            double m = std::max(std::fabs(w.x), std::fabs(w.y));
            if (body.dim_n == 2) m = std::max(m, std::fabs(w.z));
            return m < body.half_side;
        }
        case BodyKind::Polytope: {
            for (const auto& h : body.halfspaces)
                if (dot(h.a, p) >= h.b) return false;
            return true;
        }
        case BodyKind::HalfSpace:
            return dot(body.hs_normal, w) < body.hs_offset;
    }
    return false;
}

bool is_bounded(const ConvexBody& body) { return body.kind != BodyKind::HalfSpace; }

bool is_analytic(const ConvexBody& body) {
    return body.kind == BodyKind::Ball || body.kind == BodyKind::Ellipsoid ||
           body.kind == BodyKind::Cylinder;
}

Vec3 support_point(const ConvexBody& body, Vec3 direction) {
    Vec3 d = direction;
    if (body.dim_n == 1) d.z = 0;
    double dn = norm(d);
    if (dn < 1e-12) fail(Err::InvalidArgument, "support direction must be nonzero");
    d = d / dn;

    switch (body.kind) {
        case BodyKind::Ball:
            return body.translation + body.radius * d;
        case BodyKind::Ellipsoid: {
            Vec3 ad = hadamard(body.semi_axes, d); // a_i d_i
            double denom = norm(ad);
            Vec3 x = hadamard(body.semi_axes, ad) / denom; // a_i^2 d_i / |a o d|
            if (body.dim_n == 1) x.z = 0;
            return body.translation + x;
        }
        case BodyKind::Cylinder: {
            double rho = body.cyl_rounding;
            double rc = body.cyl_radius - rho, hc = body.cyl_half_height - rho;
            double dxy = std::hypot(d.x, d.y);
            Vec3 core{};
            if (dxy > 1e-300) {
                core.x = rc * d.x / dxy;
                core.y = rc * d.y / dxy;
            }
            core.z = (d.z >= 0 ? hc : -hc);
            return body.translation + core + rho * d;
        }
        case BodyKind::Cube: {
            Vec3 x{body.half_side * (d.x >= 0 ? 1.0 : -1.0),
                   body.half_side * (d.y >= 0 ? 1.0 : -1.0),
                   body.dim_n == 2 ? body.half_side * (d.z >= 0 ? 1.0 : -1.0) : 0.0};
            return body.translation + x;
        }
        case BodyKind::Polytope: {
            auto verts = polytope_vertices(body);
            if (verts.empty()) fail(Err::Internal, "polytope has no vertices");
            Vec3 best = verts[0];
            double bv = dot(best, d);
            for (const auto& v : verts) {
                double val = dot(v, d);
                if (val > bv) {
                    bv = val;
                    best = v;
                }
            }
            return best;
        }
        case BodyKind::HalfSpace: {
            // Bounded in exactly one direction: the outward normal.
            if (norm(d - body.hs_normal) > 1e-9)
                fail(Err::UnboundedBody, "halfspace support is finite only along its normal");
            return body.translation + body.hs_offset * body.hs_normal;
        }
    }
    fail(Err::Internal, "unreachable");
}

ConvexBody apply_transform(const ConvexBody& body, const Transform& t) {
    if (!(t.scale > 0)) fail(Err::InvalidArgument, "transform scale must be positive");
    ConvexBody out = body;
    double s = t.scale;
    out.translation = s * body.translation + t.translate;
    if (out.dim_n == 1) out.translation.z = 0;
    switch (body.kind) {
        case BodyKind::Ball:
            out.radius = s * body.radius;
            break;
        case BodyKind::Ellipsoid:
            out.semi_axes = s * body.semi_axes;
            break;
        case BodyKind::Cylinder:
            out.cyl_radius = s * body.cyl_radius;
            out.cyl_half_height = s * body.cyl_half_height;
            out.cyl_rounding = s * body.cyl_rounding;
            break;
        case BodyKind::Cube:
            out.half_side = s * body.half_side;
            break;
        case BodyKind::Polytope:
            // <a, x> <= b  ->  x in s*Omega + v iff <a, x> <= s*b + <a, v>
            for (auto& h : out.halfspaces) h.b = s * h.b + dot(h.a, t.translate);
            break;
        case BodyKind::HalfSpace:
            out.hs_offset = s * body.hs_offset + dot(body.hs_normal, t.translate);
            break;
    }
    return out;
}

double bounding_radius(const ConvexBody& body) {
    switch (body.kind) {
        case BodyKind::Ball:
            return body.radius;
        case BodyKind::Ellipsoid:
            return std::max({body.semi_axes.x, body.semi_axes.y,
                             body.dim_n == 2 ? body.semi_axes.z : 0.0});
        case BodyKind::Cylinder:
            return std::hypot(body.cyl_radius, body.cyl_half_height);
        case BodyKind::Cube:
            return body.half_side * std::sqrt(body.dim_n == 2 ? 3.0 : 2.0);
        case BodyKind::Polytope: {
            double r = 0;
            for (const auto& v : polytope_vertices(body)) r = std::max(r, dist(v, body.translation));
            return r;
        }
        case BodyKind::HalfSpace:
            fail(Err::UnboundedBody, "halfspace has no bounding radius");
    }
    return 0;
}

Vec3 interior_point(const ConvexBody& body) {
    if (body.kind == BodyKind::HalfSpace)
        return (body.hs_offset - 1.0) * body.hs_normal + body.translation;
    return body.translation;
}

Vec3 project_to_surface(const ConvexBody& body, Vec3 p) {
    Vec3 w = p - body.translation;
    switch (body.kind) {
        case BodyKind::Ball: {
            double r = norm(w);
            if (r < 1e-300) return body.translation + Vec3{body.radius, 0, 0};
            return body.translation + (body.radius / r) * w;
        }
        case BodyKind::Ellipsoid: {
            double s = (w.x / body.semi_axes.x) * (w.x / body.semi_axes.x) +
                       (w.y / body.semi_axes.y) * (w.y / body.semi_axes.y);
            if (body.dim_n == 2) s += (w.z / body.semi_axes.z) * (w.z / body.semi_axes.z);
            if (s < 1e-300) return body.translation + Vec3{body.semi_axes.x, 0, 0};
            return body.translation + w / std::sqrt(s);
        }
        case BodyKind::Cylinder: {
            double r = body.cyl_radius, h = body.cyl_half_height, rho = body.cyl_rounding;
            double u = std::hypot(w.x, w.y), z = w.z;
            double su, sz; // projected profile coordinates
            if (rho <= 0.0) {
                // Sharp cylinder: clamp to nearest profile wall.
                double dr = r - u, dz = h - std::fabs(z);
                if (u > r || std::fabs(z) > h) {
                    su = std::min(u, r);
                    sz = std::clamp(z, -h, h);
                    if (u > r && std::fabs(z) <= h) su = r;
                    if (std::fabs(z) > h && u <= r) sz = (z > 0 ? h : -h);
                } else if (dr < dz) {
                    su = r;
                    sz = z;
                } else {
                    su = u;
                    sz = (z >= 0 ? h : -h);
                }
            } else {
                double rc = r - rho, hc = h - rho;
                double qu = std::clamp(u, 0.0, rc);
                double qz = std::clamp(z, -hc, hc);
                double du = u - qu, dz = z - qz;
                double dd = std::hypot(du, dz);
                if (dd > 1e-14) {
                    su = qu + rho * du / dd;
                    sz = qz + rho * dz / dd;
                } else {
                    // Inside the core: push out through the nearest profile edge.
                    double d_right = rc - u;
                    double d_top = hc - z;
                    double d_bot = z + hc;
                    if (d_right <= d_top && d_right <= d_bot) {
                        su = rc + rho;
                        sz = z;
                    } else if (d_top <= d_bot) {
                        su = u;
                        sz = hc + rho;
                    } else {
                        su = u;
                        sz = -hc - rho;
                    }
                }
            }
            Vec3 er = (u > 1e-300) ? Vec3{w.x / u, w.y / u, 0} : Vec3{1, 0, 0};
            return body.translation + su * er + Vec3{0, 0, sz};
        }
        default:
            fail(Err::InvalidArgument, "projection is defined for analytic kinds only");
    }
}

Vec3 analytic_normal(const ConvexBody& body, Vec3 x) {
    Vec3 w = x - body.translation;
    switch (body.kind) {
        case BodyKind::Ball:
            return normalized(w);
        case BodyKind::Ellipsoid: {
            Vec3 g{w.x / (body.semi_axes.x * body.semi_axes.x),
                   w.y / (body.semi_axes.y * body.semi_axes.y),
                   body.dim_n == 2 ? w.z / (body.semi_axes.z * body.semi_axes.z) : 0.0};
            return normalized(g);
        }
        case BodyKind::Cylinder: {
            double r = body.cyl_radius, h = body.cyl_half_height, rho = body.cyl_rounding;
            double u = std::hypot(w.x, w.y), z = w.z;
            double rc = r - rho, hc = h - rho;
            double qu = std::clamp(u, 0.0, rc);
            double qz = std::clamp(z, -hc, hc);
            double du = u - qu, dz = z - qz;
            double dd = std::hypot(du, dz);
            double nu, nz;
            if (dd > 1e-12 * (1.0 + r)) {
                nu = du / dd;
                nz = dz / dd;
            } else {
                // On a flat piece: lateral wall or a cap.
                if (std::fabs(u - r) < std::fabs(std::fabs(z) - h)) {
                    nu = 1;
                    nz = 0;
                } else {
                    nu = 0;
                    nz = (z >= 0 ? 1 : -1);
                }
            }
            Vec3 er = (u > 1e-300) ? Vec3{w.x / u, w.y / u, 0} : Vec3{1, 0, 0};
            return normalized(nu * er + Vec3{0, 0, nz});
        }
        case BodyKind::HalfSpace:
            return body.hs_normal;
        default:
            fail(Err::InvalidArgument, "analytic normal not available for this kind");
    }
}

double chord_exit(const ConvexBody& body, Vec3 x, Vec3 d) {
    Vec3 w = x - body.translation;
    switch (body.kind) {
        case BodyKind::Ball: {
            // |w + t d|^2 = r^2 with |w| = r: t = -2 <w, d>.
            return std::max(0.0, -2.0 * dot(w, d) / norm2(d));
        }
        case BodyKind::Ellipsoid: {
            Vec3 y{w.x / body.semi_axes.x, w.y / body.semi_axes.y,
                   body.dim_n == 2 ? w.z / body.semi_axes.z : 0.0};
            Vec3 e{d.x / body.semi_axes.x, d.y / body.semi_axes.y,
                   body.dim_n == 2 ? d.z / body.semi_axes.z : 0.0};
            return std::max(0.0, -2.0 * dot(y, e) / norm2(e));
        }
        case BodyKind::Cylinder: {
            double hi = 2.0 * (norm(w) + bounding_radius(body)) + 1.0;
            if (contains(body, x + hi * d)) fail(Err::Internal, "chord upper bound too small");
            double lo = 0.0; // boundary start counts as the inside end
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                if (contains(body, x + mid * d))
                    lo = mid;
                else
                    hi = mid;
            }
            return lo;
        }
        default:
            fail(Err::InvalidArgument, "chord_exit supports analytic kinds only");
    }
}

std::vector<Vec3> polytope_vertices(const ConvexBody& body) {
    const auto& hs = body.halfspaces;
    std::vector<Vec3> verts;
    double scale = 0.0;
    for (const auto& h : hs) scale = std::max(scale, std::fabs(h.b) / std::max(1e-12, norm(h.a)));
    scale = std::max(scale, 1.0);
    const double feas_tol = 1e-9 * scale;

    auto feasible = [&](Vec3 v) {
        for (const auto& h : hs)
            if (dot(h.a, v) > h.b + feas_tol) return false;
        return true;
    };
    auto push_unique = [&](Vec3 v) {
        for (const auto& u : verts)
            if (dist(u, v) < 1e-8 * scale) return;
        verts.push_back(v);
    };

    std::size_t m = hs.size();
    if (body.dim_n == 1) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const Vec3 &a1 = hs[i].a, &a2 = hs[j].a;
                double det = a1.x * a2.y - a1.y * a2.x;
                if (std::fabs(det) < 1e-12) continue;
                Vec3 v{(hs[i].b * a2.y - hs[j].b * a1.y) / det,
                       (a1.x * hs[j].b - a2.x * hs[i].b) / det, 0};
                if (feasible(v)) push_unique(v);
            }
    } else {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k) {
                    Vec3 cjk = cross(hs[j].a, hs[k].a);
                    double det = dot(hs[i].a, cjk);
                    if (std::fabs(det) < 1e-12) continue;
                    Vec3 v = (hs[i].b * cjk + hs[j].b * cross(hs[k].a, hs[i].a) +
                              hs[k].b * cross(hs[i].a, hs[j].a)) /
                             det;
                    if (feasible(v)) push_unique(v);
                }
    }
    return verts;
}

ConvexBody read_halfspace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::Io, "cannot open halfspace file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::vector<double> row;
        double v;
        while (ss >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(row);
    }
    if (rows.empty()) fail(Err::Parse, "halfspace file is empty");
    std::size_t cols = rows[0].size();
    if (cols != 3 && cols != 4) fail(Err::Parse, "halfspace rows must have n+2 entries (n=1 or 2)");
    int dim_n = static_cast<int>(cols) - 2;
    std::vector<HalfspaceIneq> hs;
    for (const auto& row : rows) {
        if (row.size() != cols) fail(Err::Parse, "inconsistent halfspace row length");
        HalfspaceIneq h;
        h.a = {row[0], row[1], cols == 4 ? row[2] : 0.0};
        h.b = row[cols - 1];
        hs.push_back(h);
    }
    return make_polytope(dim_n, std::move(hs));
}

ConvexBody parse_body_spec(const std::string& spec, int dim_n) {
    check_dim(dim_n);
    std::string main = spec;
    Vec3 shift{};
    bool has_shift = false;
    if (auto at = spec.find('@'); at != std::string::npos) {
        main = spec.substr(0, at);
        std::string tail = spec.substr(at + 1);
        std::replace(tail.begin(), tail.end(), ',', ' ');
        std::istringstream ss(tail);
        if (!(ss >> shift.x >> shift.y)) fail(Err::Parse, "bad translation in body spec");
        if (dim_n == 2 && !(ss >> shift.z)) fail(Err::Parse, "bad translation in body spec");
        has_shift = true;
    }
    auto colon = main.find(':');
    std::string kind = main.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::string tail = main.substr(colon + 1);
        if (kind != "polytope") {
            std::replace(tail.begin(), tail.end(), ',', ' ');
            std::istringstream ss(tail);
            double v;
            while (ss >> v) args.push_back(v);
        } else {
            ConvexBody b = read_halfspace_file(tail);
            if (b.dim_n != dim_n) fail(Err::Parse, "polytope file dimension mismatch");
            if (has_shift) b = apply_transform(b, Transform{1.0, shift});
            return b;
        }
    }
    auto need = [&](std::size_t k) {
        if (args.size() != k) fail(Err::Parse, "body spec '" + kind + "' expects " +
                                                   std::to_string(k) + " parameters");
    };
    ConvexBody b;
    if (kind == "ball") {
        need(1);
        b = make_ball(dim_n, args[0]);
    } else if (kind == "ellipsoid") {
        need(static_cast<std::size_t>(dim_n) + 1);
        b = make_ellipsoid(dim_n, {args[0], args[1], dim_n == 2 ? args[2] : 1.0});
    } else if (kind == "cylinder") {
        if (dim_n != 2) fail(Err::Parse, "cylinder bodies require n=2");
        need(3);
        b = make_cylinder(args[0], args[1], args[2]);
    } else if (kind == "cube") {
        need(1);
        b = make_cube(dim_n, args[0]);
    } else if (kind == "halfspace") {
        need(static_cast<std::size_t>(dim_n) + 2);
        b = make_halfspace(dim_n, {args[0], args[1], dim_n == 2 ? args[2] : 0.0},
                           args[dim_n + 1]);
    } else {
        fail(Err::Parse, "unknown body kind: " + kind);
    }
    if (has_shift) b = apply_transform(b, Transform{1.0, shift});
    return b;
}

std::string body_spec_string(const ConvexBody& body) {
    char buf[256];
    std::string s;
    switch (body.kind) {
        case BodyKind::Ball:
            std::snprintf(buf, sizeof buf, "ball:%.17g", body.radius);
            s = buf;
            break;
        case BodyKind::Ellipsoid:
            if (body.dim_n == 2)
                std::snprintf(buf, sizeof buf, "ellipsoid:%.17g,%.17g,%.17g", body.semi_axes.x,
                              body.semi_axes.y, body.semi_axes.z);
            else
                std::snprintf(buf, sizeof buf, "ellipsoid:%.17g,%.17g", body.semi_axes.x,
                              body.semi_axes.y);
            s = buf;
            break;
        case BodyKind::Cylinder:
            std::snprintf(buf, sizeof buf, "cylinder:%.17g,%.17g,%.17g", body.cyl_radius,
                          body.cyl_half_height, body.cyl_rounding);
            s = buf;
            break;
        case BodyKind::Cube:
            std::snprintf(buf, sizeof buf, "cube:%.17g", body.half_side);
            s = buf;
            break;
        case BodyKind::Polytope:
            std::snprintf(buf, sizeof buf, "polytope:<%zu halfspaces>", body.halfspaces.size());
            s = buf;
            break;
        case BodyKind::HalfSpace:
            std::snprintf(buf, sizeof buf, "halfspace:%.17g,%.17g,%.17g,%.17g", body.hs_normal.x,
                          body.hs_normal.y, body.hs_normal.z, body.hs_offset);
            s = buf;
            break;
    }
    if (norm(body.translation) > 0 && body.kind != BodyKind::Polytope) {
        std::snprintf(buf, sizeof buf, "@%.17g,%.17g,%.17g", body.translation.x,
                      body.translation.y, body.translation.z);
        s += buf;
    }
    return s;
}

} // namespace fhs
