#include "measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fhs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxDepth = 20;

struct Simplex {
    Vec3 v[3];
    int nv;

    Vec3 centroid() const {
        Vec3 c{};
        for (int i = 0; i < nv; ++i) c = c + v[i];
        return c / static_cast<double>(nv);
    }
    double area() const {
        if (nv == 2) return dist(v[0], v[1]);
        return 0.5 * norm(cross(v[1] - v[0], v[2] - v[0]));
    }
    double diam() const {
        if (nv == 2) return dist(v[0], v[1]);
        return std::max({dist(v[0], v[1]), dist(v[1], v[2]), dist(v[2], v[0])});
    }
};

double weight_rec(const Simplex& s, double beta, int depth, bool& warned) {
    Vec3 c = s.centroid();
    double r = norm(c);
    double d = s.diam();
    if (r >= 4.0 * d || depth >= kMaxDepth) {
        if (r < 1e-14) {
            // Quadrature point sits on the singularity; nudge it along the element.
            Vec3 shifted = c + 0.25 * (s.v[0] - c);
            r = std::max(norm(shifted), 1e-14);
            warned = true;
        }
        return s.area() * std::pow(r, -beta);
    }
    double acc = 0.0;
    if (s.nv == 2) {
        Vec3 m = 0.5 * (s.v[0] + s.v[1]);
        acc += weight_rec({{s.v[0], m}, 2}, beta, depth + 1, warned);
        acc += weight_rec({{m, s.v[1]}, 2}, beta, depth + 1, warned);
    } else {
        Vec3 m01 = 0.5 * (s.v[0] + s.v[1]);
        Vec3 m12 = 0.5 * (s.v[1] + s.v[2]);
        Vec3 m20 = 0.5 * (s.v[2] + s.v[0]);
        acc += weight_rec({{s.v[0], m01, m20}, 3}, beta, depth + 1, warned);
        acc += weight_rec({{m01, s.v[1], m12}, 3}, beta, depth + 1, warned);
        acc += weight_rec({{m20, m12, s.v[2]}, 3}, beta, depth + 1, warned);
        acc += weight_rec({{m01, m12, m20}, 3}, beta, depth + 1, warned);
    }
    return acc;
}

Simplex element_simplex(const SurfaceMesh& mesh, std::size_t e) {
    const auto& el = mesh.elements[e];
    Simplex s;
    s.nv = mesh.verts_per_element();
    for (int i = 0; i < s.nv; ++i) s.v[i] = mesh.vertices[el[i]];
    return s;
}

// Distance from the origin to a flat simplex (segment or triangle).
double origin_dist_segment(Vec3 a, Vec3 b) {
    Vec3 ab = b - a;
    double t = std::clamp(-dot(a, ab) / norm2(ab), 0.0, 1.0);
    return norm(a + t * ab);
}

double origin_dist(const Simplex& s) {
    if (s.nv == 2) return origin_dist_segment(s.v[0], s.v[1]);
    // Closest point on a triangle to the origin (Ericson-style region tests).
    Vec3 a = s.v[0], b = s.v[1], c = s.v[2];
    Vec3 ab = b - a, ac = c - a, ap = -a;
    double d1 = dot(ab, ap), d2 = dot(ac, ap);
    if (d1 <= 0 && d2 <= 0) return norm(a);
    Vec3 bp = -b;
    double d3 = dot(ab, bp), d4 = dot(ac, bp);
    if (d3 >= 0 && d4 <= d3) return norm(b);
    double vc = d1 * d4 - d3 * d2;
    if (vc <= 0 && d1 >= 0 && d3 <= 0) return norm(a + (d1 / (d1 - d3)) * ab);
    Vec3 cp = -c;
    double d5 = dot(ab, cp), d6 = dot(ac, cp);
    if (d6 >= 0 && d5 <= d6) return norm(c);
    double vb = d5 * d2 - d1 * d6;
    if (vb <= 0 && d2 >= 0 && d6 <= 0) return norm(a + (d2 / (d2 - d6)) * ac);
    double va = d3 * d6 - d5 * d4;
    if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0)
        return norm(b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b));
    double denom = 1.0 / (va + vb + vc);
    return norm(a + (vb * denom) * ab + (vc * denom) * ac);
}

// Weighted area over the inside (side = -1) or outside (side = +1) of the
// unit ball; straddling simplices are split until they classify cleanly or
// reach the diameter floor, then go by centroid radius.
double ball_side_rec(const Simplex& s, double beta, int side, double diam_floor, bool& warned) {
    double rmax = 0.0;
    for (int i = 0; i < s.nv; ++i) rmax = std::max(rmax, norm(s.v[i]));
    double rmin = origin_dist(s);
    bool fully_out = rmin >= 1.0;
    bool fully_in = rmax <= 1.0;
    if (fully_out || fully_in) {
        bool wanted = (side > 0) ? fully_out : fully_in;
        if (!wanted) return 0.0;
        return weight_rec(s, beta, 0, warned);
    }
    if (s.diam() <= diam_floor) {
        double rc = norm(s.centroid());
        bool wanted = (side > 0) ? rc >= 1.0 : rc <= 1.0;
        return wanted ? weight_rec(s, beta, 0, warned) : 0.0;
    }
    double acc = 0.0;
    if (s.nv == 2) {
        Vec3 m = 0.5 * (s.v[0] + s.v[1]);
        acc += ball_side_rec({{s.v[0], m}, 2}, beta, side, diam_floor, warned);
        acc += ball_side_rec({{m, s.v[1]}, 2}, beta, side, diam_floor, warned);
    } else {
        Vec3 m01 = 0.5 * (s.v[0] + s.v[1]);
        Vec3 m12 = 0.5 * (s.v[1] + s.v[2]);
        Vec3 m20 = 0.5 * (s.v[2] + s.v[0]);
        acc += ball_side_rec({{s.v[0], m01, m20}, 3}, beta, side, diam_floor, warned);
        acc += ball_side_rec({{m01, s.v[1], m12}, 3}, beta, side, diam_floor, warned);
        acc += ball_side_rec({{m20, m12, s.v[2]}, 3}, beta, side, diam_floor, warned);
        acc += ball_side_rec({{m01, m12, m20}, 3}, beta, side, diam_floor, warned);
    }
    return acc;
}

} // namespace

double element_weight_integral(const SurfaceMesh& mesh, std::size_t e, double beta, bool& warned) {
    if (beta == 0.0) return mesh.areas[e];
    Simplex s = element_simplex(mesh, e);
    Vec3 c = mesh.centroids[e];
    double r = norm(c);
    if (r >= 4.0 * s.diam()) return mesh.areas[e] * std::pow(r, -beta);
    return weight_rec(s, beta, 0, warned);
}

WeightedAreaResult weighted_area(const SurfaceMesh& mesh, const SubsetMask& subset, double beta) {
    if (subset.size() != mesh.element_count())
        fail(Err::InvalidArgument, "subset mask length mismatch");
    WeightedAreaResult res;
    res.beta = beta;
    bool warned = false;
    double value = 0.0, area = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        if (!subset[e]) continue;
        value += element_weight_integral(mesh, e, beta, warned);
        area += mesh.areas[e];
    }
    res.value = value;
    res.subset_area = area;
    res.origin_warning = warned;
    int n = mesh.dim_n;
    if (beta >= 0.0 && beta < static_cast<double>(n) && area > 0.0) {
        res.ratio = value / std::pow(area, (n - beta) / n);
        res.ratio_defined = true;
    }
    return res;
}

double unit_ball_volume(int n) {
    switch (n) {
        case 1: return 2.0;
        case 2: return kPi;
        default: fail(Err::InvalidArgument, "n must be 1 or 2");
    }
}

double unit_sphere_area(int n) {
    switch (n) {
        case 1: return 2.0 * kPi;  // circle in R^2
        case 2: return 4.0 * kPi;  // sphere in R^3
        default: fail(Err::InvalidArgument, "n must be 1 or 2");
    }
}

double paper_constant(int n, double beta, double epsilon) {
    if (!(beta >= 0.0 && beta < static_cast<double>(n)))
        fail(Err::BetaOutOfRange, "beta must lie in [0, n)");
    if (!(epsilon > 0)) fail(Err::InvalidArgument, "epsilon must be positive");
    double c1 = n * std::sqrt(1.0 + n + epsilon) / (n - beta) *
                std::pow(unit_ball_volume(n), beta / n);
    return 2.0 * (n + 1) * c1;
}

double conjectured_constant(int n, double beta) {
    if (!(beta >= 0.0 && beta < static_cast<double>(n)))
        fail(Err::BetaOutOfRange, "beta must lie in [0, n)");
    return std::pow(2.0, beta / n) * n * std::pow(unit_ball_volume(n), beta / n) / (n - beta);
}

double flat_rearrangement_value(double measure_E, int n, double beta) {
    if (!(measure_E > 0)) fail(Err::InvalidArgument, "measure must be positive");
    if (!(beta >= 0.0 && beta < static_cast<double>(n)))
        fail(Err::BetaOutOfRange, "beta must lie in [0, n)");
    double omega = unit_ball_volume(n);
    double radius = std::pow(measure_E / omega, 1.0 / n);
    double alpha_nm1 = n * omega;
    return alpha_nm1 / (n - beta) * std::pow(radius, n - beta);
}

double tail_integral(const SurfaceMesh& mesh, double beta) {
    if (!(beta > mesh.dim_n)) fail(Err::BetaOutOfRange, "tail integral requires beta > n");
    bool warned = false;
    double floor = mesh.h_max / 16.0;
    double acc = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e)
        acc += ball_side_rec(element_simplex(mesh, e), beta, +1, floor, warned);
    return acc;
}

double near_integral(const SurfaceMesh& mesh, double beta) {
    if (!(beta < mesh.dim_n)) fail(Err::BetaOutOfRange, "near integral requires beta < n");
    bool warned = false;
    double floor = mesh.h_max / 16.0;
    double acc = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e)
        acc += ball_side_rec(element_simplex(mesh, e), beta, -1, floor, warned);
    return acc;
}

Certificate thm12_certificate(const SurfaceMesh& mesh, const std::vector<SubsetMask>& subsets,
                              double beta, double epsilon) {
    Certificate cert;
    cert.beta = beta;
    cert.constant = paper_constant(mesh.dim_n, beta, epsilon);
    cert.conjectured = conjectured_constant(mesh.dim_n, beta);
    for (const auto& mask : subsets) {
        CertificateRow row;
        auto wa = weighted_area(mesh, mask, beta);
        row.value = wa.value;
        row.subset_area = wa.subset_area;
        if (!wa.ratio_defined) {
            row.skipped = true;
        } else {
            row.ratio = wa.ratio;
            cert.max_ratio = std::max(cert.max_ratio, row.ratio);
        }
        cert.rows.push_back(row);
    }
    cert.pass = cert.max_ratio <= cert.constant;
    return cert;
}

} // namespace fhs
