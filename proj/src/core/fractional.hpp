#pragma once

#include "fields.hpp"
#include "geometry.hpp"
#include "mesh.hpp"

namespace fhs {

enum class CurvatureMethod { Boundary, Volume };

struct CurvatureField {
    std::vector<double> values;
    double alpha = 0.5;
    CurvatureMethod method = CurvatureMethod::Boundary;
};

struct EnergyBreakdown {
    double seminorm_term = 0.0;  // (1/2) [u]^p_{W^{s,p}}
    double curvature_term = 0.0; // integral of H_alpha^{sp/alpha} |u|^p
    double total = 0.0;
};

// p-th power of the fractional seminorm: the double sum over element pairs of
// |u_e - u_f|^p |c_e - c_f|^{-(n+sp)} A_e A_f. Symmetric pairs are collapsed
// with a factor 2; the diagonal is omitted.
double seminorm_p(const SurfaceMesh& mesh, const ScalarField& u, double s, double p);

// Nonlocal mean curvature at element e through the boundary-integral form:
// sum over f != e of <c_f - c_e, nu_f> |c_f - c_e|^{-(n+1+alpha)} A_f, with
// near elements subdivided in-plane. Nonnegative on convex boundaries up to
// quadrature tolerance.
double frac_mean_curvature_boundary(const SurfaceMesh& mesh, std::size_t e, double alpha);

// Volume (signed indicator) form at a boundary point x of an analytic body.
// The principal value is realised exactly in the radial variable: pairing
// antipodal directions reduces the integral to sum_pairs w * t*^{-alpha},
// where t* is the chord length of the ray through the body. Only the angular
// quadrature is approximate; the result is validated by node doubling.
double frac_mean_curvature_volume(const ConvexBody& body, Vec3 x, double alpha,
                                  int angular_nodes = 48);

CurvatureField curvature_field(const SurfaceMesh& mesh, const ConvexBody* body, double alpha,
                               CurvatureMethod method);

EnergyBreakdown rhs_energy(const SurfaceMesh& mesh, const ScalarField& u, double s, double p,
                           double alpha, const CurvatureField& H);

} // namespace fhs
