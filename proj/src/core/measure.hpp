#pragma once

#include <optional>
#include <vector>

#include "mesh.hpp"

namespace fhs {

struct WeightedAreaResult {
    double value = 0.0;
    double beta = 0.0;
    double subset_area = 0.0;
    double ratio = 0.0;          // value / subset_area^{(n-beta)/n}, when defined
    bool ratio_defined = false;
    bool origin_warning = false; // a quadrature point had to be nudged off the origin
};

// Integral of |x|^{-beta} over one element, with recursive near-origin
// subdivision (quartering for n=2, halving for n=1) while |c| < 4 diam and
// depth < 20. Elements far from the origin cost a single evaluation.
double element_weight_integral(const SurfaceMesh& mesh, std::size_t e, double beta, bool& warned);

// Sum of element weight integrals over the masked subset.
WeightedAreaResult weighted_area(const SurfaceMesh& mesh, const SubsetMask& subset, double beta);

// Explicit universal constant of the weighted isoperimetric bound:
// 2(n+1) * n sqrt(1+n+eps)/(n-beta) * omega_n^{beta/n}.
double paper_constant(int n, double beta, double epsilon);

// Conjectured sharp value, the coincident-double-disk limit:
// 2^{beta/n} * n omega_n^{beta/n} / (n-beta).
double conjectured_constant(int n, double beta);

// Exact flat oracle: integral of |x|^{-beta} over the origin-centered flat
// n-ball of measure `measure_E`.
double flat_rearrangement_value(double measure_E, int n, double beta);

// Weighted area over the part of the mesh outside (resp. inside) the unit
// ball, with straddling elements subdivided until they classify cleanly.
double tail_integral(const SurfaceMesh& mesh, double beta);
double near_integral(const SurfaceMesh& mesh, double beta);

double unit_ball_volume(int n);      // omega_n
double unit_sphere_area(int n);      // |S^n| in R^{n+1}

struct CertificateRow {
    double value = 0.0;
    double subset_area = 0.0;
    double ratio = 0.0;
    bool skipped = false; // empty subset
};

struct Certificate {
    std::vector<CertificateRow> rows;
    double beta = 0.0;
    double max_ratio = 0.0;
    double constant = 0.0;             // paper_constant(n, beta, eps)
    double conjectured = 0.0;          // reported, never asserted
    bool pass = false;                 // max_ratio <= constant
};

Certificate thm12_certificate(const SurfaceMesh& mesh, const std::vector<SubsetMask>& subsets,
                              double beta, double epsilon);

} // namespace fhs
