#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fields.hpp"
#include "fractional.hpp"
#include "measure.hpp"
#include "params.hpp"

namespace fhs {

// One verification record: weighted norm on the left, interpolation product
// on the right, and the dimensionless ratio between them.
struct Report {
    std::string body;
    std::string field;
    std::string params;
    double resolution = 0.0;
    int refinements = 1;
    std::uint64_t seed = 0;
    std::string input_hash;

    double lhs = 0.0;
    EnergyBreakdown rhs;
    double lq_norm_value = 0.0;
    double ratio = 0.0; // lhs / (rhs.total^{a/p} lq^{1-a})
    double refinement_delta = 0.0;
    bool refinement_delta_defined = false;
    std::vector<std::string> warnings;
};

// Weighted norm (sum |x|^{tau gamma} |u|^tau dA)^{1/tau} with the measure
// module's near-origin subdivision.
double lhs_weighted_norm(const SurfaceMesh& mesh, const ScalarField& u, double tau, double gamma);
double lhs_weighted_norm(const SurfaceMesh& mesh, const ScalarField& u, double tau, double gamma,
                         bool& origin_warned);

// End-to-end verification at `refinements` successive resolutions; reports
// the finest level and the delta between the two finest.
Report verify_main(const ConvexBody& body, const FieldSpec& field, const FracParams& params,
                   double resolution, int refinements, std::uint64_t seed = 0,
                   double patch_extent = 0.0, bool unsafe = false);

// Rescales the configuration so rhs.total = 1 and lq = 1 (when the two scale
// independently); the reported lhs then equals the ratio directly.
Report normalize_and_report(const SurfaceMesh& mesh, const ScalarField& u,
                            const FracParams& params);

// Ratio deviation |ratio(lambda)/ratio(1) - 1| for each lambda, with the mesh
// scaled exactly and the field pulled back.
std::vector<double> scale_invariance_deltas(const ConvexBody& body, const FieldSpec& field,
                                            const FracParams& params, double resolution,
                                            const std::vector<double>& lambdas);

struct SweepRow {
    double param = 0.0;
    Report report;
    double thm12_ratio = 0.0;       // full-boundary weighted-area ratio
    double thm12_beta = 0.0;
    bool ok = false;
    std::string error;
};

// family: "cylinder-aspect:<csv>" (pancake thickness grid),
//         "translation:<csv>" (origin distance grid along +x),
//         "bump-concentration:<csv>" (bump support radius grid).
std::vector<SweepRow> sweep(const std::string& family, const ConvexBody& body,
                            const FieldSpec& field, const FracParams& params, double resolution,
                            double beta, std::uint64_t seed = 0);

struct FlatHardyRow {
    double radius = 0.0;
    double ratio = 0.0;          // lhs / rhs.total^{1/p} at the base grid
    double refined_ratio = 0.0;  // same at one refinement finer
    double delta = 0.0;
};

// Hardy configuration (a = 1, gamma = -s, tau = p) on a flat patch through
// the origin, over a family of shrinking bumps.
std::vector<FlatHardyRow> flat_hardy_check(int dim_n, double patch_extent, double grid_h,
                                           double s, double p, const std::vector<double>& radii);

std::string report_to_json(const Report& report);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

std::uint64_t fnv1a64(const std::string& data);
std::string hash_hex(const std::string& data);

} // namespace fhs
