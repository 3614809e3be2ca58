#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace fhs {

namespace {

using nlohmann::json;

// Single-level evaluation shared by verify_main and the scale checks.
struct LevelResult {
    double lhs = 0.0;
    EnergyBreakdown rhs;
    double lq = 0.0;
    double ratio = 0.0;
    bool origin_warned = false;
};

LevelResult evaluate_level(const SurfaceMesh& mesh, const ScalarField& u,
                           const FracParams& prm) {
    LevelResult lr;
    auto H = curvature_field(mesh, mesh.source ? &*mesh.source : nullptr, prm.alpha,
                             CurvatureMethod::Boundary);
    lr.rhs = rhs_energy(mesh, u, prm.s, prm.p, prm.alpha, H);
    lr.lhs = lhs_weighted_norm(mesh, u, prm.tau, prm.gamma, lr.origin_warned);
    lr.lq = lq_norm(mesh, u, prm.q);
    double denom = std::pow(lr.rhs.total, prm.a / prm.p) *
                   std::pow(lr.lq, 1.0 - prm.a);
    lr.ratio = denom > 0 ? lr.lhs / denom : std::numeric_limits<double>::infinity();
    return lr;
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        grid.push_back(std::stod(item));
    }
    return grid;
}

json report_json_obj(const Report& r) {
    json j;
    j["context"] = {{"body", r.body},
                    {"field", r.field},
                    {"params", r.params},
                    {"resolution", r.resolution},
                    {"refinements", r.refinements},
                    {"seed", r.seed},
                    {"input_hash", r.input_hash}};
    j["lhs"] = r.lhs;
    j["rhs_energy"] = {{"seminorm_term", r.rhs.seminorm_term},
                       {"curvature_term", r.rhs.curvature_term},
                       {"total", r.rhs.total}};
    j["lq_norm"] = r.lq_norm_value;
    j["ratio"] = r.ratio;
    if (r.refinement_delta_defined) j["refinement_delta"] = r.refinement_delta;
    j["warnings"] = r.warnings;
    return j;
}

} // namespace

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(const std::string& data) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

double lhs_weighted_norm(const SurfaceMesh& mesh, const ScalarField& u, double tau,
                         double gamma) {
    bool warned = false;
    return lhs_weighted_norm(mesh, u, tau, gamma, warned);
}

double lhs_weighted_norm(const SurfaceMesh& mesh, const ScalarField& u, double tau, double gamma,
                         bool& origin_warned) {
    if (!(tau > 0)) fail(Err::InvalidArgument, "tau must be positive");
    if (u.values.size() != mesh.element_count())
        fail(Err::InvalidField, "field length does not match element count");
    double beta = -tau * gamma;
    double acc = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        double v = std::fabs(u.values[e]);
        if (v == 0.0) continue;
        acc += std::pow(v, tau) * element_weight_integral(mesh, e, beta, origin_warned);
    }
    return std::pow(acc, 1.0 / tau);
}

Report verify_main(const ConvexBody& body, const FieldSpec& field, const FracParams& prm,
                   double resolution, int refinements, std::uint64_t seed, double patch_extent,
                   bool unsafe) {
    auto violations = validate(prm);
    Report rep;
    if (!violations.empty()) {
        if (!unsafe) {
            std::string msg = "inadmissible parameters:";
            for (const auto& v : violations) msg += " [" + v.field + "] " + v.message;
            fail(Err::InvalidArgument, msg);
        }
        for (const auto& v : violations)
            rep.warnings.push_back("unsafe: " + v.field + ": " + v.message);
    }
    if (refinements < 1) fail(Err::InvalidArgument, "refinements must be >= 1");

    rep.body = body_spec_string(body);
    rep.field = field_spec_string(field);
    rep.params = params_spec_string(prm);
    rep.resolution = resolution;
    rep.refinements = refinements;
    rep.seed = seed;
    {
        std::ostringstream ss;
        ss << rep.body << "|" << rep.field << "|" << rep.params << "|" << resolution << "|"
           << refinements << "|" << seed;
        rep.input_hash = hash_hex(ss.str());
    }

    SurfaceMesh mesh = mesh_boundary(body, resolution, patch_extent);
    double prev_ratio = 0.0;
    bool have_prev = false;
    for (int level = 0; level < refinements; ++level) {
        if (level > 0) mesh = refine(mesh);
        ScalarField u = eval_field(field, mesh);
        if (u.is_zero()) fail(Err::InvalidField, "field vanishes on the mesh");
        LevelResult lr = evaluate_level(mesh, u, prm);
        if (lr.origin_warned) rep.warnings.push_back("origin-adjacent quadrature point nudged");
        if (have_prev && lr.ratio > 0) {
            rep.refinement_delta = std::fabs(lr.ratio - prev_ratio) / lr.ratio;
            rep.refinement_delta_defined = true;
        }
        prev_ratio = lr.ratio;
        have_prev = true;
        rep.lhs = lr.lhs;
        rep.rhs = lr.rhs;
        rep.lq_norm_value = lr.lq;
        rep.ratio = lr.ratio;
    }
    return rep;
}

Report normalize_and_report(const SurfaceMesh& mesh, const ScalarField& u,
                            const FracParams& prm) {
    if (u.is_zero()) fail(Err::DegenerateScaling, "cannot normalize the zero field");
    LevelResult base = evaluate_level(mesh, u, prm);
    if (!(base.rhs.total > 0) || !(base.lq > 0))
        fail(Err::DegenerateScaling, "normalization needs positive energy and L^q norm");

    int n = mesh.dim_n;
    double e_lam = n - prm.s * prm.p; // energy ~ lambda^{n-sp} c^p
    double l_lam = n / prm.q;         // lq     ~ lambda^{n/q}   c
    double det = e_lam - prm.p * l_lam;

    Report rep;
    rep.body = mesh.source ? body_spec_string(*mesh.source) : "mesh";
    rep.params = params_spec_string(prm);
    double lam = 1.0, c = 1.0;
    if (std::fabs(det) < 1e-9) {
        // q at the critical exponent: both quantities scale identically, so
        // only the energy can be pinned to 1.
        c = std::pow(base.rhs.total, -1.0 / prm.p);
        rep.warnings.push_back("q equals the critical exponent; only the energy is normalized");
    } else {
        double rl = std::log(base.rhs.total), ll = std::log(base.lq);
        double x = (-rl + prm.p * ll) / det; // log lambda
        double y = -ll - l_lam * x;          // log c
        lam = std::exp(x);
        c = std::exp(y);
    }

    SurfaceMesh scaled = scale_mesh(mesh, Transform{lam, {}});
    ScalarField su = u;
    for (auto& v : su.values) v *= c;

    auto H = curvature_field(scaled, scaled.source ? &*scaled.source : nullptr, prm.alpha,
                             CurvatureMethod::Boundary);
    auto rhs = rhs_energy(scaled, su, prm.s, prm.p, prm.alpha, H);
    rep.rhs = rhs;
    rep.lq_norm_value = lq_norm(scaled, su, prm.q);
    rep.lhs = lhs_weighted_norm(scaled, su, prm.tau, prm.gamma);
    double denom = std::pow(rhs.total, prm.a / prm.p) *
                   std::pow(rep.lq_norm_value, 1.0 - prm.a);
    rep.ratio = denom > 0 ? rep.lhs / denom : 0.0;
    return rep;
}

std::vector<double> scale_invariance_deltas(const ConvexBody& body, const FieldSpec& field,
                                            const FracParams& prm, double resolution,
                                            const std::vector<double>& lambdas) {
    SurfaceMesh mesh = mesh_boundary(body, resolution);
    ScalarField u = eval_field(field, mesh);
    if (u.is_zero()) fail(Err::InvalidField, "field vanishes on the mesh");
    LevelResult base = evaluate_level(mesh, u, prm);
    std::vector<double> deltas;
    for (double lam : lambdas) {
        SurfaceMesh scaled = scale_mesh(mesh, Transform{lam, {}});
        LevelResult lr = evaluate_level(scaled, u, prm); // field values pull back unchanged
        deltas.push_back(std::fabs(lr.ratio / base.ratio - 1.0));
    }
    return deltas;
}

std::vector<SweepRow> sweep(const std::string& family, const ConvexBody& body,
                            const FieldSpec& field, const FracParams& prm, double resolution,
                            double beta, std::uint64_t seed) {
    auto colon = family.find(':');
    if (colon == std::string::npos) fail(Err::Parse, "family spec needs a grid: name:v1,v2,...");
    std::string name = family.substr(0, colon);
    std::vector<double> grid = parse_grid(family.substr(colon + 1));
    std::vector<SweepRow> rows;

    for (double t : grid) {
        SweepRow row;
        row.param = t;
        row.thm12_beta = beta;
        try {
            if (name == "cylinder-aspect") {
                // Pancake family: unit disk radius, thickness 2t, fully
                // rounded rim; t -> 0 approaches the coincident double disk.
                ConvexBody cyl = make_cylinder(1.0, t, t);
                SurfaceMesh mesh = mesh_boundary(cyl, resolution);
                auto wa = weighted_area(mesh, full_mask(mesh), beta);
                row.thm12_ratio = wa.ratio;
                row.report = verify_main(cyl, field, prm, resolution, 1, seed);
            } else if (name == "translation") {
                ConvexBody moved = apply_transform(body, Transform{1.0, {t, 0, 0}});
                FieldSpec fs = translate_field_spec(field, {t, 0, 0});
                row.report = verify_main(moved, fs, prm, resolution, 1, seed);
                SurfaceMesh mesh = mesh_boundary(moved, resolution);
                auto wa = weighted_area(mesh, full_mask(mesh), beta);
                row.thm12_ratio = wa.ratio;
            } else if (name == "bump-concentration") {
                FieldSpec fs = field;
                fs.type = FieldSpec::Type::Bump;
                fs.radius = t;
                row.report = verify_main(body, fs, prm, resolution, 1, seed);
                SurfaceMesh mesh = mesh_boundary(body, resolution);
                auto wa = weighted_area(mesh, full_mask(mesh), beta);
                row.thm12_ratio = wa.ratio;
            } else {
                fail(Err::Parse, "unknown sweep family: " + name);
            }
            row.ok = true;
        } catch (const Error& err) {
            row.ok = false;
            row.error = err.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<FlatHardyRow> flat_hardy_check(int dim_n, double patch_extent, double grid_h,
                                           double s, double p, const std::vector<double>& radii) {
    if (!(s * p < dim_n)) fail(Err::InvalidArgument, "requires sp < n");
    ConvexBody plane = dim_n == 2 ? make_halfspace(2, {0, 0, 1}, 0.0)
                                  : make_halfspace(1, {0, 1, 0}, 0.0);

    FracParams prm;
    prm.n = dim_n;
    prm.s = s;
    prm.p = p;
    prm.alpha = s;
    prm.a = 1.0;
    prm.q = 2.0;
    prm.gamma = -s;
    prm.tau = derive_tau(dim_n, s, p, prm.q, 1.0, -s); // equals p by the balance

    SurfaceMesh base = mesh_boundary(plane, grid_h, patch_extent);
    SurfaceMesh fine = refine(base);

    std::vector<FlatHardyRow> rows;
    for (double r : radii) {
        if (r + 4.0 * grid_h > patch_extent)
            fail(Err::SupportTooLarge, "bump support must stay 4h away from the patch edge");
        FlatHardyRow row;
        row.radius = r;
        auto ratio_on = [&](const SurfaceMesh& mesh) {
            ScalarField u = bump_field(mesh, {0, 0, 0}, r, 2.0);
            if (u.is_zero()) fail(Err::InvalidField, "bump not resolved by the grid");
            // Coplanar normals make the curvature term vanish identically.
            auto H = curvature_field(mesh, nullptr, prm.alpha, CurvatureMethod::Boundary);
            auto rhs = rhs_energy(mesh, u, s, p, prm.alpha, H);
            double lhs = lhs_weighted_norm(mesh, u, prm.tau, prm.gamma);
            return lhs / std::pow(rhs.total, 1.0 / p);
        };
        row.ratio = ratio_on(base);
        row.refined_ratio = ratio_on(fine);
        row.delta = std::fabs(row.refined_ratio - row.ratio) / row.refined_ratio;
        rows.push_back(row);
    }
    return rows;
}

std::string report_to_json(const Report& report) { return report_json_obj(report).dump(2); }

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out.precision(12);
    out << "param,lhs,seminorm_term,curvature_term,rhs_total,lq_norm,ratio,thm12_ratio,"
           "thm12_beta,refinement_delta,ok,error\n";
    for (const auto& r : rows) {
        out << r.param << "," << r.report.lhs << "," << r.report.rhs.seminorm_term << ","
            << r.report.rhs.curvature_term << "," << r.report.rhs.total << ","
            << r.report.lq_norm_value << "," << r.report.ratio << "," << r.thm12_ratio << ","
            << r.thm12_beta << ","
            << (r.report.refinement_delta_defined ? r.report.refinement_delta : 0.0) << ","
            << (r.ok ? 1 : 0) << "," << r.error << "\n";
    }
    return out.str();
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["param"] = r.param;
        j["ok"] = r.ok;
        if (!r.ok) j["error"] = r.error;
        j["thm12_ratio"] = r.thm12_ratio;
        j["thm12_beta"] = r.thm12_beta;
        j["report"] = report_json_obj(r.report);
        arr.push_back(j);
    }
    return arr.dump(2);
}

} // namespace fhs
