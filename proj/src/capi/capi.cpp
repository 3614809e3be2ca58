#include "fhs.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "core/decomposition.hpp"
#include "core/fields.hpp"
#include "core/fractional.hpp"
#include "core/harness.hpp"
#include "core/levelset.hpp"
#include "core/measure.hpp"
#include "core/mesh.hpp"
#include "core/parallel.hpp"
#include "core/params.hpp"

using nlohmann::json;

struct fhs_body {
    fhs::ConvexBody value;
};
struct fhs_mesh {
    fhs::SurfaceMesh value;
};
struct fhs_field {
    fhs::ScalarField value;
};
struct fhs_curvature {
    fhs::CurvatureField value;
};

namespace {

thread_local std::string g_last_error;

fhs_status set_error(fhs::Err code, const char* what) {
    g_last_error = what;
    return static_cast<fhs_status>(code);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
fhs_status guarded(Fn&& fn) {
    try {
        fn();
        return FHS_OK;
    } catch (const fhs::Error& e) {
        return set_error(e.code(), e.what());
    } catch (const std::exception& e) {
        return set_error(fhs::Err::Internal, e.what());
    } catch (...) {
        return set_error(fhs::Err::Internal, "unknown error");
    }
}

fhs::Vec3 to_vec(const double p[3]) { return {p[0], p[1], p[2]}; }

json weighted_area_json(const fhs::WeightedAreaResult& wa, int n, double epsilon) {
    json j;
    j["value"] = wa.value;
    j["subset_area"] = wa.subset_area;
    if (wa.ratio_defined) j["ratio"] = wa.ratio;
    if (wa.beta >= 0 && wa.beta < n) {
        j["paper_constant"] = fhs::paper_constant(n, wa.beta, epsilon);
        j["conjectured_constant"] = fhs::conjectured_constant(n, wa.beta);
    }
    j["origin_warning"] = wa.origin_warning;
    return j;
}

} // namespace

extern "C" {

const char* fhs_last_error(void) { return g_last_error.c_str(); }

void fhs_string_free(char* s) { std::free(s); }

void fhs_set_threads(int n) { fhs::set_thread_count(n); }

/* ---- bodies ---------------------------------------------------------- */

fhs_status fhs_body_parse(const char* spec, int dim_n, fhs_body** out) {
    return guarded([&] { *out = new fhs_body{fhs::parse_body_spec(spec, dim_n)}; });
}

fhs_status fhs_body_from_halfspace_file(const char* path, fhs_body** out) {
    return guarded([&] { *out = new fhs_body{fhs::read_halfspace_file(path)}; });
}

fhs_status fhs_body_transform(const fhs_body* body, double scale, const double translate[3],
                              fhs_body** out) {
    return guarded([&] {
        *out = new fhs_body{
            fhs::apply_transform(body->value, fhs::Transform{scale, to_vec(translate)})};
    });
}

fhs_status fhs_body_contains(const fhs_body* body, const double point[3], int* out) {
    return guarded([&] { *out = fhs::contains(body->value, to_vec(point)) ? 1 : 0; });
}

fhs_status fhs_body_support_point(const fhs_body* body, const double direction[3],
                                  double out_point[3]) {
    return guarded([&] {
        fhs::Vec3 p = fhs::support_point(body->value, to_vec(direction));
        out_point[0] = p.x;
        out_point[1] = p.y;
        out_point[2] = p.z;
    });
}

void fhs_body_free(fhs_body* body) { delete body; }

/* ---- meshes ---------------------------------------------------------- */

fhs_status fhs_mesh_create(const fhs_body* body, double target_h, double patch_extent,
                           fhs_mesh** out) {
    return guarded(
        [&] { *out = new fhs_mesh{fhs::mesh_boundary(body->value, target_h, patch_extent)}; });
}

fhs_status fhs_mesh_refine(const fhs_mesh* mesh, fhs_mesh** out) {
    return guarded([&] { *out = new fhs_mesh{fhs::refine(mesh->value)}; });
}

fhs_status fhs_mesh_scale(const fhs_mesh* mesh, double scale, const double translate[3],
                          fhs_mesh** out) {
    return guarded([&] {
        *out = new fhs_mesh{
            fhs::scale_mesh(mesh->value, fhs::Transform{scale, to_vec(translate)})};
    });
}

fhs_status fhs_mesh_element_count(const fhs_mesh* mesh, size_t* out) {
    return guarded([&] { *out = mesh->value.element_count(); });
}

fhs_status fhs_mesh_total_area(const fhs_mesh* mesh, double* out) {
    return guarded([&] { *out = mesh->value.total_area(); });
}

fhs_status fhs_mesh_h_max(const fhs_mesh* mesh, double* out) {
    return guarded([&] { *out = mesh->value.h_max; });
}

fhs_status fhs_mesh_write_off(const fhs_mesh* mesh, const char* path) {
    return guarded([&] { fhs::write_off(mesh->value, path); });
}

fhs_status fhs_mesh_read_off(const char* path, fhs_mesh** out) {
    return guarded([&] { *out = new fhs_mesh{fhs::read_off(path)}; });
}

void fhs_mesh_free(fhs_mesh* mesh) { delete mesh; }

/* ---- graph decomposition ---------------------------------------------- */

fhs_status fhs_decompose_json(const fhs_mesh* mesh, double epsilon, char** out_json) {
    return guarded([&] {
        auto pieces = fhs::decompose(mesh->value, epsilon);
        json arr = json::array();
        for (const auto& p : pieces) {
            arr.push_back({{"axis", p.axis + 1},
                           {"sign", p.sign},
                           {"count", p.element_ids.size()},
                           {"area", p.area},
                           {"max_slope", p.max_slope}});
        }
        *out_json = dup_string(arr.dump(2));
    });
}

/* ---- weighted measures -------------------------------------------------- */

fhs_status fhs_measure_json(const fhs_body* body, double beta, const char* subset, uint64_t seed,
                            double resolution, char** out_json) {
    return guarded([&] {
        fhs::SurfaceMesh mesh = fhs::mesh_boundary(body->value, resolution);
        fhs::Rng rng(seed);
        auto make_mask = [&](const fhs::SurfaceMesh& m) -> fhs::SubsetMask {
            std::string s = subset ? subset : "full";
            if (s == "full") return fhs::full_mask(m);
            if (s.rfind("cap:", 0) == 0) {
                double r = std::stod(s.substr(4));
                std::size_t pick = static_cast<std::size_t>(
                    rng.uniform_int(0, static_cast<std::int64_t>(m.element_count()) - 1));
                return fhs::cap_mask(m, m.centroids[pick], r);
            }
            if (s.rfind("random:", 0) == 0)
                return fhs::random_mask(m, std::stod(s.substr(7)), rng);
            fhs::fail(fhs::Err::Parse, "subset must be full | cap:r | random:p");
        };
        fhs::SubsetMask mask = make_mask(mesh);
        auto coarse = fhs::weighted_area(mesh, mask, beta);
        fhs::SurfaceMesh fine = fhs::refine(mesh);
        auto fine_res = fhs::weighted_area(fine, fhs::refine_mask(mesh, mask), beta);
        json j = weighted_area_json(fine_res, mesh.dim_n, 1.0);
        j["refinement_delta"] =
            fine_res.value > 0 ? std::fabs(fine_res.value - coarse.value) / fine_res.value : 0.0;
        *out_json = dup_string(j.dump(2));
    });
}

fhs_status fhs_paper_constant(int n, double beta, double epsilon, double* out) {
    return guarded([&] { *out = fhs::paper_constant(n, beta, epsilon); });
}

fhs_status fhs_conjectured_constant(int n, double beta, double* out) {
    return guarded([&] { *out = fhs::conjectured_constant(n, beta); });
}

fhs_status fhs_flat_rearrangement_value(double measure, int n, double beta, double* out) {
    return guarded([&] { *out = fhs::flat_rearrangement_value(measure, n, beta); });
}

fhs_status fhs_weighted_area(const fhs_mesh* mesh, const uint8_t* mask, double beta,
                             double* out_value, double* out_area, double* out_ratio) {
    return guarded([&] {
        fhs::SubsetMask m = mask
                                ? fhs::SubsetMask(mask, mask + mesh->value.element_count())
                                : fhs::full_mask(mesh->value);
        auto wa = fhs::weighted_area(mesh->value, m, beta);
        if (out_value) *out_value = wa.value;
        if (out_area) *out_area = wa.subset_area;
        if (out_ratio) *out_ratio = wa.ratio_defined ? wa.ratio : -1.0;
    });
}

fhs_status fhs_tail_integral(const fhs_mesh* mesh, double beta, double* out) {
    return guarded([&] { *out = fhs::tail_integral(mesh->value, beta); });
}

fhs_status fhs_near_integral(const fhs_mesh* mesh, double beta, double* out) {
    return guarded([&] { *out = fhs::near_integral(mesh->value, beta); });
}

/* ---- fields -------------------------------------------------------------- */

fhs_status fhs_field_create(const fhs_mesh* mesh, const char* spec, fhs_field** out) {
    return guarded([&] {
        auto fs = fhs::parse_field_spec(spec, mesh->value.dim_n);
        *out = new fhs_field{fhs::eval_field(fs, mesh->value)};
    });
}

fhs_status fhs_field_from_values(const fhs_mesh* mesh, const double* values, size_t count,
                                 fhs_field** out) {
    return guarded([&] {
        *out = new fhs_field{
            fhs::field_from_values(mesh->value, std::vector<double>(values, values + count))};
    });
}

fhs_status fhs_field_value(const fhs_field* field, size_t element, double* out) {
    return guarded([&] {
        if (element >= field->value.values.size())
            fhs::fail(fhs::Err::InvalidArgument, "element index out of range");
        *out = field->value.values[element];
    });
}

void fhs_field_free(fhs_field* field) { delete field; }

/* ---- seminorm and curvature ----------------------------------------------- */

fhs_status fhs_seminorm_p(const fhs_mesh* mesh, const fhs_field* field, double s, double p,
                          double* out) {
    return guarded([&] { *out = fhs::seminorm_p(mesh->value, field->value, s, p); });
}

fhs_status fhs_curvature_create(const fhs_mesh* mesh, const fhs_body* body, double alpha,
                                int method, fhs_curvature** out) {
    return guarded([&] {
        *out = new fhs_curvature{fhs::curvature_field(
            mesh->value, body ? &body->value : nullptr, alpha,
            method == 1 ? fhs::CurvatureMethod::Volume : fhs::CurvatureMethod::Boundary)};
    });
}

fhs_status fhs_curvature_value(const fhs_curvature* H, size_t element, double* out) {
    return guarded([&] {
        if (element >= H->value.values.size())
            fhs::fail(fhs::Err::InvalidArgument, "element index out of range");
        *out = H->value.values[element];
    });
}

fhs_status fhs_curvature_point_volume(const fhs_body* body, const double point[3], double alpha,
                                      double* out) {
    return guarded(
        [&] { *out = fhs::frac_mean_curvature_volume(body->value, to_vec(point), alpha); });
}

fhs_status fhs_rhs_energy(const fhs_mesh* mesh, const fhs_field* field, double s, double p,
                          double alpha, const fhs_curvature* H, double* out_seminorm_term,
                          double* out_curvature_term, double* out_total) {
    return guarded([&] {
        auto e = fhs::rhs_energy(mesh->value, field->value, s, p, alpha, H->value);
        if (out_seminorm_term) *out_seminorm_term = e.seminorm_term;
        if (out_curvature_term) *out_curvature_term = e.curvature_term;
        if (out_total) *out_total = e.total;
    });
}

void fhs_curvature_free(fhs_curvature* H) { delete H; }

/* ---- level-set series ------------------------------------------------------ */

fhs_status fhs_check_series_json(int cases, uint64_t seed, int n, double s, double p,
                                 char** out_json) {
    return guarded([&] {
        auto sum = fhs::check_series(cases, seed, n, s, p);
        json j{{"cases", sum.cases}, {"failures", sum.failures}, {"worst_ratio", sum.worst_ratio}};
        *out_json = dup_string(j.dump(2));
    });
}

/* ---- parameters -------------------------------------------------------------- */

fhs_status fhs_params_json(const char* spec, char** out_json) {
    return guarded([&] {
        fhs::FracParams prm = fhs::parse_params_spec(spec);
        json j;
        j["n"] = prm.n;
        j["s"] = prm.s;
        j["p"] = prm.p;
        j["q"] = prm.q;
        j["a"] = prm.a;
        j["alpha"] = prm.alpha;
        j["gamma"] = prm.gamma;
        j["tau"] = prm.tau;
        j["p_star_s"] = prm.p_star_s();
        auto violations = fhs::validate(prm);
        json varr = json::array();
        for (const auto& v : violations) varr.push_back({{"field", v.field}, {"message", v.message}});
        j["violations"] = varr;
        if (violations.empty()) {
            auto tag = fhs::classify_case(prm);
            j["case"] = tag == fhs::CaseTag::Case1 ? "Case1" : "Case2";
            if (tag == fhs::CaseTag::Case2) {
                auto split = fhs::construct_holder_split(prm);
                j["holder_split"] = {{"a1", split.a1},     {"a2", split.a2},
                                     {"tau1", split.tau1}, {"tau2", split.tau2},
                                     {"gamma1", split.gamma1}, {"gamma2", split.gamma2},
                                     {"halvings", split.halvings}};
            }
        }
        *out_json = dup_string(j.dump(2));
    });
}

fhs_status fhs_derive_tau(int n, double s, double p, double q, double a, double gamma,
                          double* out) {
    return guarded([&] { *out = fhs::derive_tau(n, s, p, q, a, gamma); });
}

/* ---- harness -------------------------------------------------------------------- */

fhs_status fhs_verify_json(const char* body_spec, int dim_n, const char* field_spec,
                           const char* params_spec, double resolution, int refinements,
                           uint64_t seed, double patch_extent, int unsafe, char** out_json) {
    return guarded([&] {
        fhs::ConvexBody body = fhs::parse_body_spec(body_spec, dim_n);
        fhs::FieldSpec field = fhs::parse_field_spec(field_spec, dim_n);
        fhs::FracParams prm = fhs::parse_params_spec(params_spec);
        auto rep = fhs::verify_main(body, field, prm, resolution, refinements, seed, patch_extent,
                                    unsafe != 0);
        *out_json = dup_string(fhs::report_to_json(rep));
    });
}

fhs_status fhs_sweep(const char* family, const char* body_spec, int dim_n,
                     const char* field_spec, const char* params_spec, double resolution,
                     double beta, uint64_t seed, int out_format, char** out_text) {
    return guarded([&] {
        fhs::ConvexBody body = fhs::parse_body_spec(body_spec, dim_n);
        fhs::FieldSpec field = fhs::parse_field_spec(field_spec, dim_n);
        fhs::FracParams prm = fhs::parse_params_spec(params_spec);
        auto rows = fhs::sweep(family, body, field, prm, resolution, beta, seed);
        *out_text =
            dup_string(out_format == 1 ? fhs::sweep_to_json(rows) : fhs::sweep_to_csv(rows));
    });
}

fhs_status fhs_flat_hardy_json(int dim_n, double patch_extent, double grid_h, double s, double p,
                               const char* radii_csv, char** out_json) {
    return guarded([&] {
        std::vector<double> radii;
        std::string csv = radii_csv;
        std::size_t pos = 0;
        while (pos < csv.size()) {
            std::size_t next = csv.find(',', pos);
            radii.push_back(std::stod(csv.substr(pos, next - pos)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        auto rows = fhs::flat_hardy_check(dim_n, patch_extent, grid_h, s, p, radii);
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"radius", r.radius},
                           {"ratio", r.ratio},
                           {"refined_ratio", r.refined_ratio},
                           {"delta", r.delta}});
        *out_json = dup_string(arr.dump(2));
    });
}

} // extern "C"
