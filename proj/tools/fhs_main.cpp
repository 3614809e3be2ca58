// Command-line front end for the fhs shared library. Subcommands map onto
// the C API one-to-one; everything numeric lives behind libfhs.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fhs.h"

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    int threads = 0;
    double resolution = 0.2;
    int refinements = 1;
    std::string out = "json";
    bool unsafe = false;
};

int fail_with(fhs_status st) {
    std::cerr << "error (" << static_cast<int>(st) << "): " << fhs_last_error() << "\n";
    return 1;
}

int print_owned(char* text) {
    if (!text) return 1;
    std::cout << text << "\n";
    fhs_string_free(text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fhs — fractional Hardy-Sobolev toolkit on convex hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough(true);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for all randomized choices");
    app.add_option("--threads", g.threads, "worker threads (0 = auto)");
    app.add_option("--resolution", g.resolution, "target mesh size h");
    app.add_option("--refinements", g.refinements, "number of refinement levels");
    app.add_option("--out", g.out, "output format: json|csv");
    app.add_flag("--unsafe", g.unsafe, "report on inadmissible parameters instead of failing");

    std::string body = "ball:1";
    std::string field = "bump:0,0,1,1.0,2";
    std::string params = "n=2,s=0.5,p=1,alpha=0.5,a=1,q=2,gamma=0";
    int dim_n = 2;
    double patch_extent = 0.0;

    auto add_body = [&](CLI::App* cmd) {
        cmd->add_option("--body", body, "body spec, e.g. ball:1 or cube:1@0.5,0,0");
        cmd->add_option("--dim", dim_n, "boundary dimension n (1 or 2)");
    };

    // mesh
    auto* cmd_mesh = app.add_subcommand("mesh", "mesh a body boundary and report/export it");
    std::string off_out;
    add_body(cmd_mesh);
    cmd_mesh->add_option("--extent", patch_extent, "halfspace patch extent");
    cmd_mesh->add_option("--write-off", off_out, "write the mesh as an OFF file");

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "graph decomposition of the boundary");
    double epsilon = 1.0;
    add_body(cmd_dec);
    cmd_dec->add_option("--epsilon", epsilon, "slope slack parameter");

    // measure
    auto* cmd_meas = app.add_subcommand("measure", "weighted area of a boundary subset");
    double beta = 1.0;
    std::string subset = "full";
    add_body(cmd_meas);
    cmd_meas->add_option("--beta", beta, "weight exponent");
    cmd_meas->add_option("--subset", subset, "full | cap:r | random:p");

    // seminorm
    auto* cmd_semi = app.add_subcommand("seminorm", "fractional seminorm of a field");
    double s_opt = 0.5, p_opt = 1.0;
    add_body(cmd_semi);
    cmd_semi->add_option("--field", field, "field spec");
    cmd_semi->add_option("--s", s_opt, "fractional order s");
    cmd_semi->add_option("--p", p_opt, "integrability exponent p");
    cmd_semi->add_option("--extent", patch_extent, "halfspace patch extent");

    // curvature
    auto* cmd_curv = app.add_subcommand("curvature", "nonlocal mean curvature field");
    double alpha = 0.5;
    std::string method = "boundary";
    add_body(cmd_curv);
    cmd_curv->add_option("--alpha", alpha, "curvature order alpha");
    cmd_curv->add_option("--method", method, "boundary | volume");
    cmd_curv->add_option("--extent", patch_extent, "halfspace patch extent");

    // check-series
    auto* cmd_ser = app.add_subcommand("check-series", "level-set series inequality suite");
    int cases = 1000;
    std::string series_params = "2,0.5,1";
    cmd_ser->add_option("--cases", cases, "number of random sequences");
    cmd_ser->add_option("--params", series_params, "n,s,p");

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "end-to-end inequality verification");
    add_body(cmd_ver);
    cmd_ver->add_option("--field", field, "field spec");
    cmd_ver->add_option("--params", params, "parameter tuple (tau derived)");
    cmd_ver->add_option("--extent", patch_extent, "halfspace patch extent");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "family sweeps with per-point reports");
    std::string family = "cylinder-aspect:0.4,0.2,0.1,0.05";
    add_body(cmd_sweep);
    cmd_sweep->add_option("--family", family,
                          "cylinder-aspect:grid | translation:grid | bump-concentration:grid");
    cmd_sweep->add_option("--field", field, "field spec");
    cmd_sweep->add_option("--params", params, "parameter tuple");
    cmd_sweep->add_option("--beta", beta, "weight exponent for the isoperimetric ratio");

    // flat-hardy
    auto* cmd_flat = app.add_subcommand("flat-hardy", "flat-patch Hardy ratio sweep");
    std::string radii = "0.8,0.5,0.3";
    double extent = 2.0, grid_h = 0.1;
    cmd_flat->add_option("--dim", dim_n, "boundary dimension n");
    cmd_flat->add_option("--extent", extent, "patch extent");
    cmd_flat->add_option("--grid-h", grid_h, "patch grid size");
    cmd_flat->add_option("--s", s_opt, "fractional order s");
    cmd_flat->add_option("--p", p_opt, "exponent p");
    cmd_flat->add_option("--radii", radii, "bump radius grid");

    CLI11_PARSE(app, argc, argv);
    if (g.threads > 0) fhs_set_threads(g.threads);

    fhs_status st = FHS_OK;
    char* text = nullptr;

    if (*cmd_mesh) {
        fhs_body* b = nullptr;
        if ((st = fhs_body_parse(body.c_str(), dim_n, &b)) != FHS_OK) return fail_with(st);
        fhs_mesh* m = nullptr;
        if ((st = fhs_mesh_create(b, g.resolution, patch_extent, &m)) != FHS_OK) {
            fhs_body_free(b);
            return fail_with(st);
        }
        size_t ne = 0;
        double area = 0, h = 0;
        fhs_mesh_element_count(m, &ne);
        fhs_mesh_total_area(m, &area);
        fhs_mesh_h_max(m, &h);
        if (!off_out.empty() && (st = fhs_mesh_write_off(m, off_out.c_str())) != FHS_OK) {
            fhs_mesh_free(m);
            fhs_body_free(b);
            return fail_with(st);
        }
        std::printf("{\n  \"elements\": %zu,\n  \"total_area\": %.12g,\n  \"h_max\": %.12g\n}\n",
                    ne, area, h);
        fhs_mesh_free(m);
        fhs_body_free(b);
        return 0;
    }

    if (*cmd_dec) {
        fhs_body* b = nullptr;
        if ((st = fhs_body_parse(body.c_str(), dim_n, &b)) != FHS_OK) return fail_with(st);
        fhs_mesh* m = nullptr;
        if ((st = fhs_mesh_create(b, g.resolution, patch_extent, &m)) != FHS_OK) {
            fhs_body_free(b);
            return fail_with(st);
        }
        st = fhs_decompose_json(m, epsilon, &text);
        fhs_mesh_free(m);
        fhs_body_free(b);
        if (st != FHS_OK) return fail_with(st);
        return print_owned(text);
    }

    if (*cmd_meas) {
        fhs_body* b = nullptr;
        if ((st = fhs_body_parse(body.c_str(), dim_n, &b)) != FHS_OK) return fail_with(st);
        st = fhs_measure_json(b, beta, subset.c_str(), g.seed, g.resolution, &text);
        fhs_body_free(b);
        if (st != FHS_OK) return fail_with(st);
        return print_owned(text);
    }

    if (*cmd_semi) {
        fhs_body* b = nullptr;
        if ((st = fhs_body_parse(body.c_str(), dim_n, &b)) != FHS_OK) return fail_with(st);
        fhs_mesh* m = nullptr;
        if ((st = fhs_mesh_create(b, g.resolution, patch_extent, &m)) != FHS_OK) {
            fhs_body_free(b);
            return fail_with(st);
        }
        fhs_field* u = nullptr;
        if ((st = fhs_field_create(m, field.c_str(), &u)) != FHS_OK) {
            fhs_mesh_free(m);
            fhs_body_free(b);
            return fail_with(st);
        }
        double value = 0;
        st = fhs_seminorm_p(m, u, s_opt, p_opt, &value);
        // One refinement for the convergence delta.
        double delta = -1;
        if (st == FHS_OK) {
            fhs_mesh* fine = nullptr;
            if (fhs_mesh_refine(m, &fine) == FHS_OK) {
                fhs_field* uf = nullptr;
                double vf = 0;
                if (fhs_field_create(fine, field.c_str(), &uf) == FHS_OK &&
                    fhs_seminorm_p(fine, uf, s_opt, p_opt, &vf) == FHS_OK && vf > 0)
                    delta = std::abs(vf - value) / vf;
                fhs_field_free(uf);
                fhs_mesh_free(fine);
            }
        }
        fhs_field_free(u);
        fhs_mesh_free(m);
        fhs_body_free(b);
        if (st != FHS_OK) return fail_with(st);
        std::printf("{\n  \"seminorm_p\": %.12g,\n  \"refinement_delta\": %.12g\n}\n", value,
                    delta);
        return 0;
    }

    if (*cmd_curv) {
        fhs_body* b = nullptr;
        if ((st = fhs_body_parse(body.c_str(), dim_n, &b)) != FHS_OK) return fail_with(st);
        fhs_mesh* m = nullptr;
        if ((st = fhs_mesh_create(b, g.resolution, patch_extent, &m)) != FHS_OK) {
            fhs_body_free(b);
            return fail_with(st);
        }
        fhs_curvature* H = nullptr;
        st = fhs_curvature_create(m, b, alpha, method == "volume" ? 1 : 0, &H);
        if (st != FHS_OK) {
            fhs_mesh_free(m);
            fhs_body_free(b);
            return fail_with(st);
        }
        size_t ne = 0;
        fhs_mesh_element_count(m, &ne);
        double mn = 0, mx = 0, mean = 0;
        for (size_t e = 0; e < ne; ++e) {
            double v = 0;
            fhs_curvature_value(H, e, &v);
            if (e == 0) mn = mx = v;
            mn = std::min(mn, v);
            mx = std::max(mx, v);
            mean += v;
        }
        mean /= static_cast<double>(ne);
        std::printf(
            "{\n  \"alpha\": %.12g,\n  \"method\": \"%s\",\n  \"elements\": %zu,\n"
            "  \"min\": %.12g,\n  \"max\": %.12g,\n  \"mean\": %.12g\n}\n",
            alpha, method.c_str(), ne, mn, mx, mean);
        fhs_curvature_free(H);
        fhs_mesh_free(m);
        fhs_body_free(b);
        return 0;
    }

    if (*cmd_ser) {
        int n = 2;
        double s = 0.5, p = 1.0;
        if (std::sscanf(series_params.c_str(), "%d,%lf,%lf", &n, &s, &p) != 3) {
            std::cerr << "error: --params expects n,s,p\n";
            return 1;
        }
        st = fhs_check_series_json(cases, g.seed, n, s, p, &text);
        if (st != FHS_OK) return fail_with(st);
        return print_owned(text);
    }

    if (*cmd_ver) {
        st = fhs_verify_json(body.c_str(), dim_n, field.c_str(), params.c_str(), g.resolution,
                             g.refinements, g.seed, patch_extent, g.unsafe ? 1 : 0, &text);
        if (st != FHS_OK) return fail_with(st);
        return print_owned(text);
    }

    if (*cmd_sweep) {
        st = fhs_sweep(family.c_str(), body.c_str(), dim_n, field.c_str(), params.c_str(),
                       g.resolution, beta, g.seed, g.out == "json" ? 1 : 0, &text);
        if (st != FHS_OK) return fail_with(st);
        return print_owned(text);
    }

    if (*cmd_flat) {
        st = fhs_flat_hardy_json(dim_n, extent, grid_h, s_opt, p_opt, radii.c_str(), &text);
        if (st != FHS_OK) return fail_with(st);
        return print_owned(text);
    }

    return 0;
}
