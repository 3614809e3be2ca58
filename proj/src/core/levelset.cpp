#include "levelset.hpp"

#include <algorithm>
#include <cmath>

namespace fhs {

namespace {

double p_star_s_of(int n, double s, double p) {
    if (!(s * p < n)) fail(Err::InvalidArgument, "requires sp < n");
    return n * p / (n - s * p);
}

void check_series_params(int n, double s, double p) {
    if (n != 1 && n != 2) fail(Err::InvalidArgument, "n must be 1 or 2");
    if (!(s > 0 && s < 1)) fail(Err::InvalidArgument, "s must lie in (0,1)");
    if (p < 1e-9) fail(Err::DivergentSeries, "series require p > 0");
    (void)p_star_s_of(n, s, p);
}

// sum_{i <= i0} 2^{pi} = 2^{p i0} * 2^p / (2^p - 1), the exact tail below the window.
double geometric_tail(double p, int i0) {
    return std::exp2(p * i0) * std::exp2(p) / (std::exp2(p) - 1.0);
}

} // namespace

DyadicDecomposition dyadic_decompose(const SurfaceMesh& mesh, const ScalarField& u) {
    if (u.values.size() != mesh.element_count())
        fail(Err::InvalidField, "field length does not match element count");
    double umax = 0.0, umin_pos = 0.0;
    double support = 0.0;
    for (std::size_t e = 0; e < u.values.size(); ++e) {
        double v = u.values[e];
        if (v < 0) fail(Err::NonnegativityViolation, "dyadic decomposition requires u >= 0");
        if (v > 0) {
            support += mesh.areas[e];
            umax = std::max(umax, v);
            umin_pos = umin_pos == 0.0 ? v : std::min(umin_pos, v);
        }
    }
    if (umax == 0.0) fail(Err::InvalidField, "dyadic decomposition requires a nonzero field");

    int i_max = static_cast<int>(std::ceil(std::log2(umax)));
    while (std::exp2(i_max) < umax) ++i_max;          // guard rounding of log2
    while (std::exp2(i_max - 1) >= umax) --i_max;     // tightest index with a_{i_max} = 0
    int i_min = static_cast<int>(std::floor(std::log2(umin_pos))) - 1;
    while (std::exp2(i_min) >= umin_pos) --i_min;     // ensure a_{i_min} = support

    DyadicDecomposition dec;
    dec.i_min = i_min;
    dec.i_max = i_max;
    dec.support_measure = support;
    dec.window.assign(static_cast<std::size_t>(i_max - i_min + 1), 0.0);
    for (int i = i_min; i <= i_max; ++i) {
        double threshold = std::exp2(i);
        double a = 0.0;
        for (std::size_t e = 0; e < u.values.size(); ++e)
            if (u.values[e] > threshold) a += mesh.areas[e];
        dec.window[static_cast<std::size_t>(i - i_min)] = a;
    }
    return dec;
}

double series_lhs(const DyadicDecomposition& dec, int n, double s, double p) {
    check_series_params(n, s, p);
    double e1 = (n - s * p) / n;
    double acc = 0.0;
    for (int i = dec.i_min; i <= dec.i_max; ++i) {
        double a = dec.a(i);
        if (a > 0) acc += std::exp2(p * i) * std::pow(a, e1);
    }
    if (dec.support_measure > 0)
        acc += std::pow(dec.support_measure, e1) * geometric_tail(p, dec.i_min - 1);
    return acc;
}

double series_rhs(const DyadicDecomposition& dec, int n, double s, double p) {
    check_series_params(n, s, p);
    double ps = p_star_s_of(n, s, p);
    double em = -s * p / n;
    double acc = 0.0;
    for (int i = dec.i_min; i <= dec.i_max; ++i) {
        double a = dec.a(i);
        if (a != 0.0) acc += std::exp2(p * i) * std::pow(a, em) * dec.a(i + 1);
    }
    if (dec.support_measure > 0) {
        double m = dec.support_measure;
        acc += std::pow(m, em) * m * geometric_tail(p, dec.i_min - 1);
    }
    return std::exp2(ps) * acc;
}

double series_rhs_shifted(const DyadicDecomposition& dec, int n, double s, double p) {
    check_series_params(n, s, p);
    double ps = p_star_s_of(n, s, p);
    double em = -s * p / n;
    double acc = 0.0;
    for (int i = dec.i_min + 1; i <= dec.i_max + 1; ++i) {
        double am = dec.a(i - 1);
        if (am != 0.0) acc += std::exp2(p * i) * std::pow(am, em) * dec.a(i);
    }
    if (dec.support_measure > 0) {
        double m = dec.support_measure;
        acc += std::pow(m, em) * m * geometric_tail(p, dec.i_min);
    }
    return std::exp2(ps - p) * acc;
}

HolderCheck generalized_holder_check(const std::vector<double>& x, const std::vector<double>& y,
                                     double t1, double t2) {
    if (t1 < 0 || t2 < 0 || t1 + t2 < 1.0 - 1e-15)
        fail(Err::ExponentViolation, "generalized Hoelder needs t1, t2 >= 0 with t1 + t2 >= 1");
    if (x.size() != y.size()) fail(Err::InvalidArgument, "sequence lengths differ");
    for (double v : x)
        if (v < 0) fail(Err::InvalidArgument, "sequences must be nonnegative");
    for (double v : y)
        if (v < 0) fail(Err::InvalidArgument, "sequences must be nonnegative");
    HolderCheck out;
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        double term = 1.0;
        term *= t1 > 0 ? std::pow(x[k], t1) : 1.0;
        term *= t2 > 0 ? std::pow(y[k], t2) : 1.0;
        if ((t1 > 0 && x[k] == 0.0) || (t2 > 0 && y[k] == 0.0)) term = 0.0;
        out.lhs += term;
        sx += x[k];
        sy += y[k];
    }
    out.rhs = (t1 > 0 ? std::pow(sx, t1) : 1.0) * (t2 > 0 ? std::pow(sy, t2) : 1.0);
    out.ok = out.lhs <= out.rhs + 1e-12 * out.rhs;
    return out;
}

HolderCheck weighted_holder_split(const SurfaceMesh& mesh, const ScalarField& u,
                                  const SubsetMask& subset, double tau, double gamma,
                                  double alpha_exp, double beta_exp) {
    if (!(tau > 0) || !(alpha_exp > tau))
        fail(Err::ExponentOrder, "weighted split needs alpha > tau > 0");
    if (subset.size() != mesh.element_count())
        fail(Err::InvalidArgument, "subset mask length mismatch");
    HolderCheck out;
    double s1 = 0.0, s2 = 0.0;
    double wexp = tau * alpha_exp * (gamma - beta_exp) / (alpha_exp - tau);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        if (!subset[e]) continue;
        double r = norm(mesh.centroids[e]);
        if (r < 1e-300) continue; // singular quadrature point, measure zero
        double uv = std::fabs(u.values[e]);
        double dA = mesh.areas[e];
        if (uv > 0) {
            out.lhs += std::pow(r, tau * gamma) * std::pow(uv, tau) * dA;
            s1 += std::pow(r, beta_exp * alpha_exp) * std::pow(uv, alpha_exp) * dA;
        }
        s2 += std::pow(r, wexp) * dA;
    }
    out.rhs = std::pow(s1, tau / alpha_exp) * std::pow(s2, (alpha_exp - tau) / alpha_exp);
    out.ok = out.lhs <= out.rhs + 1e-12 * out.rhs;
    return out;
}

LqLowerBound lq_lower_bound_check(const DyadicDecomposition& dec, const SurfaceMesh& mesh,
                                  const ScalarField& u, double q) {
    if (!(q >= 1)) fail(Err::InvalidArgument, "q must be >= 1");
    LqLowerBound out;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        double v = std::fabs(u.values[e]);
        if (v > 0) out.lq_integral += std::pow(v, q) * mesh.areas[e];
    }
    // Below the window a is constant, so d_i = 0 there; the window plus one
    // index below covers every nonzero layer.
    for (int i = dec.i_min - 1; i <= dec.i_max; ++i) {
        double di = dec.d(i);
        if (di > 0) out.dyadic_sum += std::exp2(q * i) * di;
    }
    out.ok = out.lq_integral >= out.dyadic_sum - 1e-12 * out.lq_integral;
    return out;
}

double energy_lower_bound_ratio(const SurfaceMesh& mesh, const ScalarField& u, double s, double p,
                                double alpha, const CurvatureField& H) {
    if (u.is_zero()) fail(Err::ZeroDenominator, "energy ratio needs a nonzero field");
    auto dec = dyadic_decompose(mesh, u);
    double denom = series_lhs(dec, mesh.dim_n, s, p);
    if (denom <= 0) fail(Err::ZeroDenominator, "series lower bound vanished");
    auto energy = rhs_energy(mesh, u, s, p, alpha, H);
    return energy.total / denom;
}

DyadicDecomposition random_admissible_sequence(Rng& rng) {
    int len = static_cast<int>(rng.uniform_int(2, 40));
    std::vector<double> vals(static_cast<std::size_t>(len));
    for (auto& v : vals) v = rng.log_uniform(1e-6, 1e6);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    // Occasional ties stress the a_i != 0 bookkeeping.
    for (std::size_t k = 1; k < vals.size(); ++k)
        if (rng.uniform() < 0.2) vals[k] = vals[k - 1];
    int zeros = static_cast<int>(rng.uniform_int(1, 4));
    for (int z = 0; z < zeros; ++z) vals.push_back(0.0);

    DyadicDecomposition dec;
    dec.i_min = static_cast<int>(rng.uniform_int(-25, 25));
    dec.i_max = dec.i_min + static_cast<int>(vals.size()) - 1;
    dec.window = std::move(vals);
    dec.support_measure = dec.window.front();
    return dec;
}

SeriesCheckSummary check_series(int cases, std::uint64_t seed, int n, double s, double p) {
    check_series_params(n, s, p);
    SeriesCheckSummary sum;
    Rng rng(seed);
    for (int c = 0; c < cases; ++c) {
        auto dec = random_admissible_sequence(rng);
        double lhs = series_lhs(dec, n, s, p);
        double rhs = series_rhs(dec, n, s, p);
        ++sum.cases;
        if (lhs > rhs * (1.0 + 1e-12)) ++sum.failures;
        if (rhs > 0) sum.worst_ratio = std::max(sum.worst_ratio, lhs / rhs);
    }
    return sum;
}

} // namespace fhs
