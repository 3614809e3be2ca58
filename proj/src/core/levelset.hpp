#pragma once

#include <cstdint>
#include <vector>

#include "fields.hpp"
#include "fractional.hpp"
#include "mesh.hpp"
#include "rng.hpp"

namespace fhs {

// Superlevel measures a_i = |{u > 2^i}| over the finite window [i_min, i_max]
// that carries all variation: a_i equals the support measure for i < i_min
// (contributing closed-form geometric tails to series sums) and 0 for
// i > i_max.
struct DyadicDecomposition {
    int i_min = 0;
    int i_max = 0;
    std::vector<double> window; // window[k] = a_{i_min + k}, size i_max - i_min + 1
    double support_measure = 0.0;

    double a(int i) const {
        if (i < i_min) return support_measure;
        if (i > i_max) return 0.0;
        return window[static_cast<std::size_t>(i - i_min)];
    }
    double d(int i) const { return a(i) - a(i + 1); } // layer measure |A_i \ A_{i+1}|
};

DyadicDecomposition dyadic_decompose(const SurfaceMesh& mesh, const ScalarField& u);

// sum_i 2^{pi} a_i^{(n-sp)/n}
double series_lhs(const DyadicDecomposition& dec, int n, double s, double p);
// 2^{p*_s} sum_{a_i != 0} 2^{pi} a_i^{-sp/n} a_{i+1}
double series_rhs(const DyadicDecomposition& dec, int n, double s, double p);
// Re-indexed form: 2^{p*_s - p} sum_{a_{i-1} != 0} 2^{pi} a_{i-1}^{-sp/n} a_i
double series_rhs_shifted(const DyadicDecomposition& dec, int n, double s, double p);

struct HolderCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;
};

// sum x_k^{t1} y_k^{t2} <= (sum x)^{t1} (sum y)^{t2} for t1 + t2 >= 1.
HolderCheck generalized_holder_check(const std::vector<double>& x, const std::vector<double>& y,
                                     double t1, double t2);

// Weighted split on discrete sums over a masked subset:
// sum |x|^{tau gamma}|u|^tau dA <= (sum |x|^{beta alpha}|u|^alpha dA)^{tau/alpha}
//                                  * (sum |x|^{tau alpha (gamma-beta)/(alpha-tau)} dA)^{(alpha-tau)/alpha}
HolderCheck weighted_holder_split(const SurfaceMesh& mesh, const ScalarField& u,
                                  const SubsetMask& subset, double tau, double gamma,
                                  double alpha_exp, double beta_exp);

struct LqLowerBound {
    double lq_integral = 0.0; // sum |u|^q dA
    double dyadic_sum = 0.0;  // sum 2^{jq} d_j
    bool ok = false;
};

LqLowerBound lq_lower_bound_check(const DyadicDecomposition& dec, const SurfaceMesh& mesh,
                                  const ScalarField& u, double q);

// Empirical constant of the level-set energy bound: rhs_energy.total / series_lhs.
double energy_lower_bound_ratio(const SurfaceMesh& mesh, const ScalarField& u, double s, double p,
                                double alpha, const CurvatureField& H);

// Random admissible sequence (bounded, non-increasing, eventually zero,
// constant below its window), built straight into the sparse representation.
DyadicDecomposition random_admissible_sequence(Rng& rng);

struct SeriesCheckSummary {
    int cases = 0;
    int failures = 0;
    double worst_ratio = 0.0; // max over cases of lhs/rhs
};

SeriesCheckSummary check_series(int cases, std::uint64_t seed, int n, double s, double p);

} // namespace fhs
