#pragma once

#include <string>
#include <vector>

#include "error.hpp"
#include "rng.hpp"

namespace fhs {

// Parameter tuple of the interpolation inequality. tau is always derived
// from the dimensional balance in CLI flows; the struct stores whatever the
// caller supplies and validate() reports violations as data.
struct FracParams {
    int n = 2;
    double s = 0.5;
    double p = 1.0;
    double q = 2.0;
    double a = 1.0;
    double alpha = 0.5;
    double gamma = 0.0;
    double tau = 0.0;

    double p_star_s() const { return n * p / (n - s * p); }
};

struct Violation {
    std::string field;
    std::string message;
};

enum class CaseTag { Case1, Case2 };

std::vector<Violation> validate(const FracParams& params);

// tau from 1/tau + gamma/n = a/p*_s + (1-a)/q.
double derive_tau(int n, double s, double p, double q, double a, double gamma);

// Case1 iff 1/tau <= a/p + (1-a)/q. Case2 additionally asserts gamma < -as,
// a != 1 and q != p*_s.
CaseTag classify_case(const FracParams& params);

struct HolderSplit {
    double a1 = 0, a2 = 0;
    double tau1 = 0, tau2 = 0;
    double gamma1 = 0;  // always 0
    double gamma2 = 0;  // always -a2 s
    int halvings = 0;
};

// Constructive split of a Case2 tuple into two Case1-admissible sub-tuples
// with tau_i > tau, found by geometric halving of the offset from a.
HolderSplit construct_holder_split(const FracParams& params);

// Builds the two sub-tuples of a split for revalidation.
FracParams split_sub_params(const FracParams& params, const HolderSplit& split, int which);

// "n=2,s=0.5,p=1,alpha=0.5,a=1,q=2,gamma=-0.5"; tau derived, never accepted.
FracParams parse_params_spec(const std::string& spec);
std::string params_spec_string(const FracParams& params);

// Seeded generators for property suites.
FracParams random_admissible(Rng& rng);
FracParams random_case2(Rng& rng);

} // namespace fhs
