#include "params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fhs {

namespace {

constexpr double kBalanceTol = 1e-12;

double balance_residual(const FracParams& prm) {
    return 1.0 / prm.tau + prm.gamma / prm.n - prm.a / prm.p_star_s() -
           (1.0 - prm.a) / prm.q;
}

bool q_critical(const FracParams& prm) { return std::fabs(prm.q - prm.p_star_s()) <= 1e-12; }

} // namespace

std::vector<Violation> validate(const FracParams& prm) {
    std::vector<Violation> out;
    auto bad = [&](const char* field, std::string msg) { out.push_back({field, std::move(msg)}); };

    if (prm.n != 1 && prm.n != 2) bad("n", "n must be 1 or 2");
    if (!(prm.s > 0 && prm.s < 1)) bad("s", "s must lie in (0,1)");
    if (!(prm.alpha > 0 && prm.alpha < 1)) bad("alpha", "alpha must lie in (0,1)");
    if (!(prm.p >= 1)) bad("p", "p must be >= 1");
    if (!(prm.q >= 1)) bad("q", "q must be >= 1");
    if (!(prm.a > 0 && prm.a <= 1)) bad("a", "a must lie in (0,1]");
    if (!(prm.gamma <= 0)) bad("gamma", "gamma must be <= 0");
    if (!(prm.tau > 0)) bad("tau", "tau must be positive");
    if (!out.empty()) return out;

    if (!(prm.s * prm.p < prm.n)) {
        bad("sp", "requires sp < n");
        return out;
    }
    double res = balance_residual(prm);
    if (std::fabs(res) > kBalanceTol) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "balance 1/tau + gamma/n = a/p*_s + (1-a)/q violated by %.3e",
                      res);
        bad("balance", buf);
    }
    if ((prm.a == 1.0 || q_critical(prm)) && prm.gamma < -prm.a * prm.s - 1e-12)
        bad("gamma", "gamma >= -a s is required when a = 1 or q = p*_s");
    // Implied by the balance for admissible a, q; checked for defensible reports.
    if (!(1.0 / prm.tau + prm.gamma / prm.n > 0))
        bad("weight", "1/tau + gamma/n must be positive (so -tau gamma lies in [0, n))");
    return out;
}

double derive_tau(int n, double s, double p, double q, double a, double gamma) {
    if (!(s * p < n)) fail(Err::InvalidArgument, "requires sp < n");
    double p_star = n * p / (n - s * p);
    double inv = a / p_star + (1.0 - a) / q - gamma / n;
    if (!(inv > 1e-15)) fail(Err::NonpositiveTau, "balance forces 1/tau <= 0");
    return 1.0 / inv;
}

CaseTag classify_case(const FracParams& prm) {
    double lhs = 1.0 / prm.tau;
    double rhs = prm.a / prm.p + (1.0 - prm.a) / prm.q;
    if (lhs <= rhs + 1e-12) return CaseTag::Case1;
    // Case2 sanity: the balance forces gamma < -as, and the curious
    // condition rules out a = 1 and q = p*_s.
    if (prm.a == 1.0 || q_critical(prm))
        fail(Err::InconsistentParams, "Case2 cannot occur with a = 1 or q = p*_s");
    if (!(prm.gamma < -prm.a * prm.s))
        fail(Err::InconsistentParams, "Case2 classification with gamma >= -a s");
    return CaseTag::Case2;
}

FracParams split_sub_params(const FracParams& prm, const HolderSplit& split, int which) {
    FracParams sub = prm;
    if (which == 1) {
        sub.a = split.a1;
        sub.tau = split.tau1;
        sub.gamma = split.gamma1;
    } else {
        sub.a = split.a2;
        sub.tau = split.tau2;
        sub.gamma = split.gamma2;
    }
    return sub;
}

HolderSplit construct_holder_split(const FracParams& prm) {
    if (classify_case(prm) != CaseTag::Case2)
        fail(Err::InvalidArgument, "holder split applies to Case2 tuples only");
    double p_star = prm.p_star_s();
    // a1 sits on the side of a where A(a) decreases, a2 where it increases.
    double dir = prm.q > p_star ? 1.0 : -1.0;
    double delta = std::min(prm.a, 1.0 - prm.a) / 2.0;
    for (int iter = 0; iter < 50; ++iter, delta *= 0.5) {
        double a1 = prm.a - dir * delta;
        double a2 = prm.a + dir * delta;
        if (!(a1 > 0 && a1 < 1 && a2 > 0 && a2 < 1)) continue;
        HolderSplit split;
        split.a1 = a1;
        split.a2 = a2;
        split.gamma1 = 0.0;
        split.gamma2 = -a2 * prm.s;
        split.tau1 = 1.0 / (a1 / p_star + (1.0 - a1) / prm.q);
        split.tau2 = 1.0 / (a2 / prm.p + (1.0 - a2) / prm.q);
        split.halvings = iter;
        if (!(split.tau1 > prm.tau && split.tau2 > prm.tau)) continue;

        for (int which = 1; which <= 2; ++which) {
            FracParams sub = split_sub_params(prm, split, which);
            if (!validate(sub).empty())
                fail(Err::Internal, "holder split produced an inadmissible sub-tuple");
            if (classify_case(sub) != CaseTag::Case1)
                fail(Err::Internal, "holder split sub-tuple is not Case1");
        }
        return split;
    }
    fail(Err::SplitNotFound,
         "no admissible split after 50 halvings; input is boundary-degenerate");
}

FracParams parse_params_spec(const std::string& spec) {
    FracParams prm;
    bool has_n = false, has_s = false, has_p = false, has_q = false, has_a = false,
         has_alpha = false, has_gamma = false;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) fail(Err::Parse, "expected key=value in params: " + item);
        std::string key = item.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        double val = 0;
        try {
            val = std::stod(item.substr(eq + 1));
        } catch (...) {
            fail(Err::Parse, "bad numeric value in params: " + item);
        }
        if (key == "n") { prm.n = static_cast<int>(val); has_n = true; }
        else if (key == "s") { prm.s = val; has_s = true; }
        else if (key == "p") { prm.p = val; has_p = true; }
        else if (key == "q") { prm.q = val; has_q = true; }
        else if (key == "a") { prm.a = val; has_a = true; }
        else if (key == "alpha") { prm.alpha = val; has_alpha = true; }
        else if (key == "gamma") { prm.gamma = val; has_gamma = true; }
        else if (key == "tau") fail(Err::Parse, "tau is derived from the balance, not accepted");
        else fail(Err::Parse, "unknown parameter key: " + key);
    }
    if (!(has_n && has_s && has_p && has_q && has_a && has_alpha && has_gamma))
        fail(Err::Parse, "params require n, s, p, q, a, alpha, gamma");
    prm.tau = derive_tau(prm.n, prm.s, prm.p, prm.q, prm.a, prm.gamma);
    return prm;
}

std::string params_spec_string(const FracParams& prm) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "n=%d,s=%.17g,p=%.17g,alpha=%.17g,a=%.17g,q=%.17g,gamma=%.17g",
                  prm.n, prm.s, prm.p, prm.alpha, prm.a, prm.q, prm.gamma);
    return buf;
}

FracParams random_admissible(Rng& rng) {
    for (;;) {
        FracParams prm;
        prm.n = rng.uniform() < 0.5 ? 1 : 2;
        prm.s = rng.uniform(0.1, 0.9);
        prm.alpha = rng.uniform(0.1, 0.9);
        double pmax = std::min(2.5, 0.95 * prm.n / prm.s);
        if (pmax < 1.0) continue;
        prm.p = rng.uniform(1.0, pmax);
        prm.q = rng.uniform(1.0, 4.0);
        prm.a = rng.uniform(0.05, 1.0);
        double cap = (prm.a == 1.0 || std::fabs(prm.q - prm.p_star_s()) < 1e-9)
                         ? prm.a * prm.s
                         : 2.0;
        prm.gamma = -rng.uniform(0.0, cap);
        try {
            prm.tau = derive_tau(prm.n, prm.s, prm.p, prm.q, prm.a, prm.gamma);
        } catch (const Error&) {
            continue;
        }
        if (validate(prm).empty()) return prm;
    }
}

FracParams random_case2(Rng& rng) {
    for (;;) {
        FracParams prm;
        prm.n = rng.uniform() < 0.5 ? 1 : 2;
        prm.s = rng.uniform(0.1, 0.9);
        prm.alpha = rng.uniform(0.1, 0.9);
        double pmax = std::min(2.5, 0.95 * prm.n / prm.s);
        if (pmax < 1.0) continue;
        prm.p = rng.uniform(1.0, pmax);
        prm.a = rng.uniform(0.1, 0.9);
        prm.q = rng.uniform(1.0, 4.0);
        if (std::fabs(prm.q - prm.p_star_s()) < 0.05) continue;
        prm.gamma = -prm.a * prm.s * (1.0 + rng.uniform(0.05, 3.0));
        prm.tau = derive_tau(prm.n, prm.s, prm.p, prm.q, prm.a, prm.gamma);
        if (!validate(prm).empty()) continue;
        if (classify_case(prm) != CaseTag::Case2) continue;
        return prm;
    }
}

} // namespace fhs
