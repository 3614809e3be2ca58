#pragma once

#include <cstdint>
#include <random>

#include "vec.hpp"

namespace fhs {

// Seeded generator with portable value derivation: all draws go through the
// raw 64-bit stream, never through distribution objects, so a seed produces
// the same numbers on every platform/build.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in (0,1), never exactly 0 or 1.
    double uniform() { return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Log-uniform magnitude over [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    // Uniform direction on S^n (ambient dim n+1), by normal deviates.
    Vec3 unit_vector(int dim_n) {
        for (;;) {
            Vec3 v{gauss(), gauss(), dim_n >= 2 ? gauss() : 0.0};
            double r = norm(v);
            if (r > 1e-12) return v / r;
        }
    }

    double gauss() {
        // Box-Muller on the portable uniform stream.
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace fhs
