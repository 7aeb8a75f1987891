#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace nigp {

// Deterministic random source. Samplers are hand-rolled on top of
// mt19937_64 so that streams are reproducible independent of the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double uniform() { return std::ldexp(static_cast<double>(eng_() >> 11), -53); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    std::size_t index(std::size_t n) {
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return static_cast<std::size_t>(v % n);
    }

    // standard normal via Box-Muller
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    // derived stream, stable under reordering of sibling consumers
    Rng fork(std::uint64_t salt) {
        std::seed_seq seq{static_cast<std::uint64_t>(eng_()), salt};
        std::uint64_t s[2];
        seq.generate(s, s + 2);
        return Rng(s[0] ^ (s[1] << 1));
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace nigp
