#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace chb {

// Seeded random source with explicit bit-to-double conversion so that
// streams are identical across standard library implementations
// (std::uniform_real_distribution is not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // standard normal via Box-Muller
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    Eigen::Vector4d unitS3() {
        Eigen::Vector4d v;
        do {
            for (int i = 0; i < 4; ++i) v[i] = gaussian();
        } while (v.norm() < 1e-8);
        return v.normalized();
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace chb
