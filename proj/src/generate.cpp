#include "unn/generate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "unn/errors.hpp"
#include "unn/rng.hpp"

namespace unn {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTMin = -1.5 * kPi;
constexpr double kTMax = 1.5 * kPi;

void check_spec(int n, double noise_sigma) {
    if (n < 2) {
        throw std::invalid_argument("generated datasets need n >= 2");
    }
    if (noise_sigma < 0.0) {
        throw std::invalid_argument("noise sigma must be non-negative");
    }
}

Dataset generate_s2d(int n, double noise_sigma, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Matrix points(n, 2);
    for (int i = 0; i < n; ++i) {
        const double t = rng.uniform(kTMin, kTMax);
        const double s = t >= 0.0 ? 1.0 : -1.0;
        points(i, 0) = std::sin(t) + rng.normal(0.0, noise_sigma);
        points(i, 1) = s * (std::cos(t) - 1.0) + rng.normal(0.0, noise_sigma);
    }
    return Dataset(std::move(points));
}

} // namespace

namespace detail {

Dataset generate_s3d(int n, double noise_sigma, std::uint64_t seed, const HoleRect* hole) {
    check_spec(n, noise_sigma);
    SplitMix64 rng(seed);
    Matrix points(n, 3);
    const long draw_budget = 1000L * n;
    long draws = 0;
    for (int i = 0; i < n; ++i) {
        double t = 0.0;
        double h = 0.0;
        for (;;) {
            if (draws >= draw_budget) {
                throw GenerationError("rejection sampling exhausted " + std::to_string(draw_budget) +
                                      " draws; hole region rejects too much of the surface");
            }
            ++draws;
            t = rng.uniform(kTMin, kTMax);
            h = rng.uniform(0.0, 2.0);
            const bool rejected = hole != nullptr && t >= hole->t_min && t <= hole->t_max &&
                                  h >= hole->h_min && h <= hole->h_max;
            if (!rejected) {
                break;
            }
        }
        const double s = t >= 0.0 ? 1.0 : -1.0;
        points(i, 0) = std::sin(t) + rng.normal(0.0, noise_sigma);
        points(i, 1) = h + rng.normal(0.0, noise_sigma);
        points(i, 2) = s * (std::cos(t) - 1.0) + rng.normal(0.0, noise_sigma);
    }
    return Dataset(std::move(points));
}

} // namespace detail

Dataset generate(const GenSpec& spec) {
    check_spec(spec.n, spec.noise_sigma);
    switch (spec.shape) {
    case Shape::S2D:
        return generate_s2d(spec.n, spec.noise_sigma, spec.seed);
    case Shape::S3D:
        return detail::generate_s3d(spec.n, spec.noise_sigma, spec.seed, nullptr);
    case Shape::S3DHole:
        return detail::generate_s3d(spec.n, spec.noise_sigma, spec.seed, &kDefaultHole);
    }
    throw std::invalid_argument("unknown shape");
}

Dataset random_cloud(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 1) {
        throw std::invalid_argument("random cloud needs n >= 1 and d >= 1");
    }
    SplitMix64 rng(seed);
    Matrix points(n, d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) {
            points(i, j) = rng.uniform01();
        }
    }
    return Dataset(std::move(points));
}

} // namespace unn
