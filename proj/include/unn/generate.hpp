#pragma once

#include <cstdint>

#include "unn/dataset.hpp"

namespace unn {

enum class Shape {
    S2D,    // noisy S curve in the plane
    S3D,    // S-curve surface: the same curve swept along a uniform height
    S3DHole // S3D with a rectangular patch of the parameter space removed
};

struct GenSpec {
    Shape shape = Shape::S2D;
    int n = 200;
    double noise_sigma = 0.05;
    std::uint64_t seed = 0;
};

// Excluded (t, height) parameter rectangle for the hole variant.
struct HoleRect {
    double t_min;
    double t_max;
    double h_min;
    double h_max;
};

// Rectangle cut from the middle of the S surface.
inline constexpr HoleRect kDefaultHole{-0.78539816339744831, 0.78539816339744831, 0.67, 1.33};

// Deterministic synthetic benchmark data. The S curve is
// (sin t, sgn(t) * (cos t - 1)) with t uniform on [-3pi/2, 3pi/2]; the 3-D
// variants add an independent height coordinate uniform on [0, 2] as the
// second axis. Isotropic Gaussian noise of the configured sigma is added
// after the manifold point is accepted.
Dataset generate(const GenSpec& spec);

// Uniform cloud on [0,1)^d, seeded. Used by the runtime benchmarks, which
// need arbitrary dimensionality.
Dataset random_cloud(int n, int d, std::uint64_t seed);

namespace detail {

// Hole-variant generator with an explicit rejection rectangle; rejection
// gives up after 1000*n draws with a GenerationError.
Dataset generate_s3d(int n, double noise_sigma, std::uint64_t seed, const HoleRect* hole);

} // namespace detail

} // namespace unn
