#include "unn/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace unn {

namespace {

// viridis sampled at 8 equidistant stops
constexpr std::array<std::array<double, 3>, 8> kRampStops = {{
    {0x44 / 255.0, 0x01 / 255.0, 0x54 / 255.0},
    {0x46 / 255.0, 0x32 / 255.0, 0x7e / 255.0},
    {0x36 / 255.0, 0x5c / 255.0, 0x8d / 255.0},
    {0x27 / 255.0, 0x7f / 255.0, 0x8e / 255.0},
    {0x1f / 255.0, 0xa1 / 255.0, 0x87 / 255.0},
    {0x4a / 255.0, 0xc1 / 255.0, 0x6d / 255.0},
    {0xa0 / 255.0, 0xda / 255.0, 0x39 / 255.0},
    {0xfd / 255.0, 0xe7 / 255.0, 0x25 / 255.0},
}};

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kPointRadius = 3.0;

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

std::string fill_color(double t) {
    const std::array<double, 3> rgb = color_ramp(t);
    // fractional percentages keep adjacent slots distinguishable
    return fmt("rgb(%.4f%%,%.4f%%,%.4f%%)", rgb[0] * 100.0, rgb[1] * 100.0, rgb[2] * 100.0);
}

struct Range {
    double lo = 0.0;
    double hi = 0.0;

    void pad() {
        double span = hi - lo;
        if (span <= 0.0) {
            span = 1.0;
        }
        lo -= 0.05 * span;
        hi += 0.05 * span;
    }
};

} // namespace

double ramp_position(int slot, int m) {
    if (m <= 1) {
        return 0.0;
    }
    return static_cast<double>(slot) / static_cast<double>(m - 1);
}

std::array<double, 3> color_ramp(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const double x = t * static_cast<double>(kRampStops.size() - 1);
    const std::size_t i = std::min(static_cast<std::size_t>(x), kRampStops.size() - 2);
    const double f = x - static_cast<double>(i);
    std::array<double, 3> out{};
    for (std::size_t c = 0; c < 3; ++c) {
        out[c] = kRampStops[i][c] + f * (kRampStops[i + 1][c] - kRampStops[i][c]);
    }
    return out;
}

std::string plot_embedding(const Dataset& data, const LatentOrdering& ordering,
                           const std::vector<int>& dims) {
    const int n = static_cast<int>(data.size());
    if (data.dim() < 2) {
        throw std::invalid_argument("plotting needs at least two data dimensions");
    }
    if (dims.size() != 2 && dims.size() != 3) {
        throw std::invalid_argument("choose two or three axes to plot");
    }
    for (const int axis : dims) {
        if (axis < 0 || axis >= data.dim()) {
            throw std::invalid_argument("axis index " + std::to_string(axis) + " out of range [0, " +
                                        std::to_string(data.dim()) + ")");
        }
    }
    if (!ordering.is_complete_for(n)) {
        throw std::invalid_argument("ordering must embed every pattern");
    }

    // project to the plane
    std::vector<double> px(static_cast<std::size_t>(n));
    std::vector<double> py(static_cast<std::size_t>(n));
    const double cos30 = std::sqrt(3.0) / 2.0;
    for (int i = 0; i < n; ++i) {
        const double x = data.patterns()(i, dims[0]);
        const double y = data.patterns()(i, dims[1]);
        if (dims.size() == 2) {
            px[i] = x;
            py[i] = y;
        } else {
            const double z = data.patterns()(i, dims[2]);
            px[i] = (x - y) * cos30;
            py[i] = (x + y) * 0.5 + z;
        }
    }

    Range rx{*std::min_element(px.begin(), px.end()), *std::max_element(px.begin(), px.end())};
    Range ry{*std::min_element(py.begin(), py.end()), *std::max_element(py.begin(), py.end())};
    rx.pad();
    ry.pad();

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" "
               "height=\"%.0f\" viewBox=\"0 0 %.0f 480\">\n",
               kWidth, kHeight, kWidth);
    svg += "<desc>latent-order scatter; colormap=viridis8-lerp; axes=";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i > 0) {
            svg += ',';
        }
        svg += std::to_string(dims[i]);
    }
    if (dims.size() == 3) {
        svg += "; projection=isometric";
    }
    svg += "</desc>\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int i = 0; i < n; ++i) {
        const double cx = (px[i] - rx.lo) / (rx.hi - rx.lo) * kWidth;
        const double cy = kHeight - (py[i] - ry.lo) / (ry.hi - ry.lo) * kHeight; // SVG y runs down
        const double t = ramp_position(ordering.slot_of(i), n);
        svg += fmt("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"", cx, cy, kPointRadius);
        svg += fill_color(t);
        svg += "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace unn
