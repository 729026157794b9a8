#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "toda/error.hpp"

namespace toda {

/// Deterministic sampling grid in the upper half plane: re_count real parts
/// uniform in [re_min, re_max] crossed with im_count imaginary parts
/// log-uniform in [im_min, im_max].  Point order is real-part major, so
/// first-witness reporting is reproducible.
struct SampleGrid {
    double re_min = -10.0;
    double re_max = 10.0;
    int re_count = 21;
    double im_min = 1e-3;
    double im_max = 1e3;
    int im_count = 25;

    std::vector<std::complex<double>> points() const {
        if (re_count < 1 || im_count < 1 || im_min <= 0.0 || im_max < im_min)
            throw Error(ErrorCode::ArgumentNotInUpperHalfPlane, "invalid sample grid");
        std::vector<std::complex<double>> pts;
        pts.reserve(static_cast<size_t>(re_count) * static_cast<size_t>(im_count));
        for (int i = 0; i < re_count; ++i) {
            double re = re_count == 1
                            ? re_min
                            : re_min + (re_max - re_min) * i / (re_count - 1);
            for (int j = 0; j < im_count; ++j) {
                double im = im_count == 1
                                ? im_min
                                : std::exp(std::log(im_min) +
                                           (std::log(im_max) - std::log(im_min)) * j /
                                               (im_count - 1));
                pts.emplace_back(re, im);
            }
        }
        return pts;
    }
};

}  // namespace toda
