#pragma once

#include <cstddef>
#include <vector>

namespace twu {

// Row-major grayscale raster. Values are real intensities in whatever units
// the source uses; they only have to be finite.
struct ImageRaster {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> pixels;  // height * width, row-major

    ImageRaster() = default;
    ImageRaster(std::size_t h, std::size_t w);                        // zero-filled
    ImageRaster(std::size_t h, std::size_t w, std::vector<double> px);

    double& at(std::size_t y, std::size_t x) { return pixels[y * width + x]; }
    double at(std::size_t y, std::size_t x) const { return pixels[y * width + x]; }
    std::size_t size() const { return height * width; }
};

}  // namespace twu
