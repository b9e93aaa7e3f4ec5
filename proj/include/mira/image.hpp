#pragma once

#include <cstdint>
#include <vector>

namespace mira {

/// 8-bit raster image, row-major, 1 (grayscale) or 3 (RGB) channels.
struct PixelImage {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> data;

    PixelImage() = default;
    PixelImage(int w, int h, int c, std::uint8_t fill = 0);

    bool valid() const;

    std::size_t index(int x, int y, int c = 0) const {
        return (static_cast<std::size_t>(y) * width + x) * channels + c;
    }
    std::uint8_t at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }
    std::uint8_t& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }

    bool same_pixels(const PixelImage& other) const;
};

std::uint8_t luma601(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// BT.601 grayscale conversion; returns the input unchanged if already single-channel.
PixelImage to_luma(const PixelImage& img);

/// Round half-up and clamp to the 8-bit range.
std::uint8_t quantize_u8(double v);

}  // namespace mira
