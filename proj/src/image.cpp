#include "mira/image.hpp"

#include <cmath>
#include <stdexcept>

namespace mira {

PixelImage::PixelImage(int w, int h, int c, std::uint8_t fill) : width(w), height(h), channels(c) {
    if (w < 1 || h < 1) throw std::invalid_argument("PixelImage dimensions must be >= 1");
    if (c != 1 && c != 3) throw std::invalid_argument("PixelImage channels must be 1 or 3");
    data.assign(static_cast<std::size_t>(w) * h * c, fill);
}

bool PixelImage::valid() const {
    return width >= 1 && height >= 1 && (channels == 1 || channels == 3) &&
           data.size() == static_cast<std::size_t>(width) * height * channels;
}

bool PixelImage::same_pixels(const PixelImage& other) const {
    return width == other.width && height == other.height && channels == other.channels &&
           data == other.data;
}

std::uint8_t quantize_u8(double v) {
    if (!(v > 0.0)) return 0;  // also catches NaN
    if (v >= 255.0) return 255;
    return static_cast<std::uint8_t>(std::floor(v + 0.5));
}

std::uint8_t luma601(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return quantize_u8(0.299 * r + 0.587 * g + 0.114 * b);
}

PixelImage to_luma(const PixelImage& img) {
    if (img.channels == 1) return img;
    PixelImage out(img.width, img.height, 1);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            out.at(x, y) = luma601(img.at(x, y, 0), img.at(x, y, 1), img.at(x, y, 2));
        }
    }
    return out;
}

}  // namespace mira
