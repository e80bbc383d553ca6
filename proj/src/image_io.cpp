#include <algorithm>
#include <cmath>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include <png.h>

#include "ctk/error.hpp"
#include "ctk/imaging.hpp"

namespace ctk {

Tensor3 load_image(const std::filesystem::path& path) {
    png_image img;
    std::memset(&img, 0, sizeof img);
    img.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&img, path.c_str())) {
        throw IoError("cannot read PNG " + path.string() + ": " + img.message);
    }
    if ((img.format & PNG_FORMAT_FLAG_COLOR) == 0) {
        png_image_free(&img);
        throw IoError(path.string() + ": not an RGB image");
    }
    img.format = PNG_FORMAT_RGB;
    std::vector<png_byte> buf(PNG_IMAGE_SIZE(img));
    if (!png_image_finish_read(&img, nullptr, buf.data(), 0, nullptr)) {
        throw IoError("cannot decode PNG " + path.string() + ": " + img.message);
    }

    const std::size_t w = img.width, h = img.height;
    const std::size_t n = std::min(w, h);
    if (w != h) {
        std::cerr << "warning: " << path.string() << " is " << w << "x" << h
                  << ", center-cropping to " << n << "x" << n << "\n";
    }
    const std::size_t x0 = (w - n) / 2, y0 = (h - n) / 2;
    Tensor3 t(n, n, 3);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const png_byte* px = &buf[3 * ((y0 + i) * w + (x0 + j))];
            for (std::size_t k = 0; k < 3; ++k) t(i, j, k) = px[k] / 255.0;
        }
    }
    return t;
}

void save_image(const Tensor3& t, const std::filesystem::path& path) {
    if (t.tubes() != 3) throw DimensionError("save_image: expected 3 channels, got " + t.dims().to_string());
    const std::size_t h = t.rows(), w = t.cols();
    std::vector<png_byte> buf(3 * w * h);
    for (std::size_t i = 0; i < h; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            for (std::size_t k = 0; k < 3; ++k) {
                const double v = std::clamp(t(i, j, k), 0.0, 1.0);
                buf[3 * (i * w + j) + k] = static_cast<png_byte>(std::lround(v * 255.0));
            }
        }
    }
    png_image img;
    std::memset(&img, 0, sizeof img);
    img.version = PNG_IMAGE_VERSION;
    img.width = static_cast<png_uint_32>(w);
    img.height = static_cast<png_uint_32>(h);
    img.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&img, path.c_str(), 0, buf.data(), 0, nullptr)) {
        throw IoError("cannot write PNG " + path.string() + ": " + img.message);
    }
}

}  // namespace ctk
