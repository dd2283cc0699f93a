#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace musselseg {

/// 8-bit interleaved RGB, row-major from the top-left pixel.
struct ImageRgb8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    static ImageRgb8 filled(int width, int height, std::array<std::uint8_t, 3> color);

    std::uint8_t* pixel(int x, int y) {
        return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    const std::uint8_t* pixel(int x, int y) const {
        return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    void fill_rect(int x0, int y0, int w, int h, std::array<std::uint8_t, 3> color);

    bool operator==(const ImageRgb8&) const = default;
};

// Binary PPM (P6, maxval 255). The encoding is byte-stable so tests can
// assert on file contents.
std::vector<std::uint8_t> encode_ppm(const ImageRgb8& image);
ImageRgb8 decode_ppm(std::span<const std::uint8_t> bytes);

// PNG, 8-bit RGB. Gray/palette/alpha inputs are expanded to RGB on decode.
std::vector<std::uint8_t> encode_png(const ImageRgb8& image);
ImageRgb8 decode_png(std::span<const std::uint8_t> bytes);

/// Reads a PNG or PPM file, sniffing the format from the magic bytes.
ImageRgb8 read_image(const std::string& path);

/// Writes PNG or PPM depending on the file extension (.png / .ppm).
void write_image(const ImageRgb8& image, const std::string& path);

enum class RenderStyle {
    gray_labels,  // cluster i -> gray round(255*i/(k-1)); k=1 -> uniform 128
    mean_color,   // each pixel painted with its cluster's mean source color
};
RenderStyle parse_render_style(std::string_view name);

/// Paints a label map (row-major, length width*height) as an image.
/// `source` is required for mean_color and ignored for gray_labels.
ImageRgb8 render_segmentation(int width, int height,
                              std::span<const std::int32_t> labels,
                              const ImageRgb8* source, RenderStyle style);

}  // namespace musselseg
