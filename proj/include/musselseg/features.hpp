#pragma once

#include <array>
#include <string_view>

#include "musselseg/image.hpp"
#include "musselseg/types.hpp"

namespace musselseg {

/// Feature spaces for pixels, plus raw CSV passthrough for point data.
enum class FeatureMode { rgbxy, rgb, labxy, lab, raw };

FeatureMode parse_feature_mode(std::string_view name);
std::string_view feature_mode_name(FeatureMode mode);

/// One point per pixel in row-major order. Color channels keep their native
/// scale (RGB in [0,255], CIELAB in its own ranges). Spatial columns are
/// normalized to the color scale and weighted:
///   X = w * 255 * col/(W-1),  Y = w * 255 * row/(H-1)
/// (0 when the image is one pixel wide or tall). With w = 0 the spatial
/// columns carry no information and are dropped entirely, so rgbxy/labxy
/// reduce to rgb/lab.
FeatureDataset image_to_dataset(const ImageRgb8& image, FeatureMode mode,
                                double spatial_weight = 1.0);

/// sRGB (D65) to CIELAB. L in [0,100].
std::array<double, 3> srgb_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b);

struct CsvTable {
    FeatureDataset data;
    bool has_labels = false;         // a trailing "label"/"cluster" column
    std::vector<double> labels;      // parsed but excluded from the features
    std::string label_name;
};

/// Parses a comma-separated table: a header of column names, then numeric
/// rows. A trailing column named "label" or "cluster" (case-insensitive) is
/// kept aside for external scoring. Ragged rows and non-numeric cells raise
/// ParseError naming the line. Blank lines are skipped.
CsvTable csv_to_dataset(std::string_view text);

}  // namespace musselseg
