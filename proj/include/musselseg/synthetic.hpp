#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "musselseg/image.hpp"
#include "musselseg/types.hpp"

namespace musselseg {

/// 2-D Gaussian blob sample: isotropic blobs around each center plus uniform
/// noise over the centers' bounding box inflated by 3 sigma.
struct BlobSpec {
    std::vector<std::array<double, 2>> centers = {{0.0, 0.0}, {10.0, 0.0}, {5.0, 8.0}};
    double sigma = 1.0;
    int points_per_blob = 150;
    int noise_points = 50;
    std::uint64_t seed = 0;
};

/// Deterministic per seed; rows are blob 0 points, blob 1 points, ..., then
/// the noise points.
FeatureDataset gen_blobs(const BlobSpec& spec);

/// 120x120 black image with three 30x30 squares: red at (15,15), green at
/// (75,15), blue at (45,75). Exactly four distinct colors.
ImageRgb8 gen_rgb_squares();

/// 180x120 white image with six 30x30 squares on a 2x3 grid of 60x60 cells,
/// each square offset 10 pixels into its cell: red, green, blue / orange
/// (255,165,0), yellow, purple (128,0,128). Exactly seven distinct colors.
ImageRgb8 gen_six_colors();

}  // namespace musselseg
