#pragma once

#include <cstdint>

#include "musselseg/types.hpp"

namespace musselseg {

/// Orders of the Davies-Bouldin index: q for the within-cluster scatter,
/// t for the Minkowski distance between centers. Both >= 1.
struct DbParams {
    int q_order = 2;
    int t_order = 2;
};

/// Centers closer than this are treated as coincident; the affected ratio
/// becomes the worst sentinel instead of a division by zero.
inline constexpr double kCoincidentCenters = 1e-12;

/// S = ((1/n) sum |x - center|_2^q)^(1/q) over an n x dim flat point block.
double cluster_scatter(std::span<const double> points, std::size_t dim,
                       std::span<const double> center, int q_order);

/// Minkowski-t norm of a - b.
double center_distance(std::span<const double> a, std::span<const double> b,
                       int t_order);

/// Davies-Bouldin index of a partition with k_eff >= 2 clusters; smaller is
/// better. Coincident centers make the result the worst sentinel (+inf).
double db_index(const FeatureDataset& dataset, const Partition& partition,
                const DbParams& params = {});

/// Plain Lloyd k-means used as a fixed-k benchmark baseline. Centers start at
/// k distinct data points sampled without replacement; an emptied cluster is
/// re-seeded from the point farthest from its assigned center; the best of
/// `restarts` runs by within-class sum of squares wins. Deterministic per seed.
Partition kmeans_baseline(const FeatureDataset& dataset, int k, int restarts,
                          int max_iter, std::uint64_t seed);

}  // namespace musselseg
