#pragma once

#include "musselseg/types.hpp"

namespace musselseg {

struct ClassicSums {
    double w = 0.0;  // within-class sum of squares
    double b = 0.0;  // between-class sum of squares
    double t = 0.0;  // total sum of squares, computed directly
};

struct BalancedSums {
    double w = 0.0;  // W' = n_bar * sum_i (1/n_i) sum_j |x_ij - mean_i|^2
    double b = 0.0;  // B' = n_bar * sum_i |mean_i - grand|^2
    double t = 0.0;  // T' = n_bar * sum_i (1/n_i) sum_j |x_ij - grand|^2
};

struct SumOfSquaresReport {
    ClassicSums classic;
    BalancedSums balanced;
};

ClassicSums classic_sums(const FeatureDataset& dataset, const Partition& partition);
BalancedSums balanced_sums(const FeatureDataset& dataset, const Partition& partition);
SumOfSquaresReport sum_of_squares(const FeatureDataset& dataset, const Partition& partition);

/// B' values below this are treated as degenerate rather than divided by.
inline constexpr double kDegenerateBetween = 1e-12;

/// The ratio W'/B'. Returns kWorstFitness when the partition has fewer than
/// two clusters or B' is degenerate, so such solutions sort last instead of
/// crashing the optimizer.
double rf_fitness(const FeatureDataset& dataset, const Partition& partition);

}  // namespace musselseg
