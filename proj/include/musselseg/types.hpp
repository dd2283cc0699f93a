#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace musselseg {

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n points by d features, row-major, immutable after construction.
/// Every value must be finite.
class FeatureDataset {
public:
    FeatureDataset(std::size_t n, std::size_t d, std::vector<double> values,
                   std::vector<std::string> dim_names);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }
    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * d_, d_};
    }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::string>& dim_names() const { return names_; }

    /// Dataset made of the given rows, in the given order.
    FeatureDataset select_rows(std::span<const std::size_t> rows) const;

private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<double> values_;
    std::vector<std::string> names_;
};

/// Per-dimension search interval, lo[m] <= hi[m].
struct SearchBounds {
    std::vector<double> lo;
    std::vector<double> hi;
    std::size_t dim() const { return lo.size(); }
};

/// Crisp clustering of a dataset: dense labels in [0, k_eff), no empty
/// clusters, and the per-cluster statistics every downstream formula needs.
struct Partition {
    std::vector<std::int32_t> labels;
    std::size_t k_eff = 0;
    std::vector<std::int64_t> counts;
    std::vector<double> cluster_means;  // k_eff x d, row-major
    std::vector<double> grand_mean;     // d
    double n_bar = 0.0;                 // n / k_eff

    std::span<const double> mean_of(std::size_t cluster) const {
        const std::size_t d = grand_mean.size();
        return {cluster_means.data() + cluster * d, d};
    }
};

/// All run parameters for the optimizer. top_count 0 means "derive from
/// population" (one tenth, rounded up).
struct MwoConfig {
    int population = 50;
    int k_max = 15;
    int top_count = 0;
    double gamma = 1.0;
    double mu = 2.0;
    double activation_threshold = 0.5;
    int max_iter = 200;
    std::uint64_t seed = 0;
    std::int64_t subsample_cap = 16384;
    double levy_cap = 2.0;
    bool levy_resample = true;
    int stagnation_window = 0;  // 0 = disabled

    int resolved_top() const {
        if (top_count > 0) return top_count;
        return population >= 10 ? (population + 9) / 10 : 1;
    }

    /// Throws ConfigError naming the violated rule.
    void validate() const;
};

SearchBounds compute_bounds(const FeatureDataset& dataset);

/// Clips every feature coordinate of a k_max x (dim+1) position matrix into
/// its bound interval and every activation (last column) into [0, 1].
/// Idempotent.
void clamp_position(std::span<double> position, std::size_t k_max,
                    std::size_t dim, const SearchBounds& bounds);

/// Builds a Partition from dense labels already known to have no empty
/// cluster. Validates and computes counts, means, grand mean, n_bar.
Partition partition_from_labels(const FeatureDataset& dataset,
                                std::vector<std::int32_t> labels,
                                std::size_t k_eff);

/// Result of nearest-center assignment: the partition plus the subset of the
/// input centers that actually attracted points (original coordinates, in
/// original order).
struct AssignOutcome {
    Partition partition;
    std::vector<double> kept_centers;  // partition.k_eff x d
};

/// Labels each point with its Euclidean-nearest center (ties to the lowest
/// center index), drops centers that attract no points, and re-indexes labels
/// densely. May parallelize over points; the result does not depend on the
/// thread count.
AssignOutcome assign_and_keep(const FeatureDataset& dataset,
                              std::span<const double> centers, std::size_t k);

Partition assign_to_centers(const FeatureDataset& dataset,
                            std::span<const double> centers, std::size_t k);

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) {
        const double diff = a[m] - b[m];
        s += diff * diff;
    }
    return s;
}

inline constexpr double kWorstFitness = std::numeric_limits<double>::infinity();

}  // namespace musselseg
