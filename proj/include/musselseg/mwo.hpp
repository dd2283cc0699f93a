#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "musselseg/evaluation.hpp"
#include "musselseg/types.hpp"

namespace musselseg {

/// One candidate solution: k_max rows of (dim feature coordinates + one
/// activation), a levy step length, and the latest fitness evaluation.
struct Mussel {
    std::vector<double> position;      // k_max x (dim+1), row-major
    std::optional<double> fitness;     // empty = needs re-evaluation
    double levy = 1.0;
    std::optional<Partition> cached;   // partition of the evaluation dataset
    int id = 0;                        // stable identity for sorting and rng keys
};

struct TraceRecord {
    int iteration = 0;
    double best_rf = 0.0;
    double best_db = 0.0;  // +inf while the best solution is degenerate
    int best_k = 0;
};

struct ConvergenceTrace {
    std::vector<TraceRecord> records;
};

struct ClusteringResult {
    std::vector<std::int32_t> labels;  // full dataset, row-major
    std::vector<double> centers;       // k_eff x dim, the retained activated centers
    std::size_t k_eff = 0;
    double rf = 0.0;                   // recomputed on the full dataset
    double db = 0.0;                   // +inf when k_eff < 2
    bool degenerate = false;           // k_eff < 2: rf/db carry the worst sentinel
    int iterations = 0;
    double wall_ms = 0.0;
    std::uint64_t seed = 0;
};

/// Step length L = min(gamma * (1-u)^(-1/(mu-1)), levy_cap), in [gamma, levy_cap].
/// u must lie in [0, 1).
double draw_levy(double u, double gamma, double mu, double levy_cap);

/// Guarantees at least two activations >= threshold: when fewer, the two
/// largest activations (ties to the lowest row) are replaced by draws from
/// [threshold, 1]. unit_draw(row) must return a uniform value in [0, 1).
void enforce_activation_floor(std::span<double> position, std::size_t k_max,
                              std::size_t dim, double threshold,
                              const std::function<double(std::size_t)>& unit_draw);

/// Feature rows whose activation meets the threshold, in row order (k x dim).
std::vector<double> active_centers(std::span<const double> position,
                                   std::size_t k_max, std::size_t dim,
                                   double threshold);

std::vector<Mussel> init_population(const MwoConfig& config, const SearchBounds& bounds);

/// Clusters the dataset around the mussel's active centers and stores the
/// fitness (rf) and partition on the mussel.
void evaluate(Mussel& mussel, const FeatureDataset& dataset, double threshold);

/// Element-wise mean position of the first t_top mussels.
std::vector<double> top_mean(std::span<const Mussel> sorted_mussels, int t_top);

/// P' = P + L * (P_t - P), then clamp and activation floor. Invalidates the
/// stored fitness.
void update_step(Mussel& mussel, std::span<const double> elite_mean, double levy,
                 const SearchBounds& bounds, double threshold,
                 const std::function<double(std::size_t)>& floor_draw);

/// Test/diagnostic hook invoked after each iteration's evaluation and sort.
using IterationObserver =
    std::function<void(int iteration, const std::vector<Mussel>& sorted_population)>;

struct RunOutput {
    ClusteringResult result;
    ConvergenceTrace trace;
};

/// Full optimization run. Fitness is evaluated on a seed-deterministic
/// subsample when the dataset exceeds config.subsample_cap; the returned
/// labels, rf and db always cover the full dataset. Deterministic for a fixed
/// (dataset, config) regardless of thread count.
RunOutput run_clustering(const FeatureDataset& dataset, const MwoConfig& config,
                         const DbParams& db_params = {},
                         const IterationObserver& observer = {});

}  // namespace musselseg
