#pragma once

#include "assoc/graph.hpp"
#include "assoc/tsp.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace assoc {

/// Bounded-support point sampler. Identical seed, dimension, and draw
/// count produce a bit-identical sample set.
class Sampler {
public:
    static Sampler uniform_cube(int dim, double side, uint64_t seed);
    static Sampler gaussian_truncated(int dim, double sigma, double cube_side, uint64_t seed);
    static Sampler mixture(std::vector<std::pair<double, Sampler>> parts, uint64_t seed);

    /// Draws n points; the stream is derived from (seed, n) so equal-n
    /// draws from samplers sharing a seed are pairable.
    std::vector<Eigen::VectorXd> sample(int n) const;

    int dim() const { return dim_; }
    uint64_t seed() const { return seed_; }

private:
    enum class Kind { UniformCube, GaussianTruncated, Mixture };
    Sampler(Kind k, int dim, uint64_t seed) : kind_(k), dim_(dim), seed_(seed) {}
    Eigen::VectorXd draw_one(class SplitMix64& rng) const;

    Kind kind_;
    int dim_ = 0;
    uint64_t seed_ = 0;
    double side_ = 1.0;   // cube side (uniform) / truncation cube side (gaussian)
    double sigma_ = 1.0;
    std::vector<std::pair<double, std::shared_ptr<const Sampler>>> parts_;
};

struct RatioEntry {
    int n;
    double length;  // L_n
    double ratio;   // L_n / n^((d-1)/d)
};

struct RatioSeries {
    int d = 0;
    TourMode mode = TourMode::Heuristic;
    std::vector<RatioEntry> entries;
};

/// Tour-length growth series for the BHH normalization L_n / n^((d-1)/d).
RatioSeries bhh_ratio_series(const Sampler& sampler, const std::vector<int>& ns, TourMode mode);

struct BetaCalibration {
    int d = 0;
    double beta_hat = 0.0;
    int n = 0;
    int trials = 0;
    double std_error = 0.0;
};

/// Estimates the tour-length constant on uniform unit-cube samples, where
/// the density integral is 1 and the normalized ratio estimates the
/// constant directly. Trial i draws from seed ^ i.
BetaCalibration calibrate_beta(int d, int n, int trials, uint64_t seed,
                               TourMode mode = TourMode::Heuristic);

struct EntropyEstimate {
    double gamma = 0.0;  // (d-1)/d
    double h_hat = 0.0;
    int n = 0;
    double beta_used = 0.0;
};

/// Renyi-entropy estimate from a tour length:
/// h = (1/(1-gamma)) * (ln(L_n / n^gamma) - ln beta), gamma = (d-1)/d.
EntropyEstimate estimate_renyi_entropy(const std::vector<Eigen::VectorXd>& points, double beta,
                                       TourMode mode = TourMode::Heuristic);

/// Closed-form Renyi entropy of a uniform density over volume V: ln V
/// (the same value for every order gamma).
double renyi_entropy_uniform(double volume);

struct NoveltyStep {
    NodeId from, to;
    double weight = 0.0;
    EdgeKind kind = EdgeKind::Direct;
    std::string justification;
};

struct NoveltyReport {
    double score = 0.0;  // optimal path weight
    HamiltonianPath path;
    bool augmentation_used = false;
    std::vector<NoveltyStep> per_step;
};

/// Novelty of an artifact: the optimal associative-path weight through
/// its (connectivity- and traceability-repaired) subgraph.
NoveltyReport tsp_novelty(const WeightedGraph& k, const std::set<NodeId>& components,
                          bool allow_augmentation = true);

}  // namespace assoc
