#include "assoc/novelty.hpp"

#include "assoc/errors.hpp"
#include "assoc/graph_algorithms.hpp"
#include "assoc/rng.hpp"

#include <algorithm>
#include <cmath>

namespace assoc {

Sampler Sampler::uniform_cube(int dim, double side, uint64_t seed) {
    if (dim < 1) throw Error("sampler dimension must be positive");
    if (!(side > 0.0)) throw Error("cube side must be positive");
    Sampler s(Kind::UniformCube, dim, seed);
    s.side_ = side;
    return s;
}

Sampler Sampler::gaussian_truncated(int dim, double sigma, double cube_side, uint64_t seed) {
    if (dim < 1) throw Error("sampler dimension must be positive");
    if (!(sigma > 0.0) || !(cube_side > 0.0)) throw Error("sigma and cube side must be positive");
    Sampler s(Kind::GaussianTruncated, dim, seed);
    s.sigma_ = sigma;
    s.side_ = cube_side;
    return s;
}

Sampler Sampler::mixture(std::vector<std::pair<double, Sampler>> parts, uint64_t seed) {
    if (parts.empty()) throw Error("mixture needs at least one part");
    Sampler s(Kind::Mixture, parts.front().second.dim(), seed);
    double total = 0.0;
    for (auto& [w, part] : parts) {
        if (!(w > 0.0)) throw Error("mixture weights must be positive");
        if (part.dim() != s.dim_) throw Error("mixture parts must share a dimension");
        total += w;
        s.parts_.emplace_back(w, std::make_shared<Sampler>(std::move(part)));
    }
    for (auto& [w, part] : s.parts_) w /= total;
    return s;
}

Eigen::VectorXd Sampler::draw_one(SplitMix64& rng) const {
    Eigen::VectorXd v(dim_);
    switch (kind_) {
        case Kind::UniformCube:
            for (int i = 0; i < dim_; ++i) v[i] = side_ * rng.next_double();
            return v;
        case Kind::GaussianTruncated: {
            const double half = side_ / 2.0;
            for (;;) {  // rejection keeps the support bounded
                bool inside = true;
                for (int i = 0; i < dim_; ++i) {
                    v[i] = sigma_ * rng.next_gaussian();
                    if (std::abs(v[i]) > half) inside = false;
                }
                if (inside) return v;
            }
        }
        case Kind::Mixture: {
            const double u = rng.next_double();
            double acc = 0.0;
            for (const auto& [w, part] : parts_) {
                acc += w;
                if (u < acc) return part->draw_one(rng);
            }
            return parts_.back().second->draw_one(rng);
        }
    }
    throw Error("unreachable sampler kind");
}

std::vector<Eigen::VectorXd> Sampler::sample(int n) const {
    if (n < 0) throw Error("sample count must be non-negative");
    SplitMix64 rng(seed_ ^ (0x9E3779B97F4A7C15ull * uint64_t(n)));
    std::vector<Eigen::VectorXd> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(draw_one(rng));
    return out;
}

RatioSeries bhh_ratio_series(const Sampler& sampler, const std::vector<int>& ns, TourMode mode) {
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (ns[i] <= ns[i - 1]) throw Error("sample sizes must be strictly increasing");

    RatioSeries series;
    series.d = sampler.dim();
    series.mode = mode;
    const double exponent = double(sampler.dim() - 1) / double(sampler.dim());
    for (int n : ns) {
        const auto points = sampler.sample(n);
        const Tour tour = solve_tour(points, mode);
        series.entries.push_back({n, tour.length, tour.length / std::pow(double(n), exponent)});
    }
    return series;
}

BetaCalibration calibrate_beta(int d, int n, int trials, uint64_t seed, TourMode mode) {
    if (d < 2) throw Error("calibration needs dimension >= 2");
    if (n < 32) throw Error("calibration needs n >= 32");
    if (trials < 5) throw Error("calibration needs at least 5 trials");

    const double exponent = double(d - 1) / double(d);
    const double norm = std::pow(double(n), exponent);
    std::vector<double> ratios;
    ratios.reserve(trials);
    for (int i = 0; i < trials; ++i) {
        const Sampler trial = Sampler::uniform_cube(d, 1.0, seed ^ uint64_t(i));
        ratios.push_back(solve_tour(trial.sample(n), mode).length / norm);
    }
    double mean = 0.0;
    for (double r : ratios) mean += r;
    mean /= trials;
    double var = 0.0;
    for (double r : ratios) var += (r - mean) * (r - mean);
    const double stddev = trials > 1 ? std::sqrt(var / (trials - 1)) : 0.0;

    return BetaCalibration{d, mean, n, trials, stddev / std::sqrt(double(trials))};
}

EntropyEstimate estimate_renyi_entropy(const std::vector<Eigen::VectorXd>& points, double beta,
                                       TourMode mode) {
    const int n = static_cast<int>(points.size());
    if (n < 8) throw Error("entropy estimation needs at least 8 points");
    if (!(beta > 0.0)) throw Error("beta must be positive");

    const int d = static_cast<int>(points[0].size());
    const double gamma = double(d - 1) / double(d);
    const double length = solve_tour(points, mode).length;
    const double h =
        (1.0 / (1.0 - gamma)) * (std::log(length / std::pow(double(n), gamma)) - std::log(beta));
    return EntropyEstimate{gamma, h, n, beta};
}

double renyi_entropy_uniform(double volume) {
    if (!(volume > 0.0)) throw Error("volume must be positive");
    return std::log(volume);
}

NoveltyReport tsp_novelty(const WeightedGraph& k, const std::set<NodeId>& components,
                          bool allow_augmentation) {
    AugmentedGraph g = induce_subgraph(k, components);
    NoveltyReport report;
    if (components.size() == 1) {
        report.path = HamiltonianPath{{*components.begin()}, 0.0, {}};
        return report;
    }
    if (allow_augmentation) g = connect_components(std::move(g));

    UnionView view = union_view(g);
    if (!is_traceable(view).traceable) {
        if (!allow_augmentation)
            throw NotTraceableError("induced subgraph is not traceable and augmentation is off");
        g = hamiltonian_augment(std::move(g));
        view = union_view(g);
    }

    report.path = solve_path(view);
    report.score = report.path.total_weight;
    for (std::size_t t = 1; t < report.path.sequence.size(); ++t) {
        const StepInfo step = describe_step(g, report.path.sequence[t - 1], report.path.sequence[t]);
        if (step.kind == EdgeKind::Collapsed) report.augmentation_used = true;
        report.per_step.push_back({report.path.sequence[t - 1], report.path.sequence[t],
                                   step.weight, step.kind, step.justification});
    }
    return report;
}

}  // namespace assoc
