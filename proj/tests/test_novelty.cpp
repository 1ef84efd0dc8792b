#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "assoc/errors.hpp"
#include "assoc/graph_algorithms.hpp"
#include "assoc/novelty.hpp"
#include "assoc/rng.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace assoc;

TEST_CASE("tsp_novelty trivial artifacts") {
    WeightedGraph k;
    k.add_edge("a", "b", 0.7);
    k.add_edge("b", "c", 0.2);

    const NoveltyReport single = tsp_novelty(k, {"a"});
    CHECK(single.score == 0.0);
    CHECK(single.path.sequence == std::vector<NodeId>{"a"});
    CHECK(single.per_step.empty());

    const NoveltyReport pair = tsp_novelty(k, {"a", "b"});
    CHECK(pair.score == 0.7);
    CHECK_FALSE(pair.augmentation_used);
    REQUIRE(pair.per_step.size() == 1);
    CHECK(pair.per_step[0].weight == 0.7);
}

TEST_CASE("tsp_novelty equals the permutation oracle on a 5-node fixture") {
    WeightedGraph k;
    k.add_edge("a", "b", 0.3);
    k.add_edge("b", "c", 0.4);
    k.add_edge("c", "d", 0.1);
    k.add_edge("d", "e", 0.6);
    k.add_edge("a", "e", 0.9);
    k.add_edge("b", "d", 0.2);
    k.add_edge("a", "c", 0.8);

    const std::set<NodeId> comps{"a", "b", "c", "d", "e"};
    const NoveltyReport r = tsp_novelty(k, comps);

    AugmentedGraph g = connect_components(induce_subgraph(k, comps));
    const auto all = oracle::all_hamiltonian_paths(union_view(g));
    REQUIRE_FALSE(all.empty());
    CHECK(r.score == all.front().weight);
    CHECK(r.path.sequence == all.front().sequence);
    double step_sum = 0.0;
    for (const auto& s : r.per_step) step_sum += s.weight;
    CHECK(step_sum == doctest::Approx(r.score).epsilon(1e-12));
}

TEST_CASE("tsp_novelty with augmentation disabled throws on non-traceable artifacts") {
    WeightedGraph k;  // star plus leaf-leaf detours in the parent
    k.add_edge("c", "l1", 1.0);
    k.add_edge("c", "l2", 1.0);
    k.add_edge("c", "l3", 1.0);
    k.add_edge("l1", "m", 0.4);
    k.add_edge("m", "l2", 0.4);
    k.add_edge("l2", "m2", 0.4);
    k.add_edge("m2", "l3", 0.4);

    CHECK_THROWS_AS(tsp_novelty(k, {"c", "l1", "l2", "l3"}, false), NotTraceableError);
    const NoveltyReport r = tsp_novelty(k, {"c", "l1", "l2", "l3"}, true);
    CHECK(r.augmentation_used);
    CHECK(r.score > 0.0);
}

TEST_CASE("tsp_novelty is invariant under node relabeling") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 15; ++trial) {
        const WeightedGraph g = oracle::random_graph(7, 0.8, rng);
        WeightedGraph relabeled;
        auto rename = [](const NodeId& n) { return "z_" + n; };
        for (const auto& n : g.nodes()) relabeled.add_node(rename(n));
        for (const auto& [key, data] : g.edges())
            relabeled.add_edge(rename(key.first), rename(key.second), data.weight);

        std::set<NodeId> comps, comps2;
        std::vector<NodeId> nodes(g.nodes().begin(), g.nodes().end());
        for (int i = 0; i < 5; ++i) {
            comps.insert(nodes[i]);
            comps2.insert(rename(nodes[i]));
        }
        try {
            const double a = tsp_novelty(g, comps).score;
            const double b = tsp_novelty(relabeled, comps2).score;
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
        } catch (const Error&) {
        }
    }
}

TEST_CASE("adding an edge to K never increases the novelty score") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        WeightedGraph g = oracle::random_graph(6, 1.1, rng);
        std::vector<NodeId> nodes(g.nodes().begin(), g.nodes().end());
        const std::set<NodeId> comps{nodes[0], nodes[1], nodes[2], nodes[3]};
        const double before = tsp_novelty(g, comps).score;

        // tighten one random existing pair
        const NodeId a = nodes[rng.next_u64() % nodes.size()];
        NodeId b = nodes[rng.next_u64() % nodes.size()];
        if (a == b) continue;
        const EdgeData* e = g.find_edge(a, b);
        g.add_edge(a, b, e ? e->weight * 0.5 : 0.01);
        const double after = tsp_novelty(g, comps).score;
        CHECK(after <= before + 1e-12);
    }
}

TEST_CASE("sampler determinism and bounded support") {
    const auto s = Sampler::uniform_cube(2, 1.0, 7);
    const auto a = s.sample(50);
    const auto b = s.sample(50);
    REQUIRE(a.size() == 50);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK((a[i] - b[i]).cwiseAbs().maxCoeff() == 0.0);  // bit-identical
        CHECK(a[i].minCoeff() >= 0.0);
        CHECK(a[i].maxCoeff() < 1.0);
    }

    const auto g = Sampler::gaussian_truncated(3, 1.0, 2.0, 9);
    for (const auto& p : g.sample(200)) CHECK(p.cwiseAbs().maxCoeff() <= 1.0);

    const auto mix = Sampler::mixture(
        {{0.5, Sampler::uniform_cube(2, 1.0, 1)}, {0.5, Sampler::uniform_cube(2, 0.5, 2)}}, 11);
    const auto m1 = mix.sample(40);
    const auto m2 = mix.sample(40);
    REQUIRE(m1.size() == m2.size());
    for (std::size_t i = 0; i < m1.size(); ++i)
        CHECK((m1[i] - m2[i]).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("scaling the sampler scales tour lengths exactly") {
    const auto unit = Sampler::uniform_cube(2, 1.0, 5);
    const auto scaled = Sampler::uniform_cube(2, 2.5, 5);
    const RatioSeries a = bhh_ratio_series(unit, {16, 64}, TourMode::Heuristic);
    const RatioSeries b = bhh_ratio_series(scaled, {16, 64}, TourMode::Heuristic);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        CHECK(b.entries[i].length == doctest::Approx(2.5 * a.entries[i].length).epsilon(1e-12));
}

TEST_CASE("bhh_ratio_series validates input and fills entries") {
    const auto s = Sampler::uniform_cube(2, 1.0, 3);
    CHECK_THROWS_AS(bhh_ratio_series(s, {64, 64}, TourMode::Heuristic), Error);
    const RatioSeries r = bhh_ratio_series(s, {8, 16, 32}, TourMode::Heuristic);
    REQUIRE(r.entries.size() == 3);
    for (const auto& e : r.entries) {
        CHECK(e.ratio == doctest::Approx(e.length / std::sqrt(double(e.n))).epsilon(1e-12));
        CHECK(e.ratio >= 0.0);
    }
    CHECK_THROWS_AS(bhh_ratio_series(s, {20}, TourMode::Exact), TooLargeForExactError);
}

TEST_CASE("calibrate_beta determinism and plausible 2-D value") {
    const BetaCalibration a = calibrate_beta(2, 256, 8, 17);
    const BetaCalibration b = calibrate_beta(2, 256, 8, 17);
    CHECK(a.beta_hat == b.beta_hat);
    CHECK(a.std_error == b.std_error);
    CHECK(a.beta_hat > 0.6);
    CHECK(a.beta_hat < 0.9);
    CHECK(a.std_error >= 0.0);
}

TEST_CASE("renyi_entropy_uniform closed form") {
    CHECK(renyi_entropy_uniform(1.0) == 0.0);
    CHECK(renyi_entropy_uniform(4.0) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(renyi_entropy_uniform(0.25) == doctest::Approx(-std::log(4.0)).epsilon(1e-12));
    CHECK_THROWS_AS(renyi_entropy_uniform(0.0), Error);
}

TEST_CASE("entropy estimator shift identity: scaling points adds d ln a") {
    const auto pts = Sampler::uniform_cube(2, 1.0, 23).sample(64);
    for (double a : {0.5, 2.0, 7.5}) {
        std::vector<Eigen::VectorXd> scaled;
        for (const auto& p : pts) scaled.push_back(a * p);
        const double h0 = estimate_renyi_entropy(pts, 0.7, TourMode::Heuristic).h_hat;
        const double h1 = estimate_renyi_entropy(scaled, 0.7, TourMode::Heuristic).h_hat;
        CHECK(std::abs((h1 - h0) - 2.0 * std::log(a)) < 1e-9);
    }
}

TEST_CASE("entropy estimator beta dependence: factor b shifts by -d ln b") {
    const auto pts = Sampler::uniform_cube(3, 1.0, 29).sample(48);
    const double h0 = estimate_renyi_entropy(pts, 0.7, TourMode::Heuristic).h_hat;
    for (double b : {1.5, 4.0}) {
        const double h1 = estimate_renyi_entropy(pts, 0.7 * b, TourMode::Heuristic).h_hat;
        // 1/(1-gamma) = d = 3
        CHECK(std::abs((h0 - h1) - 3.0 * std::log(b)) < 1e-9);
    }
}

TEST_CASE("self-calibrated entropy of the unit square is near zero") {
    const BetaCalibration cal = calibrate_beta(2, 128, 10, 31);
    double mean = 0.0;
    const int trials = 10;
    for (int t = 0; t < trials; ++t) {
        const auto pts = Sampler::uniform_cube(2, 1.0, 1000 + t).sample(128);
        mean += estimate_renyi_entropy(pts, cal.beta_hat, TourMode::Heuristic).h_hat;
    }
    mean /= trials;
    CHECK(std::abs(mean) < 0.15);
}
