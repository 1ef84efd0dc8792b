#pragma once

#include "assoc/graph.hpp"

#include <Eigen/Core>

#include <set>
#include <vector>

namespace assoc {

/// A Hamiltonian path in canonical orientation: the first endpoint is
/// lexicographically <= the last, so a path and its reverse are one value.
struct HamiltonianPath {
    std::vector<NodeId> sequence;
    double total_weight = 0.0;
    std::vector<EdgeKind> edge_kinds;  // one per step

    bool operator==(const HamiltonianPath& o) const { return sequence == o.sequence; }
};

/// Edge sets steering a constrained solve; used by the k-best partition.
struct EdgeConstraint {
    std::set<NodePair> required;
    std::set<NodePair> forbidden;
};

struct KBestResult {
    std::vector<HamiltonianPath> paths;  // non-decreasing weight
    int requested_k = 0;
};

/// Exact minimum-weight Hamiltonian path with free endpoints (Held-Karp
/// subset DP; free endpoints via an implicit zero-weight depot). Missing
/// edges are forbidden transitions, never big-M weights.
/// Throws InfeasibleError / TooLargeError.
HamiltonianPath solve_path(const UnionView& g, const EdgeConstraint& constraints = {});

/// The k globally best distinct Hamiltonian paths, by Lawler partitioning
/// on the incumbent's edges. May return fewer than k when fewer exist.
KBestResult solve_path_k_best(const UnionView& g, int k);

/// Weight margin between the best and second-best path.
/// Throws NotEnoughPathsError when fewer than two paths are present.
double stability_gap(const KBestResult& result);

enum class TourMode { Exact, Heuristic };

struct Tour {
    std::vector<int> cycle;  // point indices, closed implicitly
    double length = 0.0;
};

/// Closed Euclidean tour. Exact mode is subset DP (n <= 13); heuristic is
/// nearest-neighbor from index 0 followed by first-improvement 2-opt.
/// Degenerate sizes: n = 1 has length 0, n = 2 has length 2*d(p0, p1).
Tour solve_tour(const std::vector<Eigen::VectorXd>& points, TourMode mode);

}  // namespace assoc
