#pragma once

#include "assoc/graph.hpp"

#include <optional>
#include <set>

namespace assoc {

/// Minimum-weight simple path between two distinct nodes. Ties are broken
/// toward the lexicographically smallest node sequence. Nodes listed in
/// `forbidden_interior` may appear only as endpoints.
/// Throws NoPathError when no path exists.
PathWitness shortest_path(const WeightedGraph& k, const NodeId& u, const NodeId& v,
                          const std::set<NodeId>* forbidden_interior = nullptr);

/// Restriction of K to `components` plus every K-edge inside the set.
/// Throws UnknownComponentError naming the first missing component.
AugmentedGraph induce_subgraph(const WeightedGraph& k, const std::set<NodeId>& components);

/// Connects the union graph by collapsing minimum-weight parent paths
/// between components (metagraph MST over inter-component shortest paths).
/// Idempotent. Throws ParentDisconnectedError when bridging is impossible.
AugmentedGraph connect_components(AugmentedGraph g);

/// Path form of Ore's degree condition: true guarantees a Hamiltonian path
/// exists; false is inconclusive. Requires at least 2 nodes.
bool ore_traceable(const UnionView& g);

struct TraceabilityResult {
    bool traceable = false;
    std::optional<PathWitness> witness;
};

/// Exact traceability test (Ore shortcut, then bitmask subset DP).
/// Throws TooLargeError above 24 nodes unless Ore already decides.
TraceabilityResult is_traceable(const UnionView& g);

/// Adds collapsed parent paths between non-adjacent base pairs, cheapest
/// first, re-testing traceability after each addition.
AugmentedGraph hamiltonian_augment(AugmentedGraph g);

struct MstTraversal {
    std::vector<NodePair> tree_edges;
    double tree_weight = 0.0;
    std::vector<NodeId> order;  // DFS preorder from the smallest node
};

/// Minimum spanning tree of the union graph plus a deterministic preorder
/// walk; fallback explanation structure when augmentation is unavailable.
MstTraversal mst_fallback(const UnionView& g);

/// Connected-component labels of a union view, by union-find.
std::vector<int> component_labels(const UnionView& g);

struct StepInfo {
    double weight = 0.0;
    EdgeKind kind = EdgeKind::Direct;
    std::vector<NodeId> bridge;  // oriented from -> to; empty for direct steps
    std::string justification;
};

/// Human-readable description of one traversal step of the union graph.
/// Bridged steps spell out the bridge nodes and each hop's justification.
StepInfo describe_step(const AugmentedGraph& g, const NodeId& from, const NodeId& to);

}  // namespace assoc
