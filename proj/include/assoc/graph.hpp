#pragma once

#include <Eigen/Core>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace assoc {

/// A conceptual component name. Compared by exact byte equality.
using NodeId = std::string;

/// Unordered node pair stored in normalized (first < second) order.
using NodePair = std::pair<NodeId, NodeId>;

inline NodePair make_edge_key(const NodeId& a, const NodeId& b) {
    return a < b ? NodePair{a, b} : NodePair{b, a};
}

struct EdgeData {
    double weight = 0.0;  // association distance; smaller = stronger
    std::string justification;
};

/// Undirected weighted knowledge graph K. At most one edge per node pair,
/// no self-loops, finite non-negative weights. Absence of association is
/// modeled by absence of the edge.
class WeightedGraph {
public:
    void add_node(const NodeId& n);
    void add_edge(const NodeId& a, const NodeId& b, double weight,
                  std::string justification = {});

    bool has_node(const NodeId& n) const { return nodes_.count(n) > 0; }
    bool has_edge(const NodeId& a, const NodeId& b) const {
        return edges_.count(make_edge_key(a, b)) > 0;
    }
    /// nullptr when the edge is absent.
    const EdgeData* find_edge(const NodeId& a, const NodeId& b) const;

    const std::set<NodeId>& nodes() const { return nodes_; }
    const std::map<NodePair, EdgeData>& edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }

    /// Debug dump in DOT format, nodes and edges in stable sorted order.
    std::string to_dot() const;

private:
    std::set<NodeId> nodes_;
    std::map<NodePair, EdgeData> edges_;
};

/// A multihop parent-graph path collapsed into a single edge. The bridge
/// holds the interior nodes (ordered a -> b); its weight is the exact sum
/// of the parent edge weights along a -> bridge -> b.
struct CollapsedEdge {
    NodeId a, b;  // normalized, a < b
    double weight = 0.0;
    std::vector<NodeId> bridge;
};

/// Induced subgraph G of a parent graph K, plus collapsed edges added by
/// connectivity or Hamiltonian augmentation.
struct AugmentedGraph {
    WeightedGraph base;
    std::vector<CollapsedEdge> collapsed;
    const WeightedGraph* parent = nullptr;
};

/// A simple path with its total traversed weight.
struct PathWitness {
    std::vector<NodeId> sequence;
    double total_weight = 0.0;
};

enum class EdgeKind { Direct, Collapsed };

/// Dense adjacency view over base + collapsed edges of an AugmentedGraph.
/// Nodes are sorted; absent edges carry +infinity weight.
struct UnionView {
    std::vector<NodeId> nodes;
    Eigen::MatrixXd weight;               // n x n, inf where no edge
    Eigen::Matrix<int8_t, Eigen::Dynamic, Eigen::Dynamic> kind;  // 0 none, 1 direct, 2 collapsed

    int index_of(const NodeId& n) const;
    bool adjacent(int i, int j) const { return kind(i, j) != 0; }
    int size() const { return static_cast<int>(nodes.size()); }
};

UnionView union_view(const AugmentedGraph& g);

/// DOT dump of a union view; collapsed edges are rendered dashed.
std::string to_dot(const UnionView& g);

}  // namespace assoc
