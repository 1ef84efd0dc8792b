#include "assoc/graph_algorithms.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <vector>

namespace assoc {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);  // keep smallest index as root
        parent[b] = a;
        return true;
    }
};

using Adjacency = std::map<NodeId, std::vector<std::pair<NodeId, double>>>;

Adjacency build_adjacency(const WeightedGraph& k) {
    Adjacency adj;
    for (const auto& [key, data] : k.edges()) {
        adj[key.first].emplace_back(key.second, data.weight);
        adj[key.second].emplace_back(key.first, data.weight);
    }
    for (auto& [node, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

}  // namespace

PathWitness shortest_path(const WeightedGraph& k, const NodeId& u, const NodeId& v,
                          const std::set<NodeId>* forbidden_interior) {
    if (!k.has_node(u)) throw UnknownComponentError(u);
    if (!k.has_node(v)) throw UnknownComponentError(v);
    if (u == v) throw Error("shortest_path endpoints must differ");

    const Adjacency adj = build_adjacency(k);

    // Dijkstra over (distance, node sequence); the path component of the key
    // makes ties resolve toward the lexicographically smallest sequence.
    using Entry = std::pair<double, std::vector<NodeId>>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    std::set<NodeId> settled;
    queue.push({0.0, {u}});
    while (!queue.empty()) {
        auto [dist, path] = queue.top();
        queue.pop();
        const NodeId& last = path.back();
        if (settled.count(last)) continue;
        settled.insert(last);
        if (last == v) return PathWitness{std::move(path), dist};
        auto it = adj.find(last);
        if (it == adj.end()) continue;
        for (const auto& [nbr, w] : it->second) {
            if (settled.count(nbr)) continue;
            if (forbidden_interior && nbr != v && forbidden_interior->count(nbr)) continue;
            auto next = path;
            next.push_back(nbr);
            queue.push({dist + w, std::move(next)});
        }
    }
    throw NoPathError("no path between '" + u + "' and '" + v + "'");
}

AugmentedGraph induce_subgraph(const WeightedGraph& k, const std::set<NodeId>& components) {
    if (components.empty()) throw Error("component set must be non-empty");
    AugmentedGraph g;
    g.parent = &k;
    for (const auto& c : components) {
        if (!k.has_node(c)) throw UnknownComponentError(c);
        g.base.add_node(c);
    }
    for (const auto& [key, data] : k.edges()) {
        if (components.count(key.first) && components.count(key.second))
            g.base.add_edge(key.first, key.second, data.weight, data.justification);
    }
    return g;
}

std::vector<int> component_labels(const UnionView& g) {
    const int n = g.size();
    Dsu dsu(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) dsu.unite(i, j);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = dsu.find(i);
    return labels;
}

namespace {

CollapsedEdge collapse_witness(const PathWitness& w, const WeightedGraph& parent) {
    CollapsedEdge ce;
    std::vector<NodeId> seq = w.sequence;
    if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
    ce.a = seq.front();
    ce.b = seq.back();
    ce.bridge.assign(seq.begin() + 1, seq.end() - 1);
    // fixed left-to-right sum so the weight invariant holds bit-exactly
    ce.weight = 0.0;
    for (std::size_t i = 1; i < seq.size(); ++i)
        ce.weight += parent.find_edge(seq[i - 1], seq[i])->weight;
    return ce;
}

}  // namespace

AugmentedGraph connect_components(AugmentedGraph g) {
    UnionView view = union_view(g);
    std::vector<int> labels = component_labels(view);
    std::set<int> roots(labels.begin(), labels.end());
    if (roots.size() <= 1) return g;
    if (!g.parent) throw Error("augmented graph has no parent to bridge through");

    const std::set<NodeId>& base_nodes = g.base.nodes();
    std::vector<int> root_list(roots.begin(), roots.end());
    std::map<int, int> root_index;
    for (std::size_t i = 0; i < root_list.size(); ++i) root_index[root_list[i]] = static_cast<int>(i);

    // Cheapest parent shortest path between every component pair.
    struct MetaEdge {
        double weight;
        int ci, cj;  // indices into root_list, ci < cj
        PathWitness path;
    };
    std::vector<MetaEdge> meta;
    const int n = view.size();
    for (std::size_t a = 0; a < root_list.size(); ++a) {
        for (std::size_t b = a + 1; b < root_list.size(); ++b) {
            bool found = false;
            MetaEdge best{};
            for (int i = 0; i < n; ++i) {
                if (root_index[labels[i]] != static_cast<int>(a)) continue;
                for (int j = 0; j < n; ++j) {
                    if (root_index[labels[j]] != static_cast<int>(b)) continue;
                    try {
                        PathWitness w =
                            shortest_path(*g.parent, view.nodes[i], view.nodes[j], &base_nodes);
                        if (!found || w.total_weight < best.weight) {
                            best = MetaEdge{w.total_weight, static_cast<int>(a),
                                            static_cast<int>(b), std::move(w)};
                            found = true;
                        }
                    } catch (const NoPathError&) {
                    }
                }
            }
            if (found) meta.push_back(std::move(best));
        }
    }

    std::stable_sort(meta.begin(), meta.end(),
                     [](const MetaEdge& x, const MetaEdge& y) { return x.weight < y.weight; });

    Dsu dsu(static_cast<int>(root_list.size()));
    int merged = 1;
    for (const auto& me : meta) {
        if (!dsu.unite(me.ci, me.cj)) continue;
        g.collapsed.push_back(collapse_witness(me.path, *g.parent));
        ++merged;
    }
    if (merged < static_cast<int>(root_list.size()))
        throw ParentDisconnectedError("components cannot be bridged through the parent graph");
    return g;
}

bool ore_traceable(const UnionView& g) {
    const int n = g.size();
    if (n < 2) return true;
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.adjacent(i, j)) ++deg[i];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j) && deg[i] + deg[j] < n - 1) return false;
    return true;
}

namespace {

constexpr int kExactTraceabilityBound = 24;

/// Subset DP over endpoint sets; returns an endpoint-reconstructed witness.
std::optional<std::vector<int>> hamiltonian_path_dp(const UnionView& g) {
    const int n = g.size();
    std::vector<uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.adjacent(i, j)) adj[i] |= 1u << j;

    std::vector<uint32_t> ends(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
    const uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
        uint32_t e = ends[mask];
        if (!e) continue;
        for (int v = 0; v < n; ++v) {
            if (!(e & (1u << v))) continue;
            uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int w = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    if (!ends[full]) return std::nullopt;

    std::vector<int> seq;
    uint32_t mask = full;
    int v = std::countr_zero(ends[full]);  // smallest feasible endpoint
    seq.push_back(v);
    while (mask != (1u << seq.back())) {
        uint32_t prev_mask = mask & ~(1u << v);
        for (int u = 0; u < n; ++u) {
            if ((ends[prev_mask] & (1u << u)) && (adj[v] & (1u << u))) {
                seq.push_back(u);
                mask = prev_mask;
                v = u;
                break;
            }
        }
    }
    std::reverse(seq.begin(), seq.end());
    if (g.nodes[seq.back()] < g.nodes[seq.front()]) std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace

TraceabilityResult is_traceable(const UnionView& g) {
    const int n = g.size();
    if (n == 0) return {true, PathWitness{}};
    if (n == 1) return {true, PathWitness{{g.nodes[0]}, 0.0}};

    const bool ore = ore_traceable(g);
    if (n > kExactTraceabilityBound) {
        if (ore) return {true, std::nullopt};
        throw TooLargeError("graph exceeds the exact traceability bound of 24 nodes");
    }
    auto seq = hamiltonian_path_dp(g);
    if (!seq) return {false, std::nullopt};

    PathWitness w;
    for (std::size_t i = 0; i < seq->size(); ++i) {
        w.sequence.push_back(g.nodes[(*seq)[i]]);
        if (i > 0) w.total_weight += g.weight((*seq)[i - 1], (*seq)[i]);
    }
    return {true, std::move(w)};
}

AugmentedGraph hamiltonian_augment(AugmentedGraph g) {
    for (;;) {
        UnionView view = union_view(g);
        bool known_traceable = false;
        try {
            known_traceable = is_traceable(view).traceable;
            if (known_traceable) return g;
        } catch (const TooLargeError&) {
            // keep augmenting toward the closure; Ore decides complete graphs
        }

        const std::set<NodeId>& base_nodes = g.base.nodes();
        bool found = false;
        double best_w = std::numeric_limits<double>::infinity();
        PathWitness best_path;
        const int n = view.size();
        for (int i = 0; i < n && g.parent; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (view.adjacent(i, j)) continue;
                try {
                    PathWitness w =
                        shortest_path(*g.parent, view.nodes[i], view.nodes[j], &base_nodes);
                    if (!found || w.total_weight < best_w) {
                        best_w = w.total_weight;
                        best_path = std::move(w);
                        found = true;
                    }
                } catch (const NoPathError&) {
                }
            }
        }
        if (!found)
            throw CannotAugmentError("closure reached without establishing traceability");
        g.collapsed.push_back(collapse_witness(best_path, *g.parent));
    }
}

StepInfo describe_step(const AugmentedGraph& g, const NodeId& from, const NodeId& to) {
    StepInfo info;
    if (const EdgeData* e = g.base.find_edge(from, to)) {
        info.weight = e->weight;
        info.kind = EdgeKind::Direct;
        info.justification = e->justification;
        return info;
    }
    const CollapsedEdge* best = nullptr;
    const NodePair key = make_edge_key(from, to);
    for (const auto& ce : g.collapsed) {
        if (ce.a != key.first || ce.b != key.second) continue;
        if (!best || ce.weight < best->weight) best = &ce;
    }
    if (!best) throw Error("no edge between '" + from + "' and '" + to + "'");

    info.weight = best->weight;
    info.kind = EdgeKind::Collapsed;
    info.bridge = best->bridge;
    if (from != best->a) std::reverse(info.bridge.begin(), info.bridge.end());

    std::ostringstream os;
    os << "via ";
    for (std::size_t i = 0; i < info.bridge.size(); ++i)
        os << (i ? ", " : "") << info.bridge[i];
    os << " (" << best->weight << " over " << info.bridge.size() + 1 << " hops)";
    if (g.parent) {
        std::vector<NodeId> hops;
        hops.push_back(from);
        hops.insert(hops.end(), info.bridge.begin(), info.bridge.end());
        hops.push_back(to);
        for (std::size_t i = 1; i < hops.size(); ++i) {
            const EdgeData* e = g.parent->find_edge(hops[i - 1], hops[i]);
            if (e && !e->justification.empty())
                os << "; " << hops[i - 1] << "-" << hops[i] << ": " << e->justification;
        }
    }
    info.justification = os.str();
    return info;
}

MstTraversal mst_fallback(const UnionView& g) {
    const int n = g.size();
    MstTraversal out;
    if (n == 0) return out;

    struct E {
        double w;
        int i, j;
    };
    std::vector<E> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) edges.push_back({g.weight(i, j), i, j});
    std::stable_sort(edges.begin(), edges.end(),
                     [](const E& a, const E& b) { return a.w < b.w; });

    Dsu dsu(n);
    std::vector<std::vector<int>> tree(n);
    for (const auto& e : edges) {
        if (!dsu.unite(e.i, e.j)) continue;
        out.tree_edges.push_back(make_edge_key(g.nodes[e.i], g.nodes[e.j]));
        out.tree_weight += e.w;
        tree[e.i].push_back(e.j);
        tree[e.j].push_back(e.i);
    }
    for (auto& nbrs : tree) std::sort(nbrs.begin(), nbrs.end());

    // iterative preorder from the lexicographically smallest node
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (seen[v]) continue;
        seen[v] = true;
        out.order.push_back(g.nodes[v]);
        for (auto it = tree[v].rbegin(); it != tree[v].rend(); ++it)
            if (!seen[*it]) stack.push_back(*it);
    }
    return out;
}

}  // namespace assoc
