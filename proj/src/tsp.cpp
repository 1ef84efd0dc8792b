#include "assoc/tsp.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <vector>

namespace assoc {

namespace {

constexpr int kExactPathBound = 24;
constexpr int kExactTourBound = 13;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Segment {
    std::vector<int> nodes;  // traversal order as stored
    double internal_weight = 0.0;
    int head() const { return nodes.front(); }
    int tail() const { return nodes.back(); }
};

struct IndexConstraint {
    std::set<std::pair<int, int>> required;   // i < j
    std::set<std::pair<int, int>> forbidden;  // i < j
};

std::pair<int, int> ordered(int i, int j) { return i < j ? std::pair{i, j} : std::pair{j, i}; }

IndexConstraint to_indices(const UnionView& g, const EdgeConstraint& c) {
    IndexConstraint out;
    for (const auto& [a, b] : c.required) {
        int i = g.index_of(a), j = g.index_of(b);
        if (i < 0 || j < 0 || !g.adjacent(i, j))
            throw InfeasibleError("required edge (" + a + ", " + b + ") is not in the graph");
        out.required.insert(ordered(i, j));
    }
    for (const auto& [a, b] : c.forbidden) {
        int i = g.index_of(a), j = g.index_of(b);
        if (i < 0 || j < 0) continue;
        out.forbidden.insert(ordered(i, j));
    }
    for (const auto& e : out.required)
        if (out.forbidden.count(e))
            throw Error("edge both required and forbidden");
    return out;
}

/// Contract required edges into chain segments; free nodes become
/// singleton segments. Rejects branching or cyclic requirement sets.
std::vector<Segment> build_segments(const UnionView& g, const IndexConstraint& c) {
    const int n = g.size();
    std::vector<std::vector<int>> req_adj(n);
    for (const auto& [i, j] : c.required) {
        req_adj[i].push_back(j);
        req_adj[j].push_back(i);
        if (req_adj[i].size() > 2 || req_adj[j].size() > 2)
            throw InfeasibleError("required edges force a branch at a node");
    }
    std::vector<Segment> segments;
    std::vector<bool> used(n, false);
    for (int v = 0; v < n; ++v) {
        if (used[v] || req_adj[v].size() == 2) continue;  // chain interiors handled from ends
        Segment s;
        int prev = -1, cur = v;
        for (;;) {
            used[cur] = true;
            s.nodes.push_back(cur);
            if (prev >= 0) s.internal_weight += g.weight(prev, cur);
            int next = -1;
            for (int nb : req_adj[cur])
                if (nb != prev) next = nb;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        segments.push_back(std::move(s));
    }
    for (int v = 0; v < n; ++v)
        if (!used[v]) throw InfeasibleError("required edges form a cycle");
    return segments;
}

HamiltonianPath expand(const UnionView& g, const std::vector<std::pair<int, int>>& order,
                       const std::vector<Segment>& segments) {
    std::vector<int> seq;
    for (const auto& [si, o] : order) {
        std::vector<int> part = segments[si].nodes;
        if (o == 1) std::reverse(part.begin(), part.end());
        seq.insert(seq.end(), part.begin(), part.end());
    }
    HamiltonianPath p;
    if (seq.size() >= 2 && g.nodes[seq.back()] < g.nodes[seq.front()])
        std::reverse(seq.begin(), seq.end());
    for (std::size_t t = 0; t < seq.size(); ++t) {
        p.sequence.push_back(g.nodes[seq[t]]);
        if (t > 0) {
            p.total_weight += g.weight(seq[t - 1], seq[t]);
            p.edge_kinds.push_back(g.kind(seq[t - 1], seq[t]) == 2 ? EdgeKind::Collapsed
                                                                   : EdgeKind::Direct);
        }
    }
    return p;
}

}  // namespace

HamiltonianPath solve_path(const UnionView& g, const EdgeConstraint& constraints) {
    const int n = g.size();
    if (n == 0) throw InfeasibleError("empty graph");
    if (n > kExactPathBound)
        throw TooLargeError("exact path solver is bounded at 24 nodes");
    if (n == 1) return HamiltonianPath{{g.nodes[0]}, 0.0, {}};

    const IndexConstraint idx = to_indices(g, constraints);
    const std::vector<Segment> segments = build_segments(g, idx);
    const int m = static_cast<int>(segments.size());

    auto step_weight = [&](int u, int v) -> double {
        if (!g.adjacent(u, v) || idx.forbidden.count(ordered(u, v))) return kInf;
        return g.weight(u, v);
    };
    auto entry_node = [&](int si, int o) { return o == 0 ? segments[si].head() : segments[si].tail(); };
    auto exit_node = [&](int si, int o) { return o == 0 ? segments[si].tail() : segments[si].head(); };

    // Held-Karp over segments; a segment state is (covered set, last, orientation).
    const std::size_t states = std::size_t(1) << m;
    std::vector<double> dp(states * m * 2, kInf);
    std::vector<int32_t> par(states * m * 2, -1);
    auto at = [&](std::size_t mask, int i, int o) { return (mask * m + i) * 2 + o; };

    for (int i = 0; i < m; ++i)
        for (int o = 0; o < 2; ++o)
            dp[at(std::size_t(1) << i, i, o)] = segments[i].internal_weight;

    const std::size_t full = states - 1;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        for (int i = 0; i < m; ++i) {
            if (!(mask & (std::size_t(1) << i))) continue;
            for (int o = 0; o < 2; ++o) {
                const double base = dp[at(mask, i, o)];
                if (!std::isfinite(base)) continue;
                const int u = exit_node(i, o);
                for (int j = 0; j < m; ++j) {
                    if (mask & (std::size_t(1) << j)) continue;
                    for (int p = 0; p < 2; ++p) {
                        const double w = step_weight(u, entry_node(j, p));
                        if (!std::isfinite(w)) continue;
                        const double cand = base + w + segments[j].internal_weight;
                        const std::size_t key = at(mask | (std::size_t(1) << j), j, p);
                        if (cand < dp[key]) {
                            dp[key] = cand;
                            par[key] = static_cast<int32_t>(at(mask, i, o));
                        }
                    }
                }
            }
        }
    }

    double best = kInf;
    int best_i = -1, best_o = -1;
    for (int i = 0; i < m; ++i)
        for (int o = 0; o < 2; ++o)
            if (dp[at(full, i, o)] < best) {
                best = dp[at(full, i, o)];
                best_i = i;
                best_o = o;
            }
    if (!std::isfinite(best))
        throw InfeasibleError("no Hamiltonian path satisfies the constraints");

    std::vector<std::pair<int, int>> order;
    std::size_t mask = full;
    int i = best_i, o = best_o;
    for (;;) {
        order.emplace_back(i, o);
        const int32_t p = par[at(mask, i, o)];
        if (p < 0) break;
        const std::size_t prev = std::size_t(p);
        mask &= ~(std::size_t(1) << i);
        o = static_cast<int>(prev % 2);
        i = static_cast<int>((prev / 2) % m);
    }
    std::reverse(order.begin(), order.end());
    return expand(g, order, segments);
}

namespace {

std::vector<NodePair> path_edges(const HamiltonianPath& p) {
    std::vector<NodePair> out;
    for (std::size_t t = 1; t < p.sequence.size(); ++t)
        out.push_back(make_edge_key(p.sequence[t - 1], p.sequence[t]));
    return out;
}

}  // namespace

KBestResult solve_path_k_best(const UnionView& g, int k) {
    if (k < 1) throw Error("k must be at least 1");
    KBestResult result;
    result.requested_k = k;

    struct Item {
        HamiltonianPath path;
        EdgeConstraint constraints;
    };
    auto worse = [](const Item& a, const Item& b) {
        if (a.path.total_weight != b.path.total_weight)
            return a.path.total_weight > b.path.total_weight;
        return a.path.sequence > b.path.sequence;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(worse)> queue(worse);
    queue.push({solve_path(g, {}), {}});

    std::set<std::vector<NodeId>> emitted;
    while (static_cast<int>(result.paths.size()) < k && !queue.empty()) {
        Item item = queue.top();
        queue.pop();
        if (!emitted.insert(item.path.sequence).second) continue;
        result.paths.push_back(item.path);

        // Lawler partition: child t keeps the first t-1 incumbent edges and
        // forbids the t-th; children cover everything except the incumbent.
        const std::vector<NodePair> edges = path_edges(item.path);
        EdgeConstraint child = item.constraints;
        for (const auto& e : edges) {
            if (item.constraints.required.count(e)) continue;
            EdgeConstraint branch = child;
            branch.forbidden.insert(e);
            try {
                queue.push({solve_path(g, branch), branch});
            } catch (const InfeasibleError&) {
            }
            child.required.insert(e);
        }
    }
    return result;
}

double stability_gap(const KBestResult& result) {
    if (result.paths.size() < 2)
        throw NotEnoughPathsError("stability gap needs at least two paths");
    return result.paths[1].total_weight - result.paths[0].total_weight;
}

namespace {

Eigen::MatrixXd distance_matrix(const std::vector<Eigen::VectorXd>& points) {
    const int n = static_cast<int>(points.size());
    Eigen::MatrixXd d(n, n);
    for (int i = 0; i < n; ++i) {
        d(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = (points[i] - points[j]).norm();
    }
    return d;
}

double cycle_length(const Eigen::MatrixXd& d, const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    double len = 0.0;
    for (int t = 0; t < n; ++t) len += d(order[t], order[(t + 1) % n]);
    return len;
}

Tour exact_tour(const Eigen::MatrixXd& d) {
    const int n = static_cast<int>(d.rows());
    const std::size_t states = std::size_t(1) << n;
    std::vector<double> dp(states * n, kInf);
    std::vector<int32_t> par(states * n, -1);
    auto at = [&](std::size_t mask, int j) { return mask * n + j; };

    dp[at(1, 0)] = 0.0;
    for (std::size_t mask = 1; mask < states; ++mask) {
        if (!(mask & 1)) continue;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (std::size_t(1) << j))) continue;
            const double base = dp[at(mask, j)];
            if (!std::isfinite(base)) continue;
            for (int w = 1; w < n; ++w) {
                if (mask & (std::size_t(1) << w)) continue;
                const double cand = base + d(j, w);
                const std::size_t key = at(mask | (std::size_t(1) << w), w);
                if (cand < dp[key]) {
                    dp[key] = cand;
                    par[key] = static_cast<int32_t>(at(mask, j));
                }
            }
        }
    }
    const std::size_t full = states - 1;
    double best = kInf;
    int best_j = -1;
    for (int j = 1; j < n; ++j) {
        const double cand = dp[at(full, j)] + d(j, 0);
        if (cand < best) {
            best = cand;
            best_j = j;
        }
    }
    Tour t;
    std::size_t mask = full;
    int j = best_j;
    while (j >= 0) {
        t.cycle.push_back(j);
        const int32_t p = par[at(mask, j)];
        mask &= ~(std::size_t(1) << j);
        j = p < 0 ? -1 : static_cast<int>(p % n);
        if (p < 0) break;
    }
    std::reverse(t.cycle.begin(), t.cycle.end());
    t.length = best;
    return t;
}

Tour heuristic_tour(const Eigen::MatrixXd& d) {
    const int n = static_cast<int>(d.rows());
    std::vector<int> order;
    std::vector<bool> used(n, false);
    int cur = 0;
    used[0] = true;
    order.push_back(0);
    for (int step = 1; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && (best < 0 || d(cur, v) < d(cur, best))) best = v;
        used[best] = true;
        order.push_back(best);
        cur = best;
    }

    // first-improvement 2-opt, ascending (i, j) scan, restart on improvement
    constexpr double kImprove = 1e-12;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < n - 1 && !improved; ++i) {
            for (int j = i + 1; j < n && !improved; ++j) {
                if (i == 0 && j == n - 1) continue;  // same pair of edges
                const int a = order[i == 0 ? n - 1 : i - 1];
                const int b = order[i];
                const int c = order[j];
                const int e = order[(j + 1) % n];
                const double delta = d(a, c) + d(b, e) - d(a, b) - d(c, e);
                if (delta < -kImprove) {
                    std::reverse(order.begin() + i, order.begin() + j + 1);
                    improved = true;
                }
            }
        }
    }

    Tour t;
    t.cycle = std::move(order);
    t.length = cycle_length(d, t.cycle);
    return t;
}

}  // namespace

Tour solve_tour(const std::vector<Eigen::VectorXd>& points, TourMode mode) {
    const int n = static_cast<int>(points.size());
    if (n == 0) return Tour{};
    if (n == 1) return Tour{{0}, 0.0};
    if (n == 2) return Tour{{0, 1}, 2.0 * (points[0] - points[1]).norm()};
    if (mode == TourMode::Exact && n > kExactTourBound)
        throw TooLargeForExactError("exact tours are bounded at 13 points");

    const Eigen::MatrixXd d = distance_matrix(points);
    return mode == TourMode::Exact ? exact_tour(d) : heuristic_tour(d);
}

}  // namespace assoc
