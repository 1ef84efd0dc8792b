#include "assoc/graph.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace assoc {

void WeightedGraph::add_node(const NodeId& n) {
    if (n.empty()) throw Error("node id must be non-empty");
    nodes_.insert(n);
}

void WeightedGraph::add_edge(const NodeId& a, const NodeId& b, double weight,
                             std::string justification) {
    if (a == b) throw Error("self-loop edge on '" + a + "'");
    if (!(weight >= 0.0) || !std::isfinite(weight))
        throw Error("edge weight must be finite and non-negative");
    add_node(a);
    add_node(b);
    edges_[make_edge_key(a, b)] = EdgeData{weight, std::move(justification)};
}

const EdgeData* WeightedGraph::find_edge(const NodeId& a, const NodeId& b) const {
    auto it = edges_.find(make_edge_key(a, b));
    return it == edges_.end() ? nullptr : &it->second;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string WeightedGraph::to_dot() const {
    std::ostringstream os;
    os << "graph K {\n";
    for (const auto& n : nodes_) os << "  " << dot_quote(n) << ";\n";
    for (const auto& [key, data] : edges_) {
        os << "  " << dot_quote(key.first) << " -- " << dot_quote(key.second)
           << " [weight=" << data.weight;
        if (!data.justification.empty()) os << ", label=" << dot_quote(data.justification);
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

int UnionView::index_of(const NodeId& n) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    if (it == nodes.end() || *it != n) return -1;
    return static_cast<int>(it - nodes.begin());
}

UnionView union_view(const AugmentedGraph& g) {
    UnionView v;
    v.nodes.assign(g.base.nodes().begin(), g.base.nodes().end());
    const int n = static_cast<int>(v.nodes.size());
    const double inf = std::numeric_limits<double>::infinity();
    v.weight = Eigen::MatrixXd::Constant(n, n, inf);
    v.kind.setZero(n, n);
    for (int i = 0; i < n; ++i) v.weight(i, i) = 0.0;
    for (const auto& [key, data] : g.base.edges()) {
        const int i = v.index_of(key.first);
        const int j = v.index_of(key.second);
        v.weight(i, j) = v.weight(j, i) = data.weight;
        v.kind(i, j) = v.kind(j, i) = 1;
    }
    for (const auto& ce : g.collapsed) {
        const int i = v.index_of(ce.a);
        const int j = v.index_of(ce.b);
        if (v.kind(i, j) == 0 || ce.weight < v.weight(i, j)) {
            v.weight(i, j) = v.weight(j, i) = ce.weight;
            v.kind(i, j) = v.kind(j, i) = 2;
        }
    }
    return v;
}

std::string to_dot(const UnionView& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& n : g.nodes) os << "  " << dot_quote(n) << ";\n";
    for (int i = 0; i < g.size(); ++i) {
        for (int j = i + 1; j < g.size(); ++j) {
            if (g.kind(i, j) == 0) continue;
            os << "  " << dot_quote(g.nodes[i]) << " -- " << dot_quote(g.nodes[j])
               << " [weight=" << g.weight(i, j);
            if (g.kind(i, j) == 2) os << ", style=dashed";
            os << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace assoc
