#include "assoc/explain.hpp"

#include "assoc/errors.hpp"
#include "assoc/graph_algorithms.hpp"
#include "assoc/tsp.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace assoc {

namespace {

using nlohmann::json;

Explanation build_explanation(const AugmentedGraph& g, const HamiltonianPath& path, int rank) {
    Explanation e;
    e.rank = rank;
    e.total_weight = path.total_weight;
    for (std::size_t t = 1; t < path.sequence.size(); ++t) {
        const StepInfo info = describe_step(g, path.sequence[t - 1], path.sequence[t]);
        e.steps.push_back({path.sequence[t - 1], path.sequence[t], info.weight, info.kind,
                           info.bridge, info.justification});
    }
    return e;
}

}  // namespace

ExplainResult explain(const WeightedGraph& k_graph, const Artifact& artifact, int k,
                      bool allow_augmentation) {
    if (artifact.components.empty()) throw Error("artifact has no components");
    std::set<NodeId> components(artifact.components.begin(), artifact.components.end());
    if (components.size() != artifact.components.size())
        throw DuplicateTokenError("artifact components must be duplicate-free");

    ExplainResult result;
    result.artifact = artifact.components;
    result.k = k;

    AugmentedGraph g = induce_subgraph(k_graph, components);
    if (components.size() == 1) {
        Explanation only;
        only.rank = 1;
        result.explanations.push_back(only);
        result.graph = union_view(g);
        return result;
    }

    if (allow_augmentation) g = connect_components(std::move(g));
    UnionView view = union_view(g);
    if (!is_traceable(view).traceable) {
        if (!allow_augmentation)
            throw NotTraceableError("induced subgraph is not traceable and augmentation is off");
        g = hamiltonian_augment(std::move(g));
        view = union_view(g);
    }

    const KBestResult best = solve_path_k_best(view, k);
    for (std::size_t i = 0; i < best.paths.size(); ++i) {
        Explanation e = build_explanation(g, best.paths[i], static_cast<int>(i) + 1);
        for (const auto& s : e.steps)
            if (s.kind == EdgeKind::Collapsed) result.augmentation_used = true;
        result.explanations.push_back(std::move(e));
    }
    if (best.paths.size() >= 2)
        result.explanations.front().stability_gap = stability_gap(best);
    result.graph = std::move(view);
    return result;
}

namespace {

std::string render_text(const ExplainResult& r) {
    std::ostringstream os;
    for (const auto& e : r.explanations) {
        os << "rank " << e.rank << " (total " << e.total_weight;
        if (e.stability_gap) os << ", stability gap " << *e.stability_gap;
        os << ")\n";
        for (const auto& s : e.steps) {
            os << "  " << s.from << " —(" << s.weight;
            if (!s.justification.empty()) os << ", " << s.justification;
            os << ")→ " << s.to << "\n";
        }
    }
    return os.str();
}

json to_json(const ExplainResult& r) {
    json out;
    out["artifact"] = r.artifact;
    out["k"] = r.k;
    out["augmentation_used"] = r.augmentation_used;
    out["explanations"] = json::array();
    for (const auto& e : r.explanations) {
        json je;
        je["rank"] = e.rank;
        je["total_weight"] = e.total_weight;
        je["stability_gap"] = e.stability_gap ? json(*e.stability_gap) : json(nullptr);
        je["steps"] = json::array();
        for (const auto& s : e.steps) {
            je["steps"].push_back({{"from", s.from},
                                   {"to", s.to},
                                   {"weight", s.weight},
                                   {"kind", s.kind == EdgeKind::Direct ? "direct" : "bridged"},
                                   {"bridge_nodes", s.bridge_nodes},
                                   {"justification", s.justification}});
        }
        out["explanations"].push_back(std::move(je));
    }
    if (r.plot) {
        out["plot"] = json::array();
        for (const auto& p : *r.plot)
            out["plot"].push_back({{"token", p.token}, {"x", p.x}, {"y", p.y}});
    } else {
        out["plot"] = nullptr;
    }
    return out;
}

const char* kPathColors[] = {"purple", "brown", "blue", "orange", "darkgreen", "red"};

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_dot(const ExplainResult& r) {
    std::ostringstream os;
    os << "graph explanation {\n";

    std::set<NodeId> bridge_nodes;
    std::set<NodePair> used;
    for (const auto& e : r.explanations)
        for (const auto& s : e.steps) {
            used.insert(make_edge_key(s.from, s.to));
            for (const auto& b : s.bridge_nodes) bridge_nodes.insert(b);
        }

    for (const auto& n : r.artifact) os << "  " << dot_quote(n) << ";\n";
    for (const auto& b : bridge_nodes)
        os << "  " << dot_quote(b) << " [style=dashed];\n";

    for (const auto& e : r.explanations) {
        const char* color = kPathColors[(e.rank - 1) % std::size(kPathColors)];
        for (const auto& s : e.steps) {
            os << "  " << dot_quote(s.from) << " -- " << dot_quote(s.to) << " [style=bold, color="
               << color << ", penwidth=2, weight=" << s.weight;
            if (s.kind == EdgeKind::Collapsed) {
                os << ", label=" << dot_quote("via");
            }
            os << "];\n";
            if (s.kind == EdgeKind::Collapsed && !s.bridge_nodes.empty()) {
                NodeId prev = s.from;
                for (const auto& b : s.bridge_nodes) {
                    os << "  " << dot_quote(prev) << " -- " << dot_quote(b) << " [style=dashed];\n";
                    prev = b;
                }
                os << "  " << dot_quote(prev) << " -- " << dot_quote(s.to) << " [style=dashed];\n";
            }
        }
    }

    if (r.graph) {
        const UnionView& g = *r.graph;
        for (int i = 0; i < g.size(); ++i)
            for (int j = i + 1; j < g.size(); ++j) {
                if (g.kind(i, j) != 1) continue;
                if (used.count(make_edge_key(g.nodes[i], g.nodes[j]))) continue;
                os << "  " << dot_quote(g.nodes[i]) << " -- " << dot_quote(g.nodes[j])
                   << " [penwidth=1, color=gray, weight=" << g.weight(i, j) << "];\n";
            }
    }
    os << "}\n";
    return os.str();
}

}  // namespace

std::string render_explanation(const ExplainResult& result, RenderFormat format) {
    switch (format) {
        case RenderFormat::Text:
            return render_text(result);
        case RenderFormat::Json:
            return to_json(result).dump(2) + "\n";
        case RenderFormat::Dot:
            return render_dot(result);
    }
    throw Error("unknown render format");
}

ExplainResult explain_from_embeddings(const EmbeddingTable& table, const std::string& text,
                                      const StopwordList& stopwords, int k) {
    std::vector<std::string> tokens;
    std::set<std::string> seen;
    std::istringstream ss(text);
    for (std::string raw; ss >> raw;) {
        const std::string norm = normalize_token(raw);
        if (norm.empty() || stopwords.tokens.count(norm)) continue;
        const std::string* key = nullptr;
        if (table.entries.count(norm)) key = &norm;
        else if (table.entries.count(raw)) key = &raw;
        if (key && seen.insert(*key).second) tokens.push_back(*key);
    }
    if (tokens.empty()) throw NoComponentsFoundError("no tokens matched the embedding table");
    if (tokens.size() < 2) throw TooFewTokensError("need at least two matched tokens");

    const WeightedGraph g = graph_from_embeddings(table, tokens);
    ExplainResult result = explain(g, Artifact{tokens, text}, k, true);

    std::vector<Eigen::VectorXd> vectors;
    for (const auto& t : tokens) vectors.push_back(table.entries.at(t));
    const auto coords = pca_2d(vectors);
    std::vector<PlotPoint> plot;
    for (std::size_t i = 0; i < tokens.size(); ++i)
        plot.push_back({tokens[i], coords[i].x(), coords[i].y()});
    result.plot = std::move(plot);
    return result;
}

}  // namespace assoc
