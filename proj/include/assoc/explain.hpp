#pragma once

#include "assoc/graph.hpp"
#include "assoc/sources.hpp"

#include <optional>
#include <string>
#include <vector>

namespace assoc {

/// A creative artifact: its components in reporting order.
struct Artifact {
    std::vector<NodeId> components;  // non-empty, duplicate-free
    std::optional<std::string> source_text;
};

struct ExplanationStep {
    NodeId from, to;
    double weight = 0.0;
    EdgeKind kind = EdgeKind::Direct;
    std::vector<NodeId> bridge_nodes;  // empty for direct steps
    std::string justification;
};

struct Explanation {
    int rank = 0;  // 1-based
    std::vector<ExplanationStep> steps;
    double total_weight = 0.0;
    std::optional<double> stability_gap;  // rank 1 only, when >= 2 results exist
};

struct PlotPoint {
    std::string token;
    double x = 0.0, y = 0.0;
};

struct ExplainResult {
    std::vector<NodeId> artifact;
    int k = 0;
    bool augmentation_used = false;
    std::vector<Explanation> explanations;
    std::optional<std::vector<PlotPoint>> plot;
    std::optional<UnionView> graph;  // solved union graph, kept for DOT rendering
};

/// Ranked associative-chain explanations of an artifact over a knowledge
/// graph: induce, repair connectivity/traceability, then k-best optimal
/// paths with per-step justifications. Returns fewer than k explanations
/// when fewer distinct paths exist.
ExplainResult explain(const WeightedGraph& k_graph, const Artifact& artifact, int k,
                      bool allow_augmentation = true);

enum class RenderFormat { Text, Json, Dot };

std::string render_explanation(const ExplainResult& result, RenderFormat format);

/// Embedding workflow: tokenize text, drop stopwords and unknown tokens,
/// build a complete Euclidean graph, explain, and attach 2-D PCA
/// coordinates for plotting.
ExplainResult explain_from_embeddings(const EmbeddingTable& table, const std::string& text,
                                      const StopwordList& stopwords, int k);

}  // namespace assoc
