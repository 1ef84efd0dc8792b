#pragma once

#include "assoc/graph.hpp"

#include <Eigen/Core>

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace assoc {

/// Maps raw association strengths (larger = stronger) to edge distances
/// (smaller = stronger). IdentityDistance passes pre-computed distances
/// through unchanged.
enum class StrengthTransform { Reciprocal, MaxPlusOneMinus, IdentityDistance };

/// Throws NonPositiveStrengthError for s <= 0. `s_max` is only consulted
/// by MaxPlusOneMinus.
double strength_to_weight(double s, StrengthTransform transform, double s_max = 0.0);

/// Parses `node_a <TAB> node_b <TAB> strength <TAB> justification?` lines.
/// `#` comments and blank lines are skipped; duplicate pairs keep the
/// strongest association (smallest transformed weight); zero strength
/// means no edge.
WeightedGraph load_edge_list(std::istream& in,
                             StrengthTransform transform = StrengthTransform::Reciprocal);

/// Inverse of load_edge_list under the IdentityDistance transform.
void write_edge_list(const WeightedGraph& g, std::ostream& out);

struct EmbeddingTable {
    int dim = 0;
    std::map<std::string, Eigen::VectorXd> entries;
};

/// Word-vector text format: optional `count dim` header, then
/// `token v1 ... v_dim` lines.
EmbeddingTable load_embeddings(std::istream& in);

/// Complete graph over `tokens` with Euclidean distances as weights.
WeightedGraph graph_from_embeddings(const EmbeddingTable& table,
                                    const std::vector<std::string>& tokens);

/// Point-set file: one point per line, whitespace-separated reals,
/// uniform arity. Throws DimensionMismatchError on ragged lines.
std::vector<Eigen::VectorXd> load_points(std::istream& in);

struct StopwordList {
    std::set<std::string> tokens;
};

/// One token per line; tokens are normalized the same way as input text.
StopwordList load_stopwords(std::istream& in);

/// Normalizes a token for vocabulary matching: ASCII case folding,
/// punctuation stripped. Multiword vocabulary entries use underscores.
std::string normalize_token(const std::string& token);

/// Greedy longest-match extraction of vocabulary entries from free text,
/// after stopword removal; duplicates collapse to the first occurrence.
/// Throws NoComponentsFoundError when nothing matches.
std::vector<NodeId> extract_components(const std::string& text,
                                       const std::set<NodeId>& vocabulary,
                                       const StopwordList& stopwords = {});

/// Mean-centered projection onto the top-2 principal directions. The
/// largest-magnitude entry of each direction is made non-negative.
std::vector<Eigen::Vector2d> pca_2d(const std::vector<Eigen::VectorXd>& vectors);

}  // namespace assoc
