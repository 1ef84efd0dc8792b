#include "assoc/sources.hpp"

#include "assoc/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace assoc {

double strength_to_weight(double s, StrengthTransform transform, double s_max) {
    if (transform == StrengthTransform::IdentityDistance) {
        if (s < 0.0) throw NonPositiveStrengthError("distance must be non-negative");
        return s;
    }
    if (!(s > 0.0)) throw NonPositiveStrengthError("strength must be positive");
    switch (transform) {
        case StrengthTransform::Reciprocal:
            return 1.0 / s;
        case StrengthTransform::MaxPlusOneMinus:
            if (s > s_max) throw Error("strength exceeds the declared maximum");
            return s_max + 1.0 - s;
        default:
            return s;
    }
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_real(const std::string& s, int line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
    }
}

}  // namespace

WeightedGraph load_edge_list(std::istream& in, StrengthTransform transform) {
    struct Record {
        std::string a, b, justification;
        double strength;
        int line_no;
    };
    std::vector<Record> records;
    std::string line;
    int line_no = 0;
    double s_max = 0.0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> cols = split_tabs(line);
        if (cols.size() < 3 || cols.size() > 4)
            throw ParseError("line " + std::to_string(line_no) + ": expected 3 or 4 columns, got " +
                             std::to_string(cols.size()));
        if (cols[0].empty() || cols[1].empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty node name");
        if (cols[0] == cols[1])
            throw ParseError("line " + std::to_string(line_no) + ": self-loop on '" + cols[0] + "'");
        const double strength = parse_real(cols[2], line_no);
        if (strength < 0.0)
            throw NegativeStrengthError("line " + std::to_string(line_no) +
                                        ": negative strength " + cols[2]);
        records.push_back({cols[0], cols[1], cols.size() == 4 ? cols[3] : std::string{},
                           strength, line_no});
        s_max = std::max(s_max, strength);
    }

    WeightedGraph g;
    for (const auto& r : records) {
        g.add_node(r.a);
        g.add_node(r.b);
        if (r.strength == 0.0) continue;  // no association, no edge
        const double w = strength_to_weight(r.strength, transform, s_max);
        const EdgeData* existing = g.find_edge(r.a, r.b);
        if (!existing || w < existing->weight) g.add_edge(r.a, r.b, w, r.justification);
    }
    return g;
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
    for (const auto& [key, data] : g.edges()) {
        out << key.first << '\t' << key.second << '\t' << data.weight;
        if (!data.justification.empty()) out << '\t' << data.justification;
        out << '\n';
    }
}

EmbeddingTable load_embeddings(std::istream& in) {
    EmbeddingTable table;
    std::string line;
    int line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> fields;
        for (std::string f; ls >> f;) fields.push_back(f);
        if (fields.empty()) continue;

        if (!saw_data && table.dim == 0 && fields.size() == 2) {
            // possible `count dim` header
            char* end1 = nullptr;
            char* end2 = nullptr;
            const long count = std::strtol(fields[0].c_str(), &end1, 10);
            const long dim = std::strtol(fields[1].c_str(), &end2, 10);
            if (*end1 == '\0' && *end2 == '\0' && count >= 0 && dim > 0) {
                table.dim = static_cast<int>(dim);
                continue;
            }
        }

        const int arity = static_cast<int>(fields.size()) - 1;
        if (table.dim == 0) table.dim = arity;
        if (arity != table.dim)
            throw DimensionMismatchError("line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(table.dim) + " values, got " +
                                         std::to_string(arity));
        Eigen::VectorXd v(table.dim);
        for (int i = 0; i < table.dim; ++i) v[i] = parse_real(fields[i + 1], line_no);
        if (!table.entries.emplace(fields[0], std::move(v)).second)
            throw DuplicateTokenError("duplicate token '" + fields[0] + "'");
        saw_data = true;
    }
    return table;
}

std::vector<Eigen::VectorXd> load_points(std::istream& in) {
    std::vector<Eigen::VectorXd> points;
    std::string line;
    int line_no = 0;
    int dim = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<double> vals;
        for (std::string f; ls >> f;) vals.push_back(parse_real(f, line_no));
        if (vals.empty()) continue;
        if (dim == 0) dim = static_cast<int>(vals.size());
        if (static_cast<int>(vals.size()) != dim)
            throw DimensionMismatchError("line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(dim) + " coordinates");
        points.push_back(Eigen::Map<Eigen::VectorXd>(vals.data(), dim));
    }
    return points;
}

WeightedGraph graph_from_embeddings(const EmbeddingTable& table,
                                    const std::vector<std::string>& tokens) {
    WeightedGraph g;
    for (const auto& t : tokens) {
        if (!table.entries.count(t)) throw UnknownTokenError(t);
        g.add_node(t);
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        for (std::size_t j = i + 1; j < tokens.size(); ++j) {
            const double dist =
                (table.entries.at(tokens[i]) - table.entries.at(tokens[j])).norm();
            std::ostringstream just;
            just << "distance " << dist;
            g.add_edge(tokens[i], tokens[j], dist, just.str());
        }
    }
    return g;
}

std::string normalize_token(const std::string& token) {
    std::string out;
    out.reserve(token.size());
    for (unsigned char c : token) {
        if (c < 0x80) {
            if (std::isalnum(c) || c == '_')
                out += static_cast<char>(std::tolower(c));
            // ASCII punctuation is dropped
        } else {
            out += static_cast<char>(c);  // non-ASCII passes through (input assumed NFC)
        }
    }
    return out;
}

StopwordList load_stopwords(std::istream& in) {
    StopwordList list;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string norm = normalize_token(line);
        if (!norm.empty()) list.tokens.insert(norm);
    }
    return list;
}

namespace {

std::vector<std::string> split_whitespace(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

std::string normalize_phrase(const std::string& entry) {
    std::string spaced = entry;
    std::replace(spaced.begin(), spaced.end(), '_', ' ');
    std::string out;
    for (const auto& part : split_whitespace(spaced)) {
        const std::string norm = normalize_token(part);
        if (norm.empty()) continue;
        if (!out.empty()) out += '_';
        out += norm;
    }
    return out;
}

}  // namespace

std::vector<NodeId> extract_components(const std::string& text,
                                       const std::set<NodeId>& vocabulary,
                                       const StopwordList& stopwords) {
    if (vocabulary.empty()) throw Error("vocabulary must be non-empty");

    std::map<std::string, NodeId> lookup;
    std::size_t max_parts = 1;
    for (const auto& v : vocabulary) {
        const std::string norm = normalize_phrase(v);
        if (norm.empty()) continue;
        lookup.emplace(norm, v);
        max_parts = std::max(max_parts,
                             std::size_t(std::count(norm.begin(), norm.end(), '_')) + 1);
    }

    std::vector<std::string> tokens;
    for (const auto& raw : split_whitespace(text)) {
        const std::string norm = normalize_token(raw);
        if (norm.empty() || stopwords.tokens.count(norm)) continue;
        tokens.push_back(norm);
    }

    std::vector<NodeId> result;
    std::set<NodeId> seen;
    std::size_t i = 0;
    while (i < tokens.size()) {
        std::size_t matched = 0;
        for (std::size_t len = std::min(max_parts, tokens.size() - i); len >= 1; --len) {
            std::string candidate = tokens[i];
            for (std::size_t t = 1; t < len; ++t) candidate += '_' + tokens[i + t];
            auto it = lookup.find(candidate);
            if (it != lookup.end()) {
                if (seen.insert(it->second).second) result.push_back(it->second);
                matched = len;
                break;
            }
        }
        i += matched ? matched : 1;
    }
    if (result.empty())
        throw NoComponentsFoundError("no vocabulary entries found in the text");
    return result;
}

std::vector<Eigen::Vector2d> pca_2d(const std::vector<Eigen::VectorXd>& vectors) {
    const int n = static_cast<int>(vectors.size());
    if (n < 2) throw Error("pca_2d needs at least 2 vectors");
    const int d = static_cast<int>(vectors[0].size());
    if (d < 2) throw Error("pca_2d needs dimension >= 2");

    Eigen::MatrixXd x(n, d);
    for (int i = 0; i < n; ++i) {
        if (vectors[i].size() != d) throw DimensionMismatchError("inconsistent vector arity");
        x.row(i) = vectors[i].transpose();
    }
    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;
    if (x.cwiseAbs().maxCoeff() == 0.0)
        throw DegenerateInputError("all input vectors are identical");

    const Eigen::MatrixXd cov = (x.transpose() * x) / double(n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    Eigen::MatrixXd dirs(d, 2);
    dirs.col(0) = solver.eigenvectors().col(d - 1);  // eigenvalues ascend in Eigen
    dirs.col(1) = solver.eigenvectors().col(d - 2);
    for (int c = 0; c < 2; ++c) {
        int arg = 0;
        for (int r = 1; r < d; ++r)
            if (std::abs(dirs(r, c)) > std::abs(dirs(arg, c))) arg = r;
        if (dirs(arg, c) < 0.0) dirs.col(c) *= -1.0;
    }

    const Eigen::MatrixXd y = x * dirs;
    std::vector<Eigen::Vector2d> out(n);
    for (int i = 0; i < n; ++i) out[i] = y.row(i).transpose();
    return out;
}

}  // namespace assoc
