// Command-line front end: explain, novelty, bhh-sim, entropy, calibrate-beta.
// Exit codes: 0 success, 1 domain error (stderr diagnostic), 2 usage error.

#include "assoc/errors.hpp"
#include "assoc/explain.hpp"
#include "assoc/novelty.hpp"
#include "assoc/sources.hpp"
#include "assoc/tsp.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw assoc::Error("cannot open file: " + path);
    return f;
}

assoc::StrengthTransform parse_transform(const std::string& name) {
    if (name == "reciprocal") return assoc::StrengthTransform::Reciprocal;
    if (name == "max-minus") return assoc::StrengthTransform::MaxPlusOneMinus;
    if (name == "distance") return assoc::StrengthTransform::IdentityDistance;
    throw assoc::Error("unknown transform: " + name);
}

assoc::TourMode parse_mode(const std::string& name) {
    if (name == "exact") return assoc::TourMode::Exact;
    if (name == "heuristic") return assoc::TourMode::Heuristic;
    throw assoc::Error("unknown mode: " + name);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw assoc::Error("cannot write file: " + out_path);
        f << text;
    }
}

struct ExplainOptions {
    std::string graph_file, embeddings_file, components, text, stopwords_file;
    std::string transform = "reciprocal";
    std::string format = "text";
    std::string out;
    int k = 1;
    bool no_augment = false;
};

int run_explain(const ExplainOptions& opt) {
    assoc::StopwordList stopwords;
    if (!opt.stopwords_file.empty()) {
        auto f = open_or_throw(opt.stopwords_file);
        stopwords = assoc::load_stopwords(f);
    }

    assoc::ExplainResult result;
    if (!opt.embeddings_file.empty()) {
        auto f = open_or_throw(opt.embeddings_file);
        const assoc::EmbeddingTable table = assoc::load_embeddings(f);
        std::string text = opt.text;
        if (text.empty() && !opt.components.empty()) {
            for (const auto& c : split_commas(opt.components)) text += c + " ";
        }
        result = assoc::explain_from_embeddings(table, text, stopwords, opt.k);
    } else {
        auto f = open_or_throw(opt.graph_file);
        const assoc::WeightedGraph k_graph =
            assoc::load_edge_list(f, parse_transform(opt.transform));
        std::vector<assoc::NodeId> components;
        if (!opt.text.empty())
            components = assoc::extract_components(opt.text, k_graph.nodes(), stopwords);
        else
            components = split_commas(opt.components);
        if (components.empty()) throw assoc::Error("no components given");
        result = assoc::explain(k_graph, assoc::Artifact{components, std::nullopt}, opt.k,
                                !opt.no_augment);
    }

    assoc::RenderFormat fmt = assoc::RenderFormat::Text;
    if (opt.format == "json") fmt = assoc::RenderFormat::Json;
    else if (opt.format == "dot") fmt = assoc::RenderFormat::Dot;
    else if (opt.format != "text") throw assoc::Error("unknown format: " + opt.format);
    emit(assoc::render_explanation(result, fmt), opt.out);
    return 0;
}

struct NoveltyOptions {
    std::string graph_file, components, text, stopwords_file;
    std::string transform = "reciprocal";
    std::string out;
    bool no_augment = false;
};

int run_novelty(const NoveltyOptions& opt) {
    auto f = open_or_throw(opt.graph_file);
    const assoc::WeightedGraph k_graph = assoc::load_edge_list(f, parse_transform(opt.transform));

    std::vector<assoc::NodeId> components;
    if (!opt.text.empty()) {
        assoc::StopwordList stopwords;
        if (!opt.stopwords_file.empty()) {
            auto sf = open_or_throw(opt.stopwords_file);
            stopwords = assoc::load_stopwords(sf);
        }
        components = assoc::extract_components(opt.text, k_graph.nodes(), stopwords);
    } else {
        components = split_commas(opt.components);
    }
    if (components.empty()) throw assoc::Error("no components given");

    const assoc::NoveltyReport report = assoc::tsp_novelty(
        k_graph, {components.begin(), components.end()}, !opt.no_augment);

    json out;
    out["score"] = report.score;
    out["path"] = report.path.sequence;
    out["augmentation_used"] = report.augmentation_used;
    out["per_step"] = json::array();
    for (const auto& s : report.per_step) {
        out["per_step"].push_back({{"from", s.from},
                                   {"to", s.to},
                                   {"weight", s.weight},
                                   {"kind", s.kind == assoc::EdgeKind::Direct ? "direct" : "bridged"},
                                   {"justification", s.justification}});
    }
    emit(out.dump(2) + "\n", opt.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Associative-chain explanation and TSP-novelty toolkit"};
    app.require_subcommand(1);

    ExplainOptions eo;
    auto* explain_cmd = app.add_subcommand("explain", "Explain an artifact as associative chains");
    explain_cmd->add_option("--graph", eo.graph_file, "edge-list knowledge graph (TSV)");
    explain_cmd->add_option("--embeddings", eo.embeddings_file, "embedding table file");
    explain_cmd->add_option("--components", eo.components, "comma-separated component list");
    explain_cmd->add_option("--text", eo.text, "free text to extract components from");
    explain_cmd->add_option("--stopwords", eo.stopwords_file, "stopword file, one token per line");
    explain_cmd->add_option("--transform", eo.transform, "reciprocal|max-minus|distance");
    explain_cmd->add_option("--k", eo.k, "number of alternative explanations")
        ->check(CLI::PositiveNumber);
    explain_cmd->add_flag("--no-augment", eo.no_augment, "disable collapsed-edge augmentation");
    explain_cmd->add_option("--format", eo.format, "text|json|dot");
    explain_cmd->add_option("--out", eo.out, "output file (default: stdout)");

    NoveltyOptions no;
    auto* novelty_cmd = app.add_subcommand("novelty", "TSP-novelty score of an artifact");
    novelty_cmd->add_option("--graph", no.graph_file, "edge-list knowledge graph (TSV)")
        ->required();
    novelty_cmd->add_option("--components", no.components, "comma-separated component list");
    novelty_cmd->add_option("--text", no.text, "free text to extract components from");
    novelty_cmd->add_option("--stopwords", no.stopwords_file, "stopword file");
    novelty_cmd->add_option("--transform", no.transform, "reciprocal|max-minus|distance");
    novelty_cmd->add_flag("--no-augment", no.no_augment, "disable collapsed-edge augmentation");
    novelty_cmd->add_option("--out", no.out, "output file");

    int dim = 2, n = 512, trials = 20;
    uint64_t seed = 0;
    std::string ns_list = "64,256,1024", mode = "heuristic", out_path;
    double beta = 0.0;
    std::string points_file;

    auto* bhh_cmd = app.add_subcommand("bhh-sim", "Tour-length growth simulation");
    bhh_cmd->add_option("--dim", dim, "point dimension")->check(CLI::Range(1, 16));
    bhh_cmd->add_option("--ns", ns_list, "comma-separated sample sizes");
    bhh_cmd->add_option("--mode", mode, "exact|heuristic");
    bhh_cmd->add_option("--seed", seed, "random seed");
    bhh_cmd->add_option("--out", out_path, "output file");

    auto* cal_cmd = app.add_subcommand("calibrate-beta", "Calibrate the tour-length constant");
    cal_cmd->add_option("--dim", dim, "point dimension");
    cal_cmd->add_option("--n", n, "sample size per trial");
    cal_cmd->add_option("--trials", trials, "number of trials");
    cal_cmd->add_option("--seed", seed, "random seed");
    cal_cmd->add_option("--mode", mode, "exact|heuristic");
    cal_cmd->add_option("--out", out_path, "output file");

    auto* ent_cmd = app.add_subcommand("entropy", "Renyi entropy estimate from a point set");
    ent_cmd->add_option("--points", points_file, "point-set file")->required();
    ent_cmd->add_option("--beta", beta, "tour-length constant (default: self-calibrate)");
    ent_cmd->add_option("--trials", trials, "calibration trials when --beta is absent");
    ent_cmd->add_option("--seed", seed, "random seed");
    ent_cmd->add_option("--mode", mode, "exact|heuristic");
    ent_cmd->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (explain_cmd->parsed()) {
            if (eo.graph_file.empty() == eo.embeddings_file.empty())
                throw assoc::Error("exactly one of --graph / --embeddings is required");
            return run_explain(eo);
        }
        if (novelty_cmd->parsed()) return run_novelty(no);

        if (bhh_cmd->parsed()) {
            std::vector<int> ns;
            for (const auto& s : split_commas(ns_list)) ns.push_back(std::stoi(s));
            const auto sampler = assoc::Sampler::uniform_cube(dim, 1.0, seed);
            const auto series = assoc::bhh_ratio_series(sampler, ns, parse_mode(mode));
            json out;
            out["d"] = series.d;
            out["mode"] = mode;
            out["entries"] = json::array();
            for (const auto& e : series.entries)
                out["entries"].push_back({{"n", e.n}, {"length", e.length}, {"ratio", e.ratio}});
            emit(out.dump(2) + "\n", out_path);
            return 0;
        }
        if (cal_cmd->parsed()) {
            const auto cal = assoc::calibrate_beta(dim, n, trials, seed, parse_mode(mode));
            json out = {{"d", cal.d},
                        {"n", cal.n},
                        {"trials", cal.trials},
                        {"beta_hat", cal.beta_hat},
                        {"std_error", cal.std_error}};
            emit(out.dump(2) + "\n", out_path);
            return 0;
        }
        if (ent_cmd->parsed()) {
            auto f = open_or_throw(points_file);
            const auto points = assoc::load_points(f);
            if (points.empty()) throw assoc::Error("point file is empty");
            double beta_used = beta;
            if (!(beta_used > 0.0)) {
                const int d = static_cast<int>(points[0].size());
                beta_used = assoc::calibrate_beta(d, static_cast<int>(points.size()), trials,
                                                  seed, parse_mode(mode))
                                .beta_hat;
            }
            const auto est = assoc::estimate_renyi_entropy(points, beta_used, parse_mode(mode));
            json out = {{"gamma", est.gamma},
                        {"h_hat", est.h_hat},
                        {"n", est.n},
                        {"beta_used", est.beta_used},
                        {"mode", mode}};
            emit(out.dump(2) + "\n", out_path);
            return 0;
        }
    } catch (const assoc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
