#include "corank/graph_build.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corank {

void SimilarityConfig::validate() const {
    if (!(delta_e >= 0.0 && delta_e <= 1.0)) {
        throw std::invalid_argument("delta_e must lie in [0, 1]");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("lambda must lie in [0, 1]");
    }
}

std::vector<TermVector> tfidf_vectors(const std::vector<SentenceRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("tfidf_vectors: no sentences");
    }
    std::map<std::string, std::size_t> df;
    std::vector<TermVector> tf(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (const auto& t : records[i].tokens) {
            tf[i][t] += 1.0;
        }
        for (const auto& [term, count] : tf[i]) {
            ++df[term];
        }
    }
    const auto n = static_cast<double>(records.size());
    for (auto& vec : tf) {
        for (auto& [term, weight] : vec) {
            weight *= std::log(1.0 + n / static_cast<double>(df[term]));
        }
    }
    return tf;
}

double statistical_similarity(const TermVector& a, const TermVector& b) {
    double dot = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            dot += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    double na = 0.0;
    double nb = 0.0;
    for (const auto& [t, w] : a) {
        na += w * w;
    }
    for (const auto& [t, w] : b) {
        nb += w * w;
    }
    if (na <= 0.0 || nb <= 0.0) {
        return 0.0;
    }
    return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

double semantic_similarity(const TokenSet& a, const TokenSet& b) {
    if (a.empty() && b.empty()) {
        return 0.0;
    }
    std::size_t common = 0;
    for (const auto& t : a) {
        common += b.count(t);
    }
    return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

WeightedGraph build_graph(const std::vector<SentenceRecord>& records, const SimilarityConfig& config) {
    config.validate();
    std::vector<NodeId> nodes;
    for (const auto& r : records) {
        nodes.push_back(static_cast<NodeId>(r.index));
    }
    if (records.empty()) {
        return WeightedGraph(nodes, {});
    }
    const auto vectors = tfidf_vectors(records);
    std::vector<TokenSet> sets;
    sets.reserve(records.size());
    for (const auto& r : records) {
        sets.emplace_back(r.tokens.begin(), r.tokens.end());
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            const double sim = config.lambda * statistical_similarity(vectors[i], vectors[j]) +
                               (1.0 - config.lambda) * semantic_similarity(sets[i], sets[j]);
            if (sim > 0.0 && sim >= config.delta_e) {
                edges.push_back({nodes[i], nodes[j], std::min(sim, 1.0)});
            }
        }
    }
    return WeightedGraph(std::move(nodes), edges);
}

} // namespace corank
