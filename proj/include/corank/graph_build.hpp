#pragma once

#include "corank/graph.hpp"
#include "corank/preprocess.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace corank {

struct SimilarityConfig {
    double delta_e = 0.1; ///< minimum similarity for an edge, in [0, 1]
    double lambda = 0.5;  ///< weight of the statistical term, in [0, 1]

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Sparse term -> weight mapping. Ordered so iteration is deterministic.
using TermVector = std::map<std::string, double>;
using TokenSet = std::set<std::string>;

/// tf(t, s) * ln(1 + n / df(t)), treating each sentence as a document.
std::vector<TermVector> tfidf_vectors(const std::vector<SentenceRecord>& records);

/// Cosine of two sparse vectors, clamped to [0, 1]; 0 if either is zero.
double statistical_similarity(const TermVector& a, const TermVector& b);

/// |a ∩ b| / |a ∪ b|; 0 when both are empty.
double semantic_similarity(const TokenSet& a, const TokenSet& b);

/// Sentence similarity graph over nodes 0..n-1 (record indices).
///
/// sim(i, j) = lambda * cosine + (1 - lambda) * jaccard; the edge exists when
/// sim >= delta_e and sim > 0. Edges are numbered in (i, j) lexicographic
/// order.
WeightedGraph build_graph(const std::vector<SentenceRecord>& records, const SimilarityConfig& config = {});

} // namespace corank
