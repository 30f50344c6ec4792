#pragma once

#include "corank/community.hpp"
#include "corank/graph.hpp"
#include "corank/graph_build.hpp"
#include "corank/preprocess.hpp"
#include "corank/ranker.hpp"
#include "corank/rouge.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corank {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Text, Json };

struct PipelineConfig {
    SimilarityConfig similarity;
    CommunityConfig community;
    RankConfig rank;
    RougeOptions rouge;
    std::vector<std::size_t> rouge_orders{1, 2};
    OutputFormat output = OutputFormat::Text;

    void validate() const;
};

nlohmann::json config_to_json(const PipelineConfig& config);

/// Overlays the keys present in @p j onto @p config. Unknown keys and wrong
/// types raise ParseError.
void apply_config_json(PipelineConfig& config, const nlohmann::json& j);

/// Parses "1,2,3" into n-gram orders; throws ParseError.
std::vector<std::size_t> parse_orders(std::string_view list);

struct SummaryRun {
    std::vector<SentenceRecord> records;
    WeightedGraph graph;
    Detection detection;
    RankedSelection selection;
    Summary summary;
    std::vector<std::string> warnings;
    bool passthrough = false; ///< fewer than two sentences; summary is the input
};

/// preprocess -> build_graph -> detect_communities -> select_influential ->
/// assemble_summary.
SummaryRun summarize(std::string_view document, const PipelineConfig& config);

nlohmann::json summary_to_json(const SummaryRun& run, const PipelineConfig& config);

std::vector<RougeScore> evaluate(std::string_view candidate, std::string_view reference,
                                 const std::vector<std::size_t>& orders, const RougeOptions& options);

nlohmann::json scores_to_json(const std::vector<RougeScore>& scores);
std::string scores_to_text(const std::vector<RougeScore>& scores);

struct ManifestEntry {
    std::string document;
    std::vector<std::string> references;
};

/// JSON list of {"document": path, "references": [path, ...]}. Relative
/// paths are resolved against @p base_dir. Throws ParseError naming the
/// offending entry.
std::vector<ManifestEntry> parse_manifest(std::string_view text, const std::string& base_dir = "");
std::vector<ManifestEntry> load_manifest(const std::string& path);

struct CorpusDocument {
    std::string document;
    std::size_t sentences = 0;
    std::size_t selected = 0;
    double rouge1_recall = 0.0; ///< mean over references
    double rouge2_recall = 0.0;
};

struct CorpusReport {
    std::vector<CorpusDocument> documents; ///< manifest order
    std::optional<double> mean_rouge1_recall;
    std::optional<double> mean_rouge2_recall;
};

CorpusReport run_corpus(const std::vector<ManifestEntry>& entries, const PipelineConfig& config);

nlohmann::json corpus_to_json(const CorpusReport& report, const PipelineConfig& config);
std::string corpus_to_text(const CorpusReport& report);

} // namespace corank
