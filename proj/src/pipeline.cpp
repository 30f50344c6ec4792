#include "corank/pipeline.hpp"

#include "corank/error.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

namespace corank {

using nlohmann::json;

void PipelineConfig::validate() const {
    similarity.validate();
    community.validate();
    rank.validate();
    if (rouge_orders.empty()) {
        throw std::invalid_argument("at least one ROUGE order is required");
    }
    for (std::size_t n : rouge_orders) {
        if (n == 0) {
            throw std::invalid_argument("ROUGE order must be at least 1");
        }
    }
}

namespace {

json optional_to_json(const std::optional<std::size_t>& v) {
    return v ? json(*v) : json(nullptr);
}

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) ==
            allowed.end()) {
            throw ParseError(where + ": unknown key \"" + key + "\"");
        }
    }
}

double get_number(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw ParseError(where + ": expected a number");
    }
    return j.get<double>();
}

bool get_bool(const json& j, const std::string& where) {
    if (!j.is_boolean()) {
        throw ParseError(where + ": expected true or false");
    }
    return j.get<bool>();
}

std::optional<std::size_t> get_count(const json& j, const std::string& where) {
    if (j.is_null()) {
        return std::nullopt;
    }
    if (!j.is_number_unsigned()) {
        throw ParseError(where + ": expected a non-negative integer or null");
    }
    return j.get<std::size_t>();
}

} // namespace

json config_to_json(const PipelineConfig& c) {
    return json{
        {"schemaVersion", kSchemaVersion},
        {"similarity", {{"deltaE", c.similarity.delta_e}, {"lambda", c.similarity.lambda}}},
        {"community",
         {{"deltaCsoan", c.community.delta_csoan},
          {"alphaDecay", c.community.alpha_decay},
          {"maxIterations", optional_to_json(c.community.max_iterations)},
          {"conductance",
           c.community.conductance_mode == ConductanceMode::Weighted ? "weighted" : "unweighted"}}},
        {"rank", {{"k", optional_to_json(c.rank.k)}, {"wordBudget", optional_to_json(c.rank.word_budget)}}},
        {"rouge", {{"n", c.rouge_orders}, {"stem", c.rouge.stem}, {"stopwords", c.rouge.remove_stopwords}}},
        {"output", c.output == OutputFormat::Json ? "json" : "text"},
    };
}

void apply_config_json(PipelineConfig& c, const json& j) {
    check_keys(j, "config", {"schemaVersion", "similarity", "community", "rank", "rouge", "output"});
    if (j.contains("schemaVersion") && j["schemaVersion"] != kSchemaVersion) {
        throw ParseError("config: unsupported schemaVersion " + j["schemaVersion"].dump());
    }
    if (j.contains("similarity")) {
        const json& s = j["similarity"];
        check_keys(s, "config.similarity", {"deltaE", "lambda"});
        if (s.contains("deltaE")) {
            c.similarity.delta_e = get_number(s["deltaE"], "config.similarity.deltaE");
        }
        if (s.contains("lambda")) {
            c.similarity.lambda = get_number(s["lambda"], "config.similarity.lambda");
        }
    }
    if (j.contains("community")) {
        const json& s = j["community"];
        check_keys(s, "config.community", {"deltaCsoan", "alphaDecay", "maxIterations", "conductance"});
        if (s.contains("deltaCsoan")) {
            c.community.delta_csoan = get_number(s["deltaCsoan"], "config.community.deltaCsoan");
        }
        if (s.contains("alphaDecay")) {
            c.community.alpha_decay = get_number(s["alphaDecay"], "config.community.alphaDecay");
        }
        if (s.contains("maxIterations")) {
            c.community.max_iterations = get_count(s["maxIterations"], "config.community.maxIterations");
        }
        if (s.contains("conductance")) {
            const json& m = s["conductance"];
            if (m == "weighted") {
                c.community.conductance_mode = ConductanceMode::Weighted;
            } else if (m == "unweighted") {
                c.community.conductance_mode = ConductanceMode::Unweighted;
            } else {
                throw ParseError("config.community.conductance: expected \"weighted\" or \"unweighted\"");
            }
        }
    }
    if (j.contains("rank")) {
        const json& s = j["rank"];
        check_keys(s, "config.rank", {"k", "wordBudget"});
        if (s.contains("k")) {
            c.rank.k = get_count(s["k"], "config.rank.k");
            if (c.rank.k) {
                c.rank.word_budget.reset();
            }
        }
        if (s.contains("wordBudget")) {
            c.rank.word_budget = get_count(s["wordBudget"], "config.rank.wordBudget");
            if (c.rank.word_budget) {
                c.rank.k.reset();
            }
        }
    }
    if (j.contains("rouge")) {
        const json& s = j["rouge"];
        check_keys(s, "config.rouge", {"n", "stem", "stopwords"});
        if (s.contains("n")) {
            if (!s["n"].is_array()) {
                throw ParseError("config.rouge.n: expected an array of integers");
            }
            c.rouge_orders.clear();
            for (const json& n : s["n"]) {
                c.rouge_orders.push_back(get_count(n, "config.rouge.n").value_or(0));
            }
        }
        if (s.contains("stem")) {
            c.rouge.stem = get_bool(s["stem"], "config.rouge.stem");
        }
        if (s.contains("stopwords")) {
            c.rouge.remove_stopwords = get_bool(s["stopwords"], "config.rouge.stopwords");
        }
    }
    if (j.contains("output")) {
        if (j["output"] == "json") {
            c.output = OutputFormat::Json;
        } else if (j["output"] == "text") {
            c.output = OutputFormat::Text;
        } else {
            throw ParseError("config.output: expected \"text\" or \"json\"");
        }
    }
}

std::vector<std::size_t> parse_orders(std::string_view list) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t comma = std::min(list.find(',', pos), list.size());
        const std::string_view item = list.substr(pos, comma - pos);
        std::size_t n = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), n);
        if (item.empty() || ec != std::errc{} || end != item.data() + item.size() || n == 0) {
            throw ParseError("invalid n-gram order list \"" + std::string(list) + "\"");
        }
        out.push_back(n);
        pos = comma + 1;
    }
    return out;
}

SummaryRun summarize(std::string_view document, const PipelineConfig& config) {
    config.validate();
    SummaryRun run;
    run.records = preprocess_document(document);
    if (run.records.size() < 2) {
        run.passthrough = true;
        run.warnings.push_back(run.records.empty() ? "document is empty"
                                                   : "document has fewer than two sentences; emitted unchanged");
        run.summary.text = std::string(document);
        for (const auto& r : run.records) {
            run.summary.indices.push_back(r.index);
        }
        return run;
    }
    run.graph = build_graph(run.records, config.similarity);
    run.detection = detect_communities(run.graph, config.community);
    run.selection = select_influential(run.graph, run.detection.communities, config.rank);
    run.summary = assemble_summary(run.records, run.selection, config.rank);
    if (run.detection.capped) {
        run.warnings.push_back("neighbor refinement hit the iteration cap before stabilizing");
    }
    if (run.selection.short_of_target) {
        run.warnings.push_back("fewer sentences available than requested");
    }
    if (run.summary.budget_exhausted && run.summary.indices.empty()) {
        run.warnings.push_back("word budget is smaller than the first picked sentence; summary is empty");
    }
    return run;
}

json summary_to_json(const SummaryRun& run, const PipelineConfig& config) {
    json sentences = json::array();
    for (std::size_t i : run.summary.indices) {
        sentences.push_back({{"index", i}, {"text", run.records[i].raw}});
    }
    json picks = json::array();
    for (const Pick& p : run.selection.provenance) {
        picks.push_back({{"node", p.node}, {"community", p.community}, {"weightedDegree", p.weighted_degree}});
    }
    json communities = json::array();
    for (const Community& c : run.detection.communities) {
        communities.push_back({{"members", c.members}, {"conductance", c.phi ? json(*c.phi) : json(nullptr)}});
    }
    return json{
        {"schemaVersion", kSchemaVersion},
        {"summary", run.summary.text},
        {"sentences", sentences},
        {"picks", picks},
        {"communities", communities},
        {"iterations", run.detection.iterations},
        {"capped", run.detection.capped},
        {"sentenceCount", run.records.size()},
        {"edgeCount", run.graph.edge_count()},
        {"shortOfTarget", run.selection.short_of_target},
        {"budgetExhausted", run.summary.budget_exhausted},
        {"warnings", run.warnings},
        {"config", config_to_json(config)},
    };
}

std::vector<RougeScore> evaluate(std::string_view candidate, std::string_view reference,
                                 const std::vector<std::size_t>& orders, const RougeOptions& options) {
    const auto cand = rouge_tokens(candidate, options);
    const auto ref = rouge_tokens(reference, options);
    std::vector<RougeScore> out;
    for (std::size_t n : orders) {
        out.push_back(rouge_n(cand, ref, n));
    }
    return out;
}

json scores_to_json(const std::vector<RougeScore>& scores) {
    json rows = json::array();
    for (const RougeScore& s : scores) {
        rows.push_back({{"n", s.n}, {"recall", s.recall}, {"precision", s.precision}, {"f1", s.f1}});
    }
    return json{{"schemaVersion", kSchemaVersion}, {"scores", rows}};
}

std::string scores_to_text(const std::vector<RougeScore>& scores) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    out << "metric    recall    precision f1\n";
    for (const RougeScore& s : scores) {
        out << "ROUGE-" << std::left << std::setw(3) << s.n << ' ' << s.recall << "  " << s.precision << "  "
            << s.f1 << '\n';
    }
    return out.str();
}

std::vector<ManifestEntry> parse_manifest(std::string_view text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("manifest: ") + e.what());
    }
    if (!j.is_array()) {
        throw ParseError("manifest: expected a JSON list of entries");
    }
    const auto resolve = [&](const std::string& p) {
        const std::filesystem::path path(p);
        if (path.is_absolute() || base_dir.empty()) {
            return p;
        }
        return (std::filesystem::path(base_dir) / path).string();
    };
    std::vector<ManifestEntry> entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& e = j[i];
        const std::string where = "manifest entry " + std::to_string(i);
        if (!e.is_object() || !e.contains("document") || !e["document"].is_string()) {
            throw ParseError(where + ": missing string \"document\"");
        }
        if (!e.contains("references") || !e["references"].is_array() || e["references"].empty()) {
            throw ParseError(where + ": \"references\" must be a non-empty list of paths");
        }
        ManifestEntry entry;
        entry.document = resolve(e["document"].get<std::string>());
        for (const json& r : e["references"]) {
            if (!r.is_string()) {
                throw ParseError(where + ": reference paths must be strings");
            }
            entry.references.push_back(resolve(r.get<std::string>()));
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    return parse_manifest(read_file(path), std::filesystem::path(path).parent_path().string());
}

CorpusReport run_corpus(const std::vector<ManifestEntry>& entries, const PipelineConfig& config) {
    CorpusReport report;
    for (const ManifestEntry& entry : entries) {
        const SummaryRun run = summarize(read_file(entry.document), config);
        CorpusDocument doc;
        doc.document = entry.document;
        doc.sentences = run.records.size();
        doc.selected = run.summary.indices.size();
        for (const std::string& ref_path : entry.references) {
            const auto scores = evaluate(run.summary.text, read_file(ref_path), {1, 2}, config.rouge);
            doc.rouge1_recall += scores[0].recall;
            doc.rouge2_recall += scores[1].recall;
        }
        const auto refs = static_cast<double>(entry.references.size());
        doc.rouge1_recall /= refs;
        doc.rouge2_recall /= refs;
        report.documents.push_back(std::move(doc));
    }
    if (!report.documents.empty()) {
        double r1 = 0.0;
        double r2 = 0.0;
        for (const auto& d : report.documents) {
            r1 += d.rouge1_recall;
            r2 += d.rouge2_recall;
        }
        const auto n = static_cast<double>(report.documents.size());
        report.mean_rouge1_recall = r1 / n;
        report.mean_rouge2_recall = r2 / n;
    }
    return report;
}

json corpus_to_json(const CorpusReport& report, const PipelineConfig& config) {
    json docs = json::array();
    for (const auto& d : report.documents) {
        docs.push_back({{"document", d.document},
                        {"sentences", d.sentences},
                        {"selected", d.selected},
                        {"rouge1Recall", d.rouge1_recall},
                        {"rouge2Recall", d.rouge2_recall}});
    }
    const auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    return json{
        {"schemaVersion", kSchemaVersion},
        {"documents", docs},
        {"mean", {{"rouge1Recall", opt(report.mean_rouge1_recall)}, {"rouge2Recall", opt(report.mean_rouge2_recall)}}},
        {"config", config_to_json(config)},
    };
}

std::string corpus_to_text(const CorpusReport& report) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4);
    out << "R-1      R-2      sentences  selected  document\n";
    for (const auto& d : report.documents) {
        out << d.rouge1_recall << "   " << d.rouge2_recall << "   " << std::setw(9) << d.sentences << "  "
            << std::setw(8) << d.selected << "  " << d.document << '\n';
    }
    if (report.mean_rouge1_recall) {
        out << *report.mean_rouge1_recall << "   " << *report.mean_rouge2_recall << "   mean over "
            << report.documents.size() << " documents\n";
    } else {
        out << "no documents\n";
    }
    return out.str();
}

} // namespace corank
