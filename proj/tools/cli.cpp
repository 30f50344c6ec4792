#include "cli.hpp"

#include "corank/error.hpp"
#include "corank/pipeline.hpp"
#include "corank/trace.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

namespace corank::cli {

namespace {

using nlohmann::json;

// Flag values as parsed; only options given on the command line override
// the config file and defaults.
struct Flags {
    std::string config_path;
    double delta_e = 0.0;
    double lambda = 0.0;
    double delta_csoan = 0.0;
    double alpha_decay = 0.0;
    std::size_t max_iter = 0;
    std::size_t k = 0;
    std::size_t word_budget = 0;
    std::string orders;
    bool weighted_conductance = false;
    bool json = false;
    std::optional<bool> stem;
    std::optional<bool> stopwords;

    CLI::Option* delta_e_opt = nullptr;
    CLI::Option* lambda_opt = nullptr;
    CLI::Option* delta_csoan_opt = nullptr;
    CLI::Option* alpha_decay_opt = nullptr;
    CLI::Option* max_iter_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* word_budget_opt = nullptr;
    CLI::Option* orders_opt = nullptr;
    CLI::Option* weighted_opt = nullptr;
    CLI::Option* json_opt = nullptr;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config_path, "JSON configuration file")->check(CLI::ExistingFile);
    f.json_opt = cmd->add_flag("--json", f.json, "Emit JSON");
}

void add_pipeline(CLI::App* cmd, Flags& f) {
    f.delta_e_opt = cmd->add_option("--delta-e", f.delta_e, "Edge similarity threshold")->check(CLI::Range(0.0, 1.0));
    f.lambda_opt = cmd->add_option("--lambda", f.lambda, "Weight of TF-IDF cosine vs. token Jaccard")
                       ->check(CLI::Range(0.0, 1.0));
    f.delta_csoan_opt = cmd->add_option("--delta-csoan", f.delta_csoan, "Neighbor similarity threshold");
    f.alpha_decay_opt = cmd->add_option("--alpha-decay", f.alpha_decay, "Per-iteration threshold decay");
    f.max_iter_opt = cmd->add_option("--max-iter", f.max_iter, "Iteration cap (default: edge count)");
    f.k_opt = cmd->add_option("-k,--sentences", f.k, "Number of sentences to select");
    f.word_budget_opt = cmd->add_option("--word-budget", f.word_budget, "Maximum summary length in words");
    f.k_opt->excludes(f.word_budget_opt);
    f.weighted_opt = cmd->add_flag("--weighted-conductance", f.weighted_conductance,
                                   "Use edge weights in conductance");
}

void add_rouge(CLI::App* cmd, Flags& f) {
    f.orders_opt = cmd->add_option("--n", f.orders, "Comma-separated n-gram orders, e.g. 1,2,3");
    cmd->add_flag_function("--stem,!--no-stem", [&f](std::int64_t v) { f.stem = v > 0; },
                           "Porter-stem tokens before scoring");
    cmd->add_flag_function("--stopwords,!--no-stopwords", [&f](std::int64_t v) { f.stopwords = v > 0; },
                           "Remove stopwords before scoring");
}

PipelineConfig resolve(const Flags& f) {
    PipelineConfig c;
    if (!f.config_path.empty()) {
        json j;
        try {
            j = json::parse(read_file(f.config_path));
        } catch (const json::parse_error& e) {
            throw ParseError(f.config_path + ": " + e.what());
        }
        apply_config_json(c, j);
    }
    const auto given = [](const CLI::Option* o) { return o != nullptr && o->count() > 0; };
    if (given(f.delta_e_opt)) {
        c.similarity.delta_e = f.delta_e;
    }
    if (given(f.lambda_opt)) {
        c.similarity.lambda = f.lambda;
    }
    if (given(f.delta_csoan_opt)) {
        c.community.delta_csoan = f.delta_csoan;
    }
    if (given(f.alpha_decay_opt)) {
        c.community.alpha_decay = f.alpha_decay;
    }
    if (given(f.max_iter_opt)) {
        c.community.max_iterations = f.max_iter;
    }
    if (given(f.k_opt)) {
        c.rank = RankConfig::sentences(f.k);
    }
    if (given(f.word_budget_opt)) {
        c.rank = RankConfig::words(f.word_budget);
    }
    if (given(f.weighted_opt)) {
        c.community.conductance_mode = ConductanceMode::Weighted;
    }
    if (given(f.orders_opt)) {
        c.rouge_orders = parse_orders(f.orders);
    }
    if (f.stem) {
        c.rouge.stem = *f.stem;
    }
    if (f.stopwords) {
        c.rouge.remove_stopwords = *f.stopwords;
    }
    if (given(f.json_opt)) {
        c.output = OutputFormat::Json;
    }
    c.validate();
    return c;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Extractive summarization by overlapping sentence communities", "corank"};
    app.require_subcommand(1);

    Flags sum_flags;
    std::string doc_path;
    CLI::App* summarize_cmd = app.add_subcommand("summarize", "Summarize a text document");
    summarize_cmd->add_option("document", doc_path, "UTF-8 text file")->required();
    add_common(summarize_cmd, sum_flags);
    add_pipeline(summarize_cmd, sum_flags);

    Flags eval_flags;
    std::string cand_path;
    std::string ref_path;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Score a candidate summary against a reference");
    eval_cmd->add_option("candidate", cand_path, "Candidate summary file")->required();
    eval_cmd->add_option("reference", ref_path, "Reference summary file")->required();
    add_common(eval_cmd, eval_flags);
    add_rouge(eval_cmd, eval_flags);

    Flags corpus_flags;
    std::string manifest_path;
    std::string report_path;
    CLI::App* corpus_cmd = app.add_subcommand("corpus", "Summarize and score every document of a manifest");
    corpus_cmd->add_option("manifest", manifest_path, "JSON manifest")->required();
    corpus_cmd->add_option("--output", report_path, "Also write the JSON report to this file");
    add_common(corpus_cmd, corpus_flags);
    add_pipeline(corpus_cmd, corpus_flags);
    add_rouge(corpus_cmd, corpus_flags);

    bool trace_json = false;
    CLI::App* trace_cmd = app.add_subcommand("trace-example", "Step-by-step dump for the bundled example network");
    trace_cmd->add_flag("--json", trace_json, "Emit JSON");

    std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (summarize_cmd->parsed()) {
            const PipelineConfig config = resolve(sum_flags);
            const SummaryRun run = summarize(read_file(doc_path), config);
            for (const auto& w : run.warnings) {
                err << "warning: " << w << '\n';
            }
            if (config.output == OutputFormat::Json) {
                out << summary_to_json(run, config).dump(2) << '\n';
            } else if (!run.summary.text.empty()) {
                out << run.summary.text << (run.summary.text.back() == '\n' ? "" : "\n");
            }
        } else if (eval_cmd->parsed()) {
            const PipelineConfig config = resolve(eval_flags);
            const auto scores =
                evaluate(read_file(cand_path), read_file(ref_path), config.rouge_orders, config.rouge);
            if (config.output == OutputFormat::Json) {
                out << scores_to_json(scores).dump(2) << '\n';
            } else {
                out << scores_to_text(scores);
            }
        } else if (corpus_cmd->parsed()) {
            const PipelineConfig config = resolve(corpus_flags);
            const CorpusReport report = run_corpus(load_manifest(manifest_path), config);
            const json j = corpus_to_json(report, config);
            if (!report_path.empty()) {
                std::ofstream file(report_path);
                if (!file) {
                    throw IoError(report_path, "cannot open for writing");
                }
                file << j.dump(2) << '\n';
            }
            if (config.output == OutputFormat::Json) {
                out << j.dump(2) << '\n';
            } else {
                out << corpus_to_text(report);
            }
        } else if (trace_cmd->parsed()) {
            if (trace_json) {
                out << trace_example_json().dump(2) << '\n';
            } else {
                out << trace_example_text();
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace corank::cli
