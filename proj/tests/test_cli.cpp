#include "cli.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "corank");
    std::ostringstream out;
    std::ostringstream err;
    const int code = corank::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / ("corank_cli_" + name);
    std::ofstream(p) << text;
    return p.string();
}

std::string news() {
    return corank::testing::data_path("news_document.txt");
}

} // namespace

TEST(Cli, RequiresSubcommand) {
    EXPECT_NE(run({}).code, 0);
    EXPECT_NE(run({"bogus"}).code, 0);
}

TEST(Cli, SummarizeText) {
    const Result r = run({"summarize", news(), "-k", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
}

TEST(Cli, SummarizeJson) {
    const Result r = run({"summarize", news(), "--json", "--delta-e", "0.15"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["sentences"].size(), 3u);
    EXPECT_DOUBLE_EQ(j["config"]["similarity"]["deltaE"].get<double>(), 0.15);
}

TEST(Cli, MissingFileFails) {
    const Result r = run({"summarize", "/nonexistent/file.txt"});
    EXPECT_NE(r.code, 0);
}

TEST(Cli, EmptyDocumentWarns) {
    const Result r = run({"summarize", temp_file("empty.txt", "")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, SentencesAndBudgetAreExclusive) {
    EXPECT_NE(run({"summarize", news(), "-k", "2", "--word-budget", "30"}).code, 0);
}

TEST(Cli, InvalidValuesFail) {
    EXPECT_NE(run({"summarize", news(), "--lambda", "1.5"}).code, 0);
    EXPECT_NE(run({"summarize", news(), "-k", "0"}).code, 0);
}

TEST(Cli, ConfigFileAndFlagPrecedence) {
    const std::string cfg = temp_file("cfg.json", R"({"rank": {"k": 1}, "similarity": {"lambda": 0.25}})");
    const Result r = run({"summarize", news(), "--json", "--config", cfg, "-k", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["config"]["rank"]["k"], 2);
    EXPECT_DOUBLE_EQ(j["config"]["similarity"]["lambda"].get<double>(), 0.25);

    const std::string bad = temp_file("bad.json", R"({"unknown": true})");
    const Result e = run({"summarize", news(), "--config", bad});
    EXPECT_EQ(e.code, 1);
    EXPECT_NE(e.err.find("unknown"), std::string::npos);
}

TEST(Cli, EvalOrders) {
    const std::string cand = corank::testing::data_path("news_extracted.txt");
    const std::string ref = corank::testing::data_path("news_reference.txt");
    const Result r = run({"eval", cand, ref, "--n", "1,2,3", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["scores"].size(), 3u);

    const Result text = run({"eval", cand, ref, "--stem", "--no-stopwords"});
    ASSERT_EQ(text.code, 0) << text.err;
    EXPECT_NE(text.out.find("ROUGE-1"), std::string::npos);
    EXPECT_NE(text.out.find("ROUGE-2"), std::string::npos);
}

TEST(Cli, Corpus) {
    const std::string manifest = temp_file(
        "manifest.json", R"([{"document": ")" + news() + R"(", "references": [")" +
                             corank::testing::data_path("news_reference.txt") + R"("]}])");
    const std::string report = (std::filesystem::temp_directory_path() / "corank_cli_report.json").string();
    const Result r = run({"corpus", manifest, "--output", report});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("mean over 1 documents"), std::string::npos);
    const auto j = nlohmann::json::parse(std::ifstream(report));
    EXPECT_EQ(j["documents"].size(), 1u);
}

TEST(Cli, TraceExample) {
    const Result r = run({"trace-example"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("(1, 2) {1, 2, 3, 4, 5}"), std::string::npos);
    EXPECT_NE(r.out.find("0.778"), std::string::npos);

    const Result j = run({"trace-example", "--json"});
    ASSERT_EQ(j.code, 0);
    EXPECT_TRUE(nlohmann::json::accept(j.out));
}
